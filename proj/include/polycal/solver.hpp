// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polycal/chains.hpp"

namespace polycal {

struct SolverConfig {
  int max_iter = 200000;
  double primal_tol = 1e-8;  // absolute, on |dA - b|
  double obj_tol = 1e-10;    // relative objective change over one check window
  std::uint64_t seed = 0;    // power-iteration start vector
  double relaxation = 1.8;
  int check_every = 100;
};

enum class SolveStatus { converged, iteration_cap, infeasible };

std::string to_string(SolveStatus s);

struct MinMassProblem {
  ComplexPtr complex;
  int dimension = 0;  // m; the target boundary is an (m-1)-chain
  Chain boundary;     // coefficients in R or in the m-vectors of R^N
  SolverConfig config;
};

struct SolveResult {
  Chain chain;
  double objective = 0.0;
  double primal_residual = 0.0;
  /// Largest dual objective seen: a lower bound on the optimum.
  double dual_bound = 0.0;
  int iterations = 0;
  SolveStatus status = SolveStatus::iteration_cap;
};

/// Minimizes the mass of an m-chain A on the complex subject to dA = b, by
/// relaxed primal-dual splitting with block shrinkage on the per-simplex
/// coefficients, followed by a least-squares projection onto dA = b.
SolveResult min_mass_fixed_boundary(const MinMassProblem& p);

/// Convenience: the problem with b = dA0 for a reference chain A0.
MinMassProblem boundary_problem(const Chain& reference, const SolverConfig& config = {});

struct FlatNormResult {
  double value = 0.0;
  Chain filling;    // Q*
  Chain remainder;  // R* = A + dQ*
  int iterations = 0;
  SolveStatus status = SolveStatus::iteration_cap;
};

/// Flat norm restricted to the complex: min over (m+1)-chains Q on K of
/// M(A + dQ) + M(Q). The value never exceeds M(A).
FlatNormResult flat_norm_solve(const Chain& a, const SolverConfig& config = {});

}  // namespace polycal
