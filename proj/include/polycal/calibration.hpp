// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polycal/solver.hpp"
#include "polycal/varifolds.hpp"

namespace polycal {

/// Phi(A) = sum over terms of <g, eta(sigma)> vol(sigma). The chain's group
/// must be the m-vectors of R^N with m the chain dimension.
double phi(const Chain& a);

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tol = 0.0;
};

enum class Conclusion { calibrated_minimizer, not_calibrated, boundary_not_in_gamma, inconclusive };

std::string to_string(Conclusion c);

struct Provenance {
  std::string complex_hash;
  std::string group;
  double tol = kDefaultTol;
  bool solver_ran = false;
  std::uint64_t seed = 0;
  std::string competitors;
};

struct Certificate {
  std::string subject;
  std::vector<CheckResult> checks;
  Conclusion conclusion = Conclusion::inconclusive;
  Provenance provenance;
  double mass = 0.0;
  double phi = 0.0;
  /// Filled when stationarity fails: the worst face and its boundary
  /// coefficient norm.
  int worst_face = -1;
  double worst_boundary_norm = 0.0;
};

/// Checks Phi(A) <= M(A), Phi(A) = M(A) and g = |g| eta(sigma) on every term.
Certificate certify_calibrated(const Chain& a, double tol = kDefaultTol);

struct StokesReport {
  int trials = 0;
  double max_residual = 0.0;  // max |Phi(dQ)| / (1 + M(Q))
  double tol = 0.0;
  bool pass = true;
  std::uint64_t seed = 0;
};

/// Phi(dQ) = 0 for random (m+1)-chains Q over the m-vectors of R^N.
StokesReport check_stokes(const ComplexPtr& K, int m, int trials, double tol = 1e-10,
                          std::uint64_t seed = 0);

struct FlatBoundReport {
  double phi = 0.0;
  double flat = 0.0;  // complex-restricted, an upper bound for the true flat norm
  double mass = 0.0;
  bool pass = false;
  double tol = 0.0;
  SolveStatus status = SolveStatus::converged;
};

/// Phi(A) <= F_K(A) <= M(A).
FlatBoundReport phi_flat_bound(const Chain& a, const SolverConfig& config = {}, double tol = 1e-8);

/// Stationarity, boundary support in gamma, calibration of <V>, and with
/// `with_solver` a min-mass solve for the boundary of <V> on `refinement`
/// barycentric refinements of the complex.
Certificate minimality_certificate(const PolyhedralVarifold& V, const BoundaryRegion& gamma,
                                   double tol = kDefaultTol, bool with_solver = false,
                                   const SolverConfig& config = {}, int refinement = 1);

}  // namespace polycal
