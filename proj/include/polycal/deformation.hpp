// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "polycal/varifolds.hpp"

namespace polycal {

struct DeformReport {
  int trials = 0;
  int accepted = 0;
  int rejected = 0;
  double base_mass = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  double magnitude = 0.0;
  std::vector<double> ratios;
};

/// Random PL perturbations of the vertices of V's complex, each vertex moved
/// uniformly within a ball of radius `magnitude`. Vertices of gamma and
/// vertices not touched by the support of V stay fixed. Maps that flatten a
/// support simplex or flip a top simplex are rejected and redrawn. Passes
/// when every mass ratio M(f#V)/M(V) is at least 1 - 1e-9.
DeformReport deform_experiment(const PolyhedralVarifold& V, const BoundaryRegion& gamma, int trials,
                               double magnitude, std::uint64_t seed = 0, double tol = kDefaultTol);

}  // namespace polycal
