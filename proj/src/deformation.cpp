// SPDX-License-Identifier: Apache-2.0
#include "polycal/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace polycal {
namespace {

int orientation(const EmbeddedComplex& K, int d, int id) {
  const double det = K.geometry(d, id).edge_matrix().determinant();
  return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
}

Point ball_sample(std::mt19937_64& rng, int n, double radius) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point dir(n);
  do {
    for (int i = 0; i < n; ++i) dir(i) = normal(rng);
  } while (dir.norm() == 0.0);
  return dir.normalized() * (radius * std::pow(unit(rng), 1.0 / n));
}

}  // namespace

DeformReport deform_experiment(const PolyhedralVarifold& V, const BoundaryRegion& gamma, int trials,
                               double magnitude, std::uint64_t seed, double tol) {
  if (trials < 0 || !(magnitude >= 0.0)) throw Error(ErrorCode::invalid_argument, "bad trial count or magnitude");
  if (!stationarity(V, gamma, tol).stationary)
    throw Error(ErrorCode::precondition, "varifold is not stationary away from gamma");
  const ComplexPtr& K = V.complex();
  const int n = K->ambient_dim();
  const int m = V.dimension();

  std::set<int> free;
  for (const auto& [id, c] : V.weights())
    for (int v : K->simplex(m, id)) free.insert(v);
  for (int v : region_vertices(*K, gamma)) free.erase(v);

  const auto maximal = K->maximal_simplices();
  std::vector<int> signs;
  for (const auto& [d, id] : maximal) signs.push_back(d == n ? orientation(*K, d, id) : 0);

  DeformReport report;
  report.trials = trials;
  report.seed = seed;
  report.magnitude = magnitude;
  report.base_mass = V.mass();
  std::mt19937_64 rng(seed);
  const int max_attempts = 20 * std::max(trials, 1);

  for (int attempt = 0; report.accepted < trials && attempt < max_attempts; ++attempt) {
    VertexMap f{K->vertices(), {}};
    for (int v = 0; v < static_cast<int>(K->num_vertices()); ++v) {
      if (free.count(v))
        f.images[static_cast<std::size_t>(v)] += ball_sample(rng, n, magnitude);
      else
        f.frozen.push_back(v);
    }
    const ComplexPtr image = K->with_vertices(f.images);
    bool ok = true;
    for (std::size_t k = 0; k < maximal.size() && ok; ++k) {
      const auto [d, id] = maximal[k];
      if (image->is_degenerate(d, id) || (signs[k] != 0 && orientation(*image, d, id) != signs[k])) ok = false;
    }
    if (!ok) {
      ++report.rejected;
      continue;
    }
    const double moved = pushforward_varifold(V, image).varifold.mass();
    report.ratios.push_back(report.base_mass > 0.0 ? moved / report.base_mass : 1.0);
    ++report.accepted;
  }
  if (trials > 0 && report.accepted == 0)
    throw Error(ErrorCode::degenerate, "every perturbation degenerated the complex");
  if (!report.ratios.empty()) {
    report.min_ratio = *std::min_element(report.ratios.begin(), report.ratios.end());
    report.max_ratio = *std::max_element(report.ratios.begin(), report.ratios.end());
  }
  report.pass = report.accepted == trials && report.min_ratio >= 1.0 - 1e-9;
  return report;
}

}  // namespace polycal
