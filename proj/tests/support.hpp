// SPDX-License-Identifier: Apache-2.0
// Shared fixtures for the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "polycal/calibration.hpp"

namespace polycal::testing {

inline Point pt(std::initializer_list<double> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p(i++) = x;
  return p;
}

// Kuhn triangulation of an n0 x n1 (x n2) grid of unit cubes, with every
// vertex jittered by at most `jitter` in each coordinate.
inline ComplexPtr kuhn_grid(const std::vector<int>& cells, double jitter, std::mt19937_64& rng) {
  const int dim = static_cast<int>(cells.size());
  std::vector<int> stride(static_cast<std::size_t>(dim), 1);
  for (int d = 1; d < dim; ++d) stride[d] = stride[d - 1] * (cells[d - 1] + 1);
  std::uniform_real_distribution<double> jit(-jitter, jitter);

  std::vector<Point> vertices;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  const int total = stride[dim - 1] * (cells[dim - 1] + 1);
  for (int v = 0; v < total; ++v) {
    Point p(dim);
    int rest = v;
    for (int d = 0; d < dim; ++d) {
      p(d) = rest % (cells[d] + 1) + jit(rng);
      rest /= cells[d] + 1;
    }
    vertices.push_back(p);
  }

  std::vector<SimplexTuple> simplices;
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::vector<int> corner(static_cast<std::size_t>(dim), 0);
  int ncubes = 1;
  for (int c : cells) ncubes *= c;
  for (int cube = 0; cube < ncubes; ++cube) {
    int rest = cube;
    int base = 0;
    for (int d = 0; d < dim; ++d) {
      corner[d] = rest % cells[d];
      rest /= cells[d];
      base += corner[d] * stride[d];
    }
    std::iota(perm.begin(), perm.end(), 0);
    do {
      SimplexTuple s{base};
      int cur = base;
      for (int d : perm) {
        cur += stride[d];
        s.push_back(cur);
      }
      simplices.push_back(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return EmbeddedComplex::build(vertices, simplices);
}

// Random chain over the m-vectors with about `density` of the m-simplices
// carrying a coefficient with entries uniform in [-1, 1].
inline Chain random_chain(const ComplexPtr& K, int dim, int grade, double density, std::mt19937_64& rng) {
  auto G = std::make_shared<MultivectorGroup>(K->ambient_dim(), grade);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::bernoulli_distribution keep(density);
  Chain out(K, dim, G);
  for (std::size_t id = 0; id < K->count(dim); ++id) {
    if (!keep(rng)) continue;
    GroupElement g{std::vector<double>(G->value_size()), {}};
    for (double& x : g.value) x = coeff(rng);
    out.accumulate(static_cast<int>(id), g);
  }
  return out;
}

inline double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace polycal::testing
