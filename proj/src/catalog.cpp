// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "polycal/varifolds.hpp"

namespace polycal {
namespace {

constexpr int kMaxRefinement = 3;

struct Coarse {
  std::vector<Point> vertices;
  std::vector<SimplexTuple> simplices;  // support and filling
  int m = 0;
  std::vector<WeightedSimplex> sheets;
  std::vector<SimplexTuple> frontier;
};

Point pt(std::initializer_list<double> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p(i++) = x;
  return p;
}

// Three unit directions in the plane at mutual angles of 120 degrees.
std::array<std::array<double, 2>, 3> tripod() {
  std::array<std::array<double, 2>, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const double theta = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 3;
    out[static_cast<std::size_t>(k)] = {std::cos(theta), std::sin(theta)};
  }
  return out;
}

Coarse y_line(double r) {
  Coarse c;
  c.m = 1;
  c.vertices.push_back(pt({0, 0}));
  for (auto [x, y] : tripod()) c.vertices.push_back(pt({r * x, r * y}));
  for (int k = 1; k <= 3; ++k) {
    const int next = k % 3 + 1;
    c.simplices.push_back({0, k, next});
    c.sheets.push_back({{0, k}, 1.0});
    c.frontier.push_back({k});
  }
  return c;
}

Coarse plane_disk(double r) {
  Coarse c;
  c.m = 2;
  c.vertices.push_back(pt({0, 0, 0}));
  for (int k = 0; k < 6; ++k) {
    const double theta = std::numbers::pi * k / 3;
    c.vertices.push_back(pt({r * std::cos(theta), r * std::sin(theta), 0}));
  }
  c.vertices.push_back(pt({0, 0, r}));   // 7: upper apex
  c.vertices.push_back(pt({0, 0, -r}));  // 8: lower apex
  for (int k = 1; k <= 6; ++k) {
    const int next = k % 6 + 1;
    c.sheets.push_back({{0, k, next}, 1.0});
    c.frontier.push_back({k, next});
    c.simplices.push_back({0, k, next, 7});
    c.simplices.push_back({0, k, next, 8});
  }
  return c;
}

Coarse y_times_r(double r) {
  Coarse c;
  c.m = 2;
  // 0 = spine bottom, 1 = spine top, 2k+2 / 2k+3 = bottom / top of ray k.
  c.vertices.push_back(pt({0, 0, -r}));
  c.vertices.push_back(pt({0, 0, r}));
  for (auto [x, y] : tripod()) {
    c.vertices.push_back(pt({r * x, r * y, -r}));
    c.vertices.push_back(pt({r * x, r * y, r}));
  }
  for (int k = 0; k < 3; ++k) {
    const int lo = 2 * k + 2, hi = 2 * k + 3;
    const int nlo = 2 * ((k + 1) % 3) + 2, nhi = nlo + 1;
    c.sheets.push_back({{0, lo, hi}, 1.0});
    c.sheets.push_back({{0, 1, hi}, 1.0});
    c.frontier.push_back({lo, hi});
    c.frontier.push_back({0, lo});
    c.frontier.push_back({1, hi});
    // Prism between strips k and k+1, split so its side faces match the strips.
    c.simplices.push_back({0, lo, nlo, nhi});
    c.simplices.push_back({0, lo, hi, nhi});
    c.simplices.push_back({0, 1, hi, nhi});
  }
  return c;
}

Coarse tetrahedral_cone(double r) {
  Coarse c;
  c.m = 2;
  const double s = r / std::sqrt(3.0);
  c.vertices = {pt({0, 0, 0}), pt({s, s, s}), pt({s, -s, -s}), pt({-s, s, -s}), pt({-s, -s, s})};
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      c.sheets.push_back({{0, a, b}, 1.0});
      c.frontier.push_back({a, b});
    }
  c.simplices = {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}};
  return c;
}

Coarse custom_net_cone(const ExampleParams& p) {
  if (p.directions.empty() || p.cells.empty())
    throw Error(ErrorCode::invalid_argument, "custom_net_cone needs directions and cells");
  if (!p.weights.empty() && p.weights.size() != p.cells.size())
    throw Error(ErrorCode::invalid_argument, "custom_net_cone needs one weight per cell");
  const auto n = p.directions.front().size();
  Coarse c;
  c.m = static_cast<int>(p.cells.front().size());
  c.vertices.push_back(Point::Zero(n));
  for (const auto& d : p.directions) {
    if (d.size() != n || d.norm() == 0.0)
      throw Error(ErrorCode::invalid_argument, "custom_net_cone directions must be nonzero and share a dimension");
    c.vertices.push_back(p.radius * d.normalized());
  }
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const auto& cell = p.cells[i];
    if (static_cast<int>(cell.size()) != c.m)
      throw Error(ErrorCode::invalid_argument, "custom_net_cone cells must all have the same size");
    SimplexTuple simplex{0};
    SimplexTuple face;
    for (int v : cell) {
      if (v < 0 || static_cast<std::size_t>(v) >= p.directions.size())
        throw Error(ErrorCode::invalid_argument, "custom_net_cone cell index out of range");
      simplex.push_back(v + 1);
      face.push_back(v + 1);
    }
    c.simplices.push_back(simplex);
    c.sheets.push_back({simplex, p.weights.empty() ? 1.0 : p.weights[i]});
    c.frontier.push_back(face);
  }
  return c;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"plane_disk", "y_line", "y_times_r", "tetrahedral_cone", "custom_net_cone"};
}

CatalogExample generate_example(std::string_view name, const ExampleParams& params) {
  if (!(params.radius > 0.0) || !std::isfinite(params.radius))
    throw Error(ErrorCode::invalid_argument, "truncation radius must be positive");
  if (params.refinement < 0 || params.refinement > kMaxRefinement)
    throw Error(ErrorCode::invalid_argument, "refinement level must be in [0, 3]");

  Coarse coarse;
  if (name == "plane_disk")
    coarse = plane_disk(params.radius);
  else if (name == "y_line")
    coarse = y_line(params.radius);
  else if (name == "y_times_r")
    coarse = y_times_r(params.radius);
  else if (name == "tetrahedral_cone")
    coarse = tetrahedral_cone(params.radius);
  else if (name == "custom_net_cone")
    coarse = custom_net_cone(params);
  else
    throw Error(ErrorCode::invalid_argument, "unknown catalog example '" + std::string(name) + "'");

  for (const auto& sheet : coarse.sheets) coarse.simplices.push_back(sheet.vertices);
  // Sheets may already be faces of filling simplices; keep each tuple once.
  for (auto& t : coarse.simplices) std::sort(t.begin(), t.end());
  std::sort(coarse.simplices.begin(), coarse.simplices.end());
  coarse.simplices.erase(std::unique(coarse.simplices.begin(), coarse.simplices.end()), coarse.simplices.end());

  ComplexPtr K = EmbeddedComplex::build(coarse.vertices, coarse.simplices);
  PolyhedralVarifold V = make_varifold(K, coarse.m, coarse.sheets);
  BoundaryRegion gamma = make_boundary_region(*K, coarse.m - 1, coarse.frontier);
  for (int level = 0; level < params.refinement; ++level) {
    const Subdivision sub = subdivide(K, SubdivisionRule::barycentric());
    V = transport(V, sub);
    gamma = transport(gamma, sub);
    K = sub.refined;
  }
  return {std::string(name), params, K, std::move(V), std::move(gamma)};
}

}  // namespace polycal
