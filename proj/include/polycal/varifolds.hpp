// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polycal/chains.hpp"

namespace polycal {

/// Weighted unoriented m-simplices of a complex, all weights positive.
class PolyhedralVarifold {
 public:
  PolyhedralVarifold(ComplexPtr complex, int dimension);

  const ComplexPtr& complex() const { return complex_; }
  int dimension() const { return dimension_; }
  const std::map<int, double>& weights() const { return weights_; }
  double weight(int id) const;

  /// Sum of c_i times the m-volume of sigma_i.
  double mass() const;

  void add_weight(int id, double c);

 private:
  ComplexPtr complex_;
  int dimension_;
  std::map<int, double> weights_;
};

struct WeightedSimplex {
  SimplexTuple vertices;
  double weight;
};

PolyhedralVarifold make_varifold(ComplexPtr K, int m, const std::vector<WeightedSimplex>& terms);

/// Unit vector tangent to sigma, orthogonal to its face tau, pointing out of
/// sigma across tau. `tau` must consist of all vertices of sigma but one.
Point conormal(const OrientedSimplex& sigma, const OrientedSimplex& tau, double tol = kDefaultTol);

/// Same, for an m-simplex and one of its (m-1)-faces in a complex.
Point conormal(const EmbeddedComplex& K, int m, int sigma_id, int tau_id);

struct IncidentSheet {
  int simplex;
  double weight;
  Point conormal;
};

struct FaceBalance {
  int face;
  Point residual;  // sum of c_i * nu_i
  double residual_norm;
  /// Norm of the boundary coefficient sum_i c_i eta(sigma_i) on this face,
  /// computed through the incidence signs rather than the conormals.
  double boundary_norm;
  /// |residual ^ eta(face) - boundary coefficient|, which vanishes when the
  /// two routes agree.
  double duality_gap;
  std::vector<IncidentSheet> incident;
};

struct StationarityReport {
  double tol = kDefaultTol;
  bool stationary = true;
  double max_residual = 0.0;
  double max_duality_gap = 0.0;
  std::vector<FaceBalance> faces;  // interior faces touching the support, by id
};

/// Conormal balance at every interior (m-1)-face.
StationarityReport stationarity(const PolyhedralVarifold& V, const BoundaryRegion& gamma,
                                double tol = kDefaultTol);

/// <V> = sum c_i eta(sigma_i) [sigma_i], over the m-vectors of the ambient space.
Chain chainify(const PolyhedralVarifold& V);

struct VarifoldPushforward {
  PolyhedralVarifold varifold;
  std::vector<int> dropped;
};

VarifoldPushforward pushforward_varifold(const PolyhedralVarifold& V, const ComplexPtr& image);
VarifoldPushforward pushforward_varifold(const PolyhedralVarifold& V, const VertexMap& f,
                                         double tol = kDefaultTol);

PolyhedralVarifold transport(const PolyhedralVarifold& V, const Subdivision& sub);

// --- catalog ----------------------------------------------------------------

struct ExampleParams {
  double radius = 1.0;
  int refinement = 0;  // number of barycentric subdivisions
  // custom_net_cone only: directions on the unit sphere, (m-1)-cells given
  // as index tuples into `directions`, and one weight per cell.
  std::vector<Point> directions;
  std::vector<SimplexTuple> cells;
  std::vector<double> weights;
};

struct CatalogExample {
  std::string name;
  ExampleParams params;
  ComplexPtr complex;
  PolyhedralVarifold varifold;
  BoundaryRegion gamma;
};

/// Names accepted by generate_example.
std::vector<std::string> catalog_names();

/// Triangulated truncation of a classical stationary cone, with Gamma the
/// truncation frontier. Except for custom nets, the complex also carries a
/// filling of one dimension higher so that minimization problems on it
/// have competitors.
CatalogExample generate_example(std::string_view name, const ExampleParams& params = {});

}  // namespace polycal
