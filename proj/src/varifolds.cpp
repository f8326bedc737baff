// SPDX-License-Identifier: Apache-2.0
#include "polycal/varifolds.hpp"

#include <algorithm>
#include <cmath>

namespace polycal {

PolyhedralVarifold::PolyhedralVarifold(ComplexPtr complex, int dimension)
    : complex_(std::move(complex)), dimension_(dimension) {
  if (!complex_) throw Error(ErrorCode::invalid_argument, "varifold needs a complex");
  if (dimension_ < 1 || dimension_ >= complex_->ambient_dim())
    throw Error(ErrorCode::dimension_mismatch, "varifold dimension must satisfy 1 <= m < N");
}

double PolyhedralVarifold::weight(int id) const {
  auto it = weights_.find(id);
  return it == weights_.end() ? 0.0 : it->second;
}

double PolyhedralVarifold::mass() const {
  double total = 0.0;
  for (const auto& [id, c] : weights_) total += c * complex_->volume(dimension_, id);
  return total;
}

void PolyhedralVarifold::add_weight(int id, double c) {
  complex_->simplex(dimension_, id);
  if (!(c >= 0.0) || !std::isfinite(c)) throw Error(ErrorCode::invalid_argument, "varifold weight must be >= 0");
  if (c == 0.0) return;
  weights_[id] += c;
}

PolyhedralVarifold make_varifold(ComplexPtr K, int m, const std::vector<WeightedSimplex>& terms) {
  PolyhedralVarifold V(std::move(K), m);
  for (const auto& t : terms) {
    if (static_cast<int>(t.vertices.size()) != m + 1)
      throw Error(ErrorCode::dimension_mismatch, "varifold term is not an " + std::to_string(m) + "-simplex");
    SimplexTuple sorted = t.vertices;
    if (sort_with_parity(sorted) == 0) throw Error(ErrorCode::invalid_argument, "repeated vertex in varifold term");
    const auto id = V.complex()->find(sorted);
    if (!id) throw Error(ErrorCode::not_found, "varifold term is not a simplex of the complex");
    V.add_weight(*id, t.weight);
  }
  return V;
}

Point conormal(const OrientedSimplex& sigma, const OrientedSimplex& tau, double tol) {
  if (tau.dimension() != sigma.dimension() - 1 || tau.ambient_dim() != sigma.ambient_dim())
    throw Error(ErrorCode::dimension_mismatch, "conormal: tau must be a facet of sigma");
  // The vertex of sigma that tau lacks.
  const Point* opposite = nullptr;
  int unmatched = 0;
  for (const auto& v : sigma.vertices()) {
    const bool in_tau = std::any_of(tau.vertices().begin(), tau.vertices().end(),
                                    [&](const Point& w) { return (v - w).norm() <= tol; });
    if (!in_tau) {
      opposite = &v;
      ++unmatched;
    }
  }
  if (unmatched != 1) throw Error(ErrorCode::invalid_argument, "conormal: tau is not a face of sigma");

  Point u = *opposite - tau.vertices()[0];
  if (tau.dimension() > 0) {
    const Eigen::MatrixXd E = tau.edge_matrix();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(E);
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(E.rows(), E.cols());
    u -= Q * (Q.transpose() * u);
  }
  const double len = u.norm();
  if (len <= tol * std::max(1.0, (*opposite - tau.vertices()[0]).norm()))
    throw Error(ErrorCode::degenerate, "conormal: degenerate simplex");
  return -u / len;
}

Point conormal(const EmbeddedComplex& K, int m, int sigma_id, int tau_id) {
  const auto faces = K.faces(m, sigma_id);
  if (std::none_of(faces.begin(), faces.end(), [&](const Incidence& f) { return f.id == tau_id; }))
    throw Error(ErrorCode::invalid_argument, "conormal: tau is not a face of sigma");
  return conormal(K.geometry(m, sigma_id), K.geometry(m - 1, tau_id), K.tolerance());
}

StationarityReport stationarity(const PolyhedralVarifold& V, const BoundaryRegion& gamma, double tol) {
  const EmbeddedComplex& K = *V.complex();
  const int m = V.dimension();
  const int n = K.ambient_dim();
  StationarityReport report;
  report.tol = tol;
  for (int tau : interior_faces(K, m, gamma)) {
    FaceBalance balance{tau, Point::Zero(n), 0.0, 0.0, 0.0, {}};
    Multivector boundary_coeff(n, m);
    for (const Incidence& co : K.cofaces(m - 1, tau)) {
      const double c = V.weight(co.id);
      if (c == 0.0) continue;
      Point nu = conormal(K, m, co.id, tau);
      balance.residual += c * nu;
      boundary_coeff += (co.sign * c) * unit_simple_vector(K.geometry(m, co.id), K.tolerance());
      balance.incident.push_back({co.id, c, std::move(nu)});
    }
    if (balance.incident.empty()) continue;
    balance.residual_norm = balance.residual.norm();
    balance.boundary_norm = boundary_coeff.norm();
    const Multivector eta_tau = unit_simple_vector(K.geometry(m - 1, tau), K.tolerance());
    balance.duality_gap = (wedge(Multivector::from_vector(balance.residual), eta_tau) - boundary_coeff).norm();
    report.max_residual = std::max(report.max_residual, balance.residual_norm);
    report.max_duality_gap = std::max(report.max_duality_gap, balance.duality_gap);
    report.faces.push_back(std::move(balance));
  }
  report.stationary = report.max_residual <= tol;
  return report;
}

Chain chainify(const PolyhedralVarifold& V) {
  const EmbeddedComplex& K = *V.complex();
  auto G = std::make_shared<MultivectorGroup>(K.ambient_dim(), V.dimension(), K.tolerance());
  Chain out(V.complex(), V.dimension(), G);
  for (const auto& [id, c] : V.weights()) {
    const Multivector eta = unit_simple_vector(K.geometry(V.dimension(), id), K.tolerance());
    out.accumulate(id, GroupElement::from(c * eta));
  }
  return out;
}

VarifoldPushforward pushforward_varifold(const PolyhedralVarifold& V, const ComplexPtr& image) {
  const EmbeddedComplex& K = *V.complex();
  if (image->ambient_dim() != K.ambient_dim() || image->count(V.dimension()) != K.count(V.dimension()))
    throw Error(ErrorCode::invalid_argument, "image complex does not share the varifold's combinatorics");
  VarifoldPushforward out{PolyhedralVarifold(image, V.dimension()), {}};
  for (const auto& [id, c] : V.weights()) {
    if (image->is_degenerate(V.dimension(), id))
      out.dropped.push_back(id);
    else
      out.varifold.add_weight(id, c);
  }
  return out;
}

VarifoldPushforward pushforward_varifold(const PolyhedralVarifold& V, const VertexMap& f, double tol) {
  return pushforward_varifold(V, apply_vertex_map(V.complex(), f, tol));
}

PolyhedralVarifold transport(const PolyhedralVarifold& V, const Subdivision& sub) {
  if (V.complex() != sub.parent) throw Error(ErrorCode::invalid_argument, "varifold is not on the subdivided complex");
  PolyhedralVarifold out(sub.refined, V.dimension());
  const auto& level = sub.children.at(static_cast<std::size_t>(V.dimension()));
  for (const auto& [id, c] : V.weights())
    for (const Child& child : level[static_cast<std::size_t>(id)]) out.add_weight(child.id, c);
  return out;
}

}  // namespace polycal
