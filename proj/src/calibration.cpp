// SPDX-License-Identifier: Apache-2.0
#include "polycal/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polycal {
namespace {

const MultivectorGroup& calibration_group(const Chain& a) {
  const auto* G = dynamic_cast<const MultivectorGroup*>(a.group().get());
  if (G == nullptr || G->grade() != a.dimension())
    throw Error(ErrorCode::invalid_argument, "phi needs coefficients in the m-vectors of R^N, m = chain dimension");
  return *G;
}

CheckResult check(std::string name, double residual, double tol) {
  return {std::move(name), residual <= tol, residual, tol};
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

// Sum of coefficient norms on boundary faces outside gamma.
double outside_boundary(const Chain& b, const BoundaryRegion& gamma) {
  double total = 0.0;
  for (const auto& [id, g] : b.terms())
    if (!gamma.contains(id)) total += b.group()->norm(g);
  return total;
}

}  // namespace

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::calibrated_minimizer: return "calibrated-minimizer";
    case Conclusion::not_calibrated: return "not-calibrated";
    case Conclusion::boundary_not_in_gamma: return "boundary-not-in-gamma";
    case Conclusion::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double phi(const Chain& a) {
  const MultivectorGroup& G = calibration_group(a);
  const EmbeddedComplex& K = *a.complex();
  const int m = a.dimension();
  double total = 0.0;
  for (const auto& [id, g] : a.terms()) {
    const double vol = K.volume(m, id);
    if (vol == 0.0) continue;
    total += inner(G.to_multivector(g), unit_simple_vector(K.geometry(m, id), K.tolerance())) * vol;
  }
  return total;
}

Certificate certify_calibrated(const Chain& a, double tol) {
  const MultivectorGroup& G = calibration_group(a);
  const EmbeddedComplex& K = *a.complex();
  const int m = a.dimension();
  Certificate cert;
  cert.subject = "chain";
  cert.provenance = {K.hash(), G.name(), tol, false, 0, ""};
  cert.mass = mass(a);
  cert.phi = phi(a);
  const double scale = std::max(1.0, cert.mass);
  cert.checks.push_back(check("phi_le_mass", std::max(0.0, cert.phi - cert.mass), tol * scale));
  cert.checks.push_back(check("phi_eq_mass", std::abs(cert.phi - cert.mass), tol * scale));

  // g = |g| eta(sigma) on every term.
  double worst = 0.0;
  for (const auto& [id, g] : a.terms()) {
    if (K.volume(m, id) == 0.0) continue;
    const Multivector v = G.to_multivector(g);
    const Multivector eta = unit_simple_vector(K.geometry(m, id), K.tolerance());
    worst = std::max(worst, (v - v.norm() * eta).norm() / std::max(1.0, v.norm()));
  }
  cert.checks.push_back(check("coefficients_along_eta", worst, tol));
  cert.conclusion = all_pass(cert.checks) ? Conclusion::calibrated_minimizer : Conclusion::not_calibrated;
  return cert;
}

StokesReport check_stokes(const ComplexPtr& K, int m, int trials, double tol, std::uint64_t seed) {
  if (m < 0 || K->count(m + 1) == 0)
    throw Error(ErrorCode::precondition, "complex has no (m+1)-simplices");
  auto G = std::make_shared<MultivectorGroup>(K->ambient_dim(), m, K->tolerance());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::bernoulli_distribution keep(0.5);
  StokesReport report{trials, 0.0, tol, true, seed};
  for (int t = 0; t < trials; ++t) {
    Chain q(K, m + 1, G);
    for (std::size_t id = 0; id < K->count(m + 1); ++id) {
      if (!keep(rng)) continue;
      GroupElement g{std::vector<double>(G->value_size()), {}};
      for (double& x : g.value) x = coeff(rng);
      q.accumulate(static_cast<int>(id), g);
    }
    const double r = std::abs(phi(boundary(q))) / (1.0 + mass(q));
    report.max_residual = std::max(report.max_residual, r);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

FlatBoundReport phi_flat_bound(const Chain& a, const SolverConfig& config, double tol) {
  FlatBoundReport report;
  report.tol = tol;
  report.phi = phi(a);
  report.mass = mass(a);
  const FlatNormResult flat = flat_norm_solve(a, config);
  report.flat = flat.value;
  report.status = flat.status;
  const double scale = std::max(1.0, report.mass);
  report.pass = report.phi <= report.flat + tol * scale && report.flat <= report.mass + tol * scale;
  return report;
}

Certificate minimality_certificate(const PolyhedralVarifold& V, const BoundaryRegion& gamma, double tol,
                                   bool with_solver, const SolverConfig& config, int refinement) {
  const EmbeddedComplex& K = *V.complex();
  const int m = V.dimension();
  if (gamma.dimension != m - 1) throw Error(ErrorCode::dimension_mismatch, "gamma must consist of (m-1)-faces");

  Certificate cert;
  cert.subject = "varifold";
  const Chain A = chainify(V);
  cert.provenance = {K.hash(), A.group()->name(), tol, with_solver, config.seed,
                     "all m-chains in R^N over the m-vectors of R^N with boundary equal to that of <V>"};
  cert.mass = V.mass();
  cert.phi = phi(A);

  const StationarityReport st = stationarity(V, gamma, tol);
  cert.checks.push_back(check("stationarity", st.max_residual, tol));
  if (!st.stationary) {
    for (const FaceBalance& f : st.faces)
      if (f.residual_norm == st.max_residual) {
        cert.worst_face = f.face;
        cert.worst_boundary_norm = f.boundary_norm;
      }
    cert.conclusion = Conclusion::not_calibrated;
    return cert;
  }

  const Chain b = boundary(A);
  cert.checks.push_back(check("boundary_in_gamma", outside_boundary(b, gamma), 0.0));
  if (!cert.checks.back().pass) {
    cert.conclusion = Conclusion::boundary_not_in_gamma;
    return cert;
  }

  const Certificate cal = certify_calibrated(A, tol);
  cert.checks.insert(cert.checks.end(), cal.checks.begin(), cal.checks.end());
  if (!all_pass(cal.checks)) {
    cert.conclusion = Conclusion::not_calibrated;
    return cert;
  }

  if (with_solver) {
    Chain reference = A;
    for (int level = 0; level < refinement; ++level)
      reference = transport(reference, subdivide(reference.complex(), SubdivisionRule::barycentric()));
    const SolveResult sol = min_mass_fixed_boundary(boundary_problem(reference, config));
    const double scale = std::max(1.0, cert.mass);
    cert.checks.push_back(check("solver_converged", sol.status == SolveStatus::converged ? 0.0 : 1.0, 0.0));
    // A* is feasible up to its primal residual, so its mass can dip below
    // M(<V>) only by that much.
    cert.checks.push_back(
        check("solver_not_below_mass", std::max(0.0, cert.mass - sol.objective) / scale,
              tol + sol.primal_residual));
    cert.checks.push_back(check("solver_matches_mass", std::abs(sol.objective - cert.mass) / scale, 1e-5));
  }
  cert.conclusion = all_pass(cert.checks) ? Conclusion::calibrated_minimizer : Conclusion::inconclusive;
  return cert;
}

}  // namespace polycal
