// SPDX-License-Identifier: Apache-2.0
#include "polycal/solver.hpp"

#include <cmath>
#include <random>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

namespace polycal {
namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// min sum_j w_j |X_j| subject to K X = B, where X_j is row j of X and K acts
// on every column of X.
struct BlockProblem {
  SpMat K;
  VectorXd weights;
  MatrixXd rhs;
};

struct BlockSolution {
  MatrixXd x;
  double dual_bound = 0.0;
  int iterations = 0;
  SolveStatus status = SolveStatus::iteration_cap;
};

double block_objective(const VectorXd& w, const MatrixXd& x) {
  double f = 0.0;
  for (Eigen::Index j = 0; j < x.rows(); ++j) f += w(j) * x.row(j).norm();
  return f;
}

double operator_norm(const SpMat& K, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  VectorXd v(K.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
  double lambda = 0.0;
  for (int it = 0; it < 300; ++it) {
    const double len = v.norm();
    if (len == 0.0) return 0.0;
    v /= len;
    VectorXd w = K.transpose() * (K * v);
    const double next = v.dot(w);
    v = std::move(w);
    if (it > 20 && std::abs(next - lambda) <= 1e-10 * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

// Least-squares correction d with K d ~= r, using only the listed columns.
MatrixXd least_squares(const SpMat& K, const MatrixXd& r, const std::vector<Eigen::Index>& columns) {
  std::vector<Eigen::Triplet<double>> trips;
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (SpMat::InnerIterator it(K, columns[c]); it; ++it)
      trips.emplace_back(static_cast<int>(it.row()), static_cast<int>(c), it.value());
  SpMat sub(K.rows(), static_cast<Eigen::Index>(columns.size()));
  sub.setFromTriplets(trips.begin(), trips.end());
  MatrixXd out = MatrixXd::Zero(K.cols(), r.cols());
  if (columns.empty()) return out;
  Eigen::LeastSquaresConjugateGradient<SpMat> lscg;
  lscg.setTolerance(1e-15);
  lscg.setMaxIterations(std::max<Eigen::Index>(1000, 20 * sub.cols()));
  lscg.compute(sub);
  for (Eigen::Index c = 0; c < r.cols(); ++c) {
    const VectorXd d = lscg.solve(r.col(c));
    for (std::size_t k = 0; k < columns.size(); ++k) out(columns[k], c) = d(static_cast<Eigen::Index>(k));
  }
  return out;
}

std::vector<Eigen::Index> all_columns(const SpMat& K) {
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(K.cols()));
  for (Eigen::Index j = 0; j < K.cols(); ++j) cols[static_cast<std::size_t>(j)] = j;
  return cols;
}

// Moves x onto K x = B, touching only its nonzero blocks when that suffices.
MatrixXd project_feasible(const BlockProblem& p, const MatrixXd& x, double tol) {
  const MatrixXd r = p.K * x - p.rhs;
  if (r.norm() == 0.0) return x;
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < x.rows(); ++j)
    if (x.row(j).norm() > 0.0) support.push_back(j);
  MatrixXd y = x - least_squares(p.K, r, support);
  if ((p.K * y - p.rhs).norm() <= tol) return y;
  return x - least_squares(p.K, r, all_columns(p.K));
}

// Relaxed primal-dual splitting for the saddle problem
//   min_x max_y  sum_j w_j |x_j| + <K x - B, y>.
BlockSolution solve_blocks(const BlockProblem& p, const MatrixXd& start, const SolverConfig& cfg) {
  BlockSolution out;
  const double L = operator_norm(p.K, cfg.seed) * 1.01;
  if (L == 0.0) {
    out.x = start;
    out.status = SolveStatus::converged;
    return out;
  }
  const double tau = 0.99 / L;
  const double sigma = 0.99 / L;
  const double rho = cfg.relaxation;
  const double scale = std::max(1.0, p.rhs.norm());

  MatrixXd x = start;
  MatrixXd y = MatrixXd::Zero(p.K.rows(), p.rhs.cols());
  MatrixXd x_new(x.rows(), x.cols());
  double last_objective = block_objective(p.weights, x);
  out.x = x;

  for (int it = 1; it <= cfg.max_iter; ++it) {
    const MatrixXd grad = x - tau * (p.K.transpose() * y);
    for (Eigen::Index j = 0; j < x.rows(); ++j) {
      const double len = grad.row(j).norm();
      const double shrink = tau * p.weights(j);
      if (len <= shrink)
        x_new.row(j).setZero();
      else
        x_new.row(j) = (1.0 - shrink / len) * grad.row(j);
    }
    const MatrixXd y_new = y + sigma * (p.K * (2.0 * x_new - x) - p.rhs);
    x += rho * (x_new - x);
    y += rho * (y_new - y);
    out.iterations = it;

    if (it % cfg.check_every != 0) continue;
    const double residual = (p.K * x_new - p.rhs).norm();
    const double objective = block_objective(p.weights, x_new);

    // Dual bound: scale y into {|K^T y|_j <= w_j} and evaluate -<B, y>.
    const MatrixXd kty = p.K.transpose() * y_new;
    double s = 1.0;
    for (Eigen::Index j = 0; j < kty.rows(); ++j) {
      const double len = kty.row(j).norm();
      if (len > p.weights(j)) s = std::min(s, p.weights(j) / len);
    }
    const double dual = -s * (p.rhs.cwiseProduct(y_new)).sum();
    out.dual_bound = std::max(out.dual_bound, dual);
    out.x = x_new;

    const bool feasible = residual <= cfg.primal_tol * scale;
    const bool stagnant = std::abs(objective - last_objective) <= cfg.obj_tol * std::max(1.0, objective);
    const bool closed = objective - out.dual_bound <= cfg.obj_tol * std::max(1.0, objective);
    last_objective = objective;
    if (feasible && (stagnant || closed)) {
      out.status = SolveStatus::converged;
      return out;
    }
  }
  out.status = SolveStatus::iteration_cap;
  return out;
}

std::size_t coefficient_size(const CoefficientGroup& G) {
  if (G.kind() != GroupKind::real && G.kind() != GroupKind::multivector)
    throw Error(ErrorCode::invalid_argument, "the solver supports only real and multivector coefficients");
  return G.value_size();
}

SpMat incidence_matrix(const EmbeddedComplex& K, int d) {
  std::vector<Eigen::Triplet<double>> trips;
  for (std::size_t id = 0; id < K.count(d); ++id)
    for (const Incidence& f : K.faces(d, static_cast<int>(id)))
      trips.emplace_back(f.id, static_cast<int>(id), static_cast<double>(f.sign));
  SpMat D(static_cast<Eigen::Index>(K.count(d - 1)), static_cast<Eigen::Index>(K.count(d)));
  D.setFromTriplets(trips.begin(), trips.end());
  return D;
}

VectorXd volumes(const EmbeddedComplex& K, int d) {
  VectorXd w(static_cast<Eigen::Index>(K.count(d)));
  for (Eigen::Index id = 0; id < w.size(); ++id) w(id) = K.volume(d, static_cast<int>(id));
  return w;
}

MatrixXd to_matrix(const Chain& c, std::size_t rows, std::size_t width) {
  MatrixXd out = MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(width));
  for (const auto& [id, g] : c.terms())
    for (std::size_t k = 0; k < width; ++k) out(id, static_cast<Eigen::Index>(k)) = g.value[k];
  return out;
}

Chain to_chain(const ComplexPtr& K, int d, const GroupPtr& G, const MatrixXd& x) {
  Chain out(K, d, G);
  for (Eigen::Index j = 0; j < x.rows(); ++j) {
    if (x.row(j).norm() == 0.0) continue;
    GroupElement g{std::vector<double>(x.row(j).data(), x.row(j).data() + 0), {}};
    g.value.resize(static_cast<std::size_t>(x.cols()));
    for (Eigen::Index k = 0; k < x.cols(); ++k) g.value[static_cast<std::size_t>(k)] = x(j, k);
    out.accumulate(static_cast<int>(j), g);
  }
  return out;
}

double chain_distance(const Chain& a, const Chain& b) {
  const Chain diff = combine(a, b, -1);
  double s = 0.0;
  for (const auto& [id, g] : diff.terms())
    for (double v : g.value) s += v * v;
  return std::sqrt(s);
}

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::iteration_cap: return "iteration-cap";
    case SolveStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

MinMassProblem boundary_problem(const Chain& reference, const SolverConfig& config) {
  return {reference.complex(), reference.dimension(), boundary(reference), config};
}

SolveResult min_mass_fixed_boundary(const MinMassProblem& p) {
  const EmbeddedComplex& K = *p.complex;
  const int m = p.dimension;
  if (m < 1 || m > K.top_dimension())
    throw Error(ErrorCode::dimension_mismatch, "complex has no simplices of the requested dimension");
  if (p.boundary.complex() != p.complex || p.boundary.dimension() != m - 1)
    throw Error(ErrorCode::invalid_argument, "target boundary must be an (m-1)-chain on the same complex");
  const GroupPtr& G = p.boundary.group();
  const std::size_t width = coefficient_size(*G);

  BlockProblem bp{incidence_matrix(K, m), volumes(K, m), to_matrix(p.boundary, K.count(m - 1), width)};
  SolveResult result{Chain(p.complex, m, G), 0.0, 0.0, 0.0, 0, SolveStatus::converged};
  if (p.boundary.is_zero()) return result;

  const double scale = std::max(1.0, bp.rhs.norm());
  const MatrixXd start = least_squares(bp.K, bp.rhs, all_columns(bp.K));
  const double start_residual = (bp.K * start - bp.rhs).norm();
  if (start_residual > std::max(p.config.primal_tol, 1e-9) * scale) {
    result.status = SolveStatus::infeasible;
    result.primal_residual = start_residual;
    return result;
  }

  const BlockSolution sol = solve_blocks(bp, start, p.config);
  const MatrixXd x = project_feasible(bp, sol.x, p.config.primal_tol);
  result.chain = to_chain(p.complex, m, G, x);
  result.objective = mass(result.chain);
  result.primal_residual = chain_distance(boundary(result.chain), p.boundary);
  result.dual_bound = sol.dual_bound;
  result.iterations = sol.iterations;
  result.status = sol.status;
  if (result.status == SolveStatus::converged && result.primal_residual > p.config.primal_tol * scale)
    result.status = SolveStatus::iteration_cap;
  return result;
}

FlatNormResult flat_norm_solve(const Chain& a, const SolverConfig& config) {
  const ComplexPtr& Kp = a.complex();
  const EmbeddedComplex& K = *Kp;
  const int m = a.dimension();
  const GroupPtr& G = a.group();
  const std::size_t width = coefficient_size(*G);
  FlatNormResult out{mass(a), Chain(Kp, m + 1, G), a, 0, SolveStatus::converged};
  if (a.is_zero() || K.count(m + 1) == 0) return out;

  // Unknowns z = (r, q) with r - dq = a; objective M(r) + M(q).
  const auto nr = static_cast<Eigen::Index>(K.count(m));
  const auto nq = static_cast<Eigen::Index>(K.count(m + 1));
  const SpMat D = incidence_matrix(K, m + 1);
  std::vector<Eigen::Triplet<double>> trips;
  for (Eigen::Index i = 0; i < nr; ++i) trips.emplace_back(static_cast<int>(i), static_cast<int>(i), 1.0);
  for (Eigen::Index j = 0; j < D.outerSize(); ++j)
    for (SpMat::InnerIterator it(D, j); it; ++it)
      trips.emplace_back(static_cast<int>(it.row()), static_cast<int>(nr + j), -it.value());
  BlockProblem bp;
  bp.K.resize(nr, nr + nq);
  bp.K.setFromTriplets(trips.begin(), trips.end());
  bp.weights.resize(nr + nq);
  bp.weights << volumes(K, m), volumes(K, m + 1);
  bp.rhs = to_matrix(a, K.count(m), width);

  MatrixXd start = MatrixXd::Zero(nr + nq, static_cast<Eigen::Index>(width));
  start.topRows(nr) = bp.rhs;
  const BlockSolution sol = solve_blocks(bp, start, config);

  // Rebuild r from q so that the decomposition is exact.
  const Chain q = to_chain(Kp, m + 1, G, sol.x.bottomRows(nq));
  const Chain r = combine(a, boundary(q), +1);
  const double value = mass(r) + mass(q);
  out.iterations = sol.iterations;
  out.status = sol.status;
  if (value < out.value) {
    out.value = value;
    out.filling = q;
    out.remainder = r;
  }
  return out;
}

}  // namespace polycal
