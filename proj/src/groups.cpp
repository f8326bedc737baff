// SPDX-License-Identifier: Apache-2.0
#include "polycal/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polycal {
namespace {

double euclidean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

GroupElement CoefficientGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < out.value.size(); ++i) out.value[i] += b.value[i];
  return out;
}

GroupElement CoefficientGroup::neg(const GroupElement& a) const {
  GroupElement out = a;
  for (double& x : out.value) x = -x;
  return out;
}

void CoefficientGroup::validate(const GroupElement& a) const {
  if (a.value.size() != value_size())
    throw Error(ErrorCode::invalid_argument, name() + " element must have " +
                                                 std::to_string(value_size()) + " components, got " +
                                                 std::to_string(a.value.size()));
  if (!a.coords.empty())
    throw Error(ErrorCode::invalid_argument, name() + " elements carry no generator coordinates");
  for (double x : a.value)
    if (!std::isfinite(x)) throw Error(ErrorCode::invalid_argument, "non-finite group element");
}

bool CoefficientGroup::equal(const GroupElement& a, const GroupElement& b) const {
  return a.value.size() == b.value.size() && distance(a.value, b.value) <= tol_;
}

bool CoefficientGroup::same_as(const CoefficientGroup& other) const {
  if (this == &other) return true;
  if (kind() != other.kind() || name() != other.name()) return false;
  if (kind() != GroupKind::subgroup) return true;
  const auto& h1 = static_cast<const SubgroupWithNorm&>(*this);
  const auto& h2 = static_cast<const SubgroupWithNorm&>(other);
  if (h1.rank() != h2.rank() || !h1.ambient()->same_as(*h2.ambient())) return false;
  for (std::size_t i = 0; i < h1.rank(); ++i)
    if (!h1.ambient()->equal(h1.generators()[i], h2.generators()[i])) return false;
  return true;
}

double RealGroup::norm(const GroupElement& a) const { return std::abs(a.value.at(0)); }

double IntegerGroup::norm(const GroupElement& a) const { return std::abs(a.value.at(0)); }

void IntegerGroup::validate(const GroupElement& a) const {
  CoefficientGroup::validate(a);
  if (a.value[0] != std::round(a.value[0]))
    throw Error(ErrorCode::invalid_argument, "integer group element is not an integer");
}

MultivectorGroup::MultivectorGroup(int ambient_dim, int grade, double tol)
    : CoefficientGroup(tol), ambient_dim_(ambient_dim), grade_(grade) {
  size_ = basis_masks(ambient_dim, grade).size();
}

std::string MultivectorGroup::name() const {
  return "multivector(" + std::to_string(ambient_dim_) + "," + std::to_string(grade_) + ")";
}

GroupElement MultivectorGroup::zero() const { return {std::vector<double>(size_, 0.0), {}}; }

double MultivectorGroup::norm(const GroupElement& a) const { return euclidean(a.value); }

Multivector MultivectorGroup::to_multivector(const GroupElement& a) const {
  return Multivector(ambient_dim_, grade_, a.value);
}

// --- subgroup -------------------------------------------------------------

SubgroupWithNorm::SubgroupWithNorm(GroupPtr ambient, std::vector<GroupElement> generators)
    : CoefficientGroup(ambient ? ambient->tolerance() : kDefaultTol),
      ambient_(std::move(ambient)),
      generators_(std::move(generators)) {
  if (!ambient_ || (ambient_->kind() != GroupKind::real && ambient_->kind() != GroupKind::multivector))
    throw Error(ErrorCode::invalid_argument, "subgroup ambient must be a real or multivector group");
  if (generators_.empty()) throw Error(ErrorCode::invalid_argument, "subgroup needs at least one generator");
  for (auto& g : generators_) {
    g.coords.clear();
    ambient_->validate(g);
    norms_.push_back(ambient_->norm(g));
  }
  for (std::size_t i = 0; i < norms_.size(); ++i)
    if (norms_[i] > tol_) order_.push_back(i);
  if (order_.empty())
    throw Error(ErrorCode::invalid_argument, "all generator norms are zero; subgroup norm is ill-posed");
  std::stable_sort(order_.begin(), order_.end(),
                   [this](std::size_t a, std::size_t b) { return norms_[a] > norms_[b]; });
}

std::string SubgroupWithNorm::name() const {
  return "subgroup(" + ambient_->name() + ",k=" + std::to_string(generators_.size()) + ")";
}

GroupElement SubgroupWithNorm::zero() const {
  GroupElement z = ambient_->zero();
  z.coords.assign(generators_.size(), 0);
  return z;
}

GroupElement SubgroupWithNorm::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = CoefficientGroup::add(a, b);
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

GroupElement SubgroupWithNorm::neg(const GroupElement& a) const {
  GroupElement out = CoefficientGroup::neg(a);
  for (auto& n : out.coords) n = -n;
  return out;
}

GroupElement SubgroupWithNorm::element(std::span<const std::int64_t> coords) const {
  if (coords.size() != generators_.size())
    throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(generators_.size()) +
                                                   " generator coordinates");
  GroupElement out = ambient_->zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t c = 0; c < out.value.size(); ++c)
      out.value[c] += static_cast<double>(coords[i]) * generators_[i].value[c];
  out.coords.assign(coords.begin(), coords.end());
  return out;
}

void SubgroupWithNorm::validate(const GroupElement& a) const {
  if (a.coords.size() != generators_.size())
    throw Error(ErrorCode::invalid_argument, "subgroup element needs " + std::to_string(generators_.size()) +
                                                 " integer coordinates");
  const GroupElement resolved = element(a.coords);
  if (a.value.size() != resolved.value.size() || distance(a.value, resolved.value) > tol_ * std::max(1.0, euclidean(resolved.value)))
    throw Error(ErrorCode::invalid_argument, "subgroup element value disagrees with its coordinates");
}

bool SubgroupWithNorm::equal(const GroupElement& a, const GroupElement& b) const {
  return a.value.size() == b.value.size() && distance(a.value, b.value) <= tol_;
}

double SubgroupWithNorm::norm(const GroupElement& a) const { return subgroup_norm(*this, a.coords); }

// Depth-first branch and bound over integer coordinate vectors, generators in
// descending-norm order. A branch is cut when its cost reaches the incumbent
// or when the remaining budget cannot cover the residual (triangle inequality).
struct SubgroupSearch {
  const SubgroupWithNorm& H;
  double incumbent;
  bool strict;  // require cost < incumbent (improvement) rather than <=
  std::vector<std::int64_t> current;
  std::optional<std::vector<std::int64_t>> best;

  SubgroupSearch(const SubgroupWithNorm& h, double start, bool strict_improvement)
      : H(h), incumbent(start), strict(strict_improvement), current(h.rank(), 0) {}

  double slack() const { return 1e-12 * std::max(1.0, incumbent); }

  void run(std::size_t level, const std::vector<double>& residual, double cost) {
    const double budget = incumbent - cost;
    if (strict ? budget <= slack() : budget < -slack()) return;
    const double r = euclidean(residual);
    if (r > budget + H.tolerance()) return;
    if (level == H.order_.size()) {
      if (r <= H.tolerance()) {
        incumbent = cost;
        best = current;
      }
      return;
    }
    const std::size_t j = H.order_[level];
    const double w = H.norms_[j];
    const auto limit = static_cast<std::int64_t>(std::floor(budget / w + 1e-12));
    std::vector<double> next(residual.size());
    for (std::int64_t step = 0; step <= 2 * limit; ++step) {
      const std::int64_t t = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
      const double c = cost + static_cast<double>(std::abs(t)) * w;
      // |t| grows with step, so once t and -t are too expensive all later ones are.
      if (strict ? c >= incumbent - slack() : c > incumbent + slack()) break;
      for (std::size_t k = 0; k < next.size(); ++k)
        next[k] = residual[k] - static_cast<double>(t) * H.generators_[j].value[k];
      current[j] = t;
      run(level + 1, next, c);
    }
    current[j] = 0;
  }
};

std::optional<std::vector<std::int64_t>> SubgroupWithNorm::represent(const std::vector<double>& value,
                                                                     double budget) const {
  if (value.size() != ambient_->value_size())
    throw Error(ErrorCode::dimension_mismatch, "value has wrong size for the subgroup ambient");
  SubgroupSearch search(*this, budget, false);
  search.run(0, value, 0.0);
  return search.best;
}

double subgroup_norm(const SubgroupWithNorm& H, std::span<const std::int64_t> coords) {
  if (coords.size() != H.rank())
    throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(H.rank()) + " coordinates");
  double cost = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    cost += static_cast<double>(std::abs(coords[i])) * H.generator_norms()[i];
  const GroupElement target = H.element(coords);
  // Zero-norm generators contribute nothing; drop them from the start point.
  std::vector<std::int64_t> start(coords.begin(), coords.end());
  for (std::size_t i = 0; i < start.size(); ++i)
    if (H.generator_norms()[i] <= H.tolerance()) start[i] = 0;
  SubgroupSearch search(H, cost, true);
  search.best = start;
  search.run(0, target.value, 0.0);
  return search.incumbent;
}

namespace {

void enumerate_ball(const SubgroupWithNorm& H, const std::vector<std::size_t>& order, std::size_t level,
                    double budget, std::vector<std::int64_t>& current, double cost,
                    std::vector<std::pair<std::vector<std::int64_t>, double>>& out) {
  if (level == order.size()) {
    out.emplace_back(current, cost);
    return;
  }
  const std::size_t j = order[level];
  const double w = H.generator_norms()[j];
  const auto limit = static_cast<std::int64_t>(std::floor((budget - cost) / w + 1e-12));
  for (std::int64_t t = -limit; t <= limit; ++t) {
    current[j] = t;
    enumerate_ball(H, order, level + 1, budget, current, cost + static_cast<double>(std::abs(t)) * w, out);
  }
  current[j] = 0;
}

}  // namespace

std::vector<BallElement> norm_ball(const SubgroupWithNorm& H, double lambda) {
  if (!(lambda >= 0.0)) throw Error(ErrorCode::invalid_argument, "norm ball radius must be nonnegative");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < H.rank(); ++i)
    if (H.generator_norms()[i] > H.tolerance()) order.push_back(i);
  std::vector<std::pair<std::vector<std::int64_t>, double>> raw;
  std::vector<std::int64_t> current(H.rank(), 0);
  enumerate_ball(H, order, 0, lambda * (1 + 1e-12), current, 0.0, raw);

  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<BallElement> kept;
  std::vector<double> kept_norm;
  for (const auto& [coords, cost] : raw) {
    GroupElement e = H.element(coords);
    const double g_norm = euclidean(e.value);
    bool duplicate = false;
    for (std::size_t k = 0; k < kept.size() && !duplicate; ++k)
      duplicate = std::abs(kept_norm[k] - g_norm) <= H.tolerance() && H.equal(kept[k].element, e);
    if (duplicate) continue;
    kept.push_back({std::move(e), cost});
    kept_norm.push_back(g_norm);
  }
  std::sort(kept.begin(), kept.end(), [](const BallElement& a, const BallElement& b) {
    if (std::abs(a.norm - b.norm) > 1e-12) return a.norm < b.norm;
    return a.element.value < b.element.value;
  });
  return kept;
}

bool integrality_check(const SubgroupWithNorm& H, double tol) {
  for (double w : H.generator_norms())
    if (w < 1.0 - tol || std::abs(w - std::round(w)) > tol) return false;
  return true;
}

AxiomReport verify_group_axioms(const CoefficientGroup& G, std::span<const GroupElement> samples,
                                double tol) {
  AxiomReport report;
  auto fail = [&](const char* axiom, std::size_t i, std::size_t j, double amount) {
    report.pass = false;
    report.violations.push_back({axiom, i, j, amount});
  };
  const std::size_t none = static_cast<std::size_t>(-1);
  const double zero_norm = G.norm(G.zero());
  if (std::abs(zero_norm) > tol) fail("definiteness", none, none, zero_norm);
  std::vector<double> norms;
  for (const auto& g : samples) norms.push_back(G.norm(g));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (norms[i] < -tol) fail("positivity", i, none, -norms[i]);
    if ((norms[i] <= tol) != G.is_zero(samples[i])) fail("definiteness", i, none, norms[i]);
    const double sym = std::abs(G.norm(G.neg(samples[i])) - norms[i]);
    if (sym > tol * std::max(1.0, std::abs(norms[i]))) fail("symmetry", i, none, sym);
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i; j < samples.size(); ++j) {
      const double excess = G.norm(G.add(samples[i], samples[j])) - norms[i] - norms[j];
      if (excess > tol * std::max(1.0, std::abs(norms[i]) + std::abs(norms[j])))
        fail("triangle", i, j, excess);
    }
  return report;
}

}  // namespace polycal
