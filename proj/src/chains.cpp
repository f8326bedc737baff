// SPDX-License-Identifier: Apache-2.0
#include "polycal/chains.hpp"

#include <algorithm>

namespace polycal {
namespace {

void require_compatible(const Chain& a, const Chain& b) {
  if (a.complex() != b.complex())
    throw Error(ErrorCode::invalid_argument, "chains live on different complexes");
  if (a.dimension() != b.dimension())
    throw Error(ErrorCode::dimension_mismatch, "chains have different dimensions");
  if (!a.group()->same_as(*b.group()))
    throw Error(ErrorCode::invalid_argument, "chains have different coefficient groups");
}

GroupElement scaled_sign(const CoefficientGroup& G, const GroupElement& g, int sign) {
  return sign < 0 ? G.neg(g) : g;
}

}  // namespace

Chain::Chain(ComplexPtr complex, int dimension, GroupPtr group)
    : complex_(std::move(complex)), dimension_(dimension), group_(std::move(group)) {
  if (!complex_ || !group_) throw Error(ErrorCode::invalid_argument, "chain needs a complex and a group");
  if (dimension_ < 0 || dimension_ > complex_->ambient_dim())
    throw Error(ErrorCode::dimension_mismatch, "chain dimension out of range");
  if (group_->kind() == GroupKind::multivector) {
    const auto& mv = static_cast<const MultivectorGroup&>(*group_);
    if (mv.ambient_dim() != complex_->ambient_dim())
      throw Error(ErrorCode::dimension_mismatch, "multivector group ambient differs from the complex");
  }
}

void Chain::accumulate(int id, const GroupElement& g) {
  complex_->simplex(dimension_, id);
  group_->validate(g);
  auto it = terms_.find(id);
  if (it == terms_.end()) {
    if (!group_->is_zero(g)) terms_.emplace(id, g);
    return;
  }
  it->second = group_->add(it->second, g);
  if (group_->is_zero(it->second)) terms_.erase(it);
}

Chain make_chain(ComplexPtr K, int m, GroupPtr G, const std::vector<OrientedTerm>& terms) {
  Chain out(std::move(K), m, std::move(G));
  for (const auto& term : terms) {
    if (static_cast<int>(term.vertices.size()) != m + 1)
      throw Error(ErrorCode::dimension_mismatch, "term is not an " + std::to_string(m) + "-simplex");
    SimplexTuple sorted = term.vertices;
    const int parity = sort_with_parity(sorted);
    if (parity == 0) throw Error(ErrorCode::invalid_argument, "repeated vertex in chain term");
    const auto id = out.complex()->find(sorted);
    if (!id) throw Error(ErrorCode::not_found, "chain term is not a simplex of the complex");
    out.group()->validate(term.coeff);
    out.accumulate(*id, scaled_sign(*out.group(), term.coeff, parity));
  }
  return out;
}

Chain combine(const Chain& a, const Chain& b, int sign) {
  require_compatible(a, b);
  if (sign != 1 && sign != -1) throw Error(ErrorCode::invalid_argument, "combine sign must be +1 or -1");
  Chain out = a;
  for (const auto& [id, g] : b.terms()) out.accumulate(id, scaled_sign(*b.group(), g, sign));
  return out;
}

Chain boundary(const Chain& a) {
  if (a.dimension() < 1) throw Error(ErrorCode::dimension_mismatch, "boundary of a 0-chain");
  const EmbeddedComplex& K = *a.complex();
  const CoefficientGroup& G = *a.group();
  // Gather per face first so each coefficient is summed once, then canonicalize.
  std::map<int, GroupElement> acc;
  for (const auto& [id, g] : a.terms()) {
    for (const Incidence& f : K.faces(a.dimension(), id)) {
      const GroupElement contribution = scaled_sign(G, g, f.sign);
      auto it = acc.find(f.id);
      if (it == acc.end())
        acc.emplace(f.id, contribution);
      else
        it->second = G.add(it->second, contribution);
    }
  }
  Chain out(a.complex(), a.dimension() - 1, a.group());
  for (const auto& [id, g] : acc) out.accumulate(id, g);
  return out;
}

double mass(const Chain& a) {
  double total = 0.0;
  for (const auto& [id, g] : a.terms()) total += a.group()->norm(g) * a.complex()->volume(a.dimension(), id);
  return total;
}

std::vector<int> support(const Chain& a) {
  std::vector<int> out;
  for (const auto& [id, g] : a.terms()) out.push_back(id);
  return out;
}

bool is_supported_in(const Chain& a, const BoundaryRegion& gamma) {
  if (a.is_zero()) return true;
  if (gamma.dimension != a.dimension()) return false;
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [&](const auto& term) { return gamma.contains(term.first); });
}

ChainPushforward pushforward(const Chain& a, const ComplexPtr& image) {
  const EmbeddedComplex& K = *a.complex();
  if (image->ambient_dim() != K.ambient_dim() || image->top_dimension() != K.top_dimension() ||
      image->count(a.dimension()) != K.count(a.dimension()))
    throw Error(ErrorCode::invalid_argument, "image complex does not share the chain's combinatorics");
  ChainPushforward out{Chain(image, a.dimension(), a.group()), {}};
  for (const auto& [id, g] : a.terms()) {
    if (image->is_degenerate(a.dimension(), id))
      out.dropped.push_back(id);
    else
      out.chain.accumulate(id, g);
  }
  return out;
}

ChainPushforward pushforward(const Chain& a, const VertexMap& f, double tol) {
  return pushforward(a, apply_vertex_map(a.complex(), f, tol));
}

Chain transport(const Chain& a, const Subdivision& sub) {
  if (a.complex() != sub.parent) throw Error(ErrorCode::invalid_argument, "chain is not on the subdivided complex");
  Chain out(sub.refined, a.dimension(), a.group());
  const auto& level = sub.children.at(static_cast<std::size_t>(a.dimension()));
  for (const auto& [id, g] : a.terms())
    for (const Child& c : level[static_cast<std::size_t>(id)]) out.accumulate(c.id, scaled_sign(*a.group(), g, c.sign));
  return out;
}

Chain retag_chain(const Chain& a, const SubgroupPtr& H, double budget_factor) {
  if (!a.group()->same_as(*H->ambient()))
    throw Error(ErrorCode::invalid_argument, "chain group is not the subgroup's ambient group");
  double max_generator = 0.0;
  for (double w : H->generator_norms()) max_generator = std::max(max_generator, w);
  Chain out(a.complex(), a.dimension(), H);
  for (const auto& [id, g] : a.terms()) {
    const double budget = budget_factor * std::max(a.group()->norm(g), max_generator);
    const auto coords = H->represent(g.value, budget);
    if (!coords)
      throw Error(ErrorCode::not_found, "coefficient on simplex " + std::to_string(id) +
                                            " is not representable in the subgroup");
    out.accumulate(id, H->element(*coords));
  }
  return out;
}

}  // namespace polycal
