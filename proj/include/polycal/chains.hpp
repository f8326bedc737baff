// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "polycal/complex.hpp"
#include "polycal/groups.hpp"

namespace polycal {

/// A polyhedral m-chain on a host complex: a sparse map from m-simplex id to
/// a nonzero group element, each term read against the canonical (sorted)
/// orientation of its simplex.
class Chain {
 public:
  Chain(ComplexPtr complex, int dimension, GroupPtr group);

  const ComplexPtr& complex() const { return complex_; }
  int dimension() const { return dimension_; }
  const GroupPtr& group() const { return group_; }
  const std::map<int, GroupElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds `g` to the coefficient of simplex `id` and drops the term if the
  /// sum is zero in the group.
  void accumulate(int id, const GroupElement& g);

 private:
  ComplexPtr complex_;
  int dimension_;
  GroupPtr group_;
  std::map<int, GroupElement> terms_;
};

struct OrientedTerm {
  SimplexTuple vertices;  // any vertex order; odd permutations flip the sign
  GroupElement coeff;
};

Chain make_chain(ComplexPtr K, int m, GroupPtr G, const std::vector<OrientedTerm>& terms);

/// a + sign * b.
Chain combine(const Chain& a, const Chain& b, int sign);

Chain boundary(const Chain& a);

/// Sum over terms of |g|_G times the m-volume of the simplex.
double mass(const Chain& a);

std::vector<int> support(const Chain& a);
bool is_supported_in(const Chain& a, const BoundaryRegion& gamma);

struct ChainPushforward {
  Chain chain;
  std::vector<int> dropped;  // simplex ids whose image is degenerate
};

/// Transports coefficients unchanged onto an image complex with the same
/// combinatorics; terms on degenerate image simplices are dropped.
ChainPushforward pushforward(const Chain& a, const ComplexPtr& image);

/// Builds the image complex of `f` (see apply_vertex_map) and pushes forward.
ChainPushforward pushforward(const Chain& a, const VertexMap& f, double tol = kDefaultTol);

/// Carries a chain to a refined complex; each child gets sign * g.
Chain transport(const Chain& a, const Subdivision& sub);

/// The same chain with coefficients in H. Each coefficient is resolved to
/// its cheapest integer representation with cost at most
/// `budget_factor * max(|g|_G, max_i |g_i|_G)`.
Chain retag_chain(const Chain& a, const SubgroupPtr& H, double budget_factor = 4.0);

}  // namespace polycal
