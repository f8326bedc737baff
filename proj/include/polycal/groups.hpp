// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycal/exterior_algebra.hpp"

namespace polycal {

/// Element of a coefficient group. `value` is the ambient value (a scalar, or
/// the coefficients of an m-vector); `coords` carries integer generator
/// coordinates for elements of a finitely generated subgroup and is empty
/// otherwise.
struct GroupElement {
  std::vector<double> value;
  std::vector<std::int64_t> coords;

  static GroupElement scalar(double s) { return {{s}, {}}; }
  static GroupElement from(const Multivector& v) { return {v.values(), {}}; }
};

enum class GroupKind { real, integer, multivector, subgroup };

/// Normed abelian group. Implementations must satisfy the norm axioms
/// (positivity, symmetry, triangle inequality); `verify_group_axioms` checks
/// them on samples.
class CoefficientGroup {
 public:
  virtual ~CoefficientGroup() = default;

  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual GroupElement zero() const = 0;
  virtual GroupElement add(const GroupElement& a, const GroupElement& b) const;
  virtual GroupElement neg(const GroupElement& a) const;
  virtual double norm(const GroupElement& a) const = 0;
  /// Throws `invalid_argument` when `a` is not a well-formed element.
  virtual void validate(const GroupElement& a) const;
  virtual std::size_t value_size() const = 0;

  /// Ambient equality within the group tolerance.
  virtual bool equal(const GroupElement& a, const GroupElement& b) const;
  bool is_zero(const GroupElement& a) const { return equal(a, zero()); }
  double tolerance() const { return tol_; }

  bool same_as(const CoefficientGroup& other) const;

 protected:
  explicit CoefficientGroup(double tol) : tol_(tol) {}
  double tol_;
};

using GroupPtr = std::shared_ptr<const CoefficientGroup>;

class RealGroup final : public CoefficientGroup {
 public:
  explicit RealGroup(double tol = kDefaultTol) : CoefficientGroup(tol) {}
  GroupKind kind() const override { return GroupKind::real; }
  std::string name() const override { return "real"; }
  GroupElement zero() const override { return GroupElement::scalar(0.0); }
  double norm(const GroupElement& a) const override;
  std::size_t value_size() const override { return 1; }
};

class IntegerGroup final : public CoefficientGroup {
 public:
  IntegerGroup() : CoefficientGroup(0.0) {}
  GroupKind kind() const override { return GroupKind::integer; }
  std::string name() const override { return "integer"; }
  GroupElement zero() const override { return GroupElement::scalar(0.0); }
  double norm(const GroupElement& a) const override;
  void validate(const GroupElement& a) const override;
  std::size_t value_size() const override { return 1; }
};

/// m-vectors in R^N with the Euclidean norm.
class MultivectorGroup final : public CoefficientGroup {
 public:
  MultivectorGroup(int ambient_dim, int grade, double tol = kDefaultTol);
  GroupKind kind() const override { return GroupKind::multivector; }
  std::string name() const override;
  GroupElement zero() const override;
  double norm(const GroupElement& a) const override;
  std::size_t value_size() const override { return size_; }

  int ambient_dim() const { return ambient_dim_; }
  int grade() const { return grade_; }
  Multivector to_multivector(const GroupElement& a) const;

 private:
  int ambient_dim_;
  int grade_;
  std::size_t size_;
};

/// Subgroup H of a real or multivector group generated by a finite set S,
/// normed by |g|_H = min { sum |n_i| |g_i|_G : g = sum n_i g_i, n_i integers }.
class SubgroupWithNorm final : public CoefficientGroup {
 public:
  /// Generators with zero ambient norm are ignored by the norm search; at
  /// least one generator must have positive norm.
  SubgroupWithNorm(GroupPtr ambient, std::vector<GroupElement> generators);

  GroupKind kind() const override { return GroupKind::subgroup; }
  std::string name() const override;
  GroupElement zero() const override;
  GroupElement add(const GroupElement& a, const GroupElement& b) const override;
  GroupElement neg(const GroupElement& a) const override;
  double norm(const GroupElement& a) const override;
  void validate(const GroupElement& a) const override;
  bool equal(const GroupElement& a, const GroupElement& b) const override;
  std::size_t value_size() const override { return ambient_->value_size(); }

  const GroupPtr& ambient() const { return ambient_; }
  std::size_t rank() const { return generators_.size(); }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<double>& generator_norms() const { return norms_; }

  /// Element with the given integer coordinates.
  GroupElement element(std::span<const std::int64_t> coords) const;

  /// Cheapest integer representation of an ambient value with cost at most
  /// `budget`, or nullopt when none exists within the budget.
  std::optional<std::vector<std::int64_t>> represent(const std::vector<double>& value,
                                                     double budget) const;

 private:
  friend struct SubgroupSearch;
  GroupPtr ambient_;
  std::vector<GroupElement> generators_;
  std::vector<double> norms_;
  std::vector<std::size_t> order_;  // generator indices by descending norm, positive norms only
};

using SubgroupPtr = std::shared_ptr<const SubgroupWithNorm>;

/// |g|_H for the element with coordinates `coords`, by branch and bound over
/// integer vectors no more expensive than the given representation.
double subgroup_norm(const SubgroupWithNorm& H, std::span<const std::int64_t> coords);

struct BallElement {
  GroupElement element;  // coords hold one cheapest representation
  double norm;
};

/// All distinct elements with |g|_H <= lambda, sorted by norm then value.
std::vector<BallElement> norm_ball(const SubgroupWithNorm& H, double lambda);

/// True iff every generator norm is a positive integer.
bool integrality_check(const SubgroupWithNorm& H, double tol = kDefaultTol);

struct AxiomViolation {
  std::string axiom;  // "positivity", "definiteness", "symmetry", "triangle"
  std::size_t i, j;   // sample indices (j unused for single-element axioms)
  double amount;
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomViolation> violations;
};

AxiomReport verify_group_axioms(const CoefficientGroup& G, std::span<const GroupElement> samples,
                                double tol = kDefaultTol);

}  // namespace polycal
