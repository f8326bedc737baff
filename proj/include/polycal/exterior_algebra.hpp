// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "polycal/error.hpp"

namespace polycal {

using Point = Eigen::VectorXd;

std::size_t binomial(int n, int k);

/// Index sets {i1 < ... < im} of the basis of the m-vectors in R^N, in
/// lexicographic order, stored as bitmasks. Position in the returned vector
/// is the coefficient index.
const std::vector<std::uint32_t>& basis_masks(int ambient_dim, int grade);

/// Coefficient index of a basis mask; the mask must have `grade` bits set.
std::size_t basis_index(int ambient_dim, int grade, std::uint32_t mask);

/// An m-vector in R^N with dense coefficients over the lexicographic basis
/// e_{i1} ^ ... ^ e_{im}. The Euclidean structure makes that basis
/// orthonormal.
class Multivector {
 public:
  Multivector(int ambient_dim, int grade);
  Multivector(int ambient_dim, int grade, std::vector<double> coeffs);

  /// e_{i1} ^ ... ^ e_{ik} for 0-based, strictly increasing indices.
  static Multivector basis(int ambient_dim, std::initializer_list<int> indices);
  static Multivector basis(int ambient_dim, std::span<const int> indices);
  static Multivector from_vector(const Point& v);
  static Multivector scalar(int ambient_dim, double s);

  int ambient_dim() const { return ambient_dim_; }
  int grade() const { return grade_; }
  std::span<const double> coeffs() const { return coeffs_; }
  const std::vector<double>& values() const { return coeffs_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }

  double norm() const;
  bool is_zero(double tol = kDefaultTol) const { return norm() <= tol; }

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }

 private:
  void require_same_shape(const Multivector& other) const;

  int ambient_dim_;
  int grade_;
  std::vector<double> coeffs_;
};

bool approx_equal(const Multivector& a, const Multivector& b, double tol = kDefaultTol);

/// Exterior product. Throws on ambient mismatch or when p + q > N.
Multivector wedge(const Multivector& a, const Multivector& b);

/// Euclidean inner product of two m-vectors of the same grade.
double inner(const Multivector& a, const Multivector& b);

/// An oriented simplex given by its ordered vertex list.
class OrientedSimplex {
 public:
  explicit OrientedSimplex(std::vector<Point> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  int ambient_dim() const { return static_cast<int>(vertices_.front().size()); }
  const std::vector<Point>& vertices() const { return vertices_; }

  /// Columns are v_k - v_0, k = 1..m.
  Eigen::MatrixXd edge_matrix() const;

  /// Edge wedge (v1 - v0) ^ ... ^ (vm - v0), unnormalized.
  Multivector edge_wedge() const;

 private:
  std::vector<Point> vertices_;
};

/// True when the simplex spans less than its dimension: the ratio of
/// m!·volume to the product of edge lengths is at most `tol`.
bool is_degenerate(const OrientedSimplex& s, double tol = kDefaultTol);

/// H^m measure of the simplex, sqrt(det(E^T E)) / m!. Degenerate input gives
/// 0; a 0-simplex has measure 1.
double simplex_volume(const OrientedSimplex& s, double tol = kDefaultTol);

/// Unit simple m-vector of the oriented simplex. For a 0-simplex this is the
/// scalar +1. Throws `degenerate` when the simplex is degenerate.
Multivector unit_simple_vector(const OrientedSimplex& s, double tol = kDefaultTol);

}  // namespace polycal
