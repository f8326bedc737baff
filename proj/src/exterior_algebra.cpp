// SPDX-License-Identifier: Apache-2.0
#include "polycal/exterior_algebra.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace polycal {
namespace {

struct BasisTables {
  // masks[n][m]: lexicographic basis; rank[n][mask]: position within its grade.
  std::array<std::array<std::vector<std::uint32_t>, kMaxAmbientDim + 1>, kMaxAmbientDim + 1> masks;
  std::array<std::vector<std::uint32_t>, kMaxAmbientDim + 1> rank;

  BasisTables() {
    for (int n = 0; n <= kMaxAmbientDim; ++n) {
      rank[n].assign(std::size_t{1} << n, 0);
      for (int m = 0; m <= n; ++m) {
        auto& out = masks[n][m];
        enumerate(n, m, 0, 0u, out);
        for (std::size_t i = 0; i < out.size(); ++i) rank[n][out[i]] = static_cast<std::uint32_t>(i);
      }
    }
  }

  static void enumerate(int n, int remaining, int start, std::uint32_t mask,
                        std::vector<std::uint32_t>& out) {
    if (remaining == 0) {
      out.push_back(mask);
      return;
    }
    for (int i = start; i <= n - remaining; ++i)
      enumerate(n, remaining - 1, i + 1, mask | (1u << i), out);
  }
};

const BasisTables& tables() {
  static const BasisTables t;
  return t;
}

void check_shape(int n, int m) {
  if (n < 0 || n > kMaxAmbientDim)
    throw Error(ErrorCode::dimension_mismatch,
                "ambient dimension " + std::to_string(n) + " outside [0, 12]");
  if (m < 0 || m > n)
    throw Error(ErrorCode::dimension_mismatch,
                "grade " + std::to_string(m) + " outside [0, " + std::to_string(n) + "]");
}

// Sign of e_A ^ e_B for disjoint masks: (-1)^(number of pairs a in A, b in B with a > b).
int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

}  // namespace

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

const std::vector<std::uint32_t>& basis_masks(int ambient_dim, int grade) {
  check_shape(ambient_dim, grade);
  return tables().masks[ambient_dim][grade];
}

std::size_t basis_index(int ambient_dim, int grade, std::uint32_t mask) {
  check_shape(ambient_dim, grade);
  if (std::popcount(mask) != grade || (mask >> ambient_dim) != 0)
    throw Error(ErrorCode::invalid_argument, "basis mask does not match grade");
  return tables().rank[ambient_dim][mask];
}

Multivector::Multivector(int ambient_dim, int grade)
    : ambient_dim_(ambient_dim), grade_(grade) {
  check_shape(ambient_dim, grade);
  coeffs_.assign(binomial(ambient_dim, grade), 0.0);
}

Multivector::Multivector(int ambient_dim, int grade, std::vector<double> coeffs)
    : ambient_dim_(ambient_dim), grade_(grade), coeffs_(std::move(coeffs)) {
  check_shape(ambient_dim, grade);
  if (coeffs_.size() != binomial(ambient_dim, grade))
    throw Error(ErrorCode::dimension_mismatch,
                "expected " + std::to_string(binomial(ambient_dim, grade)) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
}

Multivector Multivector::basis(int ambient_dim, std::initializer_list<int> indices) {
  return basis(ambient_dim, std::span<const int>(indices.begin(), indices.size()));
}

Multivector Multivector::basis(int ambient_dim, std::span<const int> indices) {
  std::uint32_t mask = 0;
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i >= ambient_dim)
      throw Error(ErrorCode::invalid_argument, "basis indices must be increasing and < N");
    mask |= 1u << i;
    prev = i;
  }
  const int grade = static_cast<int>(indices.size());
  Multivector out(ambient_dim, grade);
  out.coeffs_[basis_index(ambient_dim, grade, mask)] = 1.0;
  return out;
}

Multivector Multivector::from_vector(const Point& v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> c(v.data(), v.data() + v.size());
  return Multivector(n, 1, std::move(c));
}

Multivector Multivector::scalar(int ambient_dim, double s) {
  return Multivector(ambient_dim, 0, {s});
}

double Multivector::norm() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

void Multivector::require_same_shape(const Multivector& other) const {
  if (ambient_dim_ != other.ambient_dim_ || grade_ != other.grade_)
    throw Error(ErrorCode::dimension_mismatch, "multivector shape mismatch");
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (double& c : out.coeffs_) c = -c;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim() || a.grade() != b.grade()) return false;
  return (a - b).norm() <= tol;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::dimension_mismatch, "wedge: ambient dimensions differ");
  const int n = a.ambient_dim();
  const int grade = a.grade() + b.grade();
  if (grade > n)
    throw Error(ErrorCode::dimension_mismatch, "wedge: grade " + std::to_string(grade) +
                                                   " exceeds ambient dimension");
  const auto& ma = basis_masks(n, a.grade());
  const auto& mb = basis_masks(n, b.grade());
  std::vector<double> out(binomial(n, grade), 0.0);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (b[j] == 0.0 || (ma[i] & mb[j]) != 0) continue;
      const std::uint32_t mask = ma[i] | mb[j];
      out[tables().rank[n][mask]] += wedge_sign(ma[i], mb[j]) * a[i] * b[j];
    }
  }
  return Multivector(n, grade, std::move(out));
}

double inner(const Multivector& a, const Multivector& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.grade() != b.grade())
    throw Error(ErrorCode::dimension_mismatch, "inner: grade or dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

OrientedSimplex::OrientedSimplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::invalid_argument, "simplex without vertices");
  const auto n = vertices_.front().size();
  if (n < 1 || n > kMaxAmbientDim)
    throw Error(ErrorCode::dimension_mismatch, "simplex ambient dimension outside [1, 12]");
  for (const auto& v : vertices_)
    if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "simplex vertices differ in dimension");
  if (dimension() > static_cast<int>(n))
    throw Error(ErrorCode::dimension_mismatch, "simplex dimension exceeds ambient dimension");
}

Eigen::MatrixXd OrientedSimplex::edge_matrix() const {
  Eigen::MatrixXd e(ambient_dim(), dimension());
  for (int k = 1; k <= dimension(); ++k) e.col(k - 1) = vertices_[k] - vertices_[0];
  return e;
}

Multivector OrientedSimplex::edge_wedge() const {
  Multivector acc = Multivector::scalar(ambient_dim(), 1.0);
  for (int k = 1; k <= dimension(); ++k)
    acc = wedge(acc, Multivector::from_vector(vertices_[k] - vertices_[0]));
  return acc;
}

bool is_degenerate(const OrientedSimplex& s, double tol) {
  if (s.dimension() == 0) return false;
  double edge_product = 1.0;
  for (int k = 1; k <= s.dimension(); ++k)
    edge_product *= (s.vertices()[k] - s.vertices()[0]).norm();
  if (edge_product == 0.0) return true;
  return s.edge_wedge().norm() <= tol * edge_product;
}

double simplex_volume(const OrientedSimplex& s, double tol) {
  if (s.dimension() == 0) return 1.0;
  if (is_degenerate(s, tol)) return 0.0;
  double factorial = 1.0;
  for (int k = 2; k <= s.dimension(); ++k) factorial *= k;
  return s.edge_wedge().norm() / factorial;
}

Multivector unit_simple_vector(const OrientedSimplex& s, double tol) {
  if (s.dimension() == 0) return Multivector::scalar(s.ambient_dim(), 1.0);
  if (is_degenerate(s, tol)) throw Error(ErrorCode::degenerate, "degenerate simplex has no unit m-vector");
  Multivector w = s.edge_wedge();
  return w * (1.0 / w.norm());
}

}  // namespace polycal
