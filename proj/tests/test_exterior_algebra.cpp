// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace polycal;
using polycal::testing::pt;

TEST_SUITE("exterior_algebra") {
  TEST_CASE("basis is lexicographic") {
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(3, 4) == 0);
    const auto& masks = basis_masks(3, 2);
    REQUIRE(masks.size() == 3);
    CHECK(masks[0] == 0b011u);
    CHECK(masks[1] == 0b101u);
    CHECK(masks[2] == 0b110u);
    CHECK(basis_index(3, 2, 0b110u) == 2);
    CHECK(basis_masks(12, 6).size() == 924);
  }

  TEST_CASE("wedge of basis vectors") {
    const auto e1 = Multivector::basis(3, {0});
    const auto e2 = Multivector::basis(3, {1});
    CHECK(approx_equal(wedge(e1, e2), Multivector::basis(3, {0, 1})));
    CHECK(approx_equal(wedge(e2, e1), -Multivector::basis(3, {0, 1})));
    CHECK(wedge(e1, e1).is_zero());
    CHECK_THROWS_AS(wedge(Multivector::basis(2, {0, 1}), Multivector::basis(2, {0})), Error);
  }

  TEST_CASE("two vectors in R^3: coefficients are the 2x2 minors") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 100; ++t) {
      const Point a = pt({u(rng), u(rng), u(rng)});
      const Point b = pt({u(rng), u(rng), u(rng)});
      const Multivector w = wedge(Multivector::from_vector(a), Multivector::from_vector(b));
      CHECK(w[0] == doctest::Approx(a(0) * b(1) - a(1) * b(0)).epsilon(1e-12));
      CHECK(w[1] == doctest::Approx(a(0) * b(2) - a(2) * b(0)).epsilon(1e-12));
      CHECK(w[2] == doctest::Approx(a(1) * b(2) - a(2) * b(1)).epsilon(1e-12));
      // Lagrange identity
      const double lagrange = std::sqrt(a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2));
      CHECK(w.norm() == doctest::Approx(lagrange).epsilon(1e-10));
    }
  }

  TEST_CASE("wedge is associative and graded-commutative") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1, 1);
    auto rand_mv = [&](int n, int k) {
      std::vector<double> c(binomial(n, k));
      for (double& x : c) x = u(rng);
      return Multivector(n, k, c);
    };
    for (int t = 0; t < 50; ++t) {
      const auto a = rand_mv(5, 1), b = rand_mv(5, 2), c = rand_mv(5, 2);
      CHECK(approx_equal(wedge(wedge(a, b), c), wedge(a, wedge(b, c)), 1e-12));
      CHECK(approx_equal(wedge(a, b), wedge(b, a), 1e-12));        // 1*2 even
      CHECK(approx_equal(wedge(a, a), Multivector(5, 2), 1e-12));  // odd grade
    }
  }

  TEST_CASE("top-degree wedge is the determinant") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    Eigen::MatrixXd M(4, 4);
    for (int i = 0; i < 16; ++i) M.data()[i] = u(rng);
    Multivector w = Multivector::from_vector(M.col(0));
    for (int k = 1; k < 4; ++k) w = wedge(w, Multivector::from_vector(M.col(k)));
    CHECK(w[0] == doctest::Approx(M.determinant()).epsilon(1e-12));
  }

  TEST_CASE("simplex volumes against Heron and determinants") {
    const OrientedSimplex tri({pt({0, 0, 0}), pt({3, 0, 0}), pt({0, 4, 1})});
    const double a = 3, b = std::sqrt(17.0), c = std::sqrt(26.0);
    const double s = (a + b + c) / 2;
    CHECK(simplex_volume(tri) == doctest::Approx(std::sqrt(s * (s - a) * (s - b) * (s - c))).epsilon(1e-12));

    Eigen::Matrix3d E;
    E << 1, 0.2, 0.3, 0.1, 2, 0.5, 0, 0.4, 3;
    const OrientedSimplex tet({pt({0, 0, 0}), E.col(0), E.col(1), E.col(2)});
    CHECK(simplex_volume(tet) == doctest::Approx(std::abs(E.determinant()) / 6).epsilon(1e-12));

    CHECK(simplex_volume(OrientedSimplex({pt({1, 2})})) == 1.0);
    CHECK(simplex_volume(OrientedSimplex({pt({0, 0}), pt({1, 1}), pt({2, 2})})) == 0.0);
  }

  TEST_CASE("unit simple vector of a segment") {
    const OrientedSimplex seg({pt({0, 0}), pt({1, 0})});
    CHECK(approx_equal(unit_simple_vector(seg), Multivector::basis(2, {0})));
    const OrientedSimplex rev({pt({1, 0}), pt({0, 0})});
    CHECK(approx_equal(unit_simple_vector(rev), -Multivector::basis(2, {0})));
    const OrientedSimplex tri({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 5, 0})});
    CHECK(approx_equal(unit_simple_vector(tri), Multivector::basis(3, {0, 1})));
    CHECK_THROWS_AS(unit_simple_vector(OrientedSimplex({pt({0, 0}), pt({0, 0})})), Error);
    CHECK(unit_simple_vector(OrientedSimplex({pt({0, 0})}))[0] == 1.0);
  }

  TEST_CASE("shape errors") {
    CHECK_THROWS_AS(Multivector(13, 1), Error);
    CHECK_THROWS_AS(Multivector(3, 1, {1.0, 2.0}), Error);
    CHECK_THROWS_AS(Multivector(3, 1) + Multivector(3, 2), Error);
  }
}
