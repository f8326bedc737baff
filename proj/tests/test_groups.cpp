// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace polycal;

namespace {

GroupPtr reals() { return std::make_shared<RealGroup>(); }

std::shared_ptr<SubgroupWithNorm> scalar_subgroup(std::vector<double> gens) {
  std::vector<GroupElement> g;
  for (double x : gens) g.push_back(GroupElement::scalar(x));
  return std::make_shared<SubgroupWithNorm>(reals(), g);
}

// |g|_H by brute force over the coordinate box [-B, B]^k.
double box_norm(const SubgroupWithNorm& H, const std::vector<double>& value, int B) {
  const std::size_t k = H.rank();
  std::vector<std::int64_t> c(k, -B);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    const GroupElement e = H.element(c);
    if (H.ambient()->equal(e, {value, {}})) {
      double cost = 0.0;
      for (std::size_t i = 0; i < k; ++i) cost += std::abs(static_cast<double>(c[i])) * H.generator_norms()[i];
      best = std::min(best, cost);
    }
    std::size_t i = 0;
    while (i < k && c[i] == B) c[i++] = -B;
    if (i == k) break;
    ++c[i];
  }
  return best;
}

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("real and integer norms") {
    RealGroup R;
    CHECK(R.norm(GroupElement::scalar(-2.5)) == 2.5);
    IntegerGroup Z;
    CHECK(Z.norm(GroupElement::scalar(-3)) == 3.0);
    CHECK_THROWS_AS(Z.validate(GroupElement::scalar(0.5)), Error);
    CHECK(Z.is_zero(Z.add(GroupElement::scalar(2), GroupElement::scalar(-2))));
  }

  TEST_CASE("multivector group") {
    MultivectorGroup G(3, 2);
    CHECK(G.value_size() == 3);
    CHECK(G.norm({{3, 0, 4}, {}}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(G.validate({{1, 2}, {}}), Error);
    CHECK(G.name() == "multivector(3,2)");
  }

  TEST_CASE("subgroup norm: generators 2 and 3") {
    const auto H = scalar_subgroup({2, 3});
    const std::vector<std::int64_t> c{-1, 1};
    CHECK(subgroup_norm(*H, c) == doctest::Approx(5.0));  // 1 = -2 + 3
    const std::vector<std::int64_t> d{3, 0};
    CHECK(subgroup_norm(*H, d) == doctest::Approx(6.0));
    const std::vector<std::int64_t> e{2, -1};
    CHECK(subgroup_norm(*H, e) == doctest::Approx(5.0));  // 1 again, cheaper representation found
    CHECK(H->norm(H->element(std::vector<std::int64_t>{0, 0})) == 0.0);
  }

  TEST_CASE("subgroup norm against a box oracle") {
    const auto H = scalar_subgroup({2, 3, 7});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> u(-4, 4);
    // Any cheaper representation costs at most 4 * (2 + 3 + 7) = 48, so its
    // coordinates lie within [-24, 24].
    for (int t = 0; t < 30; ++t) {
      const std::vector<std::int64_t> c{u(rng), u(rng), u(rng)};
      const GroupElement g = H->element(c);
      CHECK(H->norm(g) == doctest::Approx(box_norm(*H, g.value, 24)).epsilon(1e-12));
    }
  }

  TEST_CASE("norm ball matches exhaustive enumeration") {
    const auto H = scalar_subgroup({2, 3});
    const double lambda = 9.0;
    const auto ball = norm_ball(*H, lambda);
    // Oracle: every combination with |a|2 + |b|3 <= lambda, deduplicated by value.
    std::map<double, double> oracle;
    for (int a = -5; a <= 5; ++a)
      for (int b = -4; b <= 4; ++b) {
        const double cost = 2.0 * std::abs(a) + 3.0 * std::abs(b);
        if (cost > lambda) continue;
        const double v = 2.0 * a + 3.0 * b;
        auto [it, fresh] = oracle.emplace(v, cost);
        if (!fresh) it->second = std::min(it->second, cost);
      }
    REQUIRE(ball.size() == oracle.size());
    for (const auto& e : ball) {
      REQUIRE(oracle.count(e.element.value[0]) == 1);
      CHECK(e.norm == doctest::Approx(oracle.at(e.element.value[0])));
    }
  }

  TEST_CASE("multivector subgroup") {
    auto G = std::make_shared<MultivectorGroup>(2, 1);
    auto H = std::make_shared<SubgroupWithNorm>(G, std::vector<GroupElement>{{{1, 0}, {}}, {{0.6, 0.8}, {}}});
    CHECK(H->generator_norms()[1] == doctest::Approx(1.0));
    const auto rep = H->represent({1.6, 0.8}, 10.0);
    REQUIRE(rep.has_value());
    CHECK((*rep)[0] == 1);
    CHECK((*rep)[1] == 1);
    CHECK_FALSE(H->represent({0.5, 0.0}, 10.0).has_value());
    CHECK(integrality_check(*H));
  }

  TEST_CASE("integrality") {
    CHECK(integrality_check(*scalar_subgroup({2, 3})));
    CHECK_FALSE(integrality_check(*scalar_subgroup({2, 0.5})));
    CHECK_FALSE(integrality_check(*scalar_subgroup({std::sqrt(2.0), 1})));
  }

  TEST_CASE("axioms on samples") {
    const auto H = scalar_subgroup({2, 3});
    std::vector<GroupElement> samples;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) samples.push_back(H->element(std::vector<std::int64_t>{a, b}));
    CHECK(verify_group_axioms(*H, samples).pass);
    MultivectorGroup G(3, 1);
    std::vector<GroupElement> mv{{{1, 0, 0}, {}}, {{0, -2, 1}, {}}, {{0, 0, 0}, {}}};
    CHECK(verify_group_axioms(G, mv).pass);
  }

  TEST_CASE("subgroup needs a generator of positive norm") {
    CHECK_THROWS_AS(scalar_subgroup({0.0}), Error);
  }
}
