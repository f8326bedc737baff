// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"

using namespace polycal;
using polycal::testing::pt;

namespace {

ComplexPtr unit_triangle() { return EmbeddedComplex::build({pt({0, 0}), pt({1, 0}), pt({0, 1})}, {{0, 1, 2}}); }

ComplexPtr two_tets() {
  return EmbeddedComplex::build({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})},
                                {{0, 1, 2, 3}, {1, 2, 3, 4}});
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("closure under faces") {
    const auto K = two_tets();
    CHECK(K->count(0) == 5);
    CHECK(K->count(1) == 9);
    CHECK(K->count(2) == 7);
    CHECK(K->count(3) == 2);
    CHECK(K->top_dimension() == 3);
    CHECK(K->find({1, 2, 3}).has_value());
    CHECK_FALSE(K->find({0, 4}).has_value());
    CHECK(K->maximal_simplices().size() == 2);
  }

  TEST_CASE("incidence signs follow (-1)^i") {
    const auto K = unit_triangle();
    const auto faces = K->faces(2, 0);
    REQUIRE(faces.size() == 3);
    // [0,1,2] -> +[1,2] - [0,2] + [0,1]
    CHECK(K->simplex(1, faces[0].id) == SimplexTuple{1, 2});
    CHECK(faces[0].sign == 1);
    CHECK(K->simplex(1, faces[1].id) == SimplexTuple{0, 2});
    CHECK(faces[1].sign == -1);
    CHECK(faces[2].sign == 1);
    CHECK(K->cofaces(1, *K->find({0, 2})).size() == 1);
  }

  TEST_CASE("boundary of boundary vanishes on the incidence tables") {
    std::mt19937_64 rng(5);
    const auto K = polycal::testing::kuhn_grid({2, 2, 1}, 0.1, rng);
    for (int d = 2; d <= K->top_dimension(); ++d)
      for (std::size_t id = 0; id < K->count(d); ++id) {
        std::map<int, int> acc;
        for (const Incidence& f : K->faces(d, static_cast<int>(id)))
          for (const Incidence& g : K->faces(d - 1, f.id)) acc[g.id] += f.sign * g.sign;
        for (const auto& [gid, s] : acc) CHECK(s == 0);
      }
  }

  TEST_CASE("invalid input is rejected") {
    const std::vector<Point> v{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({2, 0})};
    CHECK_THROWS_AS(EmbeddedComplex::build(v, {{0, 5}}), Error);
    CHECK_THROWS_AS(EmbeddedComplex::build(v, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(EmbeddedComplex::build(v, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(EmbeddedComplex::build(v, {{0, 1, 3}}), Error);  // collinear
    CHECK_THROWS_AS(EmbeddedComplex::build({pt({0}), pt({1}), pt({2})}, {{0, 1, 2}}), Error);
  }

  TEST_CASE("sort parity") {
    SimplexTuple t{2, 0, 1};
    CHECK(sort_with_parity(t) == 1);
    CHECK(t == SimplexTuple{0, 1, 2});
    SimplexTuple u{1, 0, 2};
    CHECK(sort_with_parity(u) == -1);
    SimplexTuple w{1, 1};
    CHECK(sort_with_parity(w) == 0);
  }

  TEST_CASE("geometry validation") {
    CHECK(validate_geometry(*two_tets()).valid);
    std::mt19937_64 rng(9);
    CHECK(validate_geometry(*polycal::testing::kuhn_grid({3, 2}, 0.2, rng)).valid);
    // Two triangles that overlap in their interiors.
    const auto bad = EmbeddedComplex::build({pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1.5}), pt({2, 2}), pt({3, 3})},
                                            {{0, 1, 2}, {3, 4, 5}, {0, 3}});
    const auto report = validate_geometry(*bad);
    CHECK_FALSE(report.valid);
    CHECK_FALSE(report.violations.empty());
    // Crossing segments.
    const auto cross = EmbeddedComplex::build({pt({0, 0}), pt({1, 1}), pt({0, 1}), pt({1, 0})}, {{0, 1}, {2, 3}});
    CHECK_FALSE(validate_geometry(*cross).valid);
  }

  TEST_CASE("barycentric subdivision") {
    const auto K = two_tets();
    const Subdivision sub = subdivide(K, SubdivisionRule::barycentric());
    const auto& R = *sub.refined;
    // one new vertex per simplex of dimension >= 1
    CHECK(R.count(0) == 5 + 9 + 7 + 2);
    CHECK(R.count(3) == 2 * 24);
    for (int v = 0; v < 5; ++v) CHECK((R.vertex(v) - K->vertex(v)).norm() == 0.0);
    CHECK(validate_geometry(R).valid);
    for (int d = 1; d <= 3; ++d)
      for (std::size_t id = 0; id < K->count(d); ++id) {
        const auto& kids = sub.children[d][id];
        CHECK(kids.size() == static_cast<std::size_t>(std::tgamma(d + 2)));
        double vol = 0.0;
        const Multivector eta = unit_simple_vector(K->geometry(d, static_cast<int>(id)));
        for (const Child& c : kids) {
          vol += R.volume(d, c.id);
          // orientation sign agrees with the tangent planes
          CHECK(approx_equal(c.sign * unit_simple_vector(R.geometry(d, c.id)), eta, 1e-9));
        }
        CHECK(vol == doctest::Approx(K->volume(d, static_cast<int>(id))).epsilon(1e-12));
      }
  }

  TEST_CASE("midpoint subdivision") {
    const auto K = unit_triangle();
    const Subdivision sub = subdivide(K, SubdivisionRule::midpoint(1, 2));
    CHECK(sub.refined->count(2) == 2);
    CHECK(sub.refined->count(0) == 4);
    CHECK((sub.refined->vertex(3) - pt({0.5, 0.5})).norm() < 1e-15);
    CHECK(sub.children[1][*K->find({1, 2})].size() == 2);
    CHECK(sub.children[1][*K->find({0, 1})].size() == 1);
    CHECK_THROWS_AS(subdivide(K, SubdivisionRule::midpoint(0, 0)), Error);
  }

  TEST_CASE("boundary regions transport to children") {
    const auto K = unit_triangle();
    const BoundaryRegion g = make_boundary_region(*K, 1, {{1, 2}});
    CHECK(g.contains(*K->find({1, 2})));
    CHECK(region_vertices(*K, g) == std::vector<int>{1, 2});
    CHECK(interior_faces(*K, 2, g).size() == 2);
    const Subdivision sub = subdivide(K, SubdivisionRule::barycentric());
    const BoundaryRegion h = transport(g, sub);
    CHECK(h.face_ids.size() == 2);
    CHECK_THROWS_AS(make_boundary_region(*K, 1, {{0, 3}}), Error);
  }

  TEST_CASE("vertex maps") {
    const auto K = unit_triangle();
    VertexMap f{{pt({0, 0}), pt({2, 0}), pt({0, 1})}, {0}};
    const auto image = apply_vertex_map(K, f);
    CHECK(image->volume(2, 0) == doctest::Approx(1.0));
    f.images[0] = pt({0.1, 0});
    CHECK_THROWS_AS(apply_vertex_map(K, f), Error);  // frozen vertex moved
    VertexMap collide{{pt({0, 0}), pt({0, 0}), pt({0, 1})}, {}};
    CHECK_THROWS_AS(apply_vertex_map(K, collide), Error);
    VertexMap flat{{pt({0, 0}), pt({1, 0}), pt({2, 0})}, {}};
    CHECK(apply_vertex_map(K, flat)->is_degenerate(2, 0));
  }

  TEST_CASE("hash is stable and sensitive to coordinates") {
    const auto a = unit_triangle();
    const auto b = unit_triangle();
    CHECK(a->hash() == b->hash());
    CHECK(a->hash().size() == 16);
    const auto c = a->with_vertices({pt({0, 0}), pt({1, 0}), pt({0, 2})});
    CHECK(a->hash() != c->hash());
  }
}
