// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"

using namespace polycal;
using polycal::testing::pt;

namespace {

ComplexPtr unit_segment() { return EmbeddedComplex::build({pt({0, 0}), pt({1, 0})}, {{0, 1}}); }

Chain segment_chain(std::vector<double> g) {
  auto G = std::make_shared<MultivectorGroup>(2, 1);
  return make_chain(unit_segment(), 1, G, {{{0, 1}, {std::move(g), {}}}});
}

}  // namespace

TEST_SUITE("calibration") {
  TEST_CASE("phi on a unit segment") {
    CHECK(phi(segment_chain({1, 0})) == doctest::Approx(1.0));
    CHECK(phi(segment_chain({0, 1})) == doctest::Approx(0.0));
    CHECK(phi(segment_chain({-1, 0})) == doctest::Approx(-1.0));
    auto R = std::make_shared<RealGroup>();
    CHECK_THROWS_AS(phi(make_chain(unit_segment(), 1, R, {{{0, 1}, GroupElement::scalar(1)}})), Error);
  }

  TEST_CASE("phi is orientation invariant") {
    auto G = std::make_shared<MultivectorGroup>(2, 1);
    const Chain a = make_chain(unit_segment(), 1, G, {{{1, 0}, {{-0.3, 0.7}, {}}}});
    CHECK(phi(a) == doctest::Approx(phi(segment_chain({0.3, -0.7}))));
  }

  TEST_CASE("certify_calibrated") {
    CHECK(certify_calibrated(segment_chain({2, 0})).conclusion == Conclusion::calibrated_minimizer);
    const Certificate off = certify_calibrated(segment_chain({0, 1}));
    CHECK(off.conclusion == Conclusion::not_calibrated);
    CHECK(off.phi < off.mass);
    CHECK(certify_calibrated(segment_chain({-1, 0})).conclusion == Conclusion::not_calibrated);
    for (const std::string name : {"plane_disk", "y_line", "y_times_r", "tetrahedral_cone"}) {
      const Certificate c = certify_calibrated(chainify(generate_example(name).varifold));
      CHECK(c.conclusion == Conclusion::calibrated_minimizer);
      CHECK(std::abs(c.phi - c.mass) <= 1e-12 * c.mass);
    }
  }

  TEST_CASE("stokes on a single tetrahedron") {
    const auto K = EmbeddedComplex::build({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}, {{0, 1, 2, 3}});
    auto G = std::make_shared<MultivectorGroup>(3, 2);
    const Chain q = make_chain(K, 3, G, {{{0, 1, 2, 3}, GroupElement::from(Multivector::basis(3, {0, 1}))}});
    CHECK(std::abs(phi(boundary(q))) <= 1e-12);
    const StokesReport r = check_stokes(K, 2, 100, 1e-10, 4);
    CHECK(r.pass);
    CHECK_THROWS_AS(check_stokes(K, 3, 1), Error);
  }

  TEST_CASE("phi, flat norm and mass") {
    const Chain seg = segment_chain({1, 0});
    const FlatBoundReport r = phi_flat_bound(seg);
    CHECK(r.pass);
    CHECK(r.flat == doctest::Approx(1.0));
    CHECK(r.phi == doctest::Approx(1.0));
    const Chain zero(unit_segment(), 1, std::make_shared<MultivectorGroup>(2, 1));
    const FlatBoundReport z = phi_flat_bound(zero);
    CHECK(z.phi == 0.0);
    CHECK(z.flat == 0.0);
    CHECK(z.mass == 0.0);
  }

  TEST_CASE("minimality certificates") {
    const CatalogExample tet = generate_example("tetrahedral_cone");
    const Certificate c = minimality_certificate(tet.varifold, tet.gamma, 1e-9, true);
    CHECK(c.conclusion == Conclusion::calibrated_minimizer);
    CHECK(c.provenance.solver_ran);
    CHECK_FALSE(c.provenance.complex_hash.empty());

    const CatalogExample disk = generate_example("plane_disk");
    CHECK(minimality_certificate(disk.varifold, disk.gamma).conclusion == Conclusion::calibrated_minimizer);

    auto K = EmbeddedComplex::build({pt({1, 0}), pt({0, 0}), pt({0, 1})}, {{0, 1}, {1, 2}});
    const auto V = make_varifold(K, 1, {{{0, 1}, 1.0}, {{1, 2}, 1.0}});
    const Certificate l = minimality_certificate(V, make_boundary_region(*K, 0, {{0}, {2}}));
    CHECK(l.conclusion == Conclusion::not_calibrated);
    CHECK(l.worst_face == *K->find({1}));
    CHECK(l.worst_boundary_norm == doctest::Approx(std::sqrt(2.0)));
  }

  TEST_CASE("boundary outside gamma") {
    // A straight stationary segment whose endpoint is not declared in gamma
    // still fails at stationarity of the endpoint, so the certificate cannot
    // conclude minimality.
    auto K = EmbeddedComplex::build({pt({0, 0}), pt({1, 0})}, {{0, 1}});
    const auto V = make_varifold(K, 1, {{{0, 1}, 1.0}});
    const Certificate c = minimality_certificate(V, make_boundary_region(*K, 0, {{0}}));
    CHECK(c.conclusion != Conclusion::calibrated_minimizer);
  }
}
