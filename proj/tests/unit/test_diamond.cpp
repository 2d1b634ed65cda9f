#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace td_test;
using reduction::IsotropyData;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::InternalInconsistency;
}

ConvexLatticePolygon galicki_lawson_polygon(long q) {
  return poly({{0, 1}, {q, q}, {1, 0}, {0, -1}, {-q, -q}, {-1, 0}});
}

bool equivalent(const ConvexLatticePolygon& a, const ConvexLatticePolygon& b) {
  return toric::lattice_equivalence(a.vertices(), b.vertices()).has_value();
}

}  // namespace

TEST_CASE("isotropy data to polygon") {
  const auto oct = diamond::isotropy_to_polygon(IsotropyData{pts({{-7, -2}, {-5, -2}, {-1, -1}, {5, 1}, {7, 2}})});
  CHECK(oct == octagon());
  const auto hex = diamond::isotropy_to_polygon(IsotropyData{pts({{-3, -2}, {-1, -1}, {2, 1}, {3, 2}})});
  CHECK(equivalent(hex, hexagon()));
  CHECK(code_of([] { diamond::isotropy_to_polygon(IsotropyData{pts({{-2, -1}, {0, 1}, {2, 1}})}); }) ==
        ErrorCode::PreconditionFailed);
}

TEST_CASE("polygon to isotropy data") {
  // The square's marks span an index-2 lattice, so only its shape can be
  // inverted after a change of lattice; use the unimodular square instead.
  const auto sq = diamond::polygon_to_isotropy(square_fan());
  CHECK(reduction::cs_conditions_check(sq));
  CHECK(diamond::isotropy_to_polygon(sq).size() == 4);
  CHECK(equivalent(diamond::isotropy_to_polygon(sq), square_fan()));

  const auto hex = diamond::polygon_to_isotropy(hexagon());
  CHECK(hex.v.size() == 4);
  CHECK(equivalent(diamond::isotropy_to_polygon(hex), hexagon()));

  const auto oct = diamond::polygon_to_isotropy(octagon());
  CHECK(equivalent(diamond::isotropy_to_polygon(oct), octagon()));

  CHECK(code_of([] { diamond::polygon_to_isotropy(cp2_triangle()); }) == ErrorCode::NotSpecialSymmetric);
  CHECK(code_of([] { diamond::polygon_to_isotropy(poly({{1, 1}, {2, 1}, {1, 2}})); }) ==
        ErrorCode::NotSpecialSymmetric);
}

TEST_CASE("Sasakian volumes") {
  const auto hex = diamond::sasakian_volume(hexagon());
  CHECK(hex.vol_sigma == 3);
  CHECK(hex.d == 1);
  CHECK(hex.vol_m == doctest::Approx(std::pow(std::numbers::pi, 3) / 9).epsilon(1e-14));
  const auto sq = diamond::sasakian_volume(square_fan());
  CHECK(sq.vol_sigma == 4);
  CHECK(sq.d == 2);
  CHECK(sq.vol_m == doctest::Approx(8 * std::pow(std::numbers::pi, 3) / 27).epsilon(1e-14));
  for (long q = 1; q <= 12; ++q)
    CHECK(diamond::sasakian_volume(galicki_lawson_polygon(q)).vol_sigma == Rational(4 * q - 1, q * q));
  CHECK(code_of([] { diamond::sasakian_volume(poly({{1, 1}, {2, 1}, {1, 2}})); }) == ErrorCode::OriginNotInterior);
}

TEST_CASE("normalized Einstein constants") {
  const double l1 = diamond::normalized_einstein_constant(galicki_lawson_polygon(1));
  CHECK(l1 == doctest::Approx(4 * std::pow(std::pow(std::numbers::pi, 3) / 9, 0.4)).epsilon(1e-14));
  CHECK(l1 == doctest::Approx(6.563).epsilon(1e-3));
  double prev = l1;
  for (long q = 2; q <= 40; ++q) {
    const double l = diamond::normalized_einstein_constant(galicki_lawson_polygon(q));
    CHECK(l < prev);
    prev = l;
  }
}

TEST_CASE("golden diamonds") {
  const auto r = diamond::weights_to_diamond(golden_weights());
  CHECK(r.polygon == octagon());
  CHECK(r.diffeotype == "#5(S^2xS^3)");
  CHECK(r.m == 5);
  CHECK(r.b2_s == 2);
  CHECK(r.b2_x == 6);
  REQUIRE(r.s_cohomology);
  CHECK(r.s_cohomology->torsion_order == 24);
  CHECK(r.fano_index == 2);
  CHECK(r.ord_x == 12);
  CHECK(r.smooth_m);
  CHECK(r.ke_exists);
  CHECK(r.vol_m == doctest::Approx(2.0 * std::pow(std::numbers::pi / 3, 3) * 2.0 / 3.0));

  const auto s4 = diamond::weights_to_diamond(WeightMatrix::from_rows({}));
  CHECK(s4.diffeotype == "#1(S^2xS^3)");
  CHECK(equivalent(s4.polygon, square_fan()));
  CHECK(s4.fano_index == 2);
  CHECK(s4.vol_sigma == 4);

  const auto cp2 = diamond::weights_to_diamond(weights({{1, 1, 1}}));
  CHECK(cp2.diffeotype == "#3(S^2xS^3)");
  CHECK(equivalent(cp2.polygon, hexagon()));
  CHECK(cp2.fano_index == 1);
  CHECK(cp2.vol_sigma == 3);

  CHECK(code_of([] { diamond::weights_to_diamond(weights({{2, 2, 1}})); }) == ErrorCode::NotAdmissible);
}

TEST_CASE("polygon diamonds") {
  const auto r = diamond::polygon_to_diamond(octagon());
  CHECK(r.diffeotype == "#5(S^2xS^3)");
  CHECK_FALSE(r.omega);
  CHECK_FALSE(r.s_cohomology);
}

TEST_CASE("Galicki-Lawson family") {
  const auto one = diamond::family_galicki_lawson(1);
  CHECK(equivalent(one.report.polygon, hexagon()));
  const auto two = diamond::family_galicki_lawson(2);
  CHECK(two.report.vol_sigma == Rational(7, 4));
  CHECK(two.report.diffeotype == "#3(S^2xS^3)");
  CHECK(two.quotient_weights == std::vector<Integer>{1, 2, 2});
  const auto five = diamond::family_galicki_lawson(5);
  CHECK(five.report.vol_sigma == Rational(19, 25));
  CHECK(five.report.s_cohomology->torsion_order == 19);
  CHECK(equivalent(five.report.polygon, galicki_lawson_polygon(5)));
  CHECK(code_of([] { diamond::family_galicki_lawson(0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("general families") {
  const auto f = diamond::family_general(2, 3, 0);
  REQUIRE(f.size() == 3);
  Integer last = 0;
  for (const auto& w : f) {
    CHECK(reduction::is_admissible(w));
    const Integer g = reduction::g_omega_order(w);
    CHECK(g > last);
    last = g;
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(w(i, 2) > 0);
      CHECK(w(i, 3) > 0);
    }
    CHECK(w(0, 2) < w(1, 2));
    CHECK(w(0, 3) < w(1, 3));
  }
  const auto five = diamond::family_general(1, 5, 7);
  std::set<Integer> orders;
  for (const auto& w : five) orders.insert(reduction::g_omega_order(w));
  CHECK(orders.size() == 5);
  CHECK(diamond::family_general(3, 1, 42) == diamond::family_general(3, 1, 42));
  CHECK(diamond::family_general(3, 1, 42) != diamond::family_general(3, 1, 43));
}

TEST_CASE("reduction-derived diamonds satisfy the correspondence") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = trial % 5;
    const auto w = random_admissible(k, rng);
    const auto r = diamond::weights_to_diamond(w);
    CHECK(r.m == 2 * Integer(k) + 1);
    CHECK(r.polygon.size() == 2 * k + 4);
    CHECK((r.fano_index == 1 || r.fano_index == 2));
    const auto back = diamond::isotropy_to_polygon(diamond::polygon_to_isotropy(r.polygon));
    CHECK(equivalent(back, r.polygon));
  }
}
