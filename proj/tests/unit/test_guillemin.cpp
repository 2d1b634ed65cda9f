#include "support.hpp"

#include "toric_diamond/guillemin.hpp"

#include <doctest.h>

#include <cmath>

using namespace td_test;
using guillemin::LabeledPolytope;
using guillemin::Vec2;

namespace {

LabeledPolytope square() {
  return LabeledPolytope::from_facets({{{1, 0}, -1}, {{-1, 0}, -1}, {{0, 1}, -1}, {{0, -1}, -1}});
}
LabeledPolytope triangle() { return LabeledPolytope::anticanonical(toric::fan_from_polygon(cp2_triangle())); }
LabeledPolytope hexagon_sigma() { return LabeledPolytope::anticanonical(toric::fan_from_polygon(hexagon())); }

Vec2 random_interior(const LabeledPolytope& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (;;) {
    const Vec2 y{u(rng), u(rng)};
    const auto ls = p.affine_values(y);
    if (*std::min_element(ls.begin(), ls.end()) > 1e-3) return y;
  }
}

}  // namespace

TEST_CASE("polytope construction") {
  CHECK(square().area() == 4);
  CHECK(triangle().area() == Rational(9, 2));
  CHECK(hexagon_sigma().area() == 3);
  CHECK_THROWS_AS(LabeledPolytope::from_facets({{{1, 0}, -1}, {{-1, 0}, -1}, {{0, 1}, -1}, {{0, 1}, -2}, {{0, -1}, -1}}),
                  Error);
  CHECK_THROWS_AS(LabeledPolytope::from_facets({{{1, 0}, 0}}), Error);
}

TEST_CASE("potential on the square") {
  const auto g = guillemin::eval_G(square(), {0.0, 0.0});
  CHECK(g.value == doctest::Approx(0.0));
  CHECK(g.gradient[0] == doctest::Approx(0.0));
  CHECK(g.gradient[1] == doctest::Approx(0.0));
  CHECK(g.hessian[0][0] == doctest::Approx(1.0));
  CHECK(g.hessian[1][1] == doctest::Approx(1.0));
  CHECK(g.hessian[0][1] == doctest::Approx(0.0));
  try {
    guillemin::eval_G(square(), {0.999999999, 0.0});
    FAIL("expected BoundaryProximity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryProximity);
  }
}

TEST_CASE("Legendre inverse on the square is tanh per axis") {
  const auto sq = square();
  const Vec2 zero = guillemin::legendre_inverse(sq, {0.0, 0.0});
  CHECK(std::abs(zero[0]) < 1e-12);
  const Vec2 half = guillemin::legendre_inverse(sq, {0.5 * std::log(3.0), 0.0});
  CHECK(std::abs(half[0] - 0.5) < 1e-10);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const Vec2 x{u(rng), u(rng)};
    const Vec2 y = guillemin::legendre_inverse(sq, x);
    CHECK(std::abs(y[0] - std::tanh(x[0])) < 1e-10);
    CHECK(std::abs(y[1] - std::tanh(x[1])) < 1e-10);
  }
}

TEST_CASE("Legendre inverse heads to a vertex for large momenta") {
  const auto t = triangle();
  // The direction (-1, -1) is minimized at the vertex (-1, -1). Momenta of
  // size 6 put the preimage about e^-12 from the edges, inside the interior
  // tolerance.
  const Vec2 y = guillemin::legendre_inverse(t, {-6.0, -6.0});
  CHECK(y[0] < -0.99);
  CHECK(y[1] < -0.99);
  const auto ls = t.affine_values(y);
  CHECK(*std::min_element(ls.begin(), ls.end()) > 0.0);
}

TEST_CASE("Legendre duality round trip") {
  std::mt19937_64 rng(4);
  for (const auto& p : {square(), triangle(), hexagon_sigma()}) {
    for (int i = 0; i < 300; ++i) {
      const Vec2 y = random_interior(p, rng);
      const auto g = guillemin::eval_G(p, y);
      const Vec2 back = guillemin::legendre_inverse(p, g.gradient);
      CHECK(std::hypot(back[0] - y[0], back[1] - y[1]) < 1e-8);
      CHECK(guillemin::min_eigenvalue(g.hessian) > 0.0);
    }
  }
}

TEST_CASE("F by back-transform matches the closed form") {
  const auto sq = square();
  const auto a = guillemin::eval_F(sq, {1.0, 0.0});
  const auto b = guillemin::eval_F(sq, {0.0, 1.0});
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
  CHECK(guillemin::eval_F(sq, {0.0, 0.0}).discrepancy < 1e-12);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) worst = std::max(worst, guillemin::eval_F(triangle(), {u(rng), u(rng)}).discrepancy);
  CHECK(worst < 1e-8);
}

TEST_CASE("Hessians of G and F are inverse") {
  std::mt19937_64 rng(8);
  for (const auto& p : {square(), triangle(), hexagon_sigma()}) {
    for (int i = 0; i < 50; ++i) {
      const Vec2 y = random_interior(p, rng);
      const auto g = guillemin::eval_G(p, y);
      const auto hf = guillemin::hessian_F(p, g.gradient);
      CHECK(std::abs(guillemin::determinant(g.hessian) * guillemin::determinant(hf) - 1.0) < 1e-6);
      CHECK(std::abs(hf[0][1] - hf[1][0]) < 1e-6);
    }
  }
}

TEST_CASE("translating the polytope changes G by an affine function") {
  const auto t = triangle();
  // Shift by (1, 2): lambda_k grows by <(1,2), u_k>.
  std::vector<guillemin::Facet> shifted;
  for (const auto& f : t.facets())
    shifted.push_back({f.u, f.lambda + Rational(lattice::dot(f.u, LatVec{1, 2}))});
  const auto ts = LabeledPolytope::from_facets(shifted);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const Vec2 y = random_interior(t, rng);
    const auto a = guillemin::eval_G(t, y);
    const auto b = guillemin::eval_G(ts, {y[0] + 1.0, y[1] + 2.0});
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(a.hessian[r][c] == doctest::Approx(b.hessian[r][c]).epsilon(1e-12));
  }
}

TEST_CASE("volume check") {
  const auto sq = guillemin::volume_check(square(), 10000, 1);
  CHECK(sq.exact == 4.0);
  CHECK(sq.max_duality_deviation < 1e-6);
  CHECK(sq.rel_err < 1e-6);
  CHECK(guillemin::volume_check(triangle(), 10000, 1).exact == 4.5);
  CHECK(guillemin::volume_check(hexagon_sigma(), 10000, 1).exact == 3.0);
  // Deterministic in the seed.
  const auto again = guillemin::volume_check(square(), 10000, 1);
  CHECK(again.mc_estimate == sq.mc_estimate);
  CHECK_THROWS_AS(guillemin::volume_check(square(), 100, 1), Error);
}
