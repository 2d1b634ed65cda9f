#pragma once

// Floating-point evaluation of the canonical symplectic potential of a
// labeled polygon, its Legendre dual, and the volume identity linking them.
// Everything here is a numerical cross-check of exact data from lattice/toric.

#include "toric_diamond/lattice.hpp"
#include "toric_diamond/toric.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace toric_diamond::guillemin {

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// Interior tolerance: every l_k(y) must exceed this for eval_G.
inline constexpr double kBoundaryEpsilon = 1e-9;

struct Facet {
  lattice::LatVec u;
  Rational lambda;  // <x, u> >= lambda
};

class LabeledPolytope {
 public:
  // Throws DegenerateInput for an empty interior or a redundant facet and
  // UnboundedRegion if the facets do not cut out a bounded region.
  static LabeledPolytope from_facets(std::vector<Facet> facets);
  // The anticanonical polytope of a fan: <x, n(rho)> >= -1 for every mark.
  static LabeledPolytope anticanonical(const toric::AugmentedFan& fan);

  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<lattice::RatVec>& vertices() const noexcept { return vertices_; }
  const Rational& area() const noexcept { return area_; }
  Vec2 centroid() const;

  // l_k(y) = <y, u_k> - lambda_k
  std::vector<double> affine_values(const Vec2& y) const;
  const std::vector<Vec2>& normals() const noexcept { return u_; }
  const std::vector<double>& lambdas() const noexcept { return lambda_; }

 private:
  LabeledPolytope(std::vector<Facet> f, std::vector<lattice::RatVec> v, Rational a);

  std::vector<Facet> facets_;
  std::vector<lattice::RatVec> vertices_;
  Rational area_;
  std::vector<Vec2> u_;
  std::vector<double> lambda_;
};

struct PotentialEval {
  double value;
  Vec2 gradient;
  Mat2 hessian;
};

// G(y) = 1/2 sum l_k log l_k with gradient and Hessian. Throws
// BoundaryProximity if some l_k(y) <= kBoundaryEpsilon.
PotentialEval eval_G(const LabeledPolytope& p, const Vec2& y);

struct LegendreOptions {
  int max_iterations = 200;
  double tolerance = 1e-10;  // on |grad G(y) - x|
};

// The interior y with grad G(y) = x. Throws NonConvergence, with the final
// residual in the context, if the tolerance is not met.
Vec2 legendre_inverse(const LabeledPolytope& p, const Vec2& x, const LegendreOptions& opts = {});

struct FEvaluation {
  double value;        // <x, y> - G(y)
  double closed_form;  // 1/2 (sum lambda_k log l_k(y) + l_inf(y))
  double discrepancy;  // |(value - closed_form) - same at x = 0|
};

// Throws InternalInconsistency if the two expressions differ by more than
// 1e-8 after calibration at x = 0.
FEvaluation eval_F(const LabeledPolytope& p, const Vec2& x);

// d^2F/dx^2 by Richardson-extrapolated central differences of y(x).
Mat2 hessian_F(const LabeledPolytope& p, const Vec2& x, double step = 1e-3);

struct VolumeCheck {
  double mc_estimate;
  double exact;
  double rel_err;
  double max_duality_deviation;  // max |det HessG * det HessF - 1|
  double max_legendre_residual;  // max |legendre_inverse(grad G(y)) - y|
  double min_hessian_eigenvalue;
};

// Samples y uniformly in the polygon (seeded, deterministic) and integrates
// det HessG(y) * det HessF(x(y)) over it. Throws InvalidParameter below 1e4
// samples.
VolumeCheck volume_check(const LabeledPolytope& p, std::uint64_t samples, std::uint64_t seed);

double determinant(const Mat2& m);
double min_eigenvalue(const Mat2& symmetric);

}  // namespace toric_diamond::guillemin
