#include "toric_diamond/guillemin.hpp"

#include "toric_diamond/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace toric_diamond::guillemin {

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }
double to_double(const Integer& n) { return n.convert_to<double>(); }

double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }

Vec2 solve(const Mat2& m, const Vec2& b) {
  const double det = determinant(m);
  return {(m[1][1] * b[0] - m[0][1] * b[1]) / det, (m[0][0] * b[1] - m[1][0] * b[0]) / det};
}

struct RawEval {
  bool interior;
  PotentialEval eval;
};

// G and derivatives wherever all l_k > 0; no boundary tolerance.
RawEval raw_eval(const LabeledPolytope& p, const Vec2& y) {
  RawEval out{true, {0.0, {0.0, 0.0}, {{{0.0, 0.0}, {0.0, 0.0}}}}};
  const auto& us = p.normals();
  const auto ls = p.affine_values(y);
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const double l = ls[k];
    if (!(l > 0.0)) {
      out.interior = false;
      return out;
    }
    const Vec2& u = us[k];
    const double lg = std::log(l);
    out.eval.value += 0.5 * l * lg;
    out.eval.gradient[0] += 0.5 * u[0] * (lg + 1.0);
    out.eval.gradient[1] += 0.5 * u[1] * (lg + 1.0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.eval.hessian[i][j] += 0.5 * u[i] * u[j] / l;
  }
  return out;
}

double closed_form_F(const LabeledPolytope& p, const Vec2& y) {
  const auto ls = p.affine_values(y);
  double s = 0.0, l_inf = 0.0;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    s += p.lambdas()[k] * std::log(ls[k]);
    l_inf += ls[k] + p.lambdas()[k];  // <y, u_k>
  }
  return 0.5 * (s + l_inf);
}

double legendre_F(const LabeledPolytope& p, const Vec2& x, const Vec2& y) {
  return x[0] * y[0] + x[1] * y[1] - raw_eval(p, y).eval.value;
}

}  // namespace

double determinant(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

double min_eigenvalue(const Mat2& m) {
  const double tr = m[0][0] + m[1][1];
  const double diff = m[0][0] - m[1][1];
  const double disc = std::sqrt(diff * diff + 4.0 * m[0][1] * m[1][0]);
  return 0.5 * (tr - disc);
}

LabeledPolytope::LabeledPolytope(std::vector<Facet> f, std::vector<lattice::RatVec> v, Rational a)
    : facets_(std::move(f)), vertices_(std::move(v)), area_(std::move(a)) {
  for (const auto& facet : facets_) {
    u_.push_back({to_double(facet.u.x), to_double(facet.u.y)});
    lambda_.push_back(to_double(facet.lambda));
  }
}

LabeledPolytope LabeledPolytope::from_facets(std::vector<Facet> facets) {
  std::vector<lattice::HalfPlane> planes;
  for (const auto& f : facets) {
    if (f.u.is_zero()) throw Error(ErrorCode::DegenerateInput, "facet normal is zero");
    planes.push_back({f.u, f.lambda});
  }
  auto vertices = lattice::half_plane_intersection(planes);
  if (vertices.empty()) throw Error(ErrorCode::DegenerateInput, "polytope has empty interior");
  for (const auto& plane : planes) {
    const auto on = std::count_if(vertices.begin(), vertices.end(),
                                  [&](const lattice::RatVec& v) { return plane.on_boundary(v); });
    if (on < 2)
      throw Error(ErrorCode::DegenerateInput, "redundant facet",
                  lattice::to_string(plane.normal) + " >= " + to_string(plane.bound));
  }
  Rational area = lattice::shoelace_area(vertices);
  return LabeledPolytope(std::move(facets), std::move(vertices), std::move(area));
}

LabeledPolytope LabeledPolytope::anticanonical(const toric::AugmentedFan& fan) {
  std::vector<Facet> facets;
  for (const auto& n : fan.marks()) facets.push_back({n, Rational(-1)});
  return from_facets(std::move(facets));
}

Vec2 LabeledPolytope::centroid() const {
  // Area centroid of the vertex polygon.
  Rational cx = 0, cy = 0, twice_area = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    const Rational c = lattice::cross(a, b);
    twice_area += c;
    cx += (a.x + b.x) * c;
    cy += (a.y + b.y) * c;
  }
  return {to_double(cx / (3 * twice_area)), to_double(cy / (3 * twice_area))};
}

std::vector<double> LabeledPolytope::affine_values(const Vec2& y) const {
  std::vector<double> ls(u_.size());
  for (std::size_t k = 0; k < u_.size(); ++k) ls[k] = y[0] * u_[k][0] + y[1] * u_[k][1] - lambda_[k];
  return ls;
}

PotentialEval eval_G(const LabeledPolytope& p, const Vec2& y) {
  const auto ls = p.affine_values(y);
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (!(ls[k] > kBoundaryEpsilon)) {
      std::ostringstream ctx;
      ctx << "facet " << k << " l=" << ls[k];
      throw Error(ErrorCode::BoundaryProximity, "point is too close to the boundary", ctx.str());
    }
  }
  return raw_eval(p, y).eval;
}

Vec2 legendre_inverse(const LabeledPolytope& p, const Vec2& x, const LegendreOptions& opts) {
  Vec2 y = p.centroid();
  RawEval cur = raw_eval(p, y);
  auto residual_of = [&](const PotentialEval& e) {
    return Vec2{e.gradient[0] - x[0], e.gradient[1] - x[1]};
  };
  auto objective = [&](const Vec2& at, const PotentialEval& e) {
    return e.value - x[0] * at[0] - x[1] * at[1];
  };
  Vec2 r = residual_of(cur.eval);
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (norm(r) < opts.tolerance) return y;
    const Vec2 dir = solve(cur.eval.hessian, {-r[0], -r[1]});
    const double slope = r[0] * dir[0] + r[1] * dir[1];
    const double phi = objective(y, cur.eval);
    double t = 1.0;
    bool moved = false;
    for (int halvings = 0; halvings < 80; ++halvings, t *= 0.5) {
      const Vec2 trial{y[0] + t * dir[0], y[1] + t * dir[1]};
      RawEval next = raw_eval(p, trial);
      if (!next.interior) continue;
      const Vec2 r_next = residual_of(next.eval);
      if (objective(trial, next.eval) <= phi + 1e-4 * t * slope || norm(r_next) < norm(r)) {
        y = trial;
        cur = std::move(next);
        r = r_next;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (norm(r) < opts.tolerance) return y;
  std::ostringstream ctx;
  ctx << "residual=" << norm(r);
  throw Error(ErrorCode::NonConvergence, "Legendre inversion did not converge", ctx.str());
}

FEvaluation eval_F(const LabeledPolytope& p, const Vec2& x) {
  const Vec2 y0 = legendre_inverse(p, {0.0, 0.0});
  const double offset = legendre_F(p, {0.0, 0.0}, y0) - closed_form_F(p, y0);
  const Vec2 y = legendre_inverse(p, x);
  FEvaluation f;
  f.value = legendre_F(p, x, y);
  f.closed_form = closed_form_F(p, y);
  f.discrepancy = std::abs((f.value - f.closed_form) - offset);
  if (f.discrepancy >= 1e-8) {
    std::ostringstream ctx;
    ctx << "discrepancy=" << f.discrepancy;
    throw Error(ErrorCode::InternalInconsistency, "closed-form potential disagrees", ctx.str());
  }
  return f;
}

Mat2 hessian_F(const LabeledPolytope& p, const Vec2& x, double step) {
  // Column j of Hess F is dy/dx_j.
  auto central = [&](int j, double h) {
    Vec2 plus = x, minus = x;
    plus[j] += h;
    minus[j] -= h;
    const Vec2 a = legendre_inverse(p, plus);
    const Vec2 b = legendre_inverse(p, minus);
    return Vec2{(a[0] - b[0]) / (2 * h), (a[1] - b[1]) / (2 * h)};
  };
  Mat2 h{};
  for (int j = 0; j < 2; ++j) {
    const Vec2 coarse = central(j, step);
    const Vec2 fine = central(j, step / 2);
    for (int i = 0; i < 2; ++i) h[i][j] = (4.0 * fine[i] - coarse[i]) / 3.0;
  }
  return h;
}

VolumeCheck volume_check(const LabeledPolytope& p, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 10000) throw Error(ErrorCode::InvalidParameter, "volume_check needs at least 1e4 samples");

  // Fan triangulation from vertex 0, picked proportionally to area.
  const auto& vs = p.vertices();
  std::vector<std::array<Vec2, 3>> triangles;
  std::vector<double> weights;
  const Vec2 v0{to_double(vs[0].x), to_double(vs[0].y)};
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    const Vec2 a{to_double(vs[i].x), to_double(vs[i].y)};
    const Vec2 b{to_double(vs[i + 1].x), to_double(vs[i + 1].y)};
    triangles.push_back({v0, a, b});
    weights.push_back(std::abs((a[0] - v0[0]) * (b[1] - v0[1]) - (a[1] - v0[1]) * (b[0] - v0[0])));
  }
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  VolumeCheck out{};
  out.exact = to_double(p.area());
  out.min_hessian_eigenvalue = INFINITY;
  double sum = 0.0;
  std::uint64_t taken = 0;
  while (taken < samples) {
    const auto& tri = triangles[pick(rng)];
    double s = unit(rng), t = unit(rng);
    if (s + t > 1.0) {
      s = 1.0 - s;
      t = 1.0 - t;
    }
    const Vec2 y{tri[0][0] + s * (tri[1][0] - tri[0][0]) + t * (tri[2][0] - tri[0][0]),
                 tri[0][1] + s * (tri[1][1] - tri[0][1]) + t * (tri[2][1] - tri[0][1])};
    const auto ls = p.affine_values(y);
    if (*std::min_element(ls.begin(), ls.end()) <= kBoundaryEpsilon) continue;  // resample
    ++taken;

    const PotentialEval g = eval_G(p, y);
    out.min_hessian_eigenvalue = std::min(out.min_hessian_eigenvalue, min_eigenvalue(g.hessian));
    const Vec2 back = legendre_inverse(p, g.gradient);
    out.max_legendre_residual =
        std::max(out.max_legendre_residual, norm({back[0] - y[0], back[1] - y[1]}));
    const double product = determinant(g.hessian) * determinant(hessian_F(p, g.gradient));
    out.max_duality_deviation = std::max(out.max_duality_deviation, std::abs(product - 1.0));
    sum += product;
  }
  out.mc_estimate = out.exact * sum / static_cast<double>(samples);
  out.rel_err = std::abs(out.mc_estimate - out.exact) / out.exact;
  return out;
}

}  // namespace toric_diamond::guillemin
