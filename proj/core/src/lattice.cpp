#include "toric_diamond/lattice.hpp"

#include "toric_diamond/error.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace toric_diamond::lattice {

Integer cross(const LatVec& a, const LatVec& b) { return a.x * b.y - a.y * b.x; }
Rational cross(const RatVec& a, const RatVec& b) { return a.x * b.y - a.y * b.x; }
Integer dot(const LatVec& a, const LatVec& b) { return a.x * b.x + a.y * b.y; }
Rational dot(const RatVec& a, const RatVec& b) { return a.x * b.x + a.y * b.y; }

Integer content(const LatVec& v) { return gcd(v.x, v.y); }

std::string to_string(const LatVec& v) { return "(" + v.x.str() + "," + v.y.str() + ")"; }
std::string to_string(const RatVec& v) {
  return "(" + toric_diamond::to_string(v.x) + "," + toric_diamond::to_string(v.y) + ")";
}

// ---------------------------------------------------------------------------
// UnimodularMap

UnimodularMap::UnimodularMap(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Integer dt = det();
  if (dt != 1 && dt != -1)
    throw Error(ErrorCode::InvalidParameter, "matrix is not unimodular", "det=" + dt.str());
}

std::optional<UnimodularMap> UnimodularMap::mapping(const LatVec& from0, const LatVec& from1,
                                                    const LatVec& to0, const LatVec& to1) {
  // g * F = T with F = [from0 from1] as columns, so g = T * adj(F) / det(F).
  const Integer det_f = cross(from0, from1);
  if (det_f == 0) return std::nullopt;
  // adj(F) = [[f1.y, -f1.x], [-f0.y, f0.x]]
  const Integer na = to0.x * from1.y - to1.x * from0.y;
  const Integer nb = -to0.x * from1.x + to1.x * from0.x;
  const Integer nc = to0.y * from1.y - to1.y * from0.y;
  const Integer nd = -to0.y * from1.x + to1.y * from0.x;
  if (na % det_f != 0 || nb % det_f != 0 || nc % det_f != 0 || nd % det_f != 0)
    return std::nullopt;
  const Integer a = na / det_f, b = nb / det_f, c = nc / det_f, d = nd / det_f;
  const Integer dt = a * d - b * c;
  if (dt != 1 && dt != -1) return std::nullopt;
  return UnimodularMap(a, b, c, d);
}

LatVec UnimodularMap::operator()(const LatVec& v) const {
  return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y};
}

RatVec UnimodularMap::operator()(const RatVec& v) const {
  return {Rational(a_) * v.x + Rational(b_) * v.y, Rational(c_) * v.x + Rational(d_) * v.y};
}

UnimodularMap UnimodularMap::inverse() const {
  const Integer dt = det();  // +-1, so the adjugate divided by dt is exact
  return UnimodularMap(d_ * dt, -b_ * dt, -c_ * dt, a_ * dt);
}

UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
  return UnimodularMap(f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
                       f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_);
}

bool operator<(const UnimodularMap& f, const UnimodularMap& g) {
  return std::tie(f.a_, f.b_, f.c_, f.d_) < std::tie(g.a_, g.b_, g.c_, g.d_);
}

std::string to_string(const UnimodularMap& g) {
  return "[[" + g.a().str() + "," + g.b().str() + "],[" + g.c().str() + "," + g.d().str() + "]]";
}

// ---------------------------------------------------------------------------
// Polygons

namespace {

template <class Vec>
void rotate_lexicographic_first(std::vector<Vec>& cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
}

template <class Vec, class Scalar>
std::vector<Vec> monotone_chain(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorCode::DegenerateInput, "fewer than three distinct points");
  std::vector<Vec> hull(2 * pts.size());
  std::size_t k = 0;
  auto turn = [](const Vec& o, const Vec& a, const Vec& b) -> Scalar { return cross(a - o, b - o); };
  for (const auto& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw Error(ErrorCode::DegenerateInput, "points are collinear");
  return hull;  // starts at the lexicographic minimum
}

}  // namespace

std::vector<RatVec> convex_hull(std::span<const RatVec> points) {
  return monotone_chain<RatVec, Rational>({points.begin(), points.end()});
}

std::vector<LatVec> convex_hull(std::span<const LatVec> points) {
  return monotone_chain<LatVec, Integer>({points.begin(), points.end()});
}

ConvexLatticePolygon ConvexLatticePolygon::from_vertices(std::vector<LatVec> vertices,
                                                         OriginPolicy policy) {
  const std::size_t n = vertices.size();
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::DegenerateInput, "repeated polygon vertex");
  }
  if (n < 3) throw Error(ErrorCode::DegenerateInput, "a polygon needs at least three vertices");

  Integer twice_area = 0;
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(vertices[i], vertices[(i + 1) % n]);
  if (twice_area < 0) std::reverse(vertices.begin(), vertices.end());
  rotate_lexicographic_first(vertices);

  // Strict convexity: the cyclic order must be exactly the hull order, with no
  // collinear or reflex vertex.
  std::vector<LatVec> hull;
  try {
    hull = convex_hull(std::span<const LatVec>(vertices));
  } catch (const Error&) {
    throw Error(ErrorCode::NotConvex, "polygon vertices are collinear");
  }
  if (hull != vertices) {
    std::string ctx;
    for (const auto& v : vertices) ctx += to_string(v);
    throw Error(ErrorCode::NotConvex, "vertices are not in strictly convex position", ctx);
  }

  ConvexLatticePolygon p(std::move(vertices));
  if (policy == OriginPolicy::RequireInterior && !p.origin_strictly_interior())
    throw Error(ErrorCode::OriginNotInterior, "origin is not strictly inside the polygon");
  return p;
}

bool ConvexLatticePolygon::origin_strictly_interior() const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cross(vertices_[i], vertices_[(i + 1) % n]) <= 0) return false;
  return true;
}

bool ConvexLatticePolygon::is_antipodally_symmetric() const {
  auto a = vertices_;
  auto b = vertices_;
  for (auto& v : b) v = -v;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

ConvexLatticePolygon ConvexLatticePolygon::transformed(const UnimodularMap& g) const {
  std::vector<LatVec> image;
  image.reserve(vertices_.size());
  for (const auto& v : vertices_) image.push_back(g(v));
  return from_vertices(std::move(image));
}

// ---------------------------------------------------------------------------
// Half-plane intersection by clipping a box that contains every vertex.

namespace {

std::vector<RatVec> clip(const std::vector<RatVec>& poly, const HalfPlane& h) {
  std::vector<RatVec> out;
  const std::size_t n = poly.size();
  const RatVec normal(h.normal);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec& p = poly[i];
    const RatVec& q = poly[(i + 1) % n];
    const Rational fp = dot(p, normal) - h.bound;
    const Rational fq = dot(q, normal) - h.bound;
    if (fp >= 0) out.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      const Rational t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

std::vector<RatVec> cleanup(std::vector<RatVec> poly) {
  // Drop repeated and collinear vertices until stable.
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const RatVec& prev = poly[(i + n - 1) % n];
      const RatVec& cur = poly[i];
      const RatVec& next = poly[(i + 1) % n];
      if (cur == next || cross(cur - prev, next - cur) == 0) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (poly.size() < 3) return {};
  return poly;
}

}  // namespace

std::vector<RatVec> half_plane_intersection(std::span<const HalfPlane> planes) {
  for (const auto& h : planes)
    if (h.normal.is_zero()) throw Error(ErrorCode::DegenerateInput, "half-plane with zero normal");

  // Every vertex of a bounded intersection is a pairwise line intersection.
  Rational reach = 0;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      const LatVec& n1 = planes[i].normal;
      const LatVec& n2 = planes[j].normal;
      const Integer det = cross(n1, n2);
      if (det == 0) continue;
      // n1.x X + n1.y Y = b1, n2.x X + n2.y Y = b2
      const Rational x = (planes[i].bound * Rational(n2.y) - planes[j].bound * Rational(n1.y)) / Rational(det);
      const Rational y = (planes[j].bound * Rational(n1.x) - planes[i].bound * Rational(n2.x)) / Rational(det);
      reach = std::max({reach, x < 0 ? Rational(-x) : x, y < 0 ? Rational(-y) : y});
    }
  const Rational box = 2 * reach + 2;

  std::vector<RatVec> poly = {{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (const auto& h : planes) {
    poly = clip(poly, h);
    if (poly.empty()) return {};
  }
  poly = cleanup(std::move(poly));
  if (poly.empty()) return {};

  for (const auto& v : poly)
    if (v.x == box || v.x == -box || v.y == box || v.y == -box)
      throw Error(ErrorCode::UnboundedRegion, "half-plane intersection is unbounded");

  rotate_lexicographic_first(poly);
  return poly;
}

Rational shoelace_area(std::span<const RatVec> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error(ErrorCode::DegenerateInput, "shoelace needs at least three vertices");
  Rational twice = 0;
  for (std::size_t i = 0; i < n; ++i) twice += cross(vertices[i], vertices[(i + 1) % n]);
  if (twice < 0) twice = -twice;
  return twice / 2;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

namespace {

struct SnfWork {
  IntMatrix D, U, V;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) += q * D(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += q * U(j, c);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, i) += q * D(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) += q * V(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfWork w{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (w.D(i, j) != 0 && (!best || absolute(w.D(i, j)) < absolute(w.D(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    w.swap_rows(t, best->first);
    w.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.D(i, t) == 0) continue;
        w.add_row(i, t, -(w.D(i, t) / w.D(t, t)));
        if (w.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.D(t, j) == 0) continue;
        w.add_col(j, t, -(w.D(t, j) / w.D(t, t)));
        if (w.D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (w.D(i, t) != 0 && absolute(w.D(i, t)) < absolute(w.D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.D(t, j) != 0 && absolute(w.D(t, j)) < absolute(w.D(bi, bj))) bi = t, bj = j;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Divisibility of the remaining block by the pivot.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.D(i, j) % w.D(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      w.add_row(t, *offender, 1);
    }
    if (w.D(t, t) < 0) w.negate_row(t);
  }
  return {std::move(w.U), std::move(w.D), std::move(w.V)};
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  // U A V = I  =>  A^{-1} = V U
  SnfResult s = smith_normal_form(u);
  if (s.D != IntMatrix::identity(u.rows()))
    throw Error(ErrorCode::InternalInconsistency, "matrix is not unimodular");
  return s.V * s.U;
}

Integer lattice_span_index(std::span<const LatVec> vectors) {
  if (vectors.empty()) return 0;
  IntMatrix a(vectors.size(), 2);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    a(i, 0) = vectors[i].x;
    a(i, 1) = vectors[i].y;
  }
  const SnfResult s = smith_normal_form(a);
  if (s.rank() < 2) return 0;
  return s.D(0, 0) * s.D(1, 1);
}

std::array<LatVec, 2> span_basis(std::span<const LatVec> vectors) {
  LatVec head{0, 0};  // generator with x = gcd of the x-coordinates so far
  Integer vertical = 0;
  for (const auto& v : vectors) {
    if (v.x == 0) {
      vertical = gcd(vertical, v.y);
      continue;
    }
    if (head.x == 0) {
      vertical = gcd(vertical, head.y);
      head = v;
      continue;
    }
    const ExtendedGcd e = extended_gcd(head.x, v.x);
    const LatVec combined = e.s * head + e.t * v;
    const LatVec eliminated = (v.x / e.g) * head - (head.x / e.g) * v;
    vertical = gcd(vertical, eliminated.y);
    head = combined;
  }
  if (head.x == 0 || vertical == 0)
    throw Error(ErrorCode::DegenerateInput, "vectors do not span a rank-2 lattice");
  if (head.x < 0) head = -head;
  head.y = mod_floor(head.y, vertical);
  return {head, LatVec{0, vertical}};
}

LatVec coordinates_in(const std::array<LatVec, 2>& basis, const LatVec& v) {
  const auto& [first, second] = basis;
  if (v.x % first.x != 0)
    throw Error(ErrorCode::InternalInconsistency, "vector outside the lattice", to_string(v));
  const Integer alpha = v.x / first.x;
  const Integer rest = v.y - alpha * first.y;
  if (rest % second.y != 0)
    throw Error(ErrorCode::InternalInconsistency, "vector outside the lattice", to_string(v));
  return {alpha, rest / second.y};
}

}  // namespace toric_diamond::lattice
