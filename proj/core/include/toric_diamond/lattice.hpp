#pragma once

// Exact rank-2 lattice arithmetic and planar convex geometry.
//
// Everything here is exact: integers are arbitrary precision and rational
// points are kept in lowest terms. Polygons are stored counterclockwise with
// the lexicographically smallest vertex first, so structural equality of two
// polygons is plain vector equality.

#include "toric_diamond/numeric.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric_diamond::lattice {

struct LatVec {
  Integer x;
  Integer y;

  friend bool operator==(const LatVec&, const LatVec&) = default;
  friend bool operator<(const LatVec& a, const LatVec& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  LatVec operator-() const { return {-x, -y}; }
  friend LatVec operator+(const LatVec& a, const LatVec& b) { return {a.x + b.x, a.y + b.y}; }
  friend LatVec operator-(const LatVec& a, const LatVec& b) { return {a.x - b.x, a.y - b.y}; }
  friend LatVec operator*(const Integer& s, const LatVec& a) { return {s * a.x, s * a.y}; }
  bool is_zero() const { return x == 0 && y == 0; }
};

struct RatVec {
  Rational x;
  Rational y;

  RatVec() = default;
  RatVec(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit RatVec(const LatVec& v) : x(v.x), y(v.y) {}

  friend bool operator==(const RatVec&, const RatVec&) = default;
  friend bool operator<(const RatVec& a, const RatVec& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend RatVec operator+(const RatVec& a, const RatVec& b) { return {a.x + b.x, a.y + b.y}; }
  friend RatVec operator-(const RatVec& a, const RatVec& b) { return {a.x - b.x, a.y - b.y}; }
  friend RatVec operator*(const Rational& s, const RatVec& a) { return {s * a.x, s * a.y}; }
};

Integer cross(const LatVec& a, const LatVec& b);
Rational cross(const RatVec& a, const RatVec& b);
Integer dot(const LatVec& a, const LatVec& b);
Rational dot(const RatVec& a, const RatVec& b);

// gcd of the coordinates; 0 for the zero vector.
Integer content(const LatVec& v);

std::string to_string(const LatVec& v);
std::string to_string(const RatVec& v);

// Element of GL(2,Z), row-major [[a, b], [c, d]] acting on column vectors.
class UnimodularMap {
 public:
  UnimodularMap() : a_(1), b_(0), c_(0), d_(1) {}
  // Throws InvalidParameter unless ad - bc = +-1.
  UnimodularMap(Integer a, Integer b, Integer c, Integer d);

  // The unique map sending (from0, from1) to (to0, to1), if it is integral and
  // unimodular. from0, from1 must be linearly independent.
  static std::optional<UnimodularMap> mapping(const LatVec& from0, const LatVec& from1,
                                              const LatVec& to0, const LatVec& to1);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer det() const { return a_ * d_ - b_ * c_; }

  LatVec operator()(const LatVec& v) const;
  RatVec operator()(const RatVec& v) const;
  UnimodularMap inverse() const;
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g);
  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
  friend bool operator<(const UnimodularMap& f, const UnimodularMap& g);

 private:
  Integer a_, b_, c_, d_;
};

std::string to_string(const UnimodularMap& g);

enum class OriginPolicy { Unchecked, RequireInterior };

class ConvexLatticePolygon {
 public:
  // Accepts the vertices in either cyclic orientation and from any starting
  // vertex. Throws DegenerateInput for fewer than three distinct vertices,
  // NotConvex unless the list is a strictly convex cycle, and
  // OriginNotInterior when the policy asks for it.
  static ConvexLatticePolygon from_vertices(std::vector<LatVec> vertices,
                                            OriginPolicy policy = OriginPolicy::Unchecked);

  const std::vector<LatVec>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool origin_strictly_interior() const;
  bool is_antipodally_symmetric() const;
  ConvexLatticePolygon transformed(const UnimodularMap& g) const;

  friend bool operator==(const ConvexLatticePolygon&, const ConvexLatticePolygon&) = default;

 private:
  explicit ConvexLatticePolygon(std::vector<LatVec> v) : vertices_(std::move(v)) {}
  std::vector<LatVec> vertices_;
};

// {m : <m, normal> >= bound}
struct HalfPlane {
  LatVec normal;
  Rational bound;

  bool contains(const RatVec& m) const { return dot(m, RatVec(normal)) >= bound; }
  bool on_boundary(const RatVec& m) const { return dot(m, RatVec(normal)) == bound; }
};

// Counterclockwise strictly convex hull, lexicographically smallest vertex
// first. Throws DegenerateInput when the points are all collinear.
std::vector<RatVec> convex_hull(std::span<const RatVec> points);
std::vector<LatVec> convex_hull(std::span<const LatVec> points);

// Vertices of the intersection polygon (counterclockwise, lexicographically
// smallest first), or an empty list if the intersection has empty interior.
// Throws UnboundedRegion if the intersection is nonempty and unbounded.
std::vector<RatVec> half_plane_intersection(std::span<const HalfPlane> planes);

// Absolute area of a simple polygon. Throws DegenerateInput below 3 vertices.
Rational shoelace_area(std::span<const RatVec> vertices);

struct SnfResult {
  IntMatrix U;  // m x m, unimodular
  IntMatrix D;  // m x n, diagonal with d1 | d2 | ...
  IntMatrix V;  // n x n, unimodular; U * A * V == D

  std::size_t rank() const;
  std::vector<Integer> invariant_factors() const;  // nonzero diagonal entries
};

SnfResult smith_normal_form(const IntMatrix& a);

// Inverse of a square unimodular integer matrix (via its own SNF).
IntMatrix unimodular_inverse(const IntMatrix& u);

// Index of the sublattice spanned by the vectors in Z^2, or 0 if rank < 2.
Integer lattice_span_index(std::span<const LatVec> vectors);

// Hermite basis {(a, b), (0, c)} of the lattice spanned by the vectors, with
// a > 0, c > 0 and 0 <= b < c. Throws DegenerateInput if the rank is < 2.
std::array<LatVec, 2> span_basis(std::span<const LatVec> vectors);

// Integer coordinates of v in a Hermite basis returned by span_basis. Throws
// InternalInconsistency if v is not in the lattice.
LatVec coordinates_in(const std::array<LatVec, 2>& basis, const LatVec& v);

}  // namespace toric_diamond::lattice
