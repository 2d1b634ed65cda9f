#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.

#include "toric_diamond/diamond.hpp"
#include "toric_diamond/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace td_test {

using namespace toric_diamond;
using lattice::ConvexLatticePolygon;
using lattice::LatVec;
using lattice::RatVec;
using lattice::UnimodularMap;
using reduction::WeightMatrix;

inline std::vector<LatVec> pts(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<LatVec> out;
  for (auto [x, y] : xs) out.push_back({x, y});
  return out;
}

inline ConvexLatticePolygon poly(std::initializer_list<std::pair<long, long>> xs) {
  return ConvexLatticePolygon::from_vertices(pts(xs));
}

inline toric::AugmentedFan fan(std::initializer_list<std::pair<long, long>> xs) {
  return toric::AugmentedFan::from_marks(pts(xs));
}

inline WeightMatrix weights(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return WeightMatrix::from_rows(r);
}

inline std::set<LatVec> as_set(const std::vector<LatVec>& v) { return {v.begin(), v.end()}; }

inline ConvexLatticePolygon hexagon() { return poly({{0, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, -1}, {-1, 0}}); }
inline ConvexLatticePolygon octagon() {
  return poly({{1, 1}, {5, 2}, {7, 2}, {5, 1}, {-1, -1}, {-5, -2}, {-7, -2}, {-5, -1}});
}
// Listed clockwise; the constructor normalizes the orientation.
inline ConvexLatticePolygon nonagon() {
  return poly({{0, 2}, {1, 2}, {2, 1}, {2, 0}, {1, -1}, {-1, -2}, {-2, -2}, {-2, -1}, {-1, 1}});
}
inline ConvexLatticePolygon cp2_triangle() { return poly({{0, 1}, {1, 0}, {-1, -1}}); }
inline ConvexLatticePolygon square_fan() { return poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
inline WeightMatrix golden_weights() { return weights({{1, 0, 1, 1}, {0, 1, 1, 2}}); }

inline UnimodularMap random_unimodular(std::mt19937_64& rng, int steps = 6) {
  std::uniform_int_distribution<int> pick(0, 3), amount(-2, 2);
  UnimodularMap g;
  for (int i = 0; i < steps; ++i) {
    switch (pick(rng)) {
      case 0: g = UnimodularMap(1, amount(rng), 0, 1) * g; break;
      case 1: g = UnimodularMap(1, 0, amount(rng), 1) * g; break;
      case 2: g = UnimodularMap(0, 1, 1, 0) * g; break;
      default: g = UnimodularMap(-1, 0, 0, 1) * g; break;
    }
  }
  return g;
}

// ---- oracles --------------------------------------------------------------

// Largest m <= bound with some f in [0, m)^2 solving <f, n> == 1 (mod m) for
// every mark, by exhaustive search.
inline long fano_index_bruteforce(const toric::AugmentedFan& f, long bound) {
  for (long m = bound; m >= 1; --m)
    for (long x = 0; x < m; ++x)
      for (long y = 0; y < m; ++y) {
        const LatVec w{x, y};
        if (std::all_of(f.marks().begin(), f.marks().end(),
                        [&](const LatVec& n) { return mod_floor(lattice::dot(w, n) - 1, m) == 0; }))
          return m;
      }
  return 0;
}

// W0 by trying every image pair for two independent vertices: a linear map
// is fixed by them, so this enumeration is complete.
inline std::set<UnimodularMap> symmetry_bruteforce(const std::vector<LatVec>& marks) {
  const auto target = as_set(marks);
  const LatVec a = marks[0];
  std::size_t j = 1;
  while (lattice::cross(a, marks[j]) == 0) ++j;
  const LatVec b = marks[j];
  const Integer det = lattice::cross(a, b);
  std::set<UnimodularMap> out;
  for (const auto& ga : marks)
    for (const auto& gb : marks) {
      // g = [ga gb] [a b]^-1, kept only when integral.
      const Integer p = ga.x * b.y - gb.x * a.y, q = gb.x * a.x - ga.x * b.x;
      const Integer r = ga.y * b.y - gb.y * a.y, s = gb.y * a.x - ga.y * b.x;
      if (p % det != 0 || q % det != 0 || r % det != 0 || s % det != 0) continue;
      const Integer m00 = p / det, m01 = q / det, m10 = r / det, m11 = s / det;
      const Integer d = m00 * m11 - m01 * m10;
      if (d != 1 && d != -1) continue;
      const UnimodularMap g(m00, m01, m10, m11);
      std::set<LatVec> image;
      for (const auto& m : marks) image.insert(g(m));
      if (image == target) out.insert(g);
    }
  return out;
}

// Twice the area by Pick's theorem: 2I + B - 2, counting lattice points.
inline Integer twice_area_by_pick(const std::vector<LatVec>& vs) {
  Integer boundary = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) boundary += lattice::content(vs[(i + 1) % vs.size()] - vs[i]);
  long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& v : vs) {
    xmin = std::min(xmin, v.x.convert_to<long>());
    xmax = std::max(xmax, v.x.convert_to<long>());
    ymin = std::min(ymin, v.y.convert_to<long>());
    ymax = std::max(ymax, v.y.convert_to<long>());
  }
  Integer interior = 0;
  for (long x = xmin; x <= xmax; ++x)
    for (long y = ymin; y <= ymax; ++y) {
      bool inside = true;
      for (std::size_t i = 0; i < vs.size() && inside; ++i)
        inside = lattice::cross(vs[(i + 1) % vs.size()] - vs[i], LatVec{x, y} - vs[i]) > 0;
      if (inside) ++interior;
    }
  return 2 * interior + boundary - 2;
}

// Vertices of {<m, n_i> >= b_i} from all pairwise line intersections that
// satisfy every constraint.
inline std::set<RatVec> vertices_bruteforce(const std::vector<lattice::HalfPlane>& planes) {
  std::set<RatVec> out;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      const auto& p = planes[i];
      const auto& q = planes[j];
      const Rational det(lattice::cross(p.normal, q.normal));
      if (det == 0) continue;
      const RatVec m{(p.bound * Rational(q.normal.y) - q.bound * Rational(p.normal.y)) / det,
                     (q.bound * Rational(p.normal.x) - p.bound * Rational(q.normal.x)) / det};
      if (std::all_of(planes.begin(), planes.end(), [&](const auto& h) { return h.contains(m); })) out.insert(m);
    }
  return out;
}

// Random admissible reduced weight matrix of size k x (k+2): a random
// [I | a | b] hidden by row operations and column signs/permutations.
inline WeightMatrix random_admissible(std::size_t k, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  if (k == 0) return WeightMatrix::from_rows({});
  for (;;) {
    std::vector<std::vector<Integer>> rows(k, std::vector<Integer>(k + 2, 0));
    for (std::size_t i = 0; i < k; ++i) {
      rows[i][i] = 1;
      rows[i][k] = entry(rng);
      rows[i][k + 1] = entry(rng);
    }
    auto w = WeightMatrix::from_rows(rows);
    if (!reduction::is_admissible(w)) continue;
    // Row operations keep the kernel; column signs and order change Phi only
    // by the symmetries the normalization removes.
    std::uniform_int_distribution<std::size_t> row(0, k - 1);
    std::uniform_int_distribution<int> mult(-2, 2), coin(0, 1);
    for (int s = 0; s < 3 * static_cast<int>(k) && k > 1; ++s) {
      const std::size_t i = row(rng), j = row(rng);
      if (i == j) continue;
      const int c = mult(rng);
      for (std::size_t col = 0; col < k + 2; ++col) rows[i][col] += c * rows[j][col];
    }
    std::vector<std::size_t> perm(k + 2);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Integer>> mixed(k, std::vector<Integer>(k + 2));
    for (std::size_t col = 0; col < k + 2; ++col) {
      const int sign = coin(rng) ? 1 : -1;
      for (std::size_t i = 0; i < k; ++i) mixed[i][perm[col]] = sign * rows[i][col];
    }
    return WeightMatrix::from_rows(mixed);
  }
}

// A random nondegenerate k x (k+2) matrix with entries in [-9, 9].
inline WeightMatrix random_nondegenerate(std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  for (;;) {
    std::vector<std::vector<Integer>> rows(k, std::vector<Integer>(k + 2));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    try {
      auto w = WeightMatrix::from_rows(rows);
      if (reduction::is_nondegenerate(w)) return w;
    } catch (const Error&) {
    }
  }
}

}  // namespace td_test
