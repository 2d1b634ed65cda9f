#include "toric_diamond/toric.hpp"

#include "toric_diamond/error.hpp"

#include <algorithm>
#include <set>

namespace toric_diamond::toric {

using lattice::cross;
using lattice::dot;

namespace {

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_plane_of(const LatVec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const LatVec& a, const LatVec& b) {
  const int ha = half_plane_of(a), hb = half_plane_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

std::vector<LatVec> sorted_copy(std::vector<LatVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool maps_set_onto(const UnimodularMap& g, const std::vector<LatVec>& from_sorted,
                   const std::vector<LatVec>& to_sorted) {
  std::vector<LatVec> image;
  image.reserve(from_sorted.size());
  for (const auto& v : from_sorted) image.push_back(g(v));
  std::sort(image.begin(), image.end());
  return image == to_sorted;
}

void require_fano(const AugmentedFan& fan, const char* what) {
  if (!is_fano(fan)) throw Error(ErrorCode::NotFano, std::string(what) + " needs a Fano fan");
}

// Solutions g mod `modulus` of  coeff * g == rhs (mod modulus).
std::vector<Integer> linear_congruence(const Integer& coeff, const Integer& rhs, const Integer& modulus) {
  const Integer g = gcd(coeff, modulus);
  if (mod_floor(rhs, g) != 0) return {};
  const Integer reduced_mod = modulus / g;
  Integer base = 0;
  if (reduced_mod != 1) {
    const ExtendedGcd e = extended_gcd(mod_floor(coeff / g, reduced_mod), reduced_mod);
    base = mod_floor((rhs / g) * e.s, reduced_mod);
  }
  std::vector<Integer> out;
  for (Integer t = 0; t < g; ++t) out.push_back(base + t * reduced_mod);
  return out;
}

struct MarkSnf {
  lattice::SnfResult snf;
  std::vector<Integer> target;  // U * (1, ..., 1)
};

MarkSnf mark_snf(const AugmentedFan& fan) {
  const std::size_t r = fan.ray_count();
  IntMatrix a(r, 2);
  for (std::size_t i = 0; i < r; ++i) {
    a(i, 0) = fan.marks()[i].x;
    a(i, 1) = fan.marks()[i].y;
  }
  MarkSnf out{lattice::smith_normal_form(a), std::vector<Integer>(r)};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.target[i] += out.snf.U(i, j);
  return out;
}

bool congruent_to_one(const AugmentedFan& fan, const LatVec& f, const Integer& m) {
  return std::all_of(fan.marks().begin(), fan.marks().end(),
                     [&](const LatVec& n) { return mod_floor(dot(f, n) - 1, m) == 0; });
}

}  // namespace

// ---------------------------------------------------------------------------

AugmentedFan AugmentedFan::from_marks(std::vector<LatVec> marks) {
  const std::size_t r = marks.size();
  if (r < 3) throw Error(ErrorCode::DegenerateInput, "a complete fan needs at least three rays");
  for (const auto& m : marks)
    if (m.is_zero()) throw Error(ErrorCode::DegenerateInput, "a mark is the origin");

  auto all_turns = [&](int sign) {
    for (std::size_t i = 0; i < r; ++i) {
      const Integer c = cross(marks[i], marks[(i + 1) % r]);
      if (sign > 0 ? c <= 0 : c >= 0) return false;
    }
    return true;
  };
  if (!all_turns(+1)) {
    if (!all_turns(-1))
      throw Error(ErrorCode::InvalidParameter, "consecutive rays are not strictly positively ordered");
    std::reverse(marks.begin(), marks.end());
  }
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < r; ++i)
    if (!angle_less(marks[i], marks[(i + 1) % r])) ++wraps;
  if (wraps != 1)
    throw Error(ErrorCode::InvalidParameter, "rays wind around the origin more than once");
  return AugmentedFan(std::move(marks));
}

SupportFunction SupportFunction::anticanonical(const AugmentedFan& fan) {
  return constant(fan, Integer(-1));
}

SupportFunction SupportFunction::constant(const AugmentedFan& fan, const Integer& c) {
  return {std::vector<Integer>(fan.ray_count(), c)};
}

bool SymmetryGroup::contains(const UnimodularMap& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

AugmentedFan fan_from_polygon(const ConvexLatticePolygon& p) {
  if (!p.origin_strictly_interior())
    throw Error(ErrorCode::OriginNotInterior, "origin is not strictly inside the polygon");
  return AugmentedFan::from_marks(p.vertices());
}

RatVec cone_linear_form(const AugmentedFan& fan, const SupportFunction& h, std::size_t cone) {
  const std::size_t r = fan.ray_count();
  if (h.values.size() != r)
    throw Error(ErrorCode::InvalidParameter, "support function length does not match the fan");
  const LatVec& p1 = fan.mark(cone);
  const LatVec& p2 = fan.mark(cone + 1);
  const Integer& h1 = h.values[cone % r];
  const Integer& h2 = h.values[(cone + 1) % r];
  const Rational det(cross(p1, p2));
  return {Rational(h1 * p2.y - h2 * p1.y) / det, Rational(h2 * p1.x - h1 * p2.x) / det};
}

std::vector<RatVec> sigma_polytope(const AugmentedFan& fan, const SupportFunction& h) {
  if (h.values.size() != fan.ray_count())
    throw Error(ErrorCode::InvalidParameter, "support function length does not match the fan");
  std::vector<lattice::HalfPlane> planes;
  for (std::size_t i = 0; i < fan.ray_count(); ++i)
    planes.push_back({fan.marks()[i], Rational(h.values[i])});
  try {
    return lattice::half_plane_intersection(planes);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnboundedRegion)
      throw Error(ErrorCode::InternalInconsistency, "unbounded polytope for a complete fan");
    throw;
  }
}

bool is_strictly_upper_convex(const AugmentedFan& fan, const SupportFunction& h) {
  const std::size_t r = fan.ray_count();
  for (std::size_t i = 0; i < r; ++i) {
    const RatVec l = cone_linear_form(fan, h, i);
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i || j == (i + 1) % r) continue;
      if (dot(l, RatVec(fan.marks()[j])) <= Rational(h.values[j])) return false;
    }
  }
  return true;
}

bool is_fano(const AugmentedFan& fan) {
  const std::size_t r = fan.ray_count();
  for (std::size_t i = 0; i < r; ++i) {
    const LatVec& prev = fan.mark(i + r - 1);
    const LatVec& cur = fan.mark(i);
    const LatVec& next = fan.mark(i + 1);
    if (cross(cur - prev, next - cur) <= 0) return false;
  }
  return true;
}

FanoIndex fano_index(const AugmentedFan& fan) {
  require_fano(fan, "fano_index");
  const MarkSnf ms = mark_snf(fan);
  const auto& D = ms.snf.D;
  const std::size_t rank = ms.snf.rank();
  if (rank != 2) throw Error(ErrorCode::InternalInconsistency, "marks of a complete fan have rank < 2");

  Integer bound = 0;
  for (std::size_t i = rank; i < ms.target.size(); ++i) bound = gcd(bound, ms.target[i]);
  if (bound == 0)
    throw Error(ErrorCode::InternalInconsistency, "anticanonical class has unbounded roots");

  const auto divs = divisors(bound);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const Integer& m = *it;
    std::vector<Integer> g(2);
    bool ok = true;
    for (std::size_t i = 0; i < 2 && ok; ++i) {
      const auto sols = linear_congruence(D(i, i), ms.target[i], m);
      if (sols.empty()) ok = false;
      else g[i] = sols.front();
    }
    if (!ok) continue;
    LatVec f{mod_floor(ms.snf.V(0, 0) * g[0] + ms.snf.V(0, 1) * g[1], m),
             mod_floor(ms.snf.V(1, 0) * g[0] + ms.snf.V(1, 1) * g[1], m)};
    if (!congruent_to_one(fan, f, m))
      throw Error(ErrorCode::InternalInconsistency, "fano_index witness fails its congruence");
    return {m, f};
  }
  throw Error(ErrorCode::InternalInconsistency, "no anticanonical root degree found");
}

std::vector<LatVec> fano_root_witnesses(const AugmentedFan& fan, const Integer& d) {
  if (d <= 0) throw Error(ErrorCode::InvalidParameter, "root degree must be positive");
  const MarkSnf ms = mark_snf(fan);
  const auto& D = ms.snf.D;
  for (std::size_t i = 2; i < ms.target.size(); ++i)
    if (mod_floor(ms.target[i], d) != 0) return {};
  const auto g0 = linear_congruence(D(0, 0), ms.target[0], d);
  const auto g1 = linear_congruence(D(1, 1), ms.target[1], d);
  std::set<LatVec> out;
  for (const auto& a : g0)
    for (const auto& b : g1)
      out.insert({mod_floor(ms.snf.V(0, 0) * a + ms.snf.V(0, 1) * b, d),
                  mod_floor(ms.snf.V(1, 0) * a + ms.snf.V(1, 1) * b, d)});
  return {out.begin(), out.end()};
}

std::optional<UnimodularMap> lattice_equivalence(const std::vector<LatVec>& a,
                                                 const std::vector<LatVec>& b) {
  const std::size_t n = a.size();
  if (n != b.size() || n < 2) return std::nullopt;
  const auto sa = sorted_copy(a);
  const auto sb = sorted_copy(b);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t step : {std::size_t{1}, n - 1}) {
      auto g = UnimodularMap::mapping(a[0], a[1], b[j], b[(j + step) % n]);
      if (g && maps_set_onto(*g, sa, sb)) return g;
    }
  }
  return std::nullopt;
}

SymmetryGroup symmetry_group(const AugmentedFan& fan) {
  const auto& marks = fan.marks();
  const std::size_t n = marks.size();
  const auto sorted = sorted_copy(marks);
  std::set<UnimodularMap> found;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t step : {std::size_t{1}, n - 1}) {
      auto g = UnimodularMap::mapping(marks[0], marks[1], marks[j], marks[(j + step) % n]);
      if (g && maps_set_onto(*g, sorted, sorted)) found.insert(*g);
    }
  }
  return {{found.begin(), found.end()}};
}

bool is_symmetric(const AugmentedFan& fan) {
  const SymmetryGroup w = symmetry_group(fan);
  IntMatrix stacked(2 * w.order(), 2);
  for (std::size_t i = 0; i < w.order(); ++i) {
    const auto& g = w.elements[i];
    stacked(2 * i, 0) = g.a() - 1;
    stacked(2 * i, 1) = g.b();
    stacked(2 * i + 1, 0) = g.c();
    stacked(2 * i + 1, 1) = g.d() - 1;
  }
  return lattice::smith_normal_form(stacked).rank() == 2;
}

bool is_special_symmetric(const AugmentedFan& fan) {
  return symmetry_group(fan).contains(UnimodularMap(-1, 0, 0, -1));
}

bool admits_kahler_einstein(const AugmentedFan& fan) { return is_fano(fan) && is_symmetric(fan); }

OrbifoldReport orbifold_report(const AugmentedFan& fan) {
  OrbifoldReport rep;
  rep.ord_x = 1;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    rep.cone_orders.push_back(absolute(cross(fan.mark(i), fan.mark(i + 1))));
    rep.ray_multiplicities.push_back(lattice::content(fan.mark(i)));
    rep.ord_x = lcm(rep.ord_x, rep.cone_orders.back());
  }
  return rep;
}

bool pi1_orb_trivial(const AugmentedFan& fan) {
  return lattice::lattice_span_index(fan.marks()) == 1;
}

std::vector<LatVec> coset_representatives(const LatVec& p1, const LatVec& p2) {
  IntMatrix b(2, 2);
  b(0, 0) = p1.x;
  b(1, 0) = p1.y;
  b(0, 1) = p2.x;
  b(1, 1) = p2.y;
  const auto snf = lattice::smith_normal_form(b);
  if (snf.rank() != 2)
    throw Error(ErrorCode::InvalidParameter, "cone generators are linearly dependent");
  const IntMatrix u_inv = lattice::unimodular_inverse(snf.U);
  const LatVec e0{u_inv(0, 0), u_inv(1, 0)};
  const LatVec e1{u_inv(0, 1), u_inv(1, 1)};
  std::vector<LatVec> reps;
  for (Integer c0 = 0; c0 < snf.D(0, 0); ++c0)
    for (Integer c1 = 0; c1 < snf.D(1, 1); ++c1) reps.push_back(c0 * e0 + c1 * e1);
  return reps;
}

namespace {

bool fibre_action_free(const AugmentedFan& fan, const Integer& d, const LatVec& witness) {
  const auto ones = SupportFunction::constant(fan, Integer(1));
  const RatVec f0(witness);
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    // Character of the local group N / N' on the fibre of the d-th root.
    const RatVec l = cone_linear_form(fan, ones, i);
    const RatVec character = Rational(1, 1) / Rational(d) * (l - f0);
    for (const auto& gamma : coset_representatives(fan.mark(i), fan.mark(i + 1))) {
      if (gamma.is_zero()) continue;
      if (is_integral(dot(character, RatVec(gamma)))) return false;
    }
  }
  return true;
}

}  // namespace

bool seifert_total_space_smooth(const AugmentedFan& fan) {
  require_fano(fan, "seifert_total_space_smooth");
  const Integer d = fano_index(fan).index;
  const auto witnesses = fano_root_witnesses(fan, d);
  if (witnesses.empty())
    throw Error(ErrorCode::InternalInconsistency, "no anticanonical root witness");
  const bool verdict = fibre_action_free(fan, d, witnesses.front());
  for (std::size_t i = 1; i < witnesses.size(); ++i) {
    if (fibre_action_free(fan, d, witnesses[i]) != verdict)
      throw Error(ErrorCode::InternalInconsistency,
                  "smoothness verdict depends on the choice of anticanonical root",
                  lattice::to_string(witnesses.front()) + " vs " + lattice::to_string(witnesses[i]));
  }
  return verdict;
}

std::string connected_sum_name(const Integer& m) {
  if (m == 0) return "S^5";
  return "#" + m.str() + "(S^2xS^3)";
}

SasakianHomology homology_of_m(const AugmentedFan& fan) {
  if (!is_fano(fan)) throw Error(ErrorCode::PreconditionFailed, "is_fano is false", "is_fano");
  if (!pi1_orb_trivial(fan))
    throw Error(ErrorCode::PreconditionFailed, "pi1_orb_trivial is false", "pi1_orb_trivial");
  if (!seifert_total_space_smooth(fan))
    throw Error(ErrorCode::PreconditionFailed, "seifert_total_space_smooth is false",
                "seifert_total_space_smooth");
  SasakianHomology h;
  h.b2_x = Integer(fan.ray_count()) - 2;
  h.m = h.b2_x - 1;
  const std::string free_part = h.m == 0 ? "0" : (h.m == 1 ? "Z" : "Z^" + h.m.str());
  h.groups = {"Z", "0", free_part, free_part, "0", "Z"};
  h.diffeotype = connected_sum_name(h.m);
  return h;
}

WpsInvariants wps_ke_obstruction(const Integer& a0, const Integer& a1, const Integer& a2) {
  if (a0 <= 0 || a1 <= 0 || a2 <= 0)
    throw Error(ErrorCode::InvalidWeights, "weights must be positive");
  if (gcd(gcd(a0, a1), a2) != 1) throw Error(ErrorCode::InvalidWeights, "weights must have gcd 1");
  const Rational prod(a0 * a1 * a2);
  WpsInvariants w;
  w.c1_sq = Rational((a0 + a1 + a2) * (a0 + a1 + a2)) / prod;
  w.chi_orb = Rational(a1 * a2 + a0 * a2 + a0 * a1) / prod;
  w.tau_orb = Rational(a0 * a0 + a1 * a1 + a2 * a2) / (3 * prod);
  w.miyaoka_yau_holds = w.chi_orb >= 3 * w.tau_orb;
  w.admits_ke = w.miyaoka_yau_holds;
  return w;
}

}  // namespace toric_diamond::toric
