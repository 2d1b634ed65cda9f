#include "toric_diamond/diamond.hpp"

#include "toric_diamond/error.hpp"

#include <cmath>
#include <numbers>

namespace toric_diamond::diamond {

using lattice::LatVec;

namespace {

Integer nth_prime(std::size_t index) {
  static std::vector<long long> primes{2};
  for (long long c = primes.back() + 1; primes.size() <= index; ++c) {
    bool prime = true;
    for (long long p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return Integer(primes[index]);
}

void check(bool ok, const std::string& what, const std::string& context = {}) {
  if (!ok) throw Error(ErrorCode::InternalInconsistency, what, context);
}

DiamondReport assemble(const IsotropyData& data, const ConvexLatticePolygon& polygon,
                       const std::optional<WeightMatrix>& omega) {
  const toric::AugmentedFan fan = toric::fan_from_polygon(polygon);
  check(toric::is_fano(fan), "polygon from isotropy data is not Fano");
  const bool special = toric::is_special_symmetric(fan);
  check(special, "polygon from isotropy data is not special symmetric");
  check(toric::pi1_orb_trivial(fan), "polygon marks do not span the lattice");
  const bool smooth = toric::seifert_total_space_smooth(fan);
  check(smooth, "Seifert total space is singular although the quotient is smooth",
        "polygon with " + std::to_string(polygon.size()) + " vertices");
  const auto homology = toric::homology_of_m(fan);
  const auto orbifold = toric::orbifold_report(fan);
  const auto volume = sasakian_volume(polygon);
  const bool ke = toric::admits_kahler_einstein(fan);
  check(ke, "special symmetric Fano polygon fails the Kahler-Einstein criterion");

  DiamondReport r{
      .omega = omega,
      .isotropy = data,
      .polygon = polygon,
      .fano_index = volume.d,
      .ord_x = orbifold.ord_x,
      .cone_orders = orbifold.cone_orders,
      .b2_x = homology.b2_x,
      .b2_s = Integer(data.k()),
      .m = homology.m,
      .diffeotype = homology.diffeotype,
      .smooth_m = smooth,
      .vol_sigma = volume.vol_sigma,
      .vol_m = volume.vol_m,
      .lambda_normalized = 4.0 * std::pow(volume.vol_m, 0.4),
      .ke_exists = ke,
      .special_symmetric = special,
      .s_cohomology = std::nullopt,
  };
  check(r.fano_index == 1 || r.fano_index == 2, "special symmetric index outside {1, 2}",
        to_string(r.fano_index));
  check(r.b2_x == Integer(polygon.size()) - 2, "b2(X) does not match the vertex count");
  check(r.m == 2 * r.b2_s + 1, "b2(M) differs from 2 b2(S) + 1");
  if (omega) r.s_cohomology = reduction::s_omega_cohomology(*omega);
  return r;
}

}  // namespace

ConvexLatticePolygon isotropy_to_polygon(const IsotropyData& d) {
  if (!reduction::cs_conditions_check(d))
    throw Error(ErrorCode::PreconditionFailed, "isotropy data violates its conditions",
                "cs_conditions_check");
  std::vector<LatVec> cycle = d.v;
  for (std::size_t i = 1; i + 1 < d.v.size(); ++i) cycle.push_back(-d.v[i]);
  auto p = ConvexLatticePolygon::from_vertices(std::move(cycle));
  check(p.is_antipodally_symmetric(), "polygon from isotropy data is not antipodally symmetric");
  return p;
}

IsotropyData polygon_to_isotropy(const ConvexLatticePolygon& p) {
  if (!p.is_antipodally_symmetric())
    throw Error(ErrorCode::NotSpecialSymmetric, "polygon is not antipodally symmetric");
  const auto fan = toric::fan_from_polygon(p);
  if (!toric::is_fano(fan)) throw Error(ErrorCode::NotFano, "polygon marks are not in convex position");

  const auto& vs = p.vertices();
  const std::size_t n = vs.size();
  auto parallel_to_edge = [&](const LatVec& dir) {
    for (std::size_t i = 0; i < n; ++i)
      if (lattice::cross(dir, vs[(i + 1) % n] - vs[i]) == 0) return true;
    return false;
  };
  std::optional<LatVec> dir;
  for (long s = 1; !dir; ++s) {
    for (long w = 1; w <= s && !dir; ++w) {
      for (long u : {s - w, w - s}) {
        const LatVec cand{u, w};
        if (gcd(cand.x, cand.y) == 1 && !parallel_to_edge(cand)) {
          dir = cand;
          break;
        }
        if (u == 0) break;
      }
    }
  }
  const ExtendedGcd e = extended_gcd(dir->x, dir->y);  // s u + t w = 1
  const lattice::UnimodularMap shear(dir->y, -dir->x, e.s, e.t);
  const auto sheared = p.transformed(shear);

  // Canonical order starts at the lexicographically smallest vertex, which is
  // the unique leftmost one; counterclockwise from there runs the lower chain.
  IsotropyData out;
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i <= half; ++i) out.v.push_back(sheared.vertices()[i]);
  out = reduction::canonical_shear(std::move(out));
  if (!reduction::cs_conditions_check(out))
    throw Error(ErrorCode::PreconditionFailed, "polygon marks do not span the lattice", "pi1_orb_trivial");
  return out;
}

SasakianVolume sasakian_volume(const ConvexLatticePolygon& p) {
  const auto fan = toric::fan_from_polygon(p);
  if (!toric::is_fano(fan)) throw Error(ErrorCode::NotFano, "polygon marks are not in convex position");
  const auto sigma = toric::sigma_polytope(fan, toric::SupportFunction::anticanonical(fan));
  SasakianVolume v;
  v.vol_sigma = lattice::shoelace_area(sigma);
  v.d = toric::fano_index(fan).index;
  const double third_pi = std::numbers::pi / 3.0;
  v.vol_m = v.d.convert_to<double>() * third_pi * third_pi * third_pi * v.vol_sigma.convert_to<double>();
  return v;
}

double normalized_einstein_constant(const ConvexLatticePolygon& p) {
  return 4.0 * std::pow(sasakian_volume(p).vol_m, 0.4);
}

DiamondReport weights_to_diamond(const WeightMatrix& w) {
  if (!reduction::is_admissible(w))
    throw Error(ErrorCode::NotAdmissible, "weight matrix is not admissible");
  const IsotropyData data = reduction::isotropy_data(w);
  const ConvexLatticePolygon polygon = isotropy_to_polygon(data);
  check(polygon.size() == 2 * w.k() + 4, "polygon vertex count differs from 2k + 4");
  return assemble(data, polygon, w);
}

DiamondReport polygon_to_diamond(const ConvexLatticePolygon& p) {
  const IsotropyData data = polygon_to_isotropy(p);
  return assemble(data, p, std::nullopt);
}

GalickiLawson family_galicki_lawson(const Integer& q) {
  if (q < 1) throw Error(ErrorCode::InvalidParameter, "q must be at least 1", to_string(q));
  const std::vector<Integer> p{2 * q - 1, 1, 1};
  WeightMatrix omega = WeightMatrix::from_rows({p});
  std::vector<Integer> a{p[1] + p[2], p[0] + p[2], p[0] + p[1]};
  const Integer g = gcd(gcd(a[0], a[1]), a[2]);
  for (auto& x : a) x /= g;
  check(a == std::vector<Integer>{1, q, q}, "quotient weights do not reduce to (1, q, q)");
  DiamondReport report = weights_to_diamond(omega);
  return {std::move(omega), std::move(a), std::move(report)};
}

std::vector<WeightMatrix> family_general(std::size_t k, std::size_t count, long long seed) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "family_general needs k >= 1");
  const std::size_t base = static_cast<std::size_t>(mod_floor(Integer(seed), 50));
  std::vector<WeightMatrix> out;
  Integer last = 0;
  for (std::size_t shift = 0; out.size() < count; ++shift) {
    if (shift > 100000) throw Error(ErrorCode::InternalInconsistency, "family generator stalled");
    std::vector<std::vector<Integer>> rows(k, std::vector<Integer>(k + 2, 0));
    for (std::size_t i = 0; i < k; ++i) {
      rows[i][i] = 1;
      rows[i][k] = nth_prime(base + shift + i);
      rows[i][k + 1] = nth_prime(base + shift + k + i);
    }
    WeightMatrix w = WeightMatrix::from_rows(rows);
    check(reduction::is_admissible(w), "generated matrix is not admissible");
    const Integer order = reduction::g_omega_order(w);
    if (order <= last) continue;
    last = order;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace toric_diamond::diamond
