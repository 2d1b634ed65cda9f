#pragma once

// Toric orbifold surfaces given by augmented fans: support functions, the
// Fano/index/symmetry predicates and the Seifert smoothness test for the
// circle bundle of the anticanonical root.

#include "toric_diamond/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric_diamond::toric {

using lattice::ConvexLatticePolygon;
using lattice::LatVec;
using lattice::RatVec;
using lattice::UnimodularMap;

// A complete fan in Z^2 with a chosen lattice point on every ray. The 2-cones
// are spanned by cyclically adjacent marks.
class AugmentedFan {
 public:
  // Accepts either cyclic orientation. Throws DegenerateInput for a zero mark
  // or fewer than three rays, and InvalidParameter when consecutive rays are
  // not strictly positively ordered or the fan does not close after one turn.
  static AugmentedFan from_marks(std::vector<LatVec> marks);

  const std::vector<LatVec>& marks() const noexcept { return marks_; }
  std::size_t ray_count() const noexcept { return marks_.size(); }
  const LatVec& mark(std::size_t i) const { return marks_[i % marks_.size()]; }

  friend bool operator==(const AugmentedFan&, const AugmentedFan&) = default;

 private:
  explicit AugmentedFan(std::vector<LatVec> m) : marks_(std::move(m)) {}
  std::vector<LatVec> marks_;
};

// Integer values h(n(rho)), one per ray, in the fan's mark order.
struct SupportFunction {
  std::vector<Integer> values;

  static SupportFunction anticanonical(const AugmentedFan& fan);  // -k: all -1
  static SupportFunction constant(const AugmentedFan& fan, const Integer& c);
};

struct OrbifoldReport {
  std::vector<Integer> cone_orders;         // |det(p_i, p_{i+1})|
  std::vector<Integer> ray_multiplicities;  // content of each mark
  Integer ord_x;                            // lcm of cone_orders
};

struct SymmetryGroup {
  std::vector<UnimodularMap> elements;  // sorted, identity included

  std::size_t order() const { return elements.size(); }
  bool contains(const UnimodularMap& g) const;
};

struct FanoIndex {
  Integer index;
  LatVec witness;  // <witness, n(rho)> == 1 (mod index) for every ray
};

struct SasakianHomology {
  Integer b2_x;                     // #rays - 2
  Integer m;                        // b2_x - 1
  std::vector<std::string> groups;  // H^0 .. H^5
  std::string diffeotype;           // "#m(S^2xS^3)" or "S^5"
};

struct WpsInvariants {
  Rational c1_sq;
  Rational chi_orb;
  Rational tau_orb;
  bool miyaoka_yau_holds;  // chi_orb >= 3 tau_orb
  bool admits_ke;
};

AugmentedFan fan_from_polygon(const ConvexLatticePolygon& p);

// The linear form l_sigma of cone i (marks i, i+1) with <l, p_j> = h(p_j).
RatVec cone_linear_form(const AugmentedFan& fan, const SupportFunction& h, std::size_t cone);

std::vector<RatVec> sigma_polytope(const AugmentedFan& fan, const SupportFunction& h);
bool is_strictly_upper_convex(const AugmentedFan& fan, const SupportFunction& h);

bool is_fano(const AugmentedFan& fan);
FanoIndex fano_index(const AugmentedFan& fan);
// Every residue class f mod d with <f, n(rho)> == 1 (mod d) for all rays.
std::vector<LatVec> fano_root_witnesses(const AugmentedFan& fan, const Integer& d);

SymmetryGroup symmetry_group(const AugmentedFan& fan);
bool is_symmetric(const AugmentedFan& fan);
bool is_special_symmetric(const AugmentedFan& fan);
bool admits_kahler_einstein(const AugmentedFan& fan);

// A map g in GL(2,Z) with g(marks of a) == marks of b as sets, if any.
std::optional<UnimodularMap> lattice_equivalence(const std::vector<LatVec>& a,
                                                 const std::vector<LatVec>& b);

OrbifoldReport orbifold_report(const AugmentedFan& fan);
bool pi1_orb_trivial(const AugmentedFan& fan);

// Coset representatives of Z^2 / Z{p1, p2}; p1, p2 independent.
std::vector<LatVec> coset_representatives(const LatVec& p1, const LatVec& p2);

bool seifert_total_space_smooth(const AugmentedFan& fan);
SasakianHomology homology_of_m(const AugmentedFan& fan);

std::string connected_sum_name(const Integer& m);

WpsInvariants wps_ke_obstruction(const Integer& a0, const Integer& a1, const Integer& a2);

}  // namespace toric_diamond::toric
