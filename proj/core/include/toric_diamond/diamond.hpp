#pragma once

// Assembly of the full chain: weight matrix -> isotropy data -> polygon ->
// toric Fano surface -> Sasakian-Einstein 5-manifold, plus the standard
// infinite families.

#include "toric_diamond/reduction.hpp"
#include "toric_diamond/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric_diamond::diamond {

using lattice::ConvexLatticePolygon;
using reduction::IsotropyData;
using reduction::WeightMatrix;

struct DiamondReport {
  std::optional<WeightMatrix> omega;
  IsotropyData isotropy;
  ConvexLatticePolygon polygon;  // the marks of the fan
  Integer fano_index;
  Integer ord_x;
  std::vector<Integer> cone_orders;
  Integer b2_x;
  Integer b2_s;
  Integer m;  // b2_x - 1
  std::string diffeotype;
  bool smooth_m;
  Rational vol_sigma;
  double vol_m;
  double lambda_normalized;
  bool ke_exists;
  bool special_symmetric;
  std::optional<reduction::CohomologyTable> s_cohomology;
};

// The 2(k+2)-gon {v_0..v_{k+2}, -v_1..-v_{k+1}}. Throws PreconditionFailed
// for data failing the conditions and NotConvex if the cycle is not convex.
ConvexLatticePolygon isotropy_to_polygon(const IsotropyData& d);

// Throws NotSpecialSymmetric, OriginNotInterior or NotFano.
IsotropyData polygon_to_isotropy(const ConvexLatticePolygon& p);

struct SasakianVolume {
  Rational vol_sigma;  // area of the anticanonical polytope
  Integer d;           // Fano index
  double vol_m;        // d (pi/3)^3 vol_sigma
};

SasakianVolume sasakian_volume(const ConvexLatticePolygon& p);

// Einstein constant after rescaling to unit volume: Ric = 4g in dimension
// five gives lambda = 4 vol^(2/5).
double normalized_einstein_constant(const ConvexLatticePolygon& p);

// Report for any admissible matrix; throws NotAdmissible, or
// InternalInconsistency when an assembled invariant contradicts another.
DiamondReport weights_to_diamond(const WeightMatrix& w);

// Report for a special symmetric Fano polygon without a weight matrix.
DiamondReport polygon_to_diamond(const ConvexLatticePolygon& p);

struct GalickiLawson {
  WeightMatrix omega;  // [[2q-1, 1, 1]]
  std::vector<Integer> quotient_weights;  // (1, q, q)
  DiamondReport report;
};

GalickiLawson family_galicki_lawson(const Integer& q);

// `count` admissible [I | a | b] matrices with distinct prime entries,
// deterministic in seed, with strictly increasing |G_Omega|.
std::vector<WeightMatrix> family_general(std::size_t k, std::size_t count, long long seed);

}  // namespace toric_diamond::diamond
