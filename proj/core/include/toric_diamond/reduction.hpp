#pragma once

// Weight-matrix calculus of the toric 3-Sasakian quotient: minors,
// admissibility, the torsion order of H^4, the kernel map Phi and the
// isotropy data it induces.

#include "toric_diamond/lattice.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace toric_diamond::reduction {

using lattice::LatVec;

// k x (k+2) integer matrix of rank k; k = 0 is the empty matrix on two
// columns.
class WeightMatrix {
 public:
  // Throws MalformedInput for ragged rows and DegenerateMatrix if rank < k.
  static WeightMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t k() const noexcept { return entries_.rows(); }
  std::size_t n() const noexcept { return entries_.cols(); }
  const IntMatrix& entries() const noexcept { return entries_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  explicit WeightMatrix(IntMatrix m) : entries_(std::move(m)) {}
  IntMatrix entries_;
};

struct IsotropyData {
  std::vector<LatVec> v;  // v_0 .. v_{k+2}

  std::size_t k() const { return v.size() - 3; }
  friend bool operator==(const IsotropyData&, const IsotropyData&) = default;
};

struct GroupDescriptor {
  Integer rank;           // free part Z^rank
  Integer torsion_order;  // order of the finite part (1 if none)

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct CohomologyTable {
  Integer b2;
  Integer torsion_order;               // |G_Omega|
  std::vector<GroupDescriptor> table;  // H^0 .. H^7
  bool simply_connected;
};

// Columns are 0-based; key {p, q} with p < q is the pair of deleted columns.
using MinorMap = std::map<std::pair<std::size_t, std::size_t>, Integer>;

MinorMap minors_all(const WeightMatrix& w);

bool is_nondegenerate(const WeightMatrix& w);
// gcd of all maximal minors; DegenerateMatrix if they all vanish.
Integer determinantal_divisor(const WeightMatrix& w);
bool is_reduced(const WeightMatrix& w);

// Degenerate matrices are not admissible. For matrices of the form [I | a | b]
// the closed-form criterion is evaluated as well and must agree.
bool is_admissible(const WeightMatrix& w);
// The [I | a | b] criterion, or nullopt when w is not of that form.
std::optional<bool> normal_form_admissible(const WeightMatrix& w);

// Weighted spanning-tree sum over K_{k+2} with weights |Delta_{s,t}|.
Integer g_omega_order(const WeightMatrix& w);
// Same sum by explicit Pruefer enumeration; TooLarge if k > max_k.
Integer g_omega_order_bruteforce(const WeightMatrix& w, std::size_t max_k = 6);

// 2 x (k+2) matrix whose rows form a basis of ker(Omega).
IntMatrix kernel_phi(const WeightMatrix& w);

// Column signs, a left GL(2,Z) basis change and a column sort, giving
// positive first coordinates and strictly increasing slopes.
IntMatrix normalize_phi(const IntMatrix& phi);

IsotropyData isotropy_data(const WeightMatrix& w);
bool cs_conditions_check(const IsotropyData& d);

// Shear (m, n) -> (m, n + j m) with the first difference slope in [0, 1).
IsotropyData canonical_shear(IsotropyData d);

CohomologyTable s_omega_cohomology(const WeightMatrix& w);

// Divides every row by the gcd of its entries.
WeightMatrix reduce_rows(const WeightMatrix& w);

}  // namespace toric_diamond::reduction
