#include "toric_diamond/reduction.hpp"

#include "toric_diamond/error.hpp"

#include <algorithm>

namespace toric_diamond::reduction {

namespace {

Integer minor_deleting(const WeightMatrix& w, std::size_t p, std::size_t q) {
  const std::size_t k = w.k();
  IntMatrix sub(k, k);
  std::size_t col = 0;
  for (std::size_t j = 0; j < w.n(); ++j) {
    if (j == p || j == q) continue;
    for (std::size_t i = 0; i < k; ++i) sub(i, col) = w(i, j);
    ++col;
  }
  return determinant(sub);
}

std::pair<std::size_t, std::size_t> key(std::size_t a, std::size_t b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void require_nondegenerate(const WeightMatrix& w, const char* what) {
  if (!is_nondegenerate(w))
    throw Error(ErrorCode::DegenerateMatrix, std::string(what) + " needs a nondegenerate matrix");
}

// Primitive functionals (r1, r2) up to sign, by increasing |r1| + |r2|.
template <class Visit>
void for_each_small_functional(Visit&& visit) {
  for (long s = 1;; ++s) {
    for (long r1 = s; r1 >= 0; --r1) {
      const long r2 = s - r1;
      if (r1 == 0 && s != 1) continue;
      if (gcd(Integer(r1), Integer(r2)) != 1) continue;
      if (visit(Integer(r1), Integer(r2))) return;
      if (r2 != 0 && r1 != 0 && visit(Integer(r1), Integer(-r2))) return;
    }
  }
}

}  // namespace

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows, 2);
  if (m.cols() != m.rows() + 2)
    throw Error(ErrorCode::MalformedInput, "weight matrix must be k x (k+2)");
  if (m.rows() > 0 && lattice::smith_normal_form(m).rank() != m.rows())
    throw Error(ErrorCode::DegenerateMatrix, "weight matrix does not have full rank");
  return WeightMatrix(std::move(m));
}

MinorMap minors_all(const WeightMatrix& w) {
  MinorMap out;
  for (std::size_t p = 0; p < w.n(); ++p)
    for (std::size_t q = p + 1; q < w.n(); ++q) out[{p, q}] = minor_deleting(w, p, q);
  return out;
}

bool is_nondegenerate(const WeightMatrix& w) {
  const auto minors = minors_all(w);
  return std::none_of(minors.begin(), minors.end(), [](const auto& kv) { return kv.second == 0; });
}

Integer determinantal_divisor(const WeightMatrix& w) {
  Integer d = 0;
  for (const auto& [pair, minor] : minors_all(w)) d = gcd(d, minor);
  if (d == 0) throw Error(ErrorCode::DegenerateMatrix, "all maximal minors vanish");
  return d;
}

bool is_reduced(const WeightMatrix& w) { return determinantal_divisor(w) == 1; }

std::optional<bool> normal_form_admissible(const WeightMatrix& w) {
  const std::size_t k = w.k();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (w(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  auto a = [&](std::size_t i) -> const Integer& { return w(i, k); };
  auto b = [&](std::size_t i) -> const Integer& { return w(i, k + 1); };
  for (std::size_t i = 0; i < k; ++i) {
    if (a(i) == 0 || b(i) == 0 || gcd(a(i), b(i)) != 1) return false;
    for (std::size_t j = i + 1; j < k; ++j)
      if (a(i) * b(j) == a(j) * b(i)) return false;
  }
  return true;
}

bool is_admissible(const WeightMatrix& w) {
  const auto minors = minors_all(w);
  bool general = std::none_of(minors.begin(), minors.end(), [](const auto& kv) { return kv.second == 0; });
  if (general) {
    Integer d = 0;
    for (const auto& [pair, minor] : minors) d = gcd(d, minor);
    // Each (k+1)-subset of columns is the complement of one column beta.
    for (std::size_t beta = 0; beta < w.n() && general; ++beta) {
      Integer g = 0;
      for (std::size_t alpha = 0; alpha < w.n(); ++alpha)
        if (alpha != beta) g = gcd(g, minors.at(key(alpha, beta)));
      general = g == d;
    }
  }
  if (const auto shortcut = normal_form_admissible(w); shortcut && *shortcut != general)
    throw Error(ErrorCode::InternalInconsistency, "normal-form admissibility criterion disagrees");
  return general;
}

Integer g_omega_order(const WeightMatrix& w) {
  require_nondegenerate(w, "g_omega_order");
  const std::size_t n = w.n();
  IntMatrix laplacian(n, n);
  for (const auto& [pair, minor] : minors_all(w)) {
    const auto [s, t] = pair;
    const Integer weight = absolute(minor);
    laplacian(s, t) -= weight;
    laplacian(t, s) -= weight;
    laplacian(s, s) += weight;
    laplacian(t, t) += weight;
  }
  IntMatrix cofactor(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) cofactor(i, j) = laplacian(i, j);
  return determinant(cofactor);
}

Integer g_omega_order_bruteforce(const WeightMatrix& w, std::size_t max_k) {
  const std::size_t k = w.k();
  if (k > max_k)
    throw Error(ErrorCode::TooLarge, "tree enumeration is capped", "k=" + std::to_string(k));
  require_nondegenerate(w, "g_omega_order_bruteforce");
  const auto minors = minors_all(w);
  const std::size_t n = w.n();
  std::vector<std::size_t> seq(n - 2, 0);
  Integer total = 0;
  for (;;) {
    // Decode the Pruefer sequence into the n-1 edges of its tree.
    std::vector<std::size_t> degree(n, 1);
    for (auto s : seq) ++degree[s];
    Integer product = 1;
    for (auto s : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      product *= absolute(minors.at(key(leaf, s)));
      --degree[leaf];
      --degree[s];
    }
    std::size_t u = 0;
    while (degree[u] != 1) ++u;
    std::size_t v = u + 1;
    while (degree[v] != 1) ++v;
    product *= absolute(minors.at(key(u, v)));
    total += product;

    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return total;
}

IntMatrix kernel_phi(const WeightMatrix& w) {
  require_nondegenerate(w, "kernel_phi");
  if (!is_reduced(w)) throw Error(ErrorCode::NotReduced, "weight matrix is not in reduced form");
  const std::size_t k = w.k(), n = w.n();
  if (k == 0) return IntMatrix::identity(2);
  const auto snf = lattice::smith_normal_form(w.entries());
  IntMatrix phi(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    phi(0, j) = snf.V(j, k);
    phi(1, j) = snf.V(j, k + 1);
  }
  const IntMatrix product = w.entries() * phi.transpose();
  for (std::size_t i = 0; i < product.rows(); ++i)
    for (std::size_t j = 0; j < product.cols(); ++j)
      if (product(i, j) != 0) throw Error(ErrorCode::InternalInconsistency, "Phi does not annihilate Omega");
  const auto factors = lattice::smith_normal_form(phi).invariant_factors();
  if (factors != std::vector<Integer>{1, 1})
    throw Error(ErrorCode::InternalInconsistency, "Phi is not surjective");
  return phi;
}

IntMatrix normalize_phi(const IntMatrix& phi) {
  if (phi.rows() != 2) throw Error(ErrorCode::InvalidParameter, "Phi must have two rows");
  std::vector<LatVec> cols;
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    cols.push_back({phi(0, j), phi(1, j)});
    if (cols.back().is_zero())
      throw Error(ErrorCode::NormalizationImpossible, "zero column", "column " + std::to_string(j));
  }
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (lattice::cross(cols[i], cols[j]) == 0)
        throw Error(ErrorCode::NormalizationImpossible, "parallel columns have tied slopes",
                    std::to_string(i) + "," + std::to_string(j));

  Integer r1, r2;
  for_each_small_functional([&](const Integer& a, const Integer& b) {
    const LatVec r{a, b};
    if (std::any_of(cols.begin(), cols.end(), [&](const LatVec& c) { return lattice::dot(r, c) == 0; }))
      return false;
    r1 = a;
    r2 = b;
    return true;
  });

  // Complete r to [[r1, r2], [s, t]] of determinant 1 with |s| + |t| small.
  const ExtendedGcd e = extended_gcd(r1, r2);
  Integer s = -e.t, t = e.s;
  const Integer norm2 = r1 * r1 + r2 * r2;
  const Integer shift = floor_div(2 * (s * r1 + t * r2) + norm2, 2 * norm2);
  s -= shift * r1;
  t -= shift * r2;
  auto size = [](const Integer& x, const Integer& y) { return absolute(x) + absolute(y); };
  for (int step : {-1, 1}) {
    Integer s2 = s + step * r1, t2 = t + step * r2;
    if (size(s2, t2) < size(s, t) || (size(s2, t2) == size(s, t) && s2 > s)) {
      s = s2;
      t = t2;
    }
  }
  const lattice::UnimodularMap g(r1, r2, s, t);

  for (auto& c : cols) {
    c = g(c);
    if (c.x < 0) c = -c;
  }
  std::sort(cols.begin(), cols.end(),
            [](const LatVec& a, const LatVec& b) { return a.y * b.x < b.y * a.x; });
  IntMatrix out(2, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    out(0, j) = cols[j].x;
    out(1, j) = cols[j].y;
  }
  return out;
}

IsotropyData canonical_shear(IsotropyData d) {
  const LatVec diff = d.v[1] - d.v[0];
  const Integer j = -floor_div(diff.y, diff.x);
  for (auto& v : d.v) v.y += j * v.x;
  return d;
}

IsotropyData isotropy_data(const WeightMatrix& w) {
  if (!is_admissible(w)) throw Error(ErrorCode::NotAdmissible, "weight matrix is not admissible");
  const IntMatrix phi = normalize_phi(kernel_phi(w));
  const std::size_t n = phi.cols();
  LatVec total{0, 0};
  for (std::size_t j = 0; j < n; ++j) total = total + LatVec{phi(0, j), phi(1, j)};

  IsotropyData raw;
  LatVec prefix{0, 0};
  raw.v.push_back(-total);
  for (std::size_t j = 0; j < n; ++j) {
    prefix = prefix + LatVec{phi(0, j), phi(1, j)};
    raw.v.push_back(Integer(2) * prefix - total);
  }

  // Rebase onto the lattice the data actually spans.
  const auto basis = lattice::span_basis(raw.v);
  IsotropyData rebased;
  for (const auto& v : raw.v) rebased.v.push_back(lattice::coordinates_in(basis, v));
  IsotropyData out = canonical_shear(std::move(rebased));
  if (!cs_conditions_check(out))
    throw Error(ErrorCode::InternalInconsistency, "normalized isotropy data violates its conditions");
  return out;
}

bool cs_conditions_check(const IsotropyData& d) {
  const auto& v = d.v;
  if (v.size() < 3) return false;
  if (v.front() != -v.back()) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].x <= v[i - 1].x) return false;
  for (std::size_t i = 2; i < v.size(); ++i) {
    const LatVec a = v[i - 1] - v[i - 2];
    const LatVec b = v[i] - v[i - 1];
    if (a.y * b.x >= b.y * a.x) return false;  // slope(a) < slope(b), a.x and b.x > 0
  }
  return lattice::lattice_span_index(v) == 1;
}

CohomologyTable s_omega_cohomology(const WeightMatrix& w) {
  if (!is_admissible(w)) throw Error(ErrorCode::NotAdmissible, "weight matrix is not admissible");
  CohomologyTable c;
  c.b2 = Integer(w.k());
  c.torsion_order = g_omega_order(w);
  c.simply_connected = true;
  const GroupDescriptor z{1, 1}, zero{0, 1}, zk{c.b2, 1}, torsion{0, c.torsion_order};
  c.table = {z, zero, zk, zero, torsion, zk, zero, z};
  return c;
}

WeightMatrix reduce_rows(const WeightMatrix& w) {
  auto rows = w.entries().to_rows();
  for (auto& row : rows) {
    Integer g = 0;
    for (const auto& x : row) g = gcd(g, x);
    for (auto& x : row) x /= g;
  }
  return WeightMatrix::from_rows(rows);
}

}  // namespace toric_diamond::reduction
