#include "json_io.hpp"

#include "toric_diamond/error.hpp"

#include <regex>

namespace toric_diamond::cli {

namespace {

const Integer kSafeLimit = (Integer(1) << 53) - 1;

[[noreturn]] void malformed(const std::string& what, const Json& j) {
  throw Error(ErrorCode::MalformedInput, what, j.dump());
}

}  // namespace

Json to_json(const Integer& n) {
  if (absolute(n) <= kSafeLimit) return Json(n.convert_to<long long>());
  return Json(n.str());
}

Json to_json(const Rational& q) {
  return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Json to_json(const lattice::LatVec& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Json to_json(const lattice::RatVec& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Json to_json(const std::vector<lattice::LatVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const lattice::UnimodularMap& g) {
  return Json::array({Json::array({to_json(g.a()), to_json(g.b())}),
                      Json::array({to_json(g.c()), to_json(g.d())})});
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const reduction::WeightMatrix& w) { return to_json(w.entries()); }

Json to_json(const reduction::IsotropyData& d) { return to_json(d.v); }

Json to_json(const reduction::CohomologyTable& c) {
  Json table = Json::array();
  for (const auto& g : c.table)
    table.push_back({{"rank", to_json(g.rank)}, {"torsion_order", to_json(g.torsion_order)}});
  return {{"b2", to_json(c.b2)},
          {"torsion_order", to_json(c.torsion_order)},
          {"simply_connected", c.simply_connected},
          {"table", std::move(table)}};
}

Json to_json(const reduction::MinorMap& minors) {
  Json out = Json::array();
  for (const auto& [pair, value] : minors)
    out.push_back({{"deleted", Json::array({pair.first + 1, pair.second + 1})}, {"minor", to_json(value)}});
  return out;
}

Json to_json(const diamond::DiamondReport& r) {
  Json j;
  j["omega"] = r.omega ? to_json(*r.omega) : Json(nullptr);
  j["isotropy"] = to_json(r.isotropy);
  j["polygon"] = to_json(r.polygon.vertices());
  j["fano_index"] = to_json(r.fano_index);
  j["ord_x"] = to_json(r.ord_x);
  Json cones = Json::array();
  for (const auto& c : r.cone_orders) cones.push_back(to_json(c));
  j["cone_orders"] = std::move(cones);
  j["b2_X"] = to_json(r.b2_x);
  j["b2_S"] = to_json(r.b2_s);
  j["m"] = to_json(r.m);
  j["diffeotype"] = r.diffeotype;
  j["smooth_M"] = r.smooth_m;
  j["vol_sigma"] = to_json(r.vol_sigma);
  j["vol_M"] = r.vol_m;
  j["lambda_normalized"] = r.lambda_normalized;
  j["ke_exists"] = r.ke_exists;
  j["special_symmetric"] = r.special_symmetric;
  j["s_cohomology"] = r.s_cohomology ? to_json(*r.s_cohomology) : Json(nullptr);
  return j;
}

Json to_json(const guillemin::VolumeCheck& v) {
  return {{"mc_estimate", v.mc_estimate},
          {"exact", v.exact},
          {"rel_err", v.rel_err},
          {"max_duality_deviation", v.max_duality_deviation},
          {"max_legendre_residual", v.max_legendre_residual},
          {"min_hessian_eigenvalue", v.min_hessian_eigenvalue}};
}

Json to_json(const toric::WpsInvariants& w) {
  return {{"c1_sq", to_json(w.c1_sq)},
          {"chi_orb", to_json(w.chi_orb)},
          {"tau_orb", to_json(w.tau_orb)},
          {"miyaoka_yau_holds", w.miyaoka_yau_holds},
          {"admits_ke", w.admits_ke}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, digits)) return Integer(s);
  }
  malformed("expected an integer", j);
}

Rational rational_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) malformed("rational needs num and den", j);
    const Integer den = integer_from_json(j.at("den"));
    if (den == 0) malformed("zero denominator", j);
    return Rational(integer_from_json(j.at("num")), den);
  }
  return Rational(integer_from_json(j));
}

std::vector<lattice::LatVec> points_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected a list of points", j);
  std::vector<lattice::LatVec> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) malformed("a point is a pair of integers", p);
    out.push_back({integer_from_json(p[0]), integer_from_json(p[1])});
  }
  return out;
}

reduction::WeightMatrix weights_from_json(const Json& j) {
  if (!j.is_array()) malformed("weight matrix must be a list of rows", j);
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("weight matrix row must be a list", row);
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    rows.push_back(std::move(r));
  }
  return reduction::WeightMatrix::from_rows(rows);
}

reduction::IsotropyData isotropy_from_json(const Json& j) {
  return reduction::IsotropyData{points_from_json(j)};
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, what + " is not valid JSON", e.what());
  }
}

}  // namespace toric_diamond::cli
