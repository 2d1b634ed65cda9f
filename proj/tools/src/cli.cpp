#include "cli.hpp"

#include "json_io.hpp"
#include "svg.hpp"
#include "toric_diamond/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace toric_diamond::cli {

namespace {

struct JobSpec {
  std::string command;
  std::optional<std::string> weights, polygon, isotropy;
  std::optional<long long> q;
  std::optional<std::size_t> k;
  std::size_t count = 1;
  long long seed = 0;
  std::uint64_t samples = 0;
  std::optional<std::string> out;
  bool svg = false;
};

std::size_t brute_force_cap() {
  const char* raw = std::getenv("TORIC_DIAMOND_MAX_K");
  if (raw == nullptr || *raw == '\0') return 6;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0)
    throw Error(ErrorCode::MalformedInput, "TORIC_DIAMOND_MAX_K must be a non-negative integer", raw);
  return static_cast<std::size_t>(v);
}

lattice::ConvexLatticePolygon polygon_arg(const std::string& text) {
  return lattice::ConvexLatticePolygon::from_vertices(points_from_json(parse_json(text, "--polygon")));
}

std::size_t input_count(const JobSpec& job) {
  return job.weights.has_value() + job.polygon.has_value() + job.isotropy.has_value() + job.q.has_value();
}

void require_single_input(const JobSpec& job) {
  if (input_count(job) != 1)
    throw Error(ErrorCode::MalformedInput,
                job.command + " needs exactly one of --weights, --polygon, --isotropy, --q");
}

// The polygon behind any of the accepted inputs.
lattice::ConvexLatticePolygon resolve_polygon(const JobSpec& job) {
  if (job.polygon) return polygon_arg(*job.polygon);
  if (job.isotropy)
    return diamond::isotropy_to_polygon(isotropy_from_json(parse_json(*job.isotropy, "--isotropy")));
  if (job.weights)
    return diamond::isotropy_to_polygon(reduction::isotropy_data(weights_from_json(parse_json(*job.weights, "--weights"))));
  return diamond::family_galicki_lawson(Integer(*job.q)).report.polygon;
}

Json analyze_fan(const lattice::ConvexLatticePolygon& p, const JobSpec& job) {
  const auto fan = toric::fan_from_polygon(p);
  Json j;
  j["polygon"] = to_json(p.vertices());
  const bool fano = toric::is_fano(fan);
  j["fano"] = fano;
  j["fano_index"] = nullptr;
  j["fano_witness"] = nullptr;
  if (fano) {
    const auto idx = toric::fano_index(fan);
    j["fano_index"] = to_json(idx.index);
    j["fano_witness"] = to_json(idx.witness);
  }
  const auto group = toric::symmetry_group(fan);
  j["symmetric"] = toric::is_symmetric(fan);
  j["special_symmetric"] = toric::is_special_symmetric(fan);
  j["w0_order"] = group.order();
  Json elements = Json::array();
  for (const auto& g : group.elements) elements.push_back(to_json(g));
  j["w0"] = std::move(elements);
  j["admits_ke"] = toric::admits_kahler_einstein(fan);

  const auto orb = toric::orbifold_report(fan);
  Json cones = Json::array(), mult = Json::array();
  for (const auto& c : orb.cone_orders) cones.push_back(to_json(c));
  for (const auto& c : orb.ray_multiplicities) mult.push_back(to_json(c));
  j["orbifold"] = {{"cone_orders", cones}, {"ray_multiplicities", mult}, {"ord_x", to_json(orb.ord_x)}};
  j["pi1_orb_trivial"] = toric::pi1_orb_trivial(fan);

  for (const char* key : {"vol_sigma", "vol_M", "lambda_normalized", "seifert_smooth", "homology"}) j[key] = nullptr;
  if (fano) {
    const auto vol = diamond::sasakian_volume(p);
    j["vol_sigma"] = to_json(vol.vol_sigma);
    j["vol_M"] = vol.vol_m;
    j["lambda_normalized"] = diamond::normalized_einstein_constant(p);
    const bool smooth = toric::seifert_total_space_smooth(fan);
    j["seifert_smooth"] = smooth;
    if (smooth && toric::pi1_orb_trivial(fan)) {
      const auto h = toric::homology_of_m(fan);
      j["homology"] = {{"b2_X", to_json(h.b2_x)}, {"m", to_json(h.m)}, {"groups", h.groups},
                       {"diffeotype", h.diffeotype}};
    }
  }
  if (job.samples > 0) {
    const auto poly = guillemin::LabeledPolytope::anticanonical(fan);
    j["guillemin"] = to_json(guillemin::volume_check(poly, job.samples, static_cast<std::uint64_t>(job.seed)));
  }
  return j;
}

Json analyze_weights(const Json& input) {
  // A flat triple is a weighted projective plane.
  if (input.is_array() && input.size() == 3 && !input[0].is_array()) {
    const auto w = toric::wps_ke_obstruction(integer_from_json(input[0]), integer_from_json(input[1]),
                                             integer_from_json(input[2]));
    Json j;
    j["weights"] = input;
    j["wps"] = to_json(w);
    return j;
  }
  const auto w = weights_from_json(input);
  Json j;
  j["omega"] = to_json(w);
  j["k"] = w.k();
  j["minors"] = to_json(reduction::minors_all(w));
  const bool nondegenerate = reduction::is_nondegenerate(w);
  j["nondegenerate"] = nondegenerate;
  j["determinantal_divisor"] = to_json(reduction::determinantal_divisor(w));
  j["reduced"] = reduction::is_reduced(w);
  const bool admissible = reduction::is_admissible(w);
  j["admissible"] = admissible;
  const auto shortcut = reduction::normal_form_admissible(w);
  j["normal_form_admissible"] = shortcut ? Json(*shortcut) : Json(nullptr);
  for (const char* key : {"g_omega_order", "g_omega_order_bruteforce", "kernel_phi", "normalized_phi",
                          "isotropy", "cs_conditions", "cohomology"})
    j[key] = nullptr;
  if (nondegenerate) {
    j["g_omega_order"] = to_json(reduction::g_omega_order(w));
    if (w.k() <= brute_force_cap()) j["g_omega_order_bruteforce"] = to_json(reduction::g_omega_order_bruteforce(w, brute_force_cap()));
    if (reduction::is_reduced(w)) {
      const auto phi = reduction::kernel_phi(w);
      j["kernel_phi"] = to_json(phi);
      j["normalized_phi"] = to_json(reduction::normalize_phi(phi));
    }
  }
  if (admissible && reduction::is_reduced(w)) {
    const auto data = reduction::isotropy_data(w);
    j["isotropy"] = to_json(data);
    j["cs_conditions"] = reduction::cs_conditions_check(data);
    j["cohomology"] = to_json(reduction::s_omega_cohomology(w));
  }
  return j;
}

diamond::DiamondReport diamond_of(const JobSpec& job) {
  require_single_input(job);
  if (job.weights) return diamond::weights_to_diamond(weights_from_json(parse_json(*job.weights, "--weights")));
  if (job.q) return diamond::family_galicki_lawson(Integer(*job.q)).report;
  if (job.isotropy) {
    const auto data = isotropy_from_json(parse_json(*job.isotropy, "--isotropy"));
    auto report = diamond::polygon_to_diamond(diamond::isotropy_to_polygon(data));
    report.isotropy = data;
    return report;
  }
  return diamond::polygon_to_diamond(polygon_arg(*job.polygon));
}

Json roundtrip(const JobSpec& job) {
  require_single_input(job);
  const auto polygon = resolve_polygon(job);
  const auto back = diamond::polygon_to_isotropy(polygon);
  const auto polygon_back = diamond::isotropy_to_polygon(back);
  const auto map = toric::lattice_equivalence(polygon.vertices(), polygon_back.vertices());
  Json j;
  j["polygon"] = to_json(polygon.vertices());
  j["isotropy_back"] = to_json(back);
  j["polygon_back"] = to_json(polygon_back.vertices());
  j["identical"] = polygon == polygon_back;
  j["equivalent"] = map.has_value();
  j["equivalence"] = map ? to_json(*map) : Json(nullptr);
  return j;
}

std::string dispatch(const JobSpec& job) {
  const auto& cmd = job.command;
  if (job.svg || cmd == "render") {
    if (input_count(job) != 1)
      throw Error(ErrorCode::MalformedInput, "rendering needs exactly one of --weights, --polygon, --isotropy, --q");
    SvgOptions options;
    options.title = cmd;
    return render_svg(resolve_polygon(job), options);
  }
  if (cmd == "analyze-fan") {
    if (!job.polygon) throw Error(ErrorCode::MalformedInput, "analyze-fan needs --polygon");
    return analyze_fan(polygon_arg(*job.polygon), job).dump(2) + "\n";
  }
  if (cmd == "analyze-weights") {
    if (!job.weights) throw Error(ErrorCode::MalformedInput, "analyze-weights needs --weights");
    return analyze_weights(parse_json(*job.weights, "--weights")).dump(2) + "\n";
  }
  if (cmd == "diamond") return to_json(diamond_of(job)).dump(2) + "\n";
  if (cmd == "roundtrip") return roundtrip(job).dump(2) + "\n";
  if (cmd == "family") {
    std::string lines;
    if (job.q) {
      for (long long q = 1; q <= *job.q; ++q) {
        const auto gl = diamond::family_galicki_lawson(Integer(q));
        Json j = to_json(gl.report);
        j["q"] = q;
        lines += j.dump() + "\n";
      }
      return lines;
    }
    if (!job.k) throw Error(ErrorCode::MalformedInput, "family needs --q or --k");
    for (const auto& w : diamond::family_general(*job.k, job.count, job.seed))
      lines += to_json(diamond::weights_to_diamond(w)).dump() + "\n";
    return lines;
  }
  throw Error(ErrorCode::MalformedInput, "unknown command", cmd);
}

void report_error(std::ostream& err, const std::string& code, const std::string& message,
                  const std::string& context) {
  err << Json{{"code", code}, {"message", message}, {"context", context}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  CLI::App app{"Invariants of toric 3-Sasakian quotients and their Sasakian-Einstein 5-manifolds",
               "toric-diamond"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze-fan", "toric invariants of a marked polygon"},
      {"analyze-weights", "minors, admissibility and isotropy data of a weight matrix"},
      {"diamond", "full report from weights, polygon, isotropy data or --q"},
      {"family", "NDJSON reports for a family (--q N or --k K --count C --seed S)"},
      {"roundtrip", "polygon -> isotropy data -> polygon"},
      {"render", "SVG drawing of the polygon"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--weights", job.weights, "weight matrix as JSON rows");
    sub->add_option("--polygon", job.polygon, "polygon vertices as JSON pairs");
    sub->add_option("--isotropy", job.isotropy, "isotropy data as JSON pairs");
    sub->add_option("--q", job.q, "Galicki-Lawson parameter");
    sub->add_option("--k", job.k, "rows of generated weight matrices");
    sub->add_option("--count", job.count, "number of family members");
    sub->add_option("--seed", job.seed, "deterministic seed");
    sub->add_option("--samples", job.samples, "Monte-Carlo samples for the potential check");
    sub->add_option("--out", job.out, "write output to this path");
    sub->add_flag("--svg", job.svg, "emit an SVG drawing instead of JSON");
    sub->callback([&job, name = name] { job.command = name; });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "MALFORMED_INPUT", e.what(), "");
    return kExitMalformed;
  }

  try {
    const std::string text = dispatch(job);
    if (job.out) {
      std::ofstream file(*job.out, std::ios::binary);
      if (!file) throw Error(ErrorCode::MalformedInput, "cannot open output file", *job.out);
      file << text;
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    report_error(err, std::string(code_name(e.code())), e.what(), e.context());
    return e.code() == ErrorCode::MalformedInput ? kExitMalformed : kExitDomainError;
  }
}

}  // namespace toric_diamond::cli
