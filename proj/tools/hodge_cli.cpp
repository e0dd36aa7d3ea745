#include "hodge/io.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using hodge::io::Json;
using hodge::io::to_json;

struct Output {
  Json json;
  std::vector<std::pair<std::string, hodge::PlanarPolygon>> polygons;
};

struct Common {
  std::string format = "json";
  std::uint64_t budget = hodge::kDefaultBudget;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "svg"}))
      ->capture_default_str();
  sub->add_option("--budget", common.budget, "Maximum number of torus points per exponential sum")
      ->capture_default_str();
}

void emit(const Output& out, const Common& common) {
  if (common.format == "json") {
    std::cout << hodge::io::pretty(out.json);
    return;
  }
  hodge::require(!out.polygons.empty(), "this command has no polygon output; use --format json");
  if (common.format == "svg") {
    std::cout << hodge::io::to_svg(out.polygons);
    return;
  }
  for (std::size_t i = 0; i < out.polygons.size(); ++i) {
    if (out.polygons.size() > 1) std::cout << (i ? "\n" : "") << "# " << out.polygons[i].first << "\n";
    std::cout << hodge::io::to_tsv(out.polygons[i].second);
  }
}

hodge::LPolynomialOptions lopts(const Common& c) {
  hodge::LPolynomialOptions o;
  o.budget = c.budget;
  return o;
}

Output run_hodge(const std::string& path) {
  const auto P = hodge::io::polytope_from(hodge::io::load_file(path));
  const auto D = hodge::denominator_D(P);
  const auto top = static_cast<long>(P.dimension()) * D.convert_to<long>();
  const auto W = hodge::weight_histogram(hodge::ConeRegion::full(P), top, D);
  const auto H = hodge::hodge_number_table(P);
  const auto hp = hodge::hodge_polygon(P);
  Json w = Json::array(), h = Json::array();
  for (const auto& x : W) w.push_back(to_json(x));
  for (const auto& x : H) h.push_back(to_json(x));
  Output out;
  out.json = Json{{"dimension", P.dimension()}, {"D", to_json(D)},        {"volume", to_json(hodge::normalized_volume(P))},
                  {"W", w},                     {"H", h},                 {"hp", to_json(hp)}};
  out.polygons.push_back({"HP", hp});
  return out;
}

Output run_lfunction(const std::string& path, const Common& c) {
  const auto f = hodge::io::laurent_from(hodge::io::load_file(path));
  const auto L = hodge::l_polynomial(f, lopts(c));
  Json coeffs = Json::array(), sums = Json::array();
  for (const auto& a : L.coefficients) coeffs.push_back(to_json(a));
  for (const auto& s : L.sums) sums.push_back(to_json(s));
  Output out;
  out.json = Json{{"p", L.p},
                  {"a", L.a},
                  {"n", L.n},
                  {"degree", L.degree()},
                  {"expected_degree", L.expected_degree},
                  {"inverted", L.inverted()},
                  {"coefficients", coeffs},
                  {"sums", sums}};
  return out;
}

Output run_newton(const std::string& path, const Common& c) {
  const auto f = hodge::io::laurent_from(hodge::io::load_file(path));
  const auto np = hodge::newton_polygon(f, lopts(c));
  Output out;
  out.json = Json{{"np", to_json(np)}};
  out.polygons.push_back({"NP", np});
  return out;
}

Output run_ordinary(const std::string& path, const Common& c) {
  const auto f = hodge::io::laurent_from(hodge::io::load_file(path));
  const auto v = hodge::is_ordinary(f, lopts(c));
  Output out;
  out.json = Json{{"ordinary", v.ordinary}, {"np", to_json(v.np)}, {"hp", to_json(v.hp)}};
  out.polygons = {{"NP", v.np}, {"HP", v.hp}};
  return out;
}

Output run_diag(const std::string& path, std::optional<std::int64_t> p) {
  const auto f = hodge::io::laurent_from(hodge::io::load_file(path));
  const auto M = hodge::exponent_matrix(f);
  const auto v = hodge::is_ordinary_diagonal(M, p.value_or(f.field().p()));
  Output out;
  out.json = Json{{"ordinary", v.ordinary},
                  {"witness", v.witness ? to_json(v.witness->coords) : Json(nullptr)},
                  {"group_order", to_json(v.group_order)}};
  return out;
}

Json heights_json(const hodge::HeightFunction& h) { return to_json(hodge::RationalVector(h.begin(), h.end())); }

Output run_decomp(const std::string& action, const std::string& path) {
  const auto in = hodge::io::decomposition_from(hodge::io::load_file(path));
  Output out;
  auto with_points = [](const hodge::Decomposition& T, Json extra) {
    Json j = hodge::io::decomposition_to_json(T);
    for (auto& [k, v] : extra.items()) j[k] = v;
    const auto rep = hodge::validate_decomposition(T);
    j["valid"] = rep.valid;
    return j;
  };
  if (action == "validate") {
    hodge::require(in.cells.has_value(), "decomp validate: input needs \"cells\"");
    const auto rep = hodge::validate_decomposition({in.config, *in.cells});
    out.json = Json{{"valid", rep.valid}, {"violations", rep.violations}};
  } else if (action == "star") {
    hodge::require(in.v0.has_value(), "decomp star: input needs \"v0\"");
    const auto r = hodge::star_decomposition(in.config, *in.v0);
    out.json = with_points(r.decomposition, Json{{"heights", heights_json(r.heights)}});
  } else if (action == "hyperplane") {
    hodge::require(!in.cuts.empty(), "decomp hyperplane: input needs \"cuts\"");
    const auto r = hodge::parallel_hyperplane_decomposition(in.config, in.cuts);
    out.json = with_points(r.decomposition, Json{{"heights", heights_json(r.heights)}});
  } else if (action == "collapse") {
    hodge::require(in.v1.has_value(), "decomp collapse: input needs \"v1\"");
    const auto r = hodge::collapsing_decomposition(in.config, *in.v1);
    out.json = with_points(r.decomposition, Json{{"partition", hodge::io::cells_to_json(r.partition)},
                                                 {"heights", heights_json(r.heights)}});
  } else {
    hodge::require(in.cells.has_value(), "decomp regular: input needs \"cells\"");
    const auto r = hodge::is_regular({in.config, *in.cells});
    out.json = Json{{"regular", r.regular},
                    {"slack", to_json(r.slack)},
                    {"heights", r.regular ? heights_json(r.heights) : Json(nullptr)},
                    {"certificate", r.regular ? Json(nullptr) : to_json(r.certificate)}};
  }
  return out;
}

Output run_degree_polygon(const std::string& path, std::int64_t p, long m) {
  hodge::require(p >= 2 && hodge::is_prime(static_cast<std::uint64_t>(p)), "--p must be prime");
  const auto in = hodge::io::decomposition_from(hodge::io::load_file(path));
  const auto P = in.polytope ? *in.polytope : hodge::LatticePolytope::from_points(in.config.points(), true);
  const auto phi = in.phi ? *in.phi : hodge::HeightFunction(in.config.size(), hodge::Rational(1));
  const auto Q = hodge::degree_polygon(hodge::ConeRegion::full(P), phi, in.config, p, m);
  Output out;
  out.json = Json{{"polygon", to_json(Q)}};
  out.polygons.push_back({"Q", Q});
  return out;
}

Output run_deligne(long d, long n, std::optional<std::int64_t> p) {
  const auto P = hodge::build_deligne(d, n);
  const auto D = hodge::D_deligne(d);
  const auto hp = hodge::deligne_hodge_polygon(d, n, (n + 1) * D.convert_to<long>());
  const auto cd = hodge::cell_decomposition(d, n);
  const auto& T = cd.decomposition;
  const auto reg = hodge::is_regular(T);
  Json facet = Json::array();
  for (const auto& v : P.facet_vertices()) facet.push_back(to_json(v));
  Json volumes = Json::array();
  for (const auto& cell : T.canonical_cells()) {
    std::vector<hodge::IntVector> pts;
    for (auto i : cell) pts.push_back(T.config.point(i));
    volumes.push_back(to_json(hodge::normalized_volume(hodge::LatticePolytope::from_points(pts, true))));
  }
  Output out;
  out.json = Json{{"d", d},
                  {"n", n},
                  {"D", to_json(D)},
                  {"facet_vertices", facet},
                  {"V_h", to_json(P.V_h.coeffs)},
                  {"hp", to_json(hp)},
                  {"cells",
                   Json{{"count", T.cells.size()},
                        {"cone_volumes", volumes},
                        {"regular", reg.regular},
                        {"complete", hodge::is_complete(T)}}}};
  if (p) {
    out.json["p"] = *p;
    out.json["prediction"] = hodge::to_string(hodge::predict_ordinarity(d, *p));
    const auto v = hodge::cells_ordinary_diagonal(T, *p);
    out.json["cells_ordinary"] = v.all_ordinary;
    out.json["witness_cell"] = v.witness_cell ? Json(*v.witness_cell) : Json(nullptr);
    out.json["witness"] = v.witness ? to_json(v.witness->coords) : Json(nullptr);
  }
  out.polygons.push_back({"HP", hp});
  return out;
}

Output run_sample_gnp(const std::string& path, std::int64_t p, int a, std::size_t trials, std::uint64_t seed,
                      const Common& c) {
  const auto P = hodge::io::polytope_from(hodge::io::load_file(path));
  const auto s = hodge::sample_gnp(P, p, a, trials, seed, c.budget);
  const auto hp = hodge::hodge_polygon(P);
  Output out;
  out.json = Json{{"estimate", to_json(s.estimate)},
                  {"hp", to_json(hp)},
                  {"samples_used", s.samples_used},
                  {"degenerate_skipped", s.degenerate_skipped}};
  out.polygons = {{"GNP estimate", s.estimate}, {"HP", hp}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hodge polygons, L-functions of exponential sums and polytope decompositions"};
  app.require_subcommand(1);
  Common common;
  std::string path, action;
  std::optional<std::int64_t> opt_p;
  std::int64_t p = 0;
  long m = 0, d = 0, n = 0;
  int a = 1;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "Input JSON file")->required();
    add_common(sub, common);
    return sub;
  };
  auto* hodge_cmd = file_cmd("hodge", "Weight counts, Hodge numbers and Hodge polygon of a polytope");
  auto* lfun_cmd = file_cmd("lfunction", "L-polynomial of a Laurent polynomial by brute force");
  auto* newton_cmd = file_cmd("newton", "Newton polygon of the L-polynomial");
  auto* ord_cmd = file_cmd("ordinary", "Compare the Newton and Hodge polygons");
  auto* diag_cmd = file_cmd("diag-ordinary", "Ordinarity of a diagonal Laurent polynomial from its exponents");
  diag_cmd->add_option("--p", opt_p, "Prime (defaults to the polynomial's characteristic)");
  auto* decomp_cmd = app.add_subcommand("decomp", "Decomposition constructions and checks");
  decomp_cmd->add_option("action", action, "validate, star, hyperplane, collapse or regular")
      ->required()
      ->check(CLI::IsMember({"validate", "star", "hyperplane", "collapse", "regular"}));
  decomp_cmd->add_option("file", path, "Decomposition JSON file")->required();
  add_common(decomp_cmd, common);
  auto* deg_cmd = file_cmd("degree-polygon", "Degree polygon of phi over the full cone");
  deg_cmd->add_option("--p", p, "Prime")->required();
  deg_cmd->add_option("--m", m, "Last weight level")->required()->check(CLI::NonNegativeNumber);
  auto* del_cmd = app.add_subcommand("deligne", "Deligne polytope invariants and ordinarity");
  del_cmd->add_option("--d", d, "Degree")->required()->check(CLI::PositiveNumber);
  del_cmd->add_option("--n", n, "Number of variables besides x0")->required()->check(CLI::PositiveNumber);
  del_cmd->add_option("--p", opt_p, "Prime for the ordinarity prediction");
  add_common(del_cmd, common);
  auto* gnp_cmd = file_cmd("sample-gnp", "Upper estimate of the generic Newton polygon by random sampling");
  gnp_cmd->add_option("--p", p, "Prime")->required();
  gnp_cmd->add_option("--a", a, "Extension degree")->capture_default_str();
  gnp_cmd->add_option("--trials", trials, "Number of random polynomials")->required();
  gnp_cmd->add_option("--seed", seed, "Random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Output out;
    if (*hodge_cmd) out = run_hodge(path);
    else if (*lfun_cmd) out = run_lfunction(path, common);
    else if (*newton_cmd) out = run_newton(path, common);
    else if (*ord_cmd) out = run_ordinary(path, common);
    else if (*diag_cmd) out = run_diag(path, opt_p);
    else if (*decomp_cmd) out = run_decomp(action, path);
    else if (*deg_cmd) out = run_degree_polygon(path, p, m);
    else if (*del_cmd) out = run_deligne(d, n, opt_p);
    else if (*gnp_cmd) out = run_sample_gnp(path, p, a, trials, seed, common);
    emit(out, common);
    return 0;
  } catch (const hodge::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const hodge::BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return 2;
  } catch (const hodge::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
}
