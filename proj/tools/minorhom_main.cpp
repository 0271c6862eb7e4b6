#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorhom/arrangement.hpp"
#include "minorhom/commalg.hpp"
#include "minorhom/complex.hpp"
#include "minorhom/error.hpp"
#include "minorhom/families.hpp"
#include "minorhom/graph.hpp"
#include "minorhom/homology.hpp"
#include "minorhom/json_io.hpp"
#include "minorhom/minor.hpp"

using nlohmann::json;
using namespace minorhom;

namespace {

struct Common {
  std::string out;
  long seed = 0;
  int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "write the report to this file instead of stdout");
  cmd->add_option("--seed", c.seed, "seed recorded in the report (sampling hooks)")
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "worker pool width inside scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

json envelope(const std::string& command, const Common& c, json config) {
  config["jobs"] = c.jobs;
  return json{{"tool", "minorhom"},
              {"version", kToolVersion},
              {"command", command},
              {"seed", c.seed},
              {"config", std::move(config)}};
}

int emit(const json& report, const Common& c, int status) {
  const std::string text = report.dump(2) + "\n";
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
  return status;
}

std::pair<int, int> parse_range(const std::string& s) {
  try {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
      const int k = std::stoi(s);
      return {k, k};
    }
    const int a = std::stoi(s.substr(0, pos));
    const int b = std::stoi(s.substr(pos + 2));
    if (b < a) fail(ErrorKind::BadConfig, "empty range: " + s);
    return {a, b};
  } catch (const std::logic_error&) {
    fail(ErrorKind::BadConfig, "expected K or A..B, got: " + s);
  }
}

Coefficients parse_coeff(const std::string& s) {
  if (s == "Z") return Coefficients::integers();
  if (s == "Q") return Coefficients::rationals();
  if (s.size() > 1 && s[0] == 'F' &&
      s.find_first_not_of("0123456789", 1) == std::string::npos)
    return Coefficients::mod(std::stoll(s.substr(1)));
  fail(ErrorKind::BadConfig, "coefficients must be Z, Q or F<p>, got: " + s);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

SimplicialComplex build_kind(const Graph& g, const std::string& kind, int d) {
  if (kind == "matching") return matching_complex(g);
  if (kind == "dmatching") return d_matching_complex(g, d);
  if (kind == "flag") return flag_complex_of_line_graph(g);
  fail(ErrorKind::BadConfig, "kind must be matching, dmatching or flag, got: " + kind);
}

int do_convert(const std::string& input, const std::string& out) {
  std::ifstream in(input);
  if (!in) fail(ErrorKind::IoFailure, "cannot open " + input);
  std::set<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::string line;
  std::size_t auto_id = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string u, w, id;
    if (!(row >> u)) continue;  // blank line
    if (!(row >> w)) fail(ErrorKind::IoFailure, "expected 'u w [id]' but got: " + line);
    if (!(row >> id)) id = "e" + std::to_string(++auto_id);
    std::string extra;
    if (row >> extra) fail(ErrorKind::IoFailure, "trailing tokens in line: " + line);
    vertices.insert(u);
    vertices.insert(w);
    edges.push_back({id, u, w});
  }
  Graph g = Graph::make({vertices.begin(), vertices.end()}, edges);
  const std::string text = graph_to_json(g).dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph minors, matching complexes, edge-ideal Betti numbers and "
               "configuration-space ranks"};
  app.set_help_all_flag("--help-all", "print help for every subcommand");
  app.require_subcommand(1);

  // ---- convert ----------------------------------------------------------
  auto* convert = app.add_subcommand(
      "convert", "turn simple edge-list text (lines 'u w [id]') into canonical graph JSON");
  struct {
    std::string input, out;
  } conv;
  convert->add_option("--input", conv.input, "edge-list text file")->required();
  convert->add_option("--out", conv.out, "output path for the graph JSON (default stdout)");

  // ---- complex build ----------------------------------------------------
  auto* complex_cmd = app.add_subcommand("complex", "simplicial complexes from graphs");
  complex_cmd->require_subcommand(1);
  auto* build = complex_cmd->add_subcommand("build", "emit the complex of a graph");
  struct {
    std::string graph, kind = "matching";
    int d = 1;
    Common common;
  } cx;
  build->add_option("--graph", cx.graph, "graph JSON file")->required();
  build->add_option("--kind", cx.kind, "matching | dmatching | flag")->capture_default_str();
  build->add_option("--d", cx.d, "degree bound for dmatching")->capture_default_str();
  add_common(build, cx.common);

  // ---- homology ---------------------------------------------------------
  auto* hom = app.add_subcommand("homology", "homology of a graph complex or a complex file");
  struct {
    std::string graph, complex_path, kind = "matching", degrees, coeff = "Z";
    int d = 1;
    bool unreduced = false;
    Common common;
  } ho;
  auto* hg = hom->add_option("--graph", ho.graph, "graph JSON file");
  auto* hc = hom->add_option("--complex", ho.complex_path, "complex JSON file");
  hg->excludes(hc);
  hc->excludes(hg);
  hom->add_option("--kind", ho.kind, "matching | dmatching | flag (with --graph)")
      ->capture_default_str();
  hom->add_option("--d", ho.d, "degree bound for dmatching")->capture_default_str();
  hom->add_option("--degrees", ho.degrees, "degree K or range A..B")->required();
  hom->add_option("--coeff", ho.coeff, "Z | Q | F<p>")->capture_default_str();
  hom->add_flag("--unreduced", ho.unreduced, "use unreduced homology");
  add_common(hom, ho.common);

  // ---- morphisms enumerate ----------------------------------------------
  auto* morph = app.add_subcommand("morphisms", "minor morphisms between graphs");
  morph->require_subcommand(1);
  auto* morph_enum = morph->add_subcommand("enumerate", "list all minor morphisms");
  struct {
    std::string from, to;
    std::size_t max_edges = 9;
    Common common;
  } mo;
  morph_enum->add_option("--from", mo.from, "source graph JSON")->required();
  morph_enum->add_option("--to", mo.to, "target graph JSON")->required();
  morph_enum->add_option("--max-edges", mo.max_edges, "cap on source edges")
      ->capture_default_str();
  add_common(morph_enum, mo.common);

  // ---- betti -------------------------------------------------------------
  auto* betti = app.add_subcommand(
      "betti", "edge-graded Betti numbers of the disjointness edge ideal of a graph");
  struct {
    std::string graph, format = "json";
    int max_i = 0;
    long long characteristic = 0;
    bool oracle = false;
    Common common;
  } be;
  betti->add_option("--graph", be.graph, "graph JSON file")->required();
  betti->add_option("--max-i", be.max_i, "largest homological degree")->required();
  betti->add_option("--char", be.characteristic, "field characteristic (0 or a prime)")
      ->capture_default_str();
  betti->add_flag("--oracle", be.oracle, "recompute every entry with the Koszul oracle");
  betti->add_option("--format", be.format, "json | csv")->capture_default_str();
  add_common(betti, be.common);

  // ---- conf ---------------------------------------------------------------
  auto* conf = app.add_subcommand(
      "conf", "cohomology ranks of the configuration space attached to a graph");
  struct {
    std::string graph;
    int d = 1;
    int max_degree = -1;
    bool presentation = false;
    Common common;
  } cf;
  conf->add_option("--graph", cf.graph, "graph JSON file")->required();
  conf->add_option("--d", cf.d, "ambient complex dimension")->capture_default_str();
  conf->add_option("--max-degree", cf.max_degree,
                   "check presented ranks up to this degree (default 3(2d-1))");
  conf->add_flag("--presentation", cf.presentation, "include generators and relations");
  add_common(conf, cf.common);

  // ---- scan ----------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "family-wide scans");
  scan->require_subcommand(1);

  auto* storsion = scan->add_subcommand("torsion", "integral torsion of matching homology");
  struct {
    int i = 1, d = 1;
    std::size_t max_edges = 6;
    bool simple = false;
    std::string only;
    Common common;
  } st;
  storsion->add_option("--i", st.i, "homology degree")->required();
  storsion->add_option("--d", st.d, "matching degree bound")->capture_default_str();
  storsion->add_option("--max-edges", st.max_edges,
                       "edge cap; with --only complete, the largest K_n")
      ->required();
  storsion->add_flag("--simple", st.simple, "simple graphs only");
  storsion->add_option("--only", st.only, "restrict the family ('complete')");
  add_common(storsion, st.common);

  auto* sgen = scan->add_subcommand("generation", "span deficits from small minors");
  struct {
    std::string module;
    int n_edges = 0;
    std::size_t max_edges = 4;
    Common common;
  } sg;
  sgen->add_option("--module", sg.module,
                   "constant | edge | matching-h<i> | dmatching<d>-h<i>")
      ->required();
  sgen->add_option("--N", sg.n_edges, "edge budget for generating minors")->required();
  sgen->add_option("--max-edges", sg.max_edges, "edge cap for scanned graphs")->required();
  add_common(sgen, sg.common);

  auto* sgrowth = scan->add_subcommand("growth", "polynomial growth along sprout/subdivide");
  struct {
    std::string base, module, sprout, subdivide, window;
    Common common;
  } sw;
  sgrowth->add_option("--base", sw.base, "base graph JSON")->required();
  sgrowth->add_option("--module", sw.module, "module evaluated along the family")->required();
  sgrowth->add_option("--sprout", sw.sprout, "comma-separated vertices gaining n leaves");
  sgrowth->add_option("--subdivide", sw.subdivide, "comma-separated edges subdivided n times");
  sgrowth->add_option("--window", sw.window, "parameter window A..B")->required();
  add_common(sgrowth, sw.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (convert->parsed()) return do_convert(conv.input, conv.out);

    if (build->parsed()) {
      Graph g = load_graph(cx.graph);
      SimplicialComplex c = build_kind(g, cx.kind, cx.d);
      json report = envelope("complex build", cx.common,
                             {{"graph", cx.graph}, {"kind", cx.kind}, {"d", cx.d}});
      report["complex"] = complex_to_json(c);
      report["dimension"] = c.is_void() ? json(nullptr) : json(c.dimension());
      json fv = json::array();
      for (std::size_t f : c.f_vector()) fv.push_back(f);
      report["f_vector"] = fv;
      return emit(report, cx.common, 0);
    }

    if (hom->parsed()) {
      if (ho.graph.empty() && ho.complex_path.empty())
        fail(ErrorKind::BadConfig, "one of --graph or --complex is required");
      SimplicialComplex c = ho.graph.empty()
                                ? complex_from_json(load_json_file(ho.complex_path))
                                : build_kind(load_graph(ho.graph), ho.kind, ho.d);
      const auto [lo, hi] = parse_range(ho.degrees);
      const Coefficients coeff = parse_coeff(ho.coeff);
      json report =
          envelope("homology", ho.common,
                   {{"graph", ho.graph}, {"complex", ho.complex_path}, {"kind", ho.kind},
                    {"d", ho.d}, {"degrees", ho.degrees}, {"coeff", ho.coeff},
                    {"reduced", !ho.unreduced}});
      json groups = json::array();
      for (int i = lo; i <= hi; ++i)
        groups.push_back(homology_to_json(i, coeff, !ho.unreduced,
                                          homology(c, i, coeff, !ho.unreduced)));
      report["groups"] = groups;
      return emit(report, ho.common, 0);
    }

    if (morph_enum->parsed()) {
      Graph from = load_graph(mo.from);
      Graph to = load_graph(mo.to);
      auto phis = enumerate_minor_morphisms(from, to, mo.max_edges);
      json report = envelope("morphisms enumerate", mo.common,
                             {{"from", mo.from}, {"to", mo.to},
                              {"max_edges", mo.max_edges}});
      report["count"] = phis.size();
      json list = json::array();
      for (const auto& phi : phis) list.push_back(morphism_to_json(phi));
      report["morphisms"] = list;
      return emit(report, mo.common, 0);
    }

    if (betti->parsed()) {
      Graph g = load_graph(be.graph);
      BettiTable table = betti_table(g, be.max_i, be.characteristic);
      SquarefreeMonomialIdeal ideal = edge_ideal_lc(g);
      bool agree = true;
      json rows = json::array();
      std::ostringstream csv;
      csv << "i,sigma,value" << (be.oracle ? ",oracle\n" : "\n");
      for (const auto& [key, value] : table.entries) {
        const auto& [i, sigma] = key;
        json row{{"i", i}, {"sigma", sigma}, {"value", value}};
        std::string joined;
        for (const auto& e : sigma) joined += (joined.empty() ? "" : "+") + e;
        csv << i << "," << joined << "," << value;
        if (be.oracle) {
          std::map<std::string, int> exponents;
          for (const auto& e : sigma) exponents[e] = 1;
          const long check = koszul_betti_oracle(ideal, i, exponents, be.characteristic);
          row["oracle"] = check;
          agree = agree && check == value;
          csv << "," << check;
        }
        csv << "\n";
        rows.push_back(std::move(row));
      }
      const int status = agree ? 0 : 1;
      if (be.format == "csv") {
        if (be.common.out.empty())
          std::cout << csv.str();
        else
          write_text_file(be.common.out, csv.str());
        return status;
      }
      if (be.format != "json")
        fail(ErrorKind::BadConfig, "format must be json or csv, got: " + be.format);
      json report = envelope("betti", be.common,
                             {{"graph", be.graph}, {"max_i", be.max_i},
                              {"char", be.characteristic}, {"oracle", be.oracle}});
      report["rows"] = rows;
      if (be.oracle) report["oracle_agrees"] = agree;
      return emit(report, be.common, status);
    }

    if (conf->parsed()) {
      Graph g = load_graph(cf.graph);
      const int max_degree = cf.max_degree >= 0 ? cf.max_degree : 3 * (2 * cf.d - 1);
      PoincareVector pv = conf_poincare(g, cf.d);
      OsRankReport check = os_rank_check(g, cf.d, max_degree);
      json report = envelope("conf", cf.common,
                             {{"graph", cf.graph}, {"d", cf.d},
                              {"max_degree", max_degree},
                              {"presentation", cf.presentation}});
      report["poincare"] = poincare_to_json(pv);
      report["rank_check"] = rank_report_to_json(check);
      if (cf.presentation)
        report["presentation"] = presentation_to_json(os_presentation(g, cf.d));
      return emit(report, cf.common, check.consistent ? 0 : 1);
    }

    if (storsion->parsed()) {
      ScanReport rep =
          torsion_scan(st.i, st.d, st.max_edges, st.simple, st.only, st.common.jobs);
      json report = envelope("scan torsion", st.common,
                             {{"i", st.i}, {"d", st.d}, {"max_edges", st.max_edges},
                              {"simple", st.simple}, {"only", st.only}});
      report["scan"] = scan_report_to_json(rep);
      return emit(report, st.common, rep.all_passed ? 0 : 1);
    }

    if (sgen->parsed()) {
      ModuleEvaluator m = module_by_name(sg.module);
      ScanReport rep = generation_scan(m, sg.n_edges, sg.max_edges, sg.common.jobs);
      json report = envelope("scan generation", sg.common,
                             {{"module", sg.module}, {"N", sg.n_edges},
                              {"max_edges", sg.max_edges}});
      report["scan"] = scan_report_to_json(rep);
      return emit(report, sg.common, rep.all_passed ? 0 : 1);
    }

    if (sgrowth->parsed()) {
      GrowthFamily family{load_graph(sw.base), split_list(sw.sprout),
                          split_list(sw.subdivide)};
      ModuleEvaluator m = module_by_name(sw.module);
      const auto [lo, hi] = parse_range(sw.window);
      json report = envelope("scan growth", sw.common,
                             {{"base", sw.base}, {"module", sw.module},
                              {"sprout", sw.sprout}, {"subdivide", sw.subdivide},
                              {"window", sw.window}});
      try {
        GrowthFit fit = growth_fit(m, family, lo, hi);
        json coeffs = json::array();
        for (const Rat& c : fit.coefficients) {
          std::ostringstream s;
          s << c;
          coeffs.push_back(s.str());
        }
        report["fit"] = {{"coefficients", coeffs},
                         {"window_lo", fit.window_lo},
                         {"window_hi", fit.window_hi},
                         {"window_values", fit.window_values},
                         {"predicted", fit.predicted}};
        return emit(report, sw.common, 0);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoFit) throw;
        report["fit"] = nullptr;
        report["no_fit"] = e.what();
        return emit(report, sw.common, 1);
      }
    }

    fail(ErrorKind::BadConfig, "no subcommand selected");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
