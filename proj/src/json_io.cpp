#include "minorhom/json_io.hpp"

#include <fstream>
#include <set>

#include "minorhom/error.hpp"

namespace minorhom {

using nlohmann::json;

namespace {

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::IoFailure, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::IoFailure, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(ErrorKind::IoFailure, std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& id : g.edge_ids()) {
    auto [u, w] = g.edge_ends(id);
    edges.push_back({{"id", id}, {"ends", {u, w}}});
  }
  return {{"vertices", g.vertex_ids()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::string> vertices = string_list(expect(j, "vertices"), "vertices");
  const json& edges = expect(j, "edges");
  if (!edges.is_array()) fail(ErrorKind::IoFailure, "edges must be an array");
  std::vector<EdgeSpec> specs;
  for (const auto& e : edges) {
    const json& ends = expect(e, "ends");
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      fail(ErrorKind::IoFailure, "edge ends must be a pair of vertex ids");
    const json& id = expect(e, "id");
    if (!id.is_string()) fail(ErrorKind::IoFailure, "edge id must be a string");
    specs.push_back({id.get<std::string>(), ends[0].get<std::string>(), ends[1].get<std::string>()});
  }
  return Graph::make(vertices, specs);
}

json complex_to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (const auto& f : c.facet_labels()) facets.push_back(f);
  return {{"ground", c.ground()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  std::vector<std::string> ground = string_list(expect(j, "ground"), "ground");
  const json& facets = expect(j, "facets");
  if (!facets.is_array()) fail(ErrorKind::IoFailure, "facets must be an array");
  std::vector<std::vector<std::string>> fs;
  for (const auto& f : facets) fs.push_back(string_list(f, "facet"));
  return SimplicialComplex::from_facets(std::move(ground), fs);
}

json morphism_to_json(const MinorMorphism& phi) {
  json edge_map = json::object();
  json twists = json::array();
  for (const auto& [e, img] : phi.edge_map()) {
    switch (img.fate) {
      case EdgeFate::Kept:
        edge_map[e] = img.image;
        if (img.twist) twists.push_back(e);
        break;
      case EdgeFate::Contracted:
        edge_map[e] = img.image;
        break;
      case EdgeFate::Deleted:
        edge_map[e] = "*";
        break;
    }
  }
  json out{{"vertex_map", phi.vertex_map()}, {"edge_map", edge_map}};
  if (!twists.empty()) out["twists"] = twists;
  return out;
}

MinorMorphism morphism_from_json(const json& j, const Graph& source, const Graph& target) {
  const json& vm = expect(j, "vertex_map");
  const json& em = expect(j, "edge_map");
  if (!vm.is_object() || !em.is_object())
    fail(ErrorKind::IoFailure, "vertex_map and edge_map must be objects");
  std::set<std::string> twisted;
  if (j.contains("twists"))
    for (const auto& t : string_list(j.at("twists"), "twists")) twisted.insert(t);

  std::map<std::string, std::string> vertex_map;
  for (const auto& [v, img] : vm.items()) {
    if (!img.is_string()) fail(ErrorKind::IoFailure, "vertex images must be strings");
    vertex_map[v] = img.get<std::string>();
  }
  std::map<std::string, EdgeImage> edge_map;
  for (const auto& [e, img] : em.items()) {
    if (!img.is_string()) fail(ErrorKind::IoFailure, "edge images must be strings");
    const std::string value = img.get<std::string>();
    EdgeImage image;
    if (value == "*") {
      image.fate = EdgeFate::Deleted;
    } else if (target.has_edge(value)) {
      image.fate = EdgeFate::Kept;
      image.image = value;
      image.twist = twisted.count(e) > 0;
    } else if (target.has_vertex(value)) {
      image.fate = EdgeFate::Contracted;
      image.image = value;
    } else {
      fail(ErrorKind::IoFailure, "edge image '" + value + "' is neither a target edge, a target vertex, nor '*'");
    }
    edge_map[e] = image;
  }
  return MinorMorphism(source, target, std::move(vertex_map), std::move(edge_map));
}

json homology_to_json(int degree, const Coefficients& coeff, bool reduced,
                      const HomologyGroup& h) {
  json torsion = json::array();
  for (const Int& f : h.torsion) torsion.push_back(f.str());
  return {{"degree", degree},
          {"coefficients", coeff.name()},
          {"reduced", reduced},
          {"free_rank", h.free_rank},
          {"torsion", torsion}};
}

json scan_report_to_json(const ScanReport& rep) {
  return {{"family", rep.family},
          {"columns", rep.columns},
          {"rows", rep.rows},
          {"extremes", rep.extremes},
          {"all_passed", rep.all_passed}};
}

json poincare_to_json(const PoincareVector& pv) {
  json ranks = json::object();
  for (const auto& [degree, rank] : pv.ranks) ranks[std::to_string(degree)] = rank;
  return {{"generator_degree", pv.generator_degree},
          {"ranks", ranks},
          {"total_rank", pv.total_rank()}};
}

json presentation_to_json(const OSPresentation& pres) {
  json relations = json::array();
  for (const OSRelation& rel : pres.relations) {
    json terms = json::array();
    for (const auto& [monomial, sign] : rel.terms)
      terms.push_back({{"monomial", monomial}, {"sign", sign}});
    relations.push_back({{"cycle", rel.cycle}, {"terms", terms}});
  }
  return {{"generator_degree", pres.generator_degree},
          {"parity", pres.parity == OSPresentation::Parity::Odd ? "odd" : "even"},
          {"generators", pres.generators},
          {"relations", relations}};
}

json rank_report_to_json(const OsRankReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back(
        {{"degree", e.degree}, {"presented", e.presented}, {"predicted", e.predicted}});
  return {{"d", rep.d},
          {"max_degree", rep.max_degree},
          {"entries", entries},
          {"consistent", rep.consistent}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoFailure, "cannot open " + path);
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(ErrorKind::IoFailure, "invalid JSON in " + path);
  return j;
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::IoFailure, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(ErrorKind::IoFailure, "failed writing " + path);
}

}  // namespace minorhom
