#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "minorhom/error.hpp"
#include "minorhom/json_io.hpp"

using namespace minorhom;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::BadConfig;
}

}  // namespace

TEST_CASE("graph JSON round trip and canonical layout") {
  Graph g = Graph::make({"b", "a", "c"},
                        {{"loop", "a", "a"}, {"e2", "a", "b"}, {"e1", "b", "c"}, {"par", "a", "b"}});
  json j = graph_to_json(g);
  // arrays come out sorted by id
  std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
  CHECK(vs == std::vector<std::string>{"a", "b", "c"});
  std::vector<std::string> eids;
  for (const auto& e : j.at("edges")) eids.push_back(e.at("id").get<std::string>());
  CHECK(eids == std::vector<std::string>{"e1", "e2", "loop", "par"});
  CHECK(j.at("edges")[2].at("ends") == json({"a", "a"}));

  Graph back = graph_from_json(j);
  CHECK(back == g);
  CHECK(graph_to_json(back).dump() == j.dump());

  CHECK(kind_of([&] { graph_from_json(json{{"vertices", {"a"}}}); }) == ErrorKind::IoFailure);
  CHECK(kind_of([&] {
          graph_from_json(json{{"vertices", {"a"}}, {"edges", {{{"id", "e"}, {"ends", {"a"}}}}}});
        }) == ErrorKind::IoFailure);
  CHECK(kind_of([&] { graph_from_json(json{{"vertices", 3}, {"edges", json::array()}}); }) ==
        ErrorKind::IoFailure);
  // structural validation still applies after parsing
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", {"a", "b"}}, {"edges", json::array()}}),
                  Error);
}

TEST_CASE("complex JSON round trip") {
  SimplicialComplex c = matching_complex(cycle_graph(4));
  json j = complex_to_json(c);
  CHECK(j.at("ground").size() == 4);
  SimplicialComplex back = complex_from_json(j);
  CHECK(back.facet_labels() == c.facet_labels());
  CHECK(back.ground() == c.ground());

  SimplicialComplex empty_only = SimplicialComplex::empty_face_only({"x", "y"});
  SimplicialComplex back2 = complex_from_json(complex_to_json(empty_only));
  CHECK(back2.dimension() == -1);
  CHECK_FALSE(back2.is_void());

  CHECK(kind_of([&] { complex_from_json(json{{"ground", {"x"}}}); }) == ErrorKind::IoFailure);
}

TEST_CASE("morphism JSON keeps fates and twists") {
  Graph c3 = cycle_graph(3);
  Graph loop = cycle_graph(1);
  auto phis = enumerate_minor_morphisms(c3, loop);
  REQUIRE(!phis.empty());

  bool saw_twist = false;
  for (const auto& phi : phis) {
    json j = morphism_to_json(phi);
    MinorMorphism back = morphism_from_json(j, c3, loop);
    CHECK(back == phi);
    if (j.contains("twists")) saw_twist = true;
    // every source edge appears exactly once in the map
    CHECK(j.at("edge_map").size() == c3.edge_count());
  }
  CHECK(saw_twist);  // a kept edge mapping onto a loop realizes both arrow choices

  json j = morphism_to_json(phis.front());
  json no_twists = j;
  no_twists.erase("twists");
  MinorMorphism canonical = morphism_from_json(no_twists, c3, loop);
  CHECK(canonical.is_valid());
  for (const auto& [e, img] : canonical.edge_map())
    if (img.fate == EdgeFate::Kept) CHECK_FALSE(img.twist);

  json bad = j;
  bad["edge_map"]["e1"] = "ghost";
  CHECK(kind_of([&] { morphism_from_json(bad, c3, loop); }) == ErrorKind::IoFailure);
}

TEST_CASE("report fragments serialize deterministically") {
  HomologyGroup h{2, {Int(3), Int(6)}};
  json hj = homology_to_json(1, Coefficients::integers(), true, h);
  CHECK(hj.at("free_rank") == 2);
  CHECK(hj.at("torsion") == json({"3", "6"}));
  CHECK(hj.at("coefficients") == "Z");

  ScanReport rep;
  rep.family = "demo";
  rep.columns = {"graph", "value"};
  rep.rows = {{"n=1 m=0:", "7"}};
  rep.extremes["max"] = "7";
  json sj = scan_report_to_json(rep);
  CHECK(sj.at("rows")[0][1] == "7");
  CHECK(sj.at("all_passed") == true);

  PoincareVector pv = conf_poincare(path_graph(3), 2);
  json pj = poincare_to_json(pv);
  CHECK(pj.at("generator_degree") == 3);
  CHECK(pj.at("ranks").at("0") == 1);
  CHECK(pj.at("total_rank") == pv.total_rank());

  OSPresentation pres = os_presentation(complete_graph(3), 1);
  json prj = presentation_to_json(pres);
  CHECK(prj.at("parity") == "odd");
  CHECK(prj.at("generators").size() == pres.generators.size());

  OsRankReport rr = os_rank_check(path_graph(4), 1, 3);
  json rj = rank_report_to_json(rr);
  CHECK(rj.at("consistent") == true);
  CHECK(rj.at("entries").size() == 4);

  // identical inputs give identical bytes
  CHECK(scan_report_to_json(rep).dump(2) == sj.dump(2));
}

TEST_CASE("file IO surfaces IoFailure") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "minorhom_json_io_test";
  fs::create_directories(dir);
  const std::string good = (dir / "g.json").string();
  write_text_file(good, graph_to_json(path_graph(2)).dump());
  Graph g = load_graph(good);
  CHECK(g.edge_count() == 2);

  CHECK(kind_of([&] { load_json_file((dir / "missing.json").string()); }) ==
        ErrorKind::IoFailure);
  const std::string broken = (dir / "broken.json").string();
  write_text_file(broken, "{not json");
  CHECK(kind_of([&] { load_json_file(broken); }) == ErrorKind::IoFailure);
  CHECK(kind_of([&] { write_text_file((dir / "no_dir" / "x.json").string(), "x"); }) ==
        ErrorKind::IoFailure);
  fs::remove_all(dir);
}
