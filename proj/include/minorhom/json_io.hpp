#pragma once

#include <string>

#include "json.hpp"

#include "minorhom/arrangement.hpp"
#include "minorhom/complex.hpp"
#include "minorhom/families.hpp"
#include "minorhom/graph.hpp"
#include "minorhom/homology.hpp"
#include "minorhom/minor.hpp"

namespace minorhom {

inline constexpr const char* kToolVersion = "1.0.0";

// Graph wire format: {"vertices": [ids...], "edges": [{"id", "ends": [u, w]}]}
// with both arrays sorted by id; loops have equal ends, parallel edges
// distinct ids.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"ground": [...], "facets": [[...], ...]}, both canonically sorted.
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

// {"vertex_map": {...}, "edge_map": {id: target edge | "*" (deleted) | target
// vertex (contracted)}, "twists": [kept edges whose arrows flip]}.  "twists"
// is omitted when empty and optional on input: absent twists are the
// canonical (untwisted) arrow choice.
nlohmann::json morphism_to_json(const MinorMorphism& phi);
MinorMorphism morphism_from_json(const nlohmann::json& j, const Graph& source,
                                 const Graph& target);

// {"degree", "coefficients", "reduced", "free_rank", "torsion": [...]}.
nlohmann::json homology_to_json(int degree, const Coefficients& coeff, bool reduced,
                                const HomologyGroup& h);

nlohmann::json scan_report_to_json(const ScanReport& rep);
nlohmann::json poincare_to_json(const PoincareVector& pv);
nlohmann::json presentation_to_json(const OSPresentation& pres);
nlohmann::json rank_report_to_json(const OsRankReport& rep);

// File plumbing; all failures surface as IoFailure.
nlohmann::json load_json_file(const std::string& path);
Graph load_graph(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace minorhom
