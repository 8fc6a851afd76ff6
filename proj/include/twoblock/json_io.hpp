#pragma once

#include "json.hpp"
#include "twoblock/detection.hpp"
#include "twoblock/digraph.hpp"
#include "twoblock/exact_color.hpp"
#include "twoblock/pipeline.hpp"

namespace twoblock {

using nlohmann::json;

// Schemas (stable):
//   Digraph            {"n": int, "arcs": [[tail, head], ...]}
//   TwoBlockCertificate {"u", "v", "path_a": [...], "path_b": [...], "k", "ell"}
//   AbsenceReport      {"k", "ell", "mode": "exhaustive"|"capped", "pairs_checked"}
//   Coloring           {"palette_size", "colors": [...]}
//   EliminationOrder   {"bound", "order": [...]}
//   ContractionTrace   {"k", "ell", "verified_construction", "lengths",
//                       "steps": [{"digraph", "cycle", "images", "contracted"}],
//                       "final_digraph", "final_coloring"}
void to_json(json& j, const Digraph& d);
void from_json(const json& j, Digraph& d);
void to_json(json& j, const TwoBlockCertificate& c);
void from_json(const json& j, TwoBlockCertificate& c);
void to_json(json& j, const AbsenceReport& r);
void to_json(json& j, const Coloring& c);
void to_json(json& j, const EliminationOrder& e);
void to_json(json& j, const ContractionTrace& t);

json detection_json(const DetectionResult& r);

}  // namespace twoblock
