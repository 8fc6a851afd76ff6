#include "twoblock/json_io.hpp"

namespace twoblock {

void to_json(json& j, const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  j = json{{"n", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

void from_json(const json& j, Digraph& d) {
  std::vector<Arc> arcs;
  for (const json& a : j.at("arcs")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  d = Digraph::build(j.at("n").get<int>(), arcs);
}

void to_json(json& j, const TwoBlockCertificate& c) {
  j = json{{"u", c.u},
           {"v", c.v},
           {"path_a", c.path_a.vertices},
           {"path_b", c.path_b.vertices},
           {"k", c.k_req},
           {"ell", c.ell_req}};
}

void from_json(const json& j, TwoBlockCertificate& c) {
  c.u = j.at("u").get<int>();
  c.v = j.at("v").get<int>();
  c.path_a.vertices = j.at("path_a").get<std::vector<Vertex>>();
  c.path_b.vertices = j.at("path_b").get<std::vector<Vertex>>();
  c.k_req = j.at("k").get<int>();
  c.ell_req = j.at("ell").get<int>();
}

void to_json(json& j, const AbsenceReport& r) {
  j = json{{"k", r.k},
           {"ell", r.ell},
           {"mode", r.mode == SearchMode::Exhaustive ? "exhaustive" : "capped"},
           {"pairs_checked", r.pairs_checked}};
}

void to_json(json& j, const Coloring& c) {
  j = json{{"palette_size", c.palette_size}, {"colors", c.colors}};
}

void to_json(json& j, const EliminationOrder& e) { j = json{{"bound", e.bound}, {"order", e.order}}; }

void to_json(json& j, const ContractionTrace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    steps.push_back({{"digraph", s.digraph},
                     {"cycle", s.cycle.vertices},
                     {"cycle_exact", s.cycle_exact},
                     {"images", s.preimage.images},
                     {"contracted", s.preimage.contracted}});
  }
  j = json{{"k", t.k},
           {"ell", t.ell},
           {"verified_construction", t.verified_construction},
           {"lengths", t.lengths()},
           {"steps", std::move(steps)},
           {"final_digraph", t.final_digraph},
           {"final_coloring", t.final_coloring}};
}

json detection_json(const DetectionResult& r) {
  if (const auto* cert = std::get_if<TwoBlockCertificate>(&r)) {
    return json{{"found", true}, {"certificate", *cert}};
  }
  return json{{"found", false}, {"absence", std::get<AbsenceReport>(r)}};
}

}  // namespace twoblock
