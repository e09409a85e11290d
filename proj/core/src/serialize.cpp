#include "threepage/serialize.hpp"

namespace threepage {

using nlohmann::json;

namespace {

json dart_json(Dart d) { return json::array({d.crossing, d.slot}); }

}  // namespace

json to_json(const CellComplex& cx) {
  json faces = json::array();
  for (int f = 0; f < cx.face_count(); ++f) {
    json walk = json::array();
    for (Dart d : cx.face_walk(f)) walk.push_back(dart_json(d));
    faces.push_back({{"id", f}, {"walk", walk}, {"edges", cx.face_edges(f)}, {"vertices", cx.face_vertices(f)}});
  }
  const int chi = cx.vertex_count() - cx.edge_count() + cx.face_count();
  return {{"V", cx.vertex_count()}, {"E", cx.edge_count()}, {"F", cx.face_count()}, {"euler", chi}, {"faces", faces}};
}

json to_json(const ExtendedSpanningTree& y) {
  return {{"edges", y.edges}, {"faces", y.faces}, {"m", y.m()}};
}

json to_json(const FaceSearchResult& r) {
  return {{"m", r.m}, {"faces", r.tree.faces}, {"edges", r.tree.edges}, {"exact", r.complete}, {"nodes", r.nodes}};
}

json to_json(const BindingSequence& seq) {
  json points = json::array();
  for (const auto& p : seq.points) {
    points.push_back({{"id", p.id},
                      {"kind", p.kind == CutKind::TreeEdge ? "tree-edge" : "near-crossing"},
                      {"edge", p.edge},
                      {"dart", dart_json(p.dart)},
                      {"arcs", p.arcs}});
  }
  json arcs = json::array();
  for (const auto& a : seq.arcs) {
    json passages = json::array();
    for (const auto& ps : a.passages) passages.push_back({ps.crossing, ps.in_slot, ps.out_slot});
    arcs.push_back({{"type", to_string(a.type)}, {"edges", a.edges}, {"passages", passages}, {"ends", a.ends}});
  }
  return {{"points", points}, {"arcs", arcs}, {"m", seq.m}, {"repaired", seq.repaired}};
}

json to_json(const ThreePagePresentation& p) {
  json arcs = json::array();
  for (const auto& c : p.arcs) {
    arcs.push_back({{"a", c.a}, {"b", c.b}, {"page", static_cast<int>(c.page)}, {"crossings", c.crossings}});
  }
  return {{"points", p.points}, {"arcs", arcs}, {"bound", p.bound()}, {"repaired", p.repaired}};
}

json to_json(const NsisResult& r) {
  return {{"size", r.size}, {"set", r.set}, {"exact", r.complete}, {"nodes", r.nodes}};
}

json to_json(const ProbeReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"name", row.record.name},
                    {"n", row.record.n},
                    {"F", row.record.faces},
                    {"nsis_max", row.record.nsis_max},
                    {"m_max", row.record.m_max},
                    {"bound", row.record.bound},
                    {"nsis_ratio", row.nsis_ratio},
                    {"m_ratio", row.m_ratio}});
  }
  json out = {{"rows", rows}, {"discrepancies", r.discrepancies}};
  if (!r.empty()) {
    out["min_nsis_ratio"] = {{"value", r.min_nsis_ratio}, {"name", r.min_nsis_name}};
    out["min_m_ratio"] = {{"value", r.min_m_ratio}, {"name", r.min_m_name}};
  }
  return out;
}

json to_json(const Certificate& c) {
  json j = {{"n", c.n},
            {"F", c.faces},
            {"alternating", c.alternating},
            {"reduced", c.reduced},
            {"m_greedy", c.m_greedy},
            {"m", c.m},
            {"tree", to_json(c.tree)},
            {"points_unrepaired", c.points_unrepaired},
            {"bound", c.bound()},
            {"repaired", c.presentation.repaired},
            {"witness", c.witness},
            {"presentation", to_json(c.presentation)},
            {"notes", c.notes}};
  if (c.m_exact >= 0) {
    j["m_exact"] = c.m_exact;
    j["exact_complete"] = c.exact_complete;
  }
  return j;
}

ThreePagePresentation presentation_from_json(const json& j) {
  try {
    ThreePagePresentation p;
    p.points = j.at("points").get<std::vector<int>>();
    for (const auto& a : j.at("arcs")) {
      Chord c;
      c.a = a.at("a").get<int>();
      c.b = a.at("b").get<int>();
      c.page = static_cast<Page>(a.at("page").get<int>());
      c.crossings = a.value("crossings", std::vector<int>{});
      p.arcs.push_back(std::move(c));
    }
    p.repaired = j.value("repaired", false);
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad presentation JSON: ") + e.what());
  }
}

}  // namespace threepage
