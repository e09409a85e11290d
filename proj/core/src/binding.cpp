#include "threepage/binding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace threepage {

const char* to_string(ArcType t) noexcept {
  switch (t) {
    case ArcType::Outside: return "outside";
    case ArcType::InsideOver: return "inside-over";
    case ArcType::InsideUnder: return "inside-under";
  }
  return "?";
}

namespace {

// Inside arc index for the passage through `d`'s crossing that uses `d`.
int passage_arc(Dart d) { return 2 * d.crossing + (d.slot % 2); }

}  // namespace

BindingSequence boundary_sequence(const ExtendedSpanningTree& y, const CellComplex& cx, CutSide side) {
  if (!is_extended_spanning_tree(y, cx)) throw PreconditionError("boundary_sequence needs an extended spanning tree");
  const auto& d = cx.diagram();
  const int n = d.crossing_count();
  const int E = d.edge_count();

  std::vector<bool> in_y(static_cast<size_t>(E), false);
  for (int e : y.edges) in_y[e] = true;
  std::vector<bool> in_s(static_cast<size_t>(cx.face_count()), false);
  for (int f : y.faces) in_s[f] = true;

  BindingSequence seq;
  seq.m = y.m();

  // Arcs: two inside arcs per crossing (under = slots 0/2, over = 1/3), then
  // one outside arc per edge not in Y.
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 2; ++s) {
      BindingArc arc;
      arc.type = s == 0 ? ArcType::InsideUnder : ArcType::InsideOver;
      arc.edges = {d.edge_of({c, s}), d.edge_of({c, s + 2})};
      arc.passages = {{c, s, s + 2}};
      seq.arcs.push_back(std::move(arc));
    }
  }
  std::vector<int> outside_arc(static_cast<size_t>(E), -1);
  for (int e = 0; e < E; ++e) {
    if (in_y[e]) continue;
    outside_arc[e] = static_cast<int>(seq.arcs.size());
    BindingArc arc;
    arc.type = ArcType::Outside;
    arc.edges = {e};
    seq.arcs.push_back(std::move(arc));
  }

  // Outer walk of the subgraph formed by Y's edges: from each Y-dart go to
  // its twin and sweep counterclockwise to the next Y-dart, crossing every
  // non-Y dart on the way.
  auto next_y_dart = [&](Dart from, std::vector<Dart>* swept) {
    Dart x = rotate_next(from);
    while (!in_y[d.edge_of(x)]) {
      if (swept) swept->push_back(x);
      x = rotate_next(x);
    }
    return x;
  };

  std::vector<Dart> walk;  // Y-darts traversed, in order
  Dart start{-1, 0};
  for (int i = 0; i < d.dart_count() && start.crossing < 0; ++i) {
    const Dart x = PlaneDiagram::dart(i);
    if (in_y[d.edge_of(x)] && !in_s[cx.face_of(x)]) start = x;
  }
  if (start.crossing >= 0) {
    Dart x = start;
    do {
      walk.push_back(x);
      x = next_y_dart(d.twin(x), nullptr);
    } while (x != start);
  }

  std::vector<int> touch_dart(static_cast<size_t>(E), -1);
  {
    std::vector<bool> walked(static_cast<size_t>(d.dart_count()), false);
    for (Dart x : walk) walked[PlaneDiagram::index(x)] = true;
    for (int e : y.edges) {
      auto [a, b] = d.edge_darts(e);
      const int ia = PlaneDiagram::index(a);
      const int ib = PlaneDiagram::index(b);
      if (walked[ia] && walked[ib]) {
        touch_dart[e] = side == CutSide::Left ? ia : ib;
      } else {
        touch_dart[e] = walked[ia] ? ia : ib;
      }
    }
  }

  std::vector<int> near_point(static_cast<size_t>(d.dart_count()), -1);
  std::vector<int> touch_point(static_cast<size_t>(E), -1);
  auto emit_near = [&](Dart x) {
    const int id = seq.size();
    near_point[PlaneDiagram::index(x)] = id;
    seq.points.push_back({id, CutKind::NearCrossing, d.edge_of(x), x, {-1, -1}});
  };

  if (walk.empty()) {
    // Y has no edges: a single crossing, circled once.
    for (int s = 0; s < 4; ++s) emit_near({0, s});
  } else {
    for (Dart x : walk) {
      const int e = d.edge_of(x);
      if (touch_dart[e] == PlaneDiagram::index(x)) {
        const int id = seq.size();
        touch_point[e] = id;
        seq.points.push_back({id, CutKind::TreeEdge, e, x, {-1, -1}});
      }
      std::vector<Dart> swept;
      next_y_dart(d.twin(x), &swept);
      for (Dart s : swept) emit_near(s);
    }
  }

  auto end_point = [&](Dart x) {
    const int e = d.edge_of(x);
    return in_y[e] ? touch_point[e] : near_point[PlaneDiagram::index(x)];
  };
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 2; ++s) {
      seq.arcs[2 * c + s].ends = {end_point({c, s}), end_point({c, s + 2})};
    }
  }
  for (int e = 0; e < E; ++e) {
    if (outside_arc[e] < 0) continue;
    auto [a, b] = d.edge_darts(e);
    seq.arcs[outside_arc[e]].ends = {near_point[PlaneDiagram::index(a)], near_point[PlaneDiagram::index(b)]};
  }
  for (auto& p : seq.points) {
    if (p.kind == CutKind::NearCrossing) {
      p.arcs = {passage_arc(p.dart), outside_arc[p.edge]};
    } else {
      auto [a, b] = d.edge_darts(p.edge);
      p.arcs = {passage_arc(a), passage_arc(b)};
    }
  }
  return seq;
}

namespace {

void reverse_arc(BindingArc& arc) {
  std::reverse(arc.edges.begin(), arc.edges.end());
  std::reverse(arc.passages.begin(), arc.passages.end());
  for (auto& p : arc.passages) std::swap(p.in_slot, p.out_slot);
  std::swap(arc.ends[0], arc.ends[1]);
}

}  // namespace

BindingSequence repair(const BindingSequence& input, const PlaneDiagram& /*d*/) {
  BindingSequence seq = input;
  std::vector<bool> dead(seq.arcs.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < seq.points.size(); ++i) {
      const BindingPoint p = seq.points[i];
      if (p.kind != CutKind::TreeEdge) continue;
      const int ia = p.arcs[0];
      const int ib = p.arcs[1];
      if (ia == ib) continue;
      BindingArc a = seq.arcs[ia];
      BindingArc b = seq.arcs[ib];
      if (a.type != b.type || a.type == ArcType::Outside) continue;
      // Merging would leave an arc whose two ends are the same point.
      const int a_far = a.ends[0] == p.id ? a.ends[1] : a.ends[0];
      const int b_far = b.ends[0] == p.id ? b.ends[1] : b.ends[0];
      if (a_far == b_far) continue;

      if (a.ends[1] != p.id) reverse_arc(a);
      if (b.ends[0] != p.id) reverse_arc(b);
      BindingArc merged;
      merged.type = a.type;
      merged.edges = a.edges;
      merged.edges.insert(merged.edges.end(), b.edges.begin() + 1, b.edges.end());
      merged.passages = a.passages;
      merged.passages.insert(merged.passages.end(), b.passages.begin(), b.passages.end());
      merged.ends = {a.ends[0], b.ends[1]};
      seq.arcs[ia] = std::move(merged);
      dead[ib] = true;
      for (auto& q : seq.points) {
        for (int& arc : q.arcs) {
          if (arc == ib) arc = ia;
        }
      }
      seq.points.erase(seq.points.begin() + static_cast<std::ptrdiff_t>(i));
      seq.repaired = true;
      changed = true;
      break;
    }
  }

  // Compact arc storage.
  std::vector<int> remap(seq.arcs.size(), -1);
  std::vector<BindingArc> kept;
  for (size_t i = 0; i < seq.arcs.size(); ++i) {
    if (dead[i]) continue;
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(std::move(seq.arcs[i]));
  }
  seq.arcs = std::move(kept);
  for (auto& q : seq.points) {
    for (int& arc : q.arcs) arc = remap[arc];
  }
  return seq;
}

BindingReport verify_binding(const BindingSequence& seq, const PlaneDiagram& d) {
  BindingReport r;
  auto issue = [&](bool& flag, std::string what) {
    flag = false;
    r.issues.push_back(std::move(what));
  };
  const int n = d.crossing_count();
  const int A = static_cast<int>(seq.arcs.size());

  if (seq.points.empty() && n > 0) issue(r.finite, "no binding points");

  std::map<int, int> position;
  for (int i = 0; i < seq.size(); ++i) {
    const auto& p = seq.points[i];
    if (!position.emplace(p.id, i).second) issue(r.finite, "duplicate point id " + std::to_string(p.id));
    if (p.edge < 0 || p.edge >= d.edge_count() || !d.valid(p.dart) || d.edge_of(p.dart) != p.edge) {
      issue(r.finite, "point " + std::to_string(p.id) + " is not located on its edge");
    }
    for (int a : p.arcs) {
      if (a < 0 || a >= A) issue(r.finite, "point " + std::to_string(p.id) + " references a missing arc");
    }
  }
  if (!r.finite) return r;

  // Arc geometry and end consistency.
  std::map<int, int> ends_at;
  std::vector<int> dart_uses(static_cast<size_t>(d.dart_count()), 0);
  for (int ai = 0; ai < A; ++ai) {
    const auto& arc = seq.arcs[ai];
    const std::string tag = "arc " + std::to_string(ai);
    if (arc.edges.size() != arc.passages.size() + 1) {
      issue(r.finite, tag + " has inconsistent edge/passage lists");
      continue;
    }
    bool shape_ok = true;
    for (int e : arc.edges) shape_ok &= e >= 0 && e < d.edge_count();
    for (size_t k = 0; k < arc.passages.size() && shape_ok; ++k) {
      const auto& ps = arc.passages[k];
      const Dart in{ps.crossing, ps.in_slot};
      const Dart out{ps.crossing, ps.out_slot};
      if (!d.valid(in) || !d.valid(out) || opposite(in) != out || d.edge_of(in) != arc.edges[k] ||
          d.edge_of(out) != arc.edges[k + 1]) {
        shape_ok = false;
      } else {
        ++dart_uses[PlaneDiagram::index(in)];
        ++dart_uses[PlaneDiagram::index(out)];
      }
    }
    if (!shape_ok) {
      issue(r.finite, tag + " does not follow the diagram's strands");
      continue;
    }
    for (int j = 0; j < 2; ++j) {
      const auto it = position.find(arc.ends[j]);
      if (it == position.end()) {
        issue(r.finite, tag + " ends at a missing point");
        continue;
      }
      ++ends_at[arc.ends[j]];
      const auto& p = seq.points[it->second];
      if (std::find(p.arcs.begin(), p.arcs.end(), ai) == p.arcs.end()) {
        issue(r.finite, tag + " is not listed at its end point " + std::to_string(p.id));
      }
      const int end_edge = j == 0 ? arc.edges.front() : arc.edges.back();
      if (p.edge != end_edge) issue(r.finite, tag + " ends off the edge of point " + std::to_string(p.id));
      if (arc.passages.empty()) {
        if (p.kind != CutKind::NearCrossing) issue(r.finite, tag + " is a bare piece ending at a touching point");
      } else if (p.kind == CutKind::NearCrossing) {
        const Dart end_dart = j == 0 ? Dart{arc.passages.front().crossing, arc.passages.front().in_slot}
                                     : Dart{arc.passages.back().crossing, arc.passages.back().out_slot};
        if (end_dart != p.dart) issue(r.finite, tag + " does not reach the crossing next to point " + std::to_string(p.id));
      }
    }
    if (arc.passages.empty() && arc.ends[0] == arc.ends[1]) issue(r.finite, tag + " is a closed piece");
  }
  for (const auto& p : seq.points) {
    if (ends_at[p.id] != 2) {
      issue(r.finite, "point " + std::to_string(p.id) + " has " + std::to_string(ends_at[p.id]) + " arc ends");
    }
  }
  for (int i = 0; i < d.dart_count(); ++i) {
    if (dart_uses[i] != 1) {
      issue(r.finite, "strand piece at dart " + std::to_string(i) + " covered " + std::to_string(dart_uses[i]) + " times");
    }
  }
  {
    // Per edge: one touching point, or two near-crossing cuts at distinct ends.
    std::vector<std::vector<const BindingPoint*>> on_edge(static_cast<size_t>(d.edge_count()));
    for (const auto& p : seq.points) on_edge[p.edge].push_back(&p);
    for (int e = 0; e < d.edge_count(); ++e) {
      const auto& pts = on_edge[e];
      int touch = 0;
      std::set<int> near_darts;
      for (const auto* p : pts) {
        if (p->kind == CutKind::TreeEdge) ++touch;
        else near_darts.insert(PlaneDiagram::index(p->dart));
      }
      const int near = static_cast<int>(std::count_if(pts.begin(), pts.end(), [](const BindingPoint* p) {
        return p->kind == CutKind::NearCrossing;
      }));
      const bool fine = (touch <= 1 && near == 0) || (touch == 0 && near == 2 && near_darts.size() == 2);
      if (!fine) issue(r.finite, "edge " + std::to_string(e) + " carries an impossible set of cuts");
    }
  }

  // (2) and (3): every crossing inside, each arc of a single type.
  std::vector<int> passed(static_cast<size_t>(n), 0);
  for (int ai = 0; ai < A; ++ai) {
    const auto& arc = seq.arcs[ai];
    const std::string tag = "arc " + std::to_string(ai);
    if (arc.type == ArcType::Outside && !arc.passages.empty()) {
      issue(r.crossings_inside, tag + " lies outside but passes crossing " + std::to_string(arc.passages.front().crossing));
    }
    if (arc.type != ArcType::Outside) {
      for (const auto& ps : arc.passages) {
        if (ps.crossing >= 0 && ps.crossing < n) ++passed[ps.crossing];
      }
    }
    ArcType derived = ArcType::Outside;
    bool mixed = false;
    if (!arc.passages.empty()) {
      const Strand first = strand_type({0, arc.passages.front().in_slot});
      derived = first == Strand::Over ? ArcType::InsideOver : ArcType::InsideUnder;
      for (const auto& ps : arc.passages) mixed |= strand_type({0, ps.in_slot}) != first;
    }
    if (mixed) issue(r.single_type, tag + " passes both over and under");
    else if (derived != arc.type) {
      issue(r.single_type, tag + " is typed " + to_string(arc.type) + " but runs " + to_string(derived));
    }
  }
  for (int c = 0; c < n; ++c) {
    if (passed[c] != 2) {
      issue(r.crossings_inside, "crossing " + std::to_string(c) + " passed by " + std::to_string(passed[c]) + " inside strands");
    }
  }

  // (4)
  for (const auto& p : seq.points) {
    if (p.arcs[0] == p.arcs[1] || seq.arcs[p.arcs[0]].type == seq.arcs[p.arcs[1]].type) {
      issue(r.distinct_at_points, "point " + std::to_string(p.id) + " joins two arcs of the same type");
    }
  }

  for (int i = 0; i < seq.size() && seq.size() > 1; ++i) {
    const auto& p = seq.points[i];
    const auto& q = seq.points[(i + 1) % seq.size()];
    bool same = false;
    for (int a : p.arcs) {
      for (int b : q.arcs) same |= a != b && seq.arcs[a].type == seq.arcs[b].type;
    }
    r.consecutive_same_type += same ? 1 : 0;
  }
  return r;
}

BindingSequence build_binding(const ExtendedSpanningTree& y, const CellComplex& cx, bool with_repair) {
  for (CutSide side : {CutSide::Left, CutSide::Right}) {
    BindingSequence seq = boundary_sequence(y, cx, side);
    if (with_repair) seq = repair(seq, cx.diagram());
    if (verify_binding(seq, cx.diagram()).ok()) return seq;
  }
  throw InternalError("binding circle failed verification on both cut sides");
}

}  // namespace threepage
