#include <doctest.h>

#include "support.hpp"
#include "threepage/serialize.hpp"

using namespace threepage;
using namespace tp_test;

namespace {

std::vector<int> bigons(const CellComplex& cx) {
  std::vector<int> out;
  for (int f = 0; f < cx.face_count(); ++f) {
    if (cx.face_walk(f).size() == 2) out.push_back(f);
  }
  return out;
}

std::vector<ExtendedSpanningTree> trees(const CellComplex& cx) {
  std::vector<ExtendedSpanningTree> out{exact_max_faces(cx).tree};
  for (auto st : {TreeStrategy::Bfs, TreeStrategy::Dfs, TreeStrategy::Random}) {
    for (std::uint64_t s = 0; s < 4; ++s) out.push_back(from_spanning_tree(spanning_tree(cx, st, s)));
  }
  for (auto o : {FaceOrder::BySize, FaceOrder::ByDualDegree, FaceOrder::Random}) {
    out.push_back(greedy_max_faces(cx, o, 2));
  }
  return out;
}

}  // namespace

TEST_SUITE("binding") {

TEST_CASE("point counts of the small examples") {
  const CellComplex t(parse_pd(kTrefoil));
  CHECK(boundary_sequence(from_spanning_tree(spanning_tree(t, TreeStrategy::Bfs)), t).size() == 10);
  const auto b = bigons(t);
  const auto two = complete_to_est(std::vector<int>{b[0], b[1]}, t);
  CHECK(boundary_sequence(two, t).size() == 8);

  const CellComplex h(parse_pd(kHopf));
  CHECK(boundary_sequence(complete_to_est(std::vector<int>{0}, h), h).size() == 6);
}

TEST_CASE("unrepaired point count is 3n+1-m for every tree") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    const CellComplex cx(d);
    for (const auto& y : trees(cx)) {
      for (auto side : {CutSide::Left, CutSide::Right}) {
        const auto seq = boundary_sequence(y, cx, side);
        CAPTURE(name);
        CHECK(seq.size() == 3 * d.crossing_count() + 1 - y.m());
        CHECK(seq.arcs.size() == seq.points.size());
        CHECK(seq.m == y.m());
        CHECK_FALSE(seq.repaired);
        for (const auto& a : seq.arcs) {
          if (a.type != ArcType::Outside) CHECK(a.passages.size() == 1);
        }
      }
    }
  }
}

TEST_CASE("cuts per edge") {
  const CellComplex cx(parse_pd(kFigureEight));
  const auto y = exact_max_faces(cx).tree;
  const auto seq = boundary_sequence(y, cx);
  std::vector<int> per_edge(static_cast<size_t>(cx.edge_count()), 0);
  for (const auto& p : seq.points) ++per_edge[p.edge];
  for (int e = 0; e < cx.edge_count(); ++e) {
    const bool in_y = std::binary_search(y.edges.begin(), y.edges.end(), e);
    CHECK(per_edge[e] == (in_y ? 1 : 2));
  }
}

TEST_CASE("arcs use every dart once") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    const CellComplex cx(d);
    const auto seq = build_binding(exact_max_faces(cx).tree, cx);
    std::vector<int> used(static_cast<size_t>(d.dart_count()), 0);
    for (const auto& a : seq.arcs) {
      for (const auto& p : a.passages) {
        ++used[PlaneDiagram::index({p.crossing, p.in_slot})];
        ++used[PlaneDiagram::index({p.crossing, p.out_slot})];
        CHECK((p.in_slot + 2) % 4 == p.out_slot);
      }
    }
    CAPTURE(name);
    CHECK(std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }));
  }
}

TEST_CASE("constructed sequences verify") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    const CellComplex cx(d);
    for (const auto& y : trees(cx)) {
      const auto seq = build_binding(y, cx);
      const auto r = verify_binding(seq, d);
      CAPTURE(name);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("repair leaves alternating diagrams alone") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d) || !is_alternating(d)) continue;
    const CellComplex cx(d);
    for (const auto& y : trees(cx)) {
      const auto seq = boundary_sequence(y, cx);
      CAPTURE(name);
      CHECK(repair(seq, d) == seq);
    }
  }
}

TEST_CASE("repair on the switched trefoil") {
  const auto d = parse_pd(kSwitchedTrefoil);
  const CellComplex cx(d);
  // Edges joining two passages of one type.
  std::vector<int> same;
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [a, b] = d.edge_darts(e);
    if (strand_type(a) == strand_type(b)) same.push_back(e);
  }
  REQUIRE_FALSE(same.empty());
  bool found = false;
  for (auto st : {TreeStrategy::Bfs, TreeStrategy::Dfs, TreeStrategy::Random}) {
    for (std::uint64_t s = 0; s < 6; ++s) {
      const auto y = from_spanning_tree(spanning_tree(cx, st, s));
      bool has_same = false;
      for (int e : same) has_same = has_same || std::binary_search(y.edges.begin(), y.edges.end(), e);
      if (!has_same) continue;
      found = true;
      const auto seq = boundary_sequence(y, cx);
      const auto fixed = repair(seq, d);
      CHECK(fixed.size() < seq.size());
      CHECK(fixed.repaired);
      CHECK(repair(fixed, d) == fixed);
      CHECK(verify_binding(fixed, d).ok());
      CHECK_FALSE(verify_binding(seq, d).ok());
    }
  }
  CHECK(found);
}

TEST_CASE("repair never adds points") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    const CellComplex cx(d);
    for (const auto& y : trees(cx)) {
      const auto seq = boundary_sequence(y, cx);
      const auto fixed = repair(seq, d);
      CHECK(fixed.size() <= seq.size());
      CHECK(fixed.arcs.size() == fixed.points.size());
      CHECK(repair(fixed, d) == fixed);
    }
  }
}

TEST_CASE("verifier catches simple corruptions") {
  const auto d = parse_pd(kTrefoil);
  const CellComplex cx(d);
  const auto seq = build_binding(exact_max_faces(cx).tree, cx);
  REQUIRE(verify_binding(seq, d).ok());

  auto out = seq;
  auto inside = std::find_if(out.arcs.begin(), out.arcs.end(), [](const BindingArc& a) { return !a.passages.empty(); });
  REQUIRE(inside != out.arcs.end());
  inside->type = ArcType::Outside;
  const auto r = verify_binding(out, d);
  CHECK_FALSE(r.ok());
  CHECK((!r.crossings_inside || !r.single_type));

  auto retyped = seq;
  for (auto& a : retyped.arcs) {
    if (a.type == ArcType::InsideOver) {
      a.type = ArcType::InsideUnder;
      break;
    }
  }
  const auto r2 = verify_binding(retyped, d);
  CHECK((!r2.single_type || !r2.distinct_at_points));

  auto empty = seq;
  empty.points.clear();
  CHECK_FALSE(verify_binding(empty, d).finite);
}

TEST_CASE("bad trees are rejected") {
  const CellComplex cx(parse_pd(kTrefoil));
  CHECK_THROWS_AS(boundary_sequence(ExtendedSpanningTree{{0}, {}}, cx), PreconditionError);
}

TEST_CASE("json shape") {
  const CellComplex cx(parse_pd(kHopf));
  const auto j = to_json(build_binding(exact_max_faces(cx).tree, cx));
  CHECK(j["points"].size() == 6);
  CHECK(j["arcs"].size() == 6);
  CHECK(j["m"] == 1);
  CHECK(j["points"][0].contains("arcs"));
  CHECK(j["arcs"][0].contains("type"));
}

}
