#include <doctest.h>

#include "support.hpp"
#include "threepage/nsis.hpp"

using namespace threepage;
using namespace tp_test;

namespace {

std::vector<int> faces_of_size(const CellComplex& cx, size_t k) {
  std::vector<int> out;
  for (int f = 0; f < cx.face_count(); ++f) {
    if (cx.face_walk(f).size() == k) out.push_back(f);
  }
  return out;
}

void check_is_nsis(const CellComplex& cx, const std::vector<int>& faces) {
  CHECK(is_nsis(SimpleGraph::from_dual(dual_graph(cx)), faces));
}

}  // namespace

TEST_SUITE("spanning") {

TEST_CASE("spanning trees have n-1 edges and are deterministic") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    CAPTURE(name);
    const CellComplex cx(d);
    for (auto st : {TreeStrategy::Bfs, TreeStrategy::Dfs, TreeStrategy::Random}) {
      for (std::uint64_t seed : {0u, 1u, 5u}) {
        const auto t = spanning_tree(cx, st, seed);
        CHECK(static_cast<int>(t.size()) == cx.vertex_count() - 1);
        CHECK(t == spanning_tree(cx, st, seed));
        CHECK(is_extended_spanning_tree(from_spanning_tree(t), cx));
      }
    }
  }
  CHECK(spanning_tree(CellComplex(parse_pd(kHopf)), TreeStrategy::Bfs).size() == 1);
  CHECK(spanning_tree(CellComplex(parse_pd(kTrefoil)), TreeStrategy::Dfs).size() == 2);
}

TEST_CASE("face set feasibility examples") {
  const CellComplex t(parse_pd(kTrefoil));
  const auto bigons = faces_of_size(t, 2);
  const auto tri = faces_of_size(t, 3);
  CHECK(face_set_feasible(std::vector<int>{bigons[0], bigons[1]}, t));
  CHECK_FALSE(face_set_feasible(tri, t));
  CHECK_FALSE(face_set_feasible(std::vector<int>{bigons[0], tri[0]}, t));
  CHECK_FALSE(face_set_feasible(bigons, t));
  CHECK(face_set_feasible(std::vector<int>{}, t));

  const CellComplex h(parse_pd(kHopf));
  const auto adj = dual_graph(h).adjacency;
  for (int f = 0; f < 4; ++f) {
    CHECK(face_set_feasible(std::vector<int>{f}, h));
    for (int g = f + 1; g < 4; ++g) CHECK_FALSE(face_set_feasible(std::vector<int>{f, g}, h));
  }
}

TEST_CASE("completion to an extended spanning tree") {
  const CellComplex t(parse_pd(kTrefoil));
  CHECK(complete_to_est({}, t).edges.size() == 2);
  const auto bigons = faces_of_size(t, 2);
  const std::vector<int> two{bigons[0], bigons[1]};
  const auto y = complete_to_est(two, t);
  std::vector<int> boundary;
  for (int f : two) {
    for (int e : t.face_edges(f)) boundary.push_back(e);
  }
  std::sort(boundary.begin(), boundary.end());
  CHECK(y.edges == boundary);
  CHECK(y.faces == two);
  CHECK(is_extended_spanning_tree(y, t));
  CHECK_THROWS_AS(complete_to_est(faces_of_size(t, 3), t), PreconditionError);

  const CellComplex h(parse_pd(kHopf));
  const auto one = complete_to_est(std::vector<int>{0}, h);
  CHECK(one.edges.size() == 2);
  CHECK(static_cast<int>(one.edges.size()) == 2 + one.m() - 1);
}

TEST_CASE("completed trees satisfy the edge count identity") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    const CellComplex cx(d);
    const auto r = exact_max_faces(cx);
    CAPTURE(name);
    CHECK(static_cast<int>(r.tree.edges.size()) == cx.vertex_count() + r.m - 1);
    CHECK(is_contractible(r.tree.subcomplex(cx), cx));
  }
}

TEST_CASE("greedy face maximization") {
  const CellComplex t(parse_pd(kTrefoil));
  CHECK(greedy_max_faces(t, FaceOrder::BySize).m() == 2);
  CHECK(greedy_max_faces(CellComplex(parse_pd(kHopf)), FaceOrder::BySize).m() == 1);
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    const CellComplex cx(d);
    for (auto order : {FaceOrder::BySize, FaceOrder::ByDualDegree, FaceOrder::Random}) {
      const auto y = greedy_max_faces(cx, order, 3);
      CAPTURE(name);
      CHECK(face_set_feasible(y.faces, cx));
      CHECK(is_extended_spanning_tree(y, cx));
      CHECK(y == greedy_max_faces(cx, order, 3));
      check_is_nsis(cx, y.faces);
    }
  }
}

TEST_CASE("exact search") {
  CHECK(exact_max_faces(CellComplex(parse_pd(kHopf))).m == 1);
  CHECK(exact_max_faces(CellComplex(parse_pd(kTrefoil))).m == 2);
  const auto r = exact_max_faces(CellComplex(parse_pd(kFigureEight)));
  CHECK(r.m == 2);
  CHECK(r.complete);
  CHECK(r.nodes > 0);
}

TEST_CASE("exact search under a tiny budget is flagged but feasible") {
  for (const auto& [name, d] : corpus()) {
    if (d.crossing_count() < 7 || !is_connected(d)) continue;
    const CellComplex cx(d);
    const auto r = exact_max_faces(cx, 3);
    CAPTURE(name);
    CHECK_FALSE(r.complete);
    CHECK(is_extended_spanning_tree(r.tree, cx));
    CHECK(r.m <= exact_max_faces(cx).m);
  }
}

TEST_CASE("oracle") {
  CHECK(oracle_max_faces(CellComplex(parse_pd(kHopf))) == 1);
  CHECK(oracle_max_faces(CellComplex(parse_pd(kTrefoil))) == 2);
  CHECK(oracle_max_faces(CellComplex(parse_pd(kFigureEight))) == 2);
  for (const auto& [name, d] : corpus()) {
    if (d.crossing_count() > kOracleMaxCrossings) {
      CHECK_THROWS_AS(oracle_max_faces(CellComplex(d)), PreconditionError);
    }
  }
}

TEST_CASE("theorem witness") {
  for (const char* pd : {kTrefoil, kFigureEight}) {
    const CellComplex cx(parse_pd(pd));
    const auto w = theorem_witness(cx);
    const auto& dd = cx.diagram();
    auto ends = [&](int e) {
      auto [a, b] = dd.edge_darts(e);
      return std::pair<int, int>{a.crossing, b.crossing};
    };
    CHECK(w.e1 != w.e2);
    CHECK(std::find(w.tree.begin(), w.tree.end(), w.e1) != w.tree.end());
    CHECK(std::find(w.tree.begin(), w.tree.end(), w.e2) != w.tree.end());
    const auto [a1, b1] = ends(w.e1);
    const auto [a2, b2] = ends(w.e2);
    CHECK((a1 == w.vertex || b1 == w.vertex));
    CHECK((a2 == w.vertex || b2 == w.vertex));
    const auto fe = cx.edge_faces(w.e1);
    const auto ge = cx.edge_faces(w.e2);
    CHECK((fe[0] == w.f || fe[1] == w.f));
    CHECK((ge[0] == w.g || ge[1] == w.g));
    CHECK(w.f != w.g);
    const auto& ef = cx.face_edges(w.f);
    for (int e : cx.face_edges(w.g)) CHECK(std::find(ef.begin(), ef.end(), e) == ef.end());
    CHECK(face_set_feasible(std::vector<int>{std::min(w.f, w.g), std::max(w.f, w.g)}, cx));
  }
  CHECK_THROWS_AS(theorem_witness(CellComplex(parse_pd(kHopf))), PreconditionError);
  CHECK_THROWS_AS(theorem_witness(CellComplex(parse_pd(kKinkTrefoil))), PreconditionError);
}

TEST_CASE("reduced corpus diagrams with n >= 3 carry at least two faces") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d) || d.crossing_count() < 3 || !is_reduced(d)) continue;
    CAPTURE(name);
    CHECK(exact_max_faces(CellComplex(d)).m >= 2);
    CHECK_NOTHROW(theorem_witness(CellComplex(d)));
  }
}

TEST_CASE("search results are non-separating independent sets of the dual") {
  for (const auto& [name, d] : corpus()) {
    if (!is_connected(d)) continue;
    const CellComplex cx(d);
    CAPTURE(name);
    check_is_nsis(cx, exact_max_faces(cx).tree.faces);
  }
}

}
