#include "threepage/pipeline.hpp"

#include <algorithm>
#include <optional>

namespace threepage {
namespace {

std::optional<BindingSequence> try_binding(const ExtendedSpanningTree& y, const CellComplex& cx, bool repair) {
  try {
    BindingSequence seq = build_binding(y, cx, repair);
    if (!verify_presentation(to_presentation(seq, cx.diagram()), cx.diagram()).ok()) return std::nullopt;
    return seq;
  } catch (const InternalError&) {
    return std::nullopt;
  }
}

// Face subsets of `s` with exactly k elements, in lexicographic order.
void subsets(const std::vector<int>& s, size_t k, size_t from, std::vector<int>& cur,
             std::vector<std::vector<int>>& out, size_t limit) {
  if (out.size() >= limit) return;
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < s.size(); ++i) {
    cur.push_back(s[i]);
    subsets(s, k, i + 1, cur, out, limit);
    cur.pop_back();
  }
}

}  // namespace

Certificate certify(const CellComplex& cx, const CertifyOptions& o) {
  const PlaneDiagram& d = cx.diagram();
  Certificate c;
  c.n = d.crossing_count();
  c.faces = cx.face_count();
  c.alternating = is_alternating(d);
  c.reduced = is_reduced(d);

  ExtendedSpanningTree best = from_spanning_tree(spanning_tree(cx, TreeStrategy::Bfs, o.seed));
  if (o.extend) {
    for (FaceOrder order : {FaceOrder::BySize, FaceOrder::ByDualDegree, FaceOrder::Random}) {
      ExtendedSpanningTree t = greedy_max_faces(cx, order, o.seed);
      c.m_greedy = std::max(c.m_greedy, t.m());
      if (t.m() > best.m()) best = std::move(t);
    }
    if (c.reduced && c.n >= 3) {
      const TheoremWitness w = theorem_witness(cx);
      c.witness = true;
      const std::vector<int> fg{std::min(w.f, w.g), std::max(w.f, w.g)};
      if (best.m() < 2) best = complete_to_est(fg, cx);
    }
    if (o.exact) {
      FaceSearchResult r = exact_max_faces(cx, o.budget);
      c.m_exact = r.m;
      c.exact_complete = r.complete;
      c.exact_nodes = r.nodes;
      if (!r.complete) c.notes.push_back("exact search stopped at the node budget");
      if (r.m >= best.m()) best = std::move(r.tree);
    }
  }
  c.m_target = best.m();

  std::vector<ExtendedSpanningTree> candidates{best};
  for (int k = best.m() - 1; k >= 0; --k) {
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    subsets(best.faces, static_cast<size_t>(k), 0, cur, subs, 64);
    for (const auto& s : subs) candidates.push_back(complete_to_est(s, cx));
  }
  for (TreeStrategy st : {TreeStrategy::Dfs, TreeStrategy::Random}) {
    for (int r = 0; r < cx.vertex_count(); ++r) {
      candidates.push_back(from_spanning_tree(spanning_tree(cx, st, o.seed + static_cast<std::uint64_t>(r))));
    }
  }

  for (const auto& y : candidates) {
    std::optional<BindingSequence> seq = try_binding(y, cx, o.repair);
    if (!seq) continue;
    c.tree = y;
    c.m = y.m();
    c.points_unrepaired = 3 * c.n + 1 - c.m;
    c.presentation = to_presentation(*seq, d);
    c.binding = std::move(*seq);
    if (c.m < c.m_target) {
      c.notes.push_back("tree with m=" + std::to_string(c.m_target) + " did not verify; used m=" +
                        std::to_string(c.m));
    }
    return c;
  }
  throw VerificationFailure("no candidate tree gave a verified presentation" +
                            std::string(o.repair ? "" : " without repair"));
}

}  // namespace threepage
