#include "threepage/spanning.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "union_find.hpp"

namespace threepage {

using detail::UnionFind;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_faces(std::span<const int> faces, const CellComplex& cx) {
  for (int f : faces) {
    if (f < 0 || f >= cx.face_count()) throw PreconditionError("face id out of range: " + std::to_string(f));
  }
}

}  // namespace

std::vector<int> spanning_tree(const CellComplex& cx, TreeStrategy strategy, std::uint64_t seed) {
  const auto& d = cx.diagram();
  const int n = cx.vertex_count();
  std::vector<int> tree;
  tree.reserve(static_cast<size_t>(n - 1));

  if (strategy == TreeStrategy::Random) {
    std::vector<int> order(static_cast<size_t>(cx.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    UnionFind uf(n);
    for (int e : order) {
      auto [a, b] = d.edge_darts(e);
      if (uf.unite(a.crossing, b.crossing)) tree.push_back(e);
    }
    return sorted(std::move(tree));
  }

  const int root = static_cast<int>(seed % static_cast<std::uint64_t>(n));
  std::vector<bool> seen(static_cast<size_t>(n), false);
  seen[root] = true;
  if (strategy == TreeStrategy::Bfs) {
    std::vector<int> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int s = 0; s < 4; ++s) {
        const Dart t = d.twin({v, s});
        if (seen[t.crossing]) continue;
        seen[t.crossing] = true;
        tree.push_back(d.edge_of({v, s}));
        queue.push_back(t.crossing);
      }
    }
  } else {
    // (vertex, next slot to try)
    std::vector<std::pair<int, int>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, s] = stack.back();
      if (s == 4) {
        stack.pop_back();
        continue;
      }
      const Dart out{v, s++};
      const Dart t = d.twin(out);
      if (seen[t.crossing]) continue;
      seen[t.crossing] = true;
      tree.push_back(d.edge_of(out));
      stack.emplace_back(t.crossing, 0);
    }
  }
  return sorted(std::move(tree));
}

Subcomplex ExtendedSpanningTree::subcomplex(const CellComplex& cx) const {
  Subcomplex y = Subcomplex::empty(cx);
  std::fill(y.vertices.begin(), y.vertices.end(), true);
  for (int e : edges) y.edges.at(e) = true;
  for (int f : faces) y.faces.at(f) = true;
  return y;
}

bool is_extended_spanning_tree(const ExtendedSpanningTree& y, const CellComplex& cx) {
  for (int e : y.edges) {
    if (e < 0 || e >= cx.edge_count()) return false;
  }
  for (int f : y.faces) {
    if (f < 0 || f >= cx.face_count()) return false;
  }
  const Subcomplex sub = y.subcomplex(cx);
  if (sub.edge_total() != static_cast<int>(y.edges.size()) || sub.face_total() != y.m()) return false;
  if (!is_contractible(sub, cx)) return false;
  for (size_t i = 0; i < y.faces.size(); ++i) {
    for (size_t j = i + 1; j < y.faces.size(); ++j) {
      const auto& a = cx.face_edges(y.faces[i]);
      const auto& b = cx.face_edges(y.faces[j]);
      std::vector<int> shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
      if (!shared.empty()) return false;
    }
  }
  return true;
}

bool face_set_feasible(std::span<const int> faces, const CellComplex& cx) {
  check_faces(faces, cx);
  const int n = cx.vertex_count();
  std::vector<int> owner(static_cast<size_t>(cx.edge_count()), -1);
  for (int f : faces) {
    for (int e : cx.face_edges(f)) {
      if (owner[e] >= 0) return false;  // shared edge, or f listed twice
      owner[e] = f;
    }
  }

  UnionFind uf(n);
  const auto& d = cx.diagram();
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (owner[e] < 0) continue;
    auto [a, b] = d.edge_darts(e);
    uf.unite(a.crossing, b.crossing);
  }
  std::vector<int> chi(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++chi[uf.find(v)];
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (owner[e] >= 0) --chi[uf.find(d.edge_darts(e).first.crossing)];
  }
  for (int f : faces) ++chi[uf.find(cx.face_vertices(f).front())];
  for (int v = 0; v < n; ++v) {
    if (uf.find(v) == v && chi[v] != 1) return false;
  }
  return true;
}

ExtendedSpanningTree complete_to_est(std::span<const int> faces, const CellComplex& cx) {
  if (!face_set_feasible(faces, cx)) throw PreconditionError("face set cannot be completed to an extended spanning tree");
  ExtendedSpanningTree y;
  y.faces.assign(faces.begin(), faces.end());
  std::sort(y.faces.begin(), y.faces.end());

  std::vector<bool> in_y(static_cast<size_t>(cx.edge_count()), false);
  for (int f : y.faces) {
    for (int e : cx.face_edges(f)) in_y[e] = true;
  }
  const auto& d = cx.diagram();
  UnionFind uf(cx.vertex_count());
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (!in_y[e]) continue;
    auto [a, b] = d.edge_darts(e);
    uf.unite(a.crossing, b.crossing);
  }
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (in_y[e]) continue;
    auto [a, b] = d.edge_darts(e);
    if (uf.unite(a.crossing, b.crossing)) in_y[e] = true;
  }
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (in_y[e]) y.edges.push_back(e);
  }
  return y;
}

ExtendedSpanningTree from_spanning_tree(std::vector<int> tree_edges) {
  ExtendedSpanningTree y;
  y.edges = sorted(std::move(tree_edges));
  return y;
}

ExtendedSpanningTree greedy_max_faces(const CellComplex& cx, FaceOrder order, std::uint64_t seed) {
  std::vector<int> faces(static_cast<size_t>(cx.face_count()));
  std::iota(faces.begin(), faces.end(), 0);
  switch (order) {
    case FaceOrder::BySize:
      std::stable_sort(faces.begin(), faces.end(), [&](int a, int b) {
        return cx.face_walk(a).size() < cx.face_walk(b).size();
      });
      break;
    case FaceOrder::ByDualDegree: {
      const DualGraph g = dual_graph(cx);
      std::stable_sort(faces.begin(), faces.end(), [&](int a, int b) {
        return g.adjacency[a].size() < g.adjacency[b].size();
      });
      break;
    }
    case FaceOrder::Random: {
      std::mt19937_64 rng(seed);
      std::shuffle(faces.begin(), faces.end(), rng);
      break;
    }
  }
  std::vector<int> chosen;
  for (int f : faces) {
    chosen.push_back(f);
    if (!face_set_feasible(chosen, cx)) chosen.pop_back();
  }
  return complete_to_est(chosen, cx);
}

namespace {

class FaceSearch {
 public:
  FaceSearch(const CellComplex& cx, std::uint64_t budget) : cx_(cx), dual_(dual_graph(cx)), budget_(budget) {
    order_.resize(static_cast<size_t>(cx.face_count()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return dual_.adjacency[a].size() < dual_.adjacency[b].size();
    });
    blocked_.assign(order_.size(), 0);
  }

  void run() { visit(0); }

  std::vector<int> best;
  std::uint64_t nodes = 0;
  bool exhausted = false;

 private:
  void visit(size_t idx) {
    if (exhausted) return;
    if (++nodes > budget_) {
      exhausted = true;
      return;
    }
    if (current_.size() > best.size()) best = current_;
    int open = 0;
    for (size_t j = idx; j < order_.size(); ++j) open += blocked_[order_[j]] == 0 ? 1 : 0;
    if (current_.size() + static_cast<size_t>(open) <= best.size()) return;
    if (idx == order_.size()) return;

    const int f = order_[idx];
    if (blocked_[f] == 0) {
      current_.push_back(f);
      if (face_set_feasible(current_, cx_)) {
        block(f, +1);
        visit(idx + 1);
        block(f, -1);
      }
      current_.pop_back();
    }
    visit(idx + 1);
  }

  void block(int f, int delta) {
    blocked_[f] += delta;
    for (int g : dual_.adjacency[f]) blocked_[g] += delta;
  }

  const CellComplex& cx_;
  DualGraph dual_;
  std::uint64_t budget_;
  std::vector<int> order_;
  std::vector<int> blocked_;
  std::vector<int> current_;
};

}  // namespace

FaceSearchResult exact_max_faces(const CellComplex& cx, std::uint64_t budget) {
  FaceSearch search(cx, budget);
  search.run();
  FaceSearchResult r;
  r.tree = complete_to_est(search.best, cx);
  r.m = r.tree.m();
  r.complete = !search.exhausted;
  r.nodes = search.nodes;
  return r;
}

int oracle_max_faces(const CellComplex& cx) {
  if (cx.vertex_count() > kOracleMaxCrossings) {
    throw PreconditionError("oracle_max_faces is limited to " + std::to_string(kOracleMaxCrossings) + " crossings");
  }
  const int F = cx.face_count();
  const int E = cx.edge_count();
  int best = -1;
  for (std::uint32_t fmask = 0; fmask < (1u << F); ++fmask) {
    const int m = std::popcount(fmask);
    if (m <= best) continue;

    Subcomplex y = Subcomplex::empty(cx);
    std::fill(y.vertices.begin(), y.vertices.end(), true);
    bool disjoint = true;
    std::vector<int> uses(static_cast<size_t>(E), 0);
    for (int f = 0; f < F; ++f) {
      if (!(fmask >> f & 1u)) continue;
      y.faces[f] = true;
      for (int e : cx.face_edges(f)) {
        if (++uses[e] > 1) disjoint = false;
        y.edges[e] = true;
      }
    }
    if (!disjoint) continue;

    std::vector<int> optional;
    for (int e = 0; e < E; ++e) {
      if (!y.edges[e]) optional.push_back(e);
    }
    const std::uint32_t subsets = 1u << optional.size();
    for (std::uint32_t emask = 0; emask < subsets; ++emask) {
      for (size_t i = 0; i < optional.size(); ++i) y.edges[optional[i]] = (emask >> i & 1u) != 0;
      if (is_contractible(y, cx)) {
        best = m;
        break;
      }
    }
  }
  return best;
}

TheoremWitness theorem_witness(const CellComplex& cx) {
  const int n = cx.vertex_count();
  if (n < 3) throw PreconditionError("theorem_witness needs at least 3 crossings");
  if (!is_reduced(cx.diagram())) throw PreconditionError("theorem_witness needs a reduced diagram");

  const auto& d = cx.diagram();
  std::vector<std::vector<int>> trees;
  for (int root = 0; root < n; ++root) {
    trees.push_back(spanning_tree(cx, TreeStrategy::Bfs, static_cast<std::uint64_t>(root)));
    trees.push_back(spanning_tree(cx, TreeStrategy::Dfs, static_cast<std::uint64_t>(root)));
  }

  for (const auto& tree : trees) {
    std::vector<std::vector<int>> at(static_cast<size_t>(n));
    for (int e : tree) {
      auto [a, b] = d.edge_darts(e);
      at[a.crossing].push_back(e);
      at[b.crossing].push_back(e);
    }
    for (int c = 0; c < n; ++c) {
      for (size_t i = 0; i < at[c].size(); ++i) {
        for (size_t j = i + 1; j < at[c].size(); ++j) {
          const int e1 = at[c][i];
          const int e2 = at[c][j];
          for (int f : cx.edge_faces(e1)) {
            for (int g : cx.edge_faces(e2)) {
              if (f == g) continue;
              const int pair[2] = {f, g};
              if (face_set_feasible(pair, cx)) return {c, e1, e2, f, g, tree};
            }
          }
        }
      }
    }
  }
  throw InternalError("no theorem witness found on a reduced diagram");
}

}  // namespace threepage
