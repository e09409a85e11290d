#include "threepage/nsis.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace threepage {

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::array<int, 2>> edges) {
  SimpleGraph g;
  g.adjacency.assign(static_cast<size_t>(n), {});
  for (auto [a, b] : edges) {
    if (a == b) continue;
    g.adjacency.at(a).push_back(b);
    g.adjacency.at(b).push_back(a);
  }
  for (auto& nb : g.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

SimpleGraph SimpleGraph::from_dual(const DualGraph& d) {
  SimpleGraph g;
  g.adjacency = d.adjacency;
  for (Shade s : d.shade) g.side.push_back(s == Shade::Black ? 0 : 1);
  return g;
}

std::optional<std::vector<int>> bipartition(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.adjacency[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool connected_without(const SimpleGraph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  int start = -1;
  int left = 0;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    ++left;
    if (start < 0) start = v;
  }
  if (left == 0) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.adjacency[v]) {
      if (removed[w] || seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == left;
}

bool is_nsis(const SimpleGraph& g, std::span<const int> s) {
  const int n = g.vertex_count();
  std::vector<bool> in(static_cast<size_t>(n), false);
  for (int v : s) {
    if (v < 0 || v >= n || in[v]) return false;
    in[v] = true;
  }
  for (int v : s) {
    for (int w : g.adjacency[v]) {
      if (in[w]) return false;
    }
  }
  return connected_without(g, in);
}

namespace {

// Removing further independent vertices never reconnects G - S: every
// component keeps a neighbour of S, which can no longer be removed. So a
// vertex that separates once stays excluded for the whole subtree.
class NsisSearch {
 public:
  NsisSearch(const SimpleGraph& g, std::uint64_t budget)
      : g_(g), budget_(budget), removed_(static_cast<size_t>(g.vertex_count()), false),
        blocked_(static_cast<size_t>(g.vertex_count()), 0) {
    order_.resize(static_cast<size_t>(g.vertex_count()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.adjacency[a].size() > g.adjacency[b].size();
    });
  }

  NsisResult run() {
    best_.complete = true;
    recurse(0);
    best_.nodes = nodes_;
    std::sort(best_.set.begin(), best_.set.end());
    best_.size = static_cast<int>(best_.set.size());
    return best_;
  }

 private:
  void recurse(size_t i) {
    if (++nodes_ > budget_) {
      best_.complete = false;
      return;
    }
    if (current_.size() > best_.set.size()) best_.set = current_;
    if (i == order_.size()) return;
    int open = 0;
    for (size_t k = i; k < order_.size(); ++k) open += blocked_[order_[k]] == 0 ? 1 : 0;
    if (current_.size() + static_cast<size_t>(open) <= best_.set.size()) return;

    const int v = order_[i];
    if (blocked_[v] == 0) {
      removed_[v] = true;
      if (connected_without(g_, removed_)) {
        current_.push_back(v);
        for (int w : g_.adjacency[v]) ++blocked_[w];
        recurse(i + 1);
        for (int w : g_.adjacency[v]) --blocked_[w];
        current_.pop_back();
      }
      removed_[v] = false;
      if (!best_.complete) return;
    }
    recurse(i + 1);
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> order_;
  std::vector<bool> removed_;
  std::vector<int> blocked_;
  std::vector<int> current_;
  NsisResult best_;
};

}  // namespace

NsisResult nsis_exact(const SimpleGraph& g, std::uint64_t budget) {
  return NsisSearch(g, budget).run();
}

std::vector<int> nsis_greedy_leafy(const SimpleGraph& g, std::uint64_t seed) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<int> side = g.side;
  if (static_cast<int>(side.size()) != n) {
    auto two = bipartition(g);
    side = two ? *two : std::vector<int>(static_cast<size_t>(n), 0);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> tie(static_cast<size_t>(n));
  for (auto& t : tie) t = rng();

  // Grow the tree from a highest-degree vertex, always expanding the tree
  // vertex with the most neighbours still outside the tree.
  std::vector<bool> in_tree(static_cast<size_t>(n), false);
  std::vector<bool> expanded(static_cast<size_t>(n), false);
  auto better = [&](int a, int b, std::size_t ka, std::size_t kb) {
    if (ka != kb) return ka > kb;
    if (tie[a] != tie[b]) return tie[a] < tie[b];
    return a < b;
  };
  int root = 0;
  for (int v = 1; v < n; ++v) {
    if (better(v, root, g.adjacency[v].size(), g.adjacency[root].size())) root = v;
  }
  in_tree[root] = true;
  std::vector<int> tree{root};
  for (;;) {
    int pick = -1;
    std::size_t pick_gain = 0;
    for (int v : tree) {
      if (expanded[v]) continue;
      std::size_t gain = 0;
      for (int w : g.adjacency[v]) gain += in_tree[w] ? 0 : 1;
      if (gain == 0) continue;
      if (pick < 0 || better(v, pick, gain, pick_gain)) {
        pick = v;
        pick_gain = gain;
      }
    }
    if (pick < 0) break;
    expanded[pick] = true;
    for (int w : g.adjacency[pick]) {
      if (!in_tree[w]) {
        in_tree[w] = true;
        tree.push_back(w);
      }
    }
  }

  std::array<std::vector<int>, 2> leaves;
  for (int v : tree) {
    if (!expanded[v]) leaves[side[v] == 0 ? 0 : 1].push_back(v);
  }
  std::vector<int>& candidates = leaves[1].size() > leaves[0].size() ? leaves[1] : leaves[0];
  std::sort(candidates.begin(), candidates.end());

  std::vector<bool> removed(static_cast<size_t>(n), false);
  std::vector<int> out;
  for (int v : candidates) {
    bool independent = true;
    for (int w : g.adjacency[v]) independent = independent && !removed[w];
    if (!independent) continue;
    removed[v] = true;
    if (connected_without(g, removed)) {
      out.push_back(v);
    } else {
      removed[v] = false;
    }
  }
  return out;
}

ProbeReport conjecture_probe(std::span<const ProbeRecord> records) {
  ProbeReport r;
  for (const auto& rec : records) {
    if (rec.n <= 0) continue;
    ProbeRow row{rec, static_cast<double>(rec.nsis_max) / rec.n, static_cast<double>(rec.m_max) / rec.n};
    if (r.rows.empty() || row.nsis_ratio < r.min_nsis_ratio) {
      r.min_nsis_ratio = row.nsis_ratio;
      r.min_nsis_name = rec.name;
    }
    if (r.rows.empty() || row.m_ratio < r.min_m_ratio) {
      r.min_m_ratio = row.m_ratio;
      r.min_m_name = rec.name;
    }
    if (rec.m_max != rec.nsis_max) r.discrepancies.push_back(rec.name);
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace threepage
