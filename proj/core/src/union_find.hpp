#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace threepage::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(std::max(n, 0))) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false when `a` and `b` were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace threepage::detail
