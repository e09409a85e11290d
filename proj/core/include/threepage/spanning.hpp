#pragma once

// Spanning trees and extended spanning trees of X(D): contractible
// subcomplexes that contain every 0-cell and whose 2-cells pairwise share no
// 1-cell. Each included 2-cell saves one binding point.

#include <cstdint>
#include <span>
#include <vector>

#include "threepage/complex.hpp"

namespace threepage {

enum class TreeStrategy { Bfs, Dfs, Random };
enum class FaceOrder { BySize, ByDualDegree, Random };

/// n-1 edge ids (ascending) forming a spanning tree of the 1-skeleton.
/// Bfs/Dfs start at vertex `seed % n` and scan darts in slot order; Random is
/// Kruskal over a seeded shuffle of the edges.
std::vector<int> spanning_tree(const CellComplex& cx, TreeStrategy strategy, std::uint64_t seed = 0);

struct ExtendedSpanningTree {
  std::vector<int> edges;  ///< ascending
  std::vector<int> faces;  ///< ascending

  int m() const noexcept { return static_cast<int>(faces.size()); }
  /// All vertices together with `edges` and `faces`.
  Subcomplex subcomplex(const CellComplex& cx) const;

  bool operator==(const ExtendedSpanningTree&) const = default;
};

/// Checks the defining conditions directly: closed, contains all 0-cells,
/// connected and contractible, faces pairwise share no edge.
bool is_extended_spanning_tree(const ExtendedSpanningTree& y, const CellComplex& cx);

/// True iff the faces are pairwise edge-disjoint and every connected
/// component of (all vertices + boundary edges of S + S) has chi = 1, which
/// is exactly when some extended spanning tree has face set S.
bool face_set_feasible(std::span<const int> faces, const CellComplex& cx);

/// Adds bridging edges (smallest edge id first) to the closure of S until it
/// is connected. Throws PreconditionError when S is infeasible.
ExtendedSpanningTree complete_to_est(std::span<const int> faces, const CellComplex& cx);

/// Extended spanning tree over a given spanning tree with no 2-cells.
ExtendedSpanningTree from_spanning_tree(std::vector<int> tree_edges);

ExtendedSpanningTree greedy_max_faces(const CellComplex& cx, FaceOrder order, std::uint64_t seed = 0);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct FaceSearchResult {
  int m = 0;
  ExtendedSpanningTree tree;
  bool complete = true;  ///< false when the node budget ran out
  std::uint64_t nodes = 0;
};

/// Maximum number of 2-cells over all extended spanning trees, by
/// branch-and-bound over faces in ascending simple-dual degree. With the
/// budget exhausted the best tree found so far is returned, flagged.
FaceSearchResult exact_max_faces(const CellComplex& cx, std::uint64_t budget = kDefaultSearchBudget);

inline constexpr int kOracleMaxCrossings = 6;

/// Same maximum by enumerating every subcomplex that contains all vertices
/// and testing the definition directly. Throws PreconditionError for
/// n > kOracleMaxCrossings.
int oracle_max_faces(const CellComplex& cx);

struct TheoremWitness {
  int vertex = -1;  ///< shared endpoint of e1 and e2
  int e1 = -1;
  int e2 = -1;
  int f = -1;  ///< incident to e1
  int g = -1;  ///< incident to e2
  std::vector<int> tree;
};

/// Two tree edges forming a path of length two and two edge-disjoint faces,
/// one on each, that together complete to an extended spanning tree.
/// Requires a reduced connected diagram with n >= 3.
TheoremWitness theorem_witness(const CellComplex& cx);

}  // namespace threepage
