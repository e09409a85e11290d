#pragma once

// Non-separating independent sets: independent vertex sets whose removal
// leaves a connected, non-empty graph. On the simple dual of a diagram these
// are exactly the face sets an extended spanning tree can carry.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threepage/complex.hpp"

namespace threepage {

struct SimpleGraph {
  std::vector<std::vector<int>> adjacency;  ///< sorted, deduplicated, no self-loops
  std::vector<int> side;                    ///< bipartition class 0/1, or empty

  int vertex_count() const noexcept { return static_cast<int>(adjacency.size()); }

  /// Builds the simple view from an edge list; loops and repeats are dropped.
  static SimpleGraph from_edges(int n, std::span<const std::array<int, 2>> edges);
  /// Simple dual with the checkerboard shading as bipartition.
  static SimpleGraph from_dual(const DualGraph& g);
};

/// Proper 2-coloring by BFS from the lowest vertex of each component, or
/// nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const SimpleGraph& g);

/// Connected after deleting `removed`, and something is left.
bool connected_without(const SimpleGraph& g, const std::vector<bool>& removed);

bool is_nsis(const SimpleGraph& g, std::span<const int> s);

struct NsisResult {
  int size = 0;
  std::vector<int> set;  ///< ascending
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Maximum NSIS by branch-and-bound over vertices in descending degree.
NsisResult nsis_exact(const SimpleGraph& g, std::uint64_t budget = 10'000'000);

/// Leaves of a greedily grown many-leaf spanning tree, restricted to one
/// bipartition class and pruned to an NSIS. Ties between equally good
/// expansions are broken by `seed`.
std::vector<int> nsis_greedy_leafy(const SimpleGraph& g, std::uint64_t seed = 0);

struct ProbeRecord {
  std::string name;
  int n = 0;
  int faces = 0;
  int nsis_max = 0;
  int m_max = 0;
  int bound = 0;
};

struct ProbeRow {
  ProbeRecord record;
  double nsis_ratio = 0;  ///< nsis_max / n
  double m_ratio = 0;     ///< m_max / n
};

struct ProbeReport {
  std::vector<ProbeRow> rows;  ///< records with n > 0, input order
  double min_nsis_ratio = 0;
  double min_m_ratio = 0;
  std::string min_nsis_name;
  std::string min_m_name;
  std::vector<std::string> discrepancies;  ///< names with m_max != nsis_max

  bool empty() const noexcept { return rows.empty(); }
};

ProbeReport conjecture_probe(std::span<const ProbeRecord> records);

}  // namespace threepage
