#pragma once

// End-to-end certification of one connected diagram: choose an extended
// spanning tree, build and verify its binding circle, and turn it into a
// verified three-page presentation.

#include <cstdint>
#include <string>
#include <vector>

#include "threepage/binding.hpp"
#include "threepage/presentation.hpp"
#include "threepage/spanning.hpp"

namespace threepage {

struct CertifyOptions {
  bool exact = false;   ///< maximize m by exact search instead of heuristics
  bool extend = true;   ///< false: plain spanning tree, m = 0
  bool repair = true;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t seed = 0;
};

struct Certificate {
  int n = 0;
  int faces = 0;
  bool alternating = false;
  bool reduced = false;

  int m_greedy = 0;
  int m_exact = -1;  ///< -1 when exact search did not run
  bool exact_complete = true;
  std::uint64_t exact_nodes = 0;
  bool witness = false;  ///< theorem_witness succeeded

  int m_target = 0;  ///< faces of the tree first tried
  int m = 0;         ///< faces of the tree finally used
  ExtendedSpanningTree tree;
  int points_unrepaired = 0;  ///< 3n + 1 - m
  BindingSequence binding;
  ThreePagePresentation presentation;
  std::vector<std::string> notes;

  int bound() const noexcept { return presentation.bound(); }
};

/// Thrown when no candidate tree yields a presentation passing every
/// verifier.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requires a connected diagram with at least one crossing. The returned
/// presentation has passed verify_binding and verify_presentation. When the
/// preferred tree cannot be certified, smaller face sets are tried and a note
/// is recorded.
Certificate certify(const CellComplex& cx, const CertifyOptions& options = {});

}  // namespace threepage
