#pragma once

// Link diagrams given as PD codes, viewed as 4-valent plane maps.
//
// PD convention: X(a,b,c,d) lists the four arc labels counterclockwise,
// starting at the incoming under-strand. Slots 0 and 2 are therefore the
// under-strand, slots 1 and 3 the over-strand. No orientation beyond this is
// stored; the rotation at every crossing is the slot order 0,1,2,3.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace threepage {

/// Malformed PD text or corpus line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that does not describe a usable diagram (non-planar
/// rotation system, disconnected where connectivity is required, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A construction produced output that failed its own verification.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Strand : std::uint8_t { Under, Over };

/// Half-edge: a crossing together with a slot 0..3 in counterclockwise order.
struct Dart {
  int crossing = 0;
  int slot = 0;

  friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

constexpr Strand strand_type(Dart d) noexcept {
  return (d.slot % 2 == 0) ? Strand::Under : Strand::Over;
}

/// Next dart counterclockwise around the same crossing.
constexpr Dart rotate_next(Dart d) noexcept { return {d.crossing, (d.slot + 1) % 4}; }
constexpr Dart rotate_prev(Dart d) noexcept { return {d.crossing, (d.slot + 3) % 4}; }
/// The dart continuing the same strand through the crossing.
constexpr Dart opposite(Dart d) noexcept { return {d.crossing, (d.slot + 2) % 4}; }

using Labels = std::array<long, 4>;

class PlaneDiagram {
 public:
  PlaneDiagram() = default;

  /// Builds and validates a diagram from crossing records. Throws ParseError
  /// when some label does not occur exactly twice.
  static PlaneDiagram from_crossings(std::vector<Labels> crossings);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int dart_count() const noexcept { return 4 * crossing_count(); }

  const std::vector<Labels>& crossings() const noexcept { return crossings_; }

  static constexpr int index(Dart d) noexcept { return 4 * d.crossing + d.slot; }
  static constexpr Dart dart(int index) noexcept { return {index / 4, index % 4}; }

  bool valid(Dart d) const noexcept {
    return d.crossing >= 0 && d.crossing < crossing_count() && d.slot >= 0 && d.slot < 4;
  }

  /// The other end of the edge leaving through `d`.
  Dart twin(Dart d) const { return dart(twin_.at(index(d))); }
  int edge_of(Dart d) const { return edge_of_.at(index(d)); }
  /// Darts of edge `e`, lower dart index first.
  std::pair<Dart, Dart> edge_darts(int e) const {
    const auto& p = edges_.at(e);
    return {dart(p[0]), dart(p[1])};
  }
  long edge_label(int e) const { return labels_.at(e); }

  bool is_loop(int e) const {
    auto [a, b] = edge_darts(e);
    return a.crossing == b.crossing;
  }
  bool has_loop() const;

  /// Number of closed strands (link components) passing through crossings.
  int link_components() const;

  /// PD text in the accepted input syntax.
  std::string to_pd() const;

 private:
  std::vector<Labels> crossings_;
  std::vector<int> twin_;
  std::vector<int> edge_of_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<long> labels_;
};

/// Parses `PD[X(a,b,c,d), ...]`. Square brackets are accepted for the
/// crossing records as well (`X[a,b,c,d]`), and `PD[]` is the 0-crossing
/// diagram. Throws ParseError on empty text, wrong arity or bad labels.
PlaneDiagram parse_pd(std::string_view text);

bool is_alternating(const PlaneDiagram& d);

bool is_connected(const PlaneDiagram& d);

/// True iff no crossing is a cut-vertex of the underlying graph. A crossing
/// counts as a cut-vertex when deleting it, keeping each incident half-edge
/// as a pendant stub, disconnects what remains; this covers Reidemeister-1
/// kinks, whose loop becomes a component of its own. Throws ValidationError
/// for disconnected diagrams.
bool is_reduced(const PlaneDiagram& d);

/// Splits the diagram by connectivity of its underlying graph. Components
/// keep their arc labels and are ordered by their smallest crossing index.
std::vector<PlaneDiagram> connected_components(const PlaneDiagram& d);

/// Code of the plane map with over/under data, invariant under relabeling and
/// under orientation-preserving homeomorphisms of the sphere (reflections are
/// not identified). Two diagrams are isomorphic iff their codes are equal.
std::vector<int> canonical_code(const PlaneDiagram& d);

inline bool isomorphic(const PlaneDiagram& a, const PlaneDiagram& b) {
  return canonical_code(a) == canonical_code(b);
}

struct CorpusEntry {
  std::string name;
  std::string pd;
  int line = 0;
  std::string error;  ///< non-empty when the line itself is malformed
};

/// Reads corpus text: one `name: PD[...]` per line, `#` comment lines and
/// blank lines ignored. A line without a name separator yields an entry named
/// `line<N>` carrying an error, so batch runs can flag it and continue.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

}  // namespace threepage
