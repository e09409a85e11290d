#pragma once

// Binding circles as combinatorial objects. The circle is the boundary of a
// regular neighbourhood of an extended spanning tree Y; it is recorded as the
// cyclic sequence of its intersection points with the diagram together with
// the strand pieces ("arcs") those points cut the diagram into.
//
// Every edge of Y is touched once from outside (the strand meets the circle
// and turns back in); every other edge is crossed twice, next to each of its
// endpoints. For Y with m faces that gives 3n + 1 - m points.

#include <array>
#include <string>
#include <vector>

#include "threepage/complex.hpp"
#include "threepage/spanning.hpp"

namespace threepage {

enum class ArcType : unsigned char { Outside, InsideOver, InsideUnder };

const char* to_string(ArcType t) noexcept;

enum class CutKind : unsigned char {
  TreeEdge,      ///< single touching point on an edge of Y
  NearCrossing,  ///< crossing of a non-Y edge next to one of its endpoints
};

/// A crossing passed by an arc: entered through `in_slot`, left through
/// `out_slot`, which must be opposite slots.
struct Passage {
  int crossing = 0;
  int in_slot = 0;
  int out_slot = 2;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct BindingArc {
  ArcType type = ArcType::Outside;
  /// Edges run along, from ends[0] to ends[1]; one more than passages.
  std::vector<int> edges;
  std::vector<Passage> passages;
  std::array<int, 2> ends{-1, -1};  ///< binding point ids

  friend bool operator==(const BindingArc&, const BindingArc&) = default;
};

struct BindingPoint {
  int id = 0;
  CutKind kind = CutKind::NearCrossing;
  int edge = 0;
  /// NearCrossing: the dart at the crossing the cut sits next to.
  /// TreeEdge: the dart whose side of the edge carries the touching point.
  Dart dart;
  std::array<int, 2> arcs{-1, -1};  ///< indices into BindingSequence::arcs

  friend bool operator==(const BindingPoint&, const BindingPoint&) = default;
};

struct BindingSequence {
  std::vector<BindingPoint> points;  ///< cyclic order along the circle
  std::vector<BindingArc> arcs;
  int m = 0;  ///< 2-cells of the tree it was built from
  bool repaired = false;  ///< at least one point was removed by repair()

  int size() const noexcept { return static_cast<int>(points.size()); }

  friend bool operator==(const BindingSequence&, const BindingSequence&) = default;
};

/// Which traversal of a Y-edge carries its touching point when both sides of
/// the edge lie outside Y.
enum class CutSide { Left, Right };

/// Walks the outer boundary of Y and records the cut points. Throws
/// PreconditionError if `y` is not an extended spanning tree of `cx`.
BindingSequence boundary_sequence(const ExtendedSpanningTree& y, const CellComplex& cx,
                                  CutSide side = CutSide::Left);

/// Removes touching points whose two arcs have the same inside type, merging
/// the arcs, until none is left. Only non-alternating edges qualify. A point
/// is kept when removing it would close an arc into a loop.
BindingSequence repair(const BindingSequence& seq, const PlaneDiagram& d);

struct BindingReport {
  bool finite = true;              ///< (1) finitely many, well-formed points
  bool crossings_inside = true;    ///< (2)
  bool single_type = true;         ///< (3)
  bool distinct_at_points = true;  ///< (4) arcs meeting at a point differ
  /// Informational only: consecutive points whose neighbouring arcs share a
  /// type (the alternative reading of adjacency along the circle).
  int consecutive_same_type = 0;
  std::vector<std::string> issues;

  bool ok() const noexcept { return finite && crossings_inside && single_type && distinct_at_points; }
};

/// Independent check of the binding-circle conditions against the diagram.
/// Never throws on bad sequences; problems are listed in `issues`.
BindingReport verify_binding(const BindingSequence& seq, const PlaneDiagram& d);

/// boundary_sequence (+ repair), falling back to the right-hand cut side when
/// the left-hand one does not verify. Throws InternalError if neither does.
BindingSequence build_binding(const ExtendedSpanningTree& y, const CellComplex& cx, bool with_repair = true);

}  // namespace threepage
