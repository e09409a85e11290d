#pragma once

// Circular three-page presentations: binding points in clockwise order on a
// circle, and arcs as chords assigned to one of three pages. Pages 1 and 2
// are drawn inside the circle (1 under, 2 over); page 3 is outside.

#include <string>
#include <utility>
#include <vector>

#include "threepage/binding.hpp"
#include "threepage/diagram.hpp"

namespace threepage {

enum class Page : int { Under = 1, Over = 2, Outside = 3 };

Page page_of(ArcType t) noexcept;

struct Chord {
  int a = 0;  ///< binding point id
  int b = 0;
  Page page = Page::Outside;
  std::vector<int> crossings;  ///< crossings passed, in order from a to b

  friend bool operator==(const Chord&, const Chord&) = default;
};

struct ThreePagePresentation {
  std::vector<int> points;  ///< binding point ids, clockwise
  std::vector<Chord> arcs;
  bool repaired = false;

  /// Number of arcs, i.e. the certified upper bound on the three-page index.
  int bound() const noexcept { return static_cast<int>(arcs.size()); }

  friend bool operator==(const ThreePagePresentation&, const ThreePagePresentation&) = default;
};

/// Throws PreconditionError unless verify_binding(seq, d) passes.
ThreePagePresentation to_presentation(const BindingSequence& seq, const PlaneDiagram& d);

/// The same conversion without verification, for inspecting sequences that
/// are not binding circles (e.g. unrepaired non-alternating ones).
ThreePagePresentation chords_of(const BindingSequence& seq);

/// True iff chords (a,b) and (c,d) on a circle cross: exactly one of c, d
/// lies strictly between a and b. Arguments are positions; chords sharing an
/// endpoint never interleave.
bool interleaved(int a, int b, int c, int d) noexcept;

struct PageReport {
  bool well_formed = true;     ///< known points, page values in 1..3
  bool degree_two = true;      ///< every point ends exactly two arcs
  bool distinct_pages = true;  ///< the two arcs at a point lie on different pages
  bool planar_pages = true;    ///< no two chords of one page interleave
  bool matches_diagram = true; ///< only set by verify_presentation
  std::vector<std::pair<int, int>> interleaving_same_page;  ///< arc index pairs
  std::vector<std::string> issues;

  bool ok() const noexcept {
    return well_formed && degree_two && distinct_pages && planar_pages && matches_diagram;
  }
};

/// Book-embedding well-formedness of the chord diagram alone.
PageReport verify_pages(const ThreePagePresentation& p);

/// verify_pages plus consistency with the diagram the presentation claims to
/// carry: page-3 arcs pass no crossing, inside arcs pass at least one, every
/// crossing lies on exactly one page-1 and one page-2 arc, and a page-1 and a
/// page-2 arc without a common endpoint interleave iff they share an odd
/// number of crossings.
PageReport verify_presentation(const ThreePagePresentation& p, const PlaneDiagram& d);

/// Arc index pairs (page-1 arc, page-2 arc) whose chords interleave.
std::vector<std::pair<int, int>> crossing_pairs(const ThreePagePresentation& p);

/// Closed curves obtained by gluing arcs at their binding points.
int traced_components(const ThreePagePresentation& p);

struct Reconstruction {
  bool supported = false;
  std::string reason;  ///< why reconstruction was refused
  PlaneDiagram diagram;
  std::string pd;
};

/// Rebuilds a diagram by drawing page-1 and page-2 arcs as straight chords:
/// crossings are interleaving (page-1, page-2) pairs with the page-2 strand
/// over. Refused for repaired presentations, for chord diagrams that are not
/// well formed or have interleaving chords on one page, and for inside chords
/// crossing more than one chord of the other inside page. Two arcs of one
/// page meeting at a point are accepted; they simply continue each other.
Reconstruction overlay_reconstruct(const ThreePagePresentation& p);

struct SvgOptions {
  double radius = 160.0;
  double margin = 90.0;
  bool labels = true;
  std::string title;
};

/// Self-contained SVG drawing of the presentation; the same input and options
/// always give the same bytes.
std::string render_svg(const ThreePagePresentation& p, const SvgOptions& options = {});

}  // namespace threepage
