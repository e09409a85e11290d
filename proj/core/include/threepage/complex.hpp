#pragma once

// The cell decomposition X(D) of the 2-sphere induced by a connected diagram:
// 0-cells are crossings, 1-cells are edges between crossings, 2-cells are the
// complementary regions. Also the checkerboard coloring and the dual graph.

#include <array>
#include <vector>

#include "threepage/diagram.hpp"

namespace threepage {

class CellComplex {
 public:
  /// Traces faces of a connected diagram with at least one crossing. Face
  /// walks follow `rotate_next(twin(d))`. Throws ValidationError when the
  /// diagram is disconnected or empty, or when the rotation system is not a
  /// sphere embedding (V - E + F != 2).
  explicit CellComplex(PlaneDiagram diagram);

  const PlaneDiagram& diagram() const noexcept { return diagram_; }

  int vertex_count() const noexcept { return diagram_.crossing_count(); }
  int edge_count() const noexcept { return diagram_.edge_count(); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  /// Boundary walk of face `f` as the sequence of darts leaving each corner.
  const std::vector<Dart>& face_walk(int f) const { return faces_.at(f); }
  /// Face whose boundary walk leaves through `d`.
  int face_of(Dart d) const { return face_of_dart_.at(PlaneDiagram::index(d)); }
  /// Face containing the corner between slots `k` and `k+1` at `crossing`.
  int corner_face(int crossing, int k) const { return face_of({crossing, (k + 1) % 4}); }

  /// The two face-sides of edge `e`, in the order of `edge_darts(e)`.
  std::array<int, 2> edge_faces(int e) const;
  /// Distinct boundary edges of `f`, ascending.
  const std::vector<int>& face_edges(int f) const { return face_edges_.at(f); }
  /// Distinct boundary vertices of `f`, ascending.
  const std::vector<int>& face_vertices(int f) const { return face_vertices_.at(f); }

 private:
  PlaneDiagram diagram_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<int> face_of_dart_;
  std::vector<std::vector<int>> face_edges_;
  std::vector<std::vector<int>> face_vertices_;
};

inline CellComplex build_complex(const PlaneDiagram& d) { return CellComplex(d); }

enum class Shade : unsigned char { Black, White };

/// Proper 2-coloring of the faces; face 0 is black.
std::vector<Shade> checkerboard(const CellComplex& cx);

struct DualGraph {
  int vertex_count = 0;
  /// One dual edge per primal edge, indexed by primal edge id.
  std::vector<std::array<int, 2>> multi_edges;
  /// Simple view: deduplicated, sorted neighbour lists without self-loops.
  std::vector<std::vector<int>> adjacency;
  std::vector<Shade> shade;
};

DualGraph dual_graph(const CellComplex& cx);

/// Sets of cells of a complex, as membership masks.
struct Subcomplex {
  std::vector<bool> vertices;
  std::vector<bool> edges;
  std::vector<bool> faces;

  static Subcomplex empty(const CellComplex& cx);
  static Subcomplex whole(const CellComplex& cx);

  int vertex_total() const;
  int edge_total() const;
  int face_total() const;
};

/// Every face's boundary edges and every edge's endpoints are present.
bool is_closed(const Subcomplex& y, const CellComplex& cx);

/// |V| - |E| + |F|. Throws PreconditionError for non-closed input.
int euler_characteristic(const Subcomplex& y, const CellComplex& cx);

/// Connected, chi = 1 and a proper subcomplex. For subcomplexes of the sphere
/// this is equivalent to contractibility.
bool is_contractible(const Subcomplex& y, const CellComplex& cx);

/// Components of the graph whose vertices are the faces outside `y` and whose
/// edges are the primal edges outside `y`.
int complement_components(const Subcomplex& y, const CellComplex& cx);

}  // namespace threepage
