#include "threepage/complex.hpp"

#include <algorithm>
#include <string>

#include "union_find.hpp"

namespace threepage {

using detail::UnionFind;

CellComplex::CellComplex(PlaneDiagram diagram) : diagram_(std::move(diagram)) {
  const int n = diagram_.crossing_count();
  if (n == 0) throw ValidationError("cell complex needs at least one crossing");
  if (!is_connected(diagram_)) throw ValidationError("cell complex needs a connected diagram");

  face_of_dart_.assign(static_cast<size_t>(diagram_.dart_count()), -1);
  for (int i = 0; i < diagram_.dart_count(); ++i) {
    if (face_of_dart_[i] >= 0) continue;
    const int f = face_count();
    std::vector<Dart> walk;
    Dart d = PlaneDiagram::dart(i);
    while (face_of_dart_[PlaneDiagram::index(d)] < 0) {
      face_of_dart_[PlaneDiagram::index(d)] = f;
      walk.push_back(d);
      d = rotate_next(diagram_.twin(d));
    }
    if (d != walk.front()) throw ValidationError("face walk did not close; rotation data is inconsistent");
    faces_.push_back(std::move(walk));
  }

  const int chi = vertex_count() - edge_count() + face_count();
  if (chi != 2) {
    throw ValidationError("rotation system is not planar: V - E + F = " + std::to_string(chi));
  }

  for (const auto& walk : faces_) {
    std::vector<int> edges, verts;
    for (Dart d : walk) {
      edges.push_back(diagram_.edge_of(d));
      verts.push_back(d.crossing);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    face_edges_.push_back(std::move(edges));
    face_vertices_.push_back(std::move(verts));
  }
}

std::array<int, 2> CellComplex::edge_faces(int e) const {
  auto [a, b] = diagram_.edge_darts(e);
  return {face_of(a), face_of(b)};
}

std::vector<Shade> checkerboard(const CellComplex& cx) {
  const int F = cx.face_count();
  std::vector<int> color(static_cast<size_t>(F), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(F));
  for (int e = 0; e < cx.edge_count(); ++e) {
    auto [f, g] = cx.edge_faces(e);
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        stack.push_back(w);
      } else if (color[w] == color[u]) {
        throw ValidationError("faces admit no checkerboard coloring");
      }
    }
  }
  std::vector<Shade> out;
  out.reserve(color.size());
  for (int c : color) out.push_back(c == 0 ? Shade::Black : Shade::White);
  return out;
}

DualGraph dual_graph(const CellComplex& cx) {
  DualGraph g;
  g.vertex_count = cx.face_count();
  g.adjacency.resize(static_cast<size_t>(g.vertex_count));
  for (int e = 0; e < cx.edge_count(); ++e) {
    auto faces = cx.edge_faces(e);
    g.multi_edges.push_back(faces);
    if (faces[0] != faces[1]) {
      g.adjacency[faces[0]].push_back(faces[1]);
      g.adjacency[faces[1]].push_back(faces[0]);
    }
  }
  for (auto& nb : g.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.shade = checkerboard(cx);
  return g;
}

Subcomplex Subcomplex::empty(const CellComplex& cx) {
  return {std::vector<bool>(static_cast<size_t>(cx.vertex_count()), false),
          std::vector<bool>(static_cast<size_t>(cx.edge_count()), false),
          std::vector<bool>(static_cast<size_t>(cx.face_count()), false)};
}

Subcomplex Subcomplex::whole(const CellComplex& cx) {
  return {std::vector<bool>(static_cast<size_t>(cx.vertex_count()), true),
          std::vector<bool>(static_cast<size_t>(cx.edge_count()), true),
          std::vector<bool>(static_cast<size_t>(cx.face_count()), true)};
}

int Subcomplex::vertex_total() const { return static_cast<int>(std::count(vertices.begin(), vertices.end(), true)); }
int Subcomplex::edge_total() const { return static_cast<int>(std::count(edges.begin(), edges.end(), true)); }
int Subcomplex::face_total() const { return static_cast<int>(std::count(faces.begin(), faces.end(), true)); }

namespace {

void check_shape(const Subcomplex& y, const CellComplex& cx) {
  if (static_cast<int>(y.vertices.size()) != cx.vertex_count() ||
      static_cast<int>(y.edges.size()) != cx.edge_count() ||
      static_cast<int>(y.faces.size()) != cx.face_count()) {
    throw PreconditionError("subcomplex masks do not match the complex");
  }
}

}  // namespace

bool is_closed(const Subcomplex& y, const CellComplex& cx) {
  check_shape(y, cx);
  for (int f = 0; f < cx.face_count(); ++f) {
    if (!y.faces[f]) continue;
    for (int e : cx.face_edges(f)) {
      if (!y.edges[e]) return false;
    }
  }
  const auto& d = cx.diagram();
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (!y.edges[e]) continue;
    auto [a, b] = d.edge_darts(e);
    if (!y.vertices[a.crossing] || !y.vertices[b.crossing]) return false;
  }
  return true;
}

int euler_characteristic(const Subcomplex& y, const CellComplex& cx) {
  if (!is_closed(y, cx)) throw PreconditionError("euler_characteristic needs a closed subcomplex");
  return y.vertex_total() - y.edge_total() + y.face_total();
}

bool is_contractible(const Subcomplex& y, const CellComplex& cx) {
  if (!is_closed(y, cx)) return false;
  const int v = y.vertex_total();
  if (v == 0) return false;
  if (v == cx.vertex_count() && y.edge_total() == cx.edge_count() && y.face_total() == cx.face_count()) {
    return false;
  }
  UnionFind uf(cx.vertex_count());
  int parts = v;
  const auto& d = cx.diagram();
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (!y.edges[e]) continue;
    auto [a, b] = d.edge_darts(e);
    if (uf.unite(a.crossing, b.crossing)) --parts;
  }
  return parts == 1 && euler_characteristic(y, cx) == 1;
}

int complement_components(const Subcomplex& y, const CellComplex& cx) {
  check_shape(y, cx);
  UnionFind uf(cx.face_count());
  int parts = 0;
  for (int f = 0; f < cx.face_count(); ++f) parts += y.faces[f] ? 0 : 1;
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (y.edges[e]) continue;
    auto [f, g] = cx.edge_faces(e);
    if (y.faces[f] || y.faces[g]) continue;
    if (uf.unite(f, g)) --parts;
  }
  return parts;
}

}  // namespace threepage
