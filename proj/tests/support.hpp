#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "threepage/binding.hpp"
#include "threepage/complex.hpp"
#include "threepage/diagram.hpp"
#include "threepage/presentation.hpp"
#include "threepage/spanning.hpp"

namespace tp_test {

using namespace threepage;

inline constexpr const char* kHopf = "PD[X(4,1,3,2), X(2,3,1,4)]";
inline constexpr const char* kTrefoil = "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]";
inline constexpr const char* kFigureEight = "PD[X(4,2,5,1), X(8,6,1,5), X(6,3,7,4), X(2,7,3,8)]";
// Trefoil with its first crossing switched.
inline constexpr const char* kSwitchedTrefoil = "PD[X(4,1,5,2), X(3,1,4,6), X(5,3,6,2)]";
// Trefoil with a Reidemeister-1 kink added on one edge.
inline constexpr const char* kKinkTrefoil = "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,8,2), X(6,7,7,8)]";
// Hopf link next to a trefoil, no shared arcs.
inline constexpr const char* kSplit =
    "PD[X(4,1,3,2), X(2,3,1,4), X(11,15,12,14), X(13,11,14,16), X(15,13,16,12)]";

struct Named {
  std::string name;
  PlaneDiagram diagram;
};

inline std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::vector<Named> corpus() {
  std::vector<Named> out;
  for (const auto& e : parse_corpus(slurp(THREEPAGE_CORPUS))) out.push_back({e.name, parse_pd(e.pd)});
  return out;
}

inline bool is_hopf(const PlaneDiagram& d) { return isomorphic(d, parse_pd(kHopf)); }

// ---- binding-level mutants ----

inline BindingArc reversed(BindingArc a) {
  std::reverse(a.edges.begin(), a.edges.end());
  std::reverse(a.passages.begin(), a.passages.end());
  for (auto& p : a.passages) std::swap(p.in_slot, p.out_slot);
  std::swap(a.ends[0], a.ends[1]);
  return a;
}

/// Removes point `i` and joins its two arcs into one, keeping the first
/// arc's type.
inline BindingSequence delete_point(BindingSequence seq, size_t i) {
  const BindingPoint p = seq.points[i];
  const int ia = p.arcs[0];
  const int ib = p.arcs[1];
  seq.points.erase(seq.points.begin() + static_cast<std::ptrdiff_t>(i));
  if (ia == ib) return seq;
  BindingArc a = seq.arcs[ia].ends[1] == p.id ? seq.arcs[ia] : reversed(seq.arcs[ia]);
  BindingArc b = seq.arcs[ib].ends[0] == p.id ? seq.arcs[ib] : reversed(seq.arcs[ib]);
  BindingArc merged = a;
  merged.edges.insert(merged.edges.end(), b.edges.begin() + 1, b.edges.end());
  merged.passages.insert(merged.passages.end(), b.passages.begin(), b.passages.end());
  merged.ends = {a.ends[0], b.ends[1]};
  seq.arcs[ia] = merged;
  seq.arcs.erase(seq.arcs.begin() + ib);
  for (auto& q : seq.points) {
    for (int& k : q.arcs) {
      if (k == ib) k = ia;
      if (k > ib) --k;
    }
  }
  return seq;
}

struct Mutant {
  std::string kind;
  std::function<bool(const PlaneDiagram&)> accepted;
};

/// A mutant counts as accepted only if every verifier passes it.
inline bool sequence_accepted(const BindingSequence& s, const PlaneDiagram& d) {
  return verify_binding(s, d).ok() && verify_presentation(chords_of(s), d).ok();
}

inline std::vector<Mutant> mutants(const BindingSequence& seq, const ThreePagePresentation& pres,
                                   const PlaneDiagram& d) {
  std::vector<Mutant> out;
  auto add_seq = [&](std::string kind, BindingSequence s) {
    out.push_back({std::move(kind), [s](const PlaneDiagram& dd) { return sequence_accepted(s, dd); }});
  };
  auto add_pres = [&](std::string kind, ThreePagePresentation p) {
    out.push_back({std::move(kind), [p](const PlaneDiagram& dd) { return verify_presentation(p, dd).ok(); }});
  };
  const ArcType types[] = {ArcType::Outside, ArcType::InsideOver, ArcType::InsideUnder};
  for (size_t i = 0; i < seq.arcs.size(); ++i) {
    for (ArcType t : types) {
      if (t == seq.arcs[i].type) continue;
      BindingSequence s = seq;
      s.arcs[i].type = t;
      add_seq("retype arc", s);
    }
  }
  for (size_t i = 0; i < seq.points.size(); ++i) {
    for (int e = 0; e < d.edge_count(); ++e) {
      if (e == seq.points[i].edge) continue;
      BindingSequence s = seq;
      s.points[i].edge = e;
      s.points[i].dart = d.edge_darts(e).first;
      add_seq("move cut", s);
    }
  }
  for (size_t i = 0; i < seq.points.size(); ++i) add_seq("delete point", delete_point(seq, i));

  const Page pages[] = {Page::Under, Page::Over, Page::Outside};
  for (size_t i = 0; i < pres.arcs.size(); ++i) {
    for (Page pg : pages) {
      if (pg == pres.arcs[i].page) continue;
      ThreePagePresentation p = pres;
      p.arcs[i].page = pg;
      add_pres("swap page", p);
    }
  }
  // Swap two points on the circle so that two chords of one page cross.
  const int N = static_cast<int>(pres.points.size());
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      ThreePagePresentation p = pres;
      std::swap(p.points[i], p.points[j]);
      if (verify_pages(p).planar_pages) continue;
      add_pres("interleave chords", p);
    }
  }
  return out;
}

// ---- subcomplexes ----

inline bool connected_with_all_vertices(const Subcomplex& y, const CellComplex& cx) {
  const auto& d = cx.diagram();
  std::vector<int> comp(static_cast<size_t>(cx.vertex_count()));
  for (int v = 0; v < cx.vertex_count(); ++v) comp[v] = v;
  std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (!y.edges[e]) continue;
    auto [a, b] = d.edge_darts(e);
    comp[find(a.crossing)] = find(b.crossing);
  }
  for (int v = 0; v < cx.vertex_count(); ++v) {
    if (!y.vertices[v] || find(v) != find(0)) return false;
  }
  return true;
}

/// All vertices, the faces in `faces`, their boundary edges, plus the
/// edges in `edges`.
inline Subcomplex closed_from(const CellComplex& cx, const std::vector<bool>& faces, const std::vector<bool>& edges) {
  Subcomplex y = Subcomplex::empty(cx);
  std::fill(y.vertices.begin(), y.vertices.end(), true);
  y.edges = edges;
  y.faces = faces;
  for (int f = 0; f < cx.face_count(); ++f) {
    if (!faces[f]) continue;
    for (int e : cx.face_edges(f)) y.edges[e] = true;
  }
  return y;
}

/// Closed subcomplexes with all vertices, by face mask then free edge mask.
inline void for_each_closed(const CellComplex& cx, const std::function<void(const Subcomplex&)>& visit) {
  const int F = cx.face_count();
  const int E = cx.edge_count();
  for (unsigned fm = 0; fm < (1u << F); ++fm) {
    std::vector<bool> faces(static_cast<size_t>(F));
    for (int f = 0; f < F; ++f) faces[f] = (fm >> f) & 1u;
    const Subcomplex base = closed_from(cx, faces, std::vector<bool>(static_cast<size_t>(E), false));
    std::vector<int> free;
    for (int e = 0; e < E; ++e) {
      if (!base.edges[e]) free.push_back(e);
    }
    for (unsigned em = 0; em < (1u << free.size()); ++em) {
      Subcomplex y = base;
      for (size_t k = 0; k < free.size(); ++k) y.edges[free[k]] = (em >> k) & 1u;
      visit(y);
    }
  }
}

inline Subcomplex random_closed(const CellComplex& cx, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double pf = u(rng) * 0.6;
  const double pe = 0.3 + u(rng) * 0.7;
  std::vector<bool> faces(static_cast<size_t>(cx.face_count()));
  std::vector<bool> edges(static_cast<size_t>(cx.edge_count()));
  for (size_t f = 0; f < faces.size(); ++f) faces[f] = u(rng) < pf;
  for (size_t e = 0; e < edges.size(); ++e) edges[e] = u(rng) < pe;
  return closed_from(cx, faces, edges);
}

}  // namespace tp_test
