#include "threepage/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "union_find.hpp"

namespace threepage {

using detail::UnionFind;

Page page_of(ArcType t) noexcept {
  switch (t) {
    case ArcType::InsideUnder: return Page::Under;
    case ArcType::InsideOver: return Page::Over;
    case ArcType::Outside: break;
  }
  return Page::Outside;
}

ThreePagePresentation to_presentation(const BindingSequence& seq, const PlaneDiagram& d) {
  const BindingReport report = verify_binding(seq, d);
  if (!report.ok()) {
    throw PreconditionError("binding sequence does not verify: " +
                            (report.issues.empty() ? std::string("?") : report.issues.front()));
  }
  return chords_of(seq);
}

ThreePagePresentation chords_of(const BindingSequence& seq) {
  ThreePagePresentation p;
  // The boundary walk runs counterclockwise around the tree.
  for (auto it = seq.points.rbegin(); it != seq.points.rend(); ++it) p.points.push_back(it->id);
  for (const auto& arc : seq.arcs) {
    Chord c;
    c.a = arc.ends[0];
    c.b = arc.ends[1];
    c.page = page_of(arc.type);
    for (const auto& ps : arc.passages) c.crossings.push_back(ps.crossing);
    p.arcs.push_back(std::move(c));
  }
  p.repaired = seq.repaired;
  return p;
}

bool interleaved(int a, int b, int c, int d) noexcept {
  if (c == a || c == b || d == a || d == b) return false;
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  const bool c_in = lo < c && c < hi;
  const bool d_in = lo < d && d < hi;
  return c_in != d_in;
}

namespace {

struct Layout {
  std::map<int, int> position;             // point id -> clockwise index
  std::map<int, std::vector<int>> arcs_at; // point id -> arc indices
};

Layout layout_of(const ThreePagePresentation& p, PageReport* report) {
  Layout l;
  for (size_t i = 0; i < p.points.size(); ++i) {
    if (!l.position.emplace(p.points[i], static_cast<int>(i)).second && report) {
      report->well_formed = false;
      report->issues.push_back("point " + std::to_string(p.points[i]) + " listed twice");
    }
  }
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    const auto& c = p.arcs[i];
    for (int end : {c.a, c.b}) {
      if (l.position.count(end)) l.arcs_at[end].push_back(static_cast<int>(i));
    }
  }
  return l;
}

bool chords_interleave(const Layout& l, const Chord& x, const Chord& y) {
  return interleaved(l.position.at(x.a), l.position.at(x.b), l.position.at(y.a), l.position.at(y.b));
}

}  // namespace

PageReport verify_pages(const ThreePagePresentation& p) {
  PageReport r;
  const Layout l = layout_of(p, &r);
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    const auto& c = p.arcs[i];
    const int page = static_cast<int>(c.page);
    if (page < 1 || page > 3) {
      r.well_formed = false;
      r.issues.push_back("arc " + std::to_string(i) + " has page " + std::to_string(page));
    }
    if (!l.position.count(c.a) || !l.position.count(c.b)) {
      r.well_formed = false;
      r.issues.push_back("arc " + std::to_string(i) + " ends at an unknown point");
    } else if (c.a == c.b) {
      r.well_formed = false;
      r.issues.push_back("arc " + std::to_string(i) + " is a loop at one point");
    }
  }
  if (!r.well_formed) return r;

  for (int id : p.points) {
    const auto it = l.arcs_at.find(id);
    const size_t deg = it == l.arcs_at.end() ? 0 : it->second.size();
    if (deg != 2) {
      r.degree_two = false;
      r.issues.push_back("point " + std::to_string(id) + " ends " + std::to_string(deg) + " arcs");
      continue;
    }
    if (p.arcs[it->second[0]].page == p.arcs[it->second[1]].page) {
      r.distinct_pages = false;
      r.issues.push_back("point " + std::to_string(id) + " joins two arcs on page " +
                         std::to_string(static_cast<int>(p.arcs[it->second[0]].page)));
    }
  }
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    for (size_t j = i + 1; j < p.arcs.size(); ++j) {
      if (p.arcs[i].page != p.arcs[j].page) continue;
      if (chords_interleave(l, p.arcs[i], p.arcs[j])) {
        r.planar_pages = false;
        r.interleaving_same_page.emplace_back(static_cast<int>(i), static_cast<int>(j));
        r.issues.push_back("arcs " + std::to_string(i) + " and " + std::to_string(j) + " interleave on page " +
                           std::to_string(static_cast<int>(p.arcs[i].page)));
      }
    }
  }
  return r;
}

PageReport verify_presentation(const ThreePagePresentation& p, const PlaneDiagram& d) {
  PageReport r = verify_pages(p);
  if (!r.well_formed) return r;
  auto mismatch = [&](std::string what) {
    r.matches_diagram = false;
    r.issues.push_back(std::move(what));
  };
  const int n = d.crossing_count();
  std::vector<int> on_page1(static_cast<size_t>(n), 0), on_page2(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    const auto& c = p.arcs[i];
    const std::string tag = "arc " + std::to_string(i);
    if (c.page == Page::Outside) {
      if (!c.crossings.empty()) mismatch(tag + " lies on page 3 but passes crossings");
      continue;
    }
    if (c.crossings.empty()) mismatch(tag + " lies inside but passes no crossing");
    for (int x : c.crossings) {
      if (x < 0 || x >= n) {
        mismatch(tag + " passes unknown crossing " + std::to_string(x));
        continue;
      }
      ++(c.page == Page::Under ? on_page1 : on_page2)[x];
    }
  }
  for (int x = 0; x < n; ++x) {
    if (on_page1[x] != 1 || on_page2[x] != 1) {
      mismatch("crossing " + std::to_string(x) + " is not on exactly one page-1 and one page-2 arc");
    }
  }
  if (!r.matches_diagram) return r;

  const Layout l = layout_of(p, nullptr);
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    const auto& u = p.arcs[i];
    if (u.page != Page::Under) continue;
    const std::set<int> ux(u.crossings.begin(), u.crossings.end());
    for (size_t j = 0; j < p.arcs.size(); ++j) {
      const auto& o = p.arcs[j];
      if (o.page != Page::Over) continue;
      if (o.a == u.a || o.a == u.b || o.b == u.a || o.b == u.b) continue;
      int shared = 0;
      for (int x : o.crossings) shared += ux.count(x) ? 1 : 0;
      if ((shared % 2 == 1) != chords_interleave(l, u, o)) {
        mismatch("arcs " + std::to_string(i) + " and " + std::to_string(j) + " share " + std::to_string(shared) +
                 " crossings but their chords " + (chords_interleave(l, u, o) ? "" : "do not ") + "interleave");
      }
    }
  }
  return r;
}

std::vector<std::pair<int, int>> crossing_pairs(const ThreePagePresentation& p) {
  std::vector<std::pair<int, int>> out;
  const Layout l = layout_of(p, nullptr);
  for (size_t i = 0; i < p.arcs.size(); ++i) {
    if (p.arcs[i].page != Page::Under) continue;
    for (size_t j = 0; j < p.arcs.size(); ++j) {
      if (p.arcs[j].page != Page::Over) continue;
      if (chords_interleave(l, p.arcs[i], p.arcs[j])) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

int traced_components(const ThreePagePresentation& p) {
  const Layout l = layout_of(p, nullptr);
  UnionFind uf(static_cast<int>(p.arcs.size()));
  int parts = static_cast<int>(p.arcs.size());
  for (const auto& [id, arcs] : l.arcs_at) {
    for (size_t k = 1; k < arcs.size(); ++k) {
      if (uf.unite(arcs[0], arcs[k])) --parts;
    }
  }
  return parts;
}

Reconstruction overlay_reconstruct(const ThreePagePresentation& p) {
  Reconstruction out;
  if (p.repaired) {
    out.reason = "repaired presentation: merged arcs make the chord overlay ambiguous";
    return out;
  }
  const PageReport pages = verify_pages(p);
  if (!pages.well_formed || !pages.degree_two || !pages.planar_pages) {
    out.reason = "pages do not verify";
    return out;
  }
  const Layout l = layout_of(p, nullptr);
  const int A = static_cast<int>(p.arcs.size());

  // Each inside chord may cross at most one chord of the other inside page.
  std::vector<int> crossing_of(static_cast<size_t>(A), -1);
  std::vector<std::pair<int, int>> pairs = crossing_pairs(p);
  std::vector<int> degree(static_cast<size_t>(A), 0);
  for (auto [u, o] : pairs) {
    ++degree[u];
    ++degree[o];
  }
  for (int i = 0; i < A; ++i) {
    if (degree[i] > 1) {
      out.reason = "arc " + std::to_string(i) + " crosses several chords";
      return out;
    }
  }
  const int n = static_cast<int>(pairs.size());
  for (int k = 0; k < n; ++k) {
    crossing_of[pairs[k].first] = k;
    crossing_of[pairs[k].second] = k;
  }

  // Local darts: (arc, endpoint) in counterclockwise order, which is
  // decreasing clockwise position, starting at an under direction.
  struct Direction {
    int arc;
    int point;
  };
  std::vector<std::array<Direction, 4>> local(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const auto [u, o] = pairs[k];
    std::array<Direction, 4> dirs{{{u, p.arcs[u].a}, {u, p.arcs[u].b}, {o, p.arcs[o].a}, {o, p.arcs[o].b}}};
    std::sort(dirs.begin(), dirs.end(), [&](const Direction& x, const Direction& y) {
      return l.position.at(x.point) > l.position.at(y.point);
    });
    while (dirs[0].arc != u) std::rotate(dirs.begin(), dirs.begin() + 1, dirs.end());
    local[k] = dirs;
  }
  auto local_index = [&](int k, int arc, int point) {
    for (int i = 0; i < 4; ++i) {
      if (local[k][i].arc == arc && local[k][i].point == point) return i;
    }
    return -1;
  };

  // Follow strands from each dart to the next crossing.
  std::vector<int> twin(static_cast<size_t>(4 * n), -1);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < 4; ++i) {
      int arc = local[k][i].arc;
      int point = local[k][i].point;
      for (int guard = 0; guard <= A; ++guard) {
        const auto& at = l.arcs_at.at(point);
        const int next = at[0] == arc ? at[1] : at[0];
        if (crossing_of[next] >= 0) {
          twin[4 * k + i] = 4 * crossing_of[next] + local_index(crossing_of[next], next, point);
          break;
        }
        arc = next;
        point = p.arcs[next].a == point ? p.arcs[next].b : p.arcs[next].a;
      }
    }
  }

  // Orient each strand and number edges along it; slot 0 becomes the
  // incoming under direction.
  std::vector<bool> visited(static_cast<size_t>(4 * n), false);
  std::vector<bool> incoming(static_cast<size_t>(4 * n), false);
  std::vector<long> label(static_cast<size_t>(4 * n), 0);
  long counter = 0;
  auto opposite_local = [](int dart) { return 4 * (dart / 4) + (dart % 4 + 2) % 4; };
  for (int start = 0; start < 4 * n; ++start) {
    if (visited[start] || visited[opposite_local(start)]) continue;
    int x = start;
    do {
      const int t = twin[x];
      visited[x] = visited[t] = true;
      incoming[t] = true;
      label[x] = label[t] = ++counter;
      x = opposite_local(t);
    } while (x != start);
  }
  std::vector<Labels> records;
  for (int k = 0; k < n; ++k) {
    const int s0 = incoming[4 * k] ? 0 : 2;
    records.push_back({label[4 * k + s0], label[4 * k + (s0 + 1) % 4], label[4 * k + (s0 + 2) % 4],
                       label[4 * k + (s0 + 3) % 4]});
  }
  out.diagram = PlaneDiagram::from_crossings(std::move(records));
  out.pd = out.diagram.to_pd();
  out.supported = true;
  return out;
}

}  // namespace threepage
