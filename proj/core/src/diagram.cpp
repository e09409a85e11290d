#include "threepage/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "union_find.hpp"

namespace threepage {
namespace {

using detail::UnionFind;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Minimal recursive-descent reader over the PD grammar.
class PdReader {
 public:
  explicit PdReader(std::string_view text) : text_(text) {}

  std::vector<Labels> read() {
    skip_ws();
    expect_word("PD");
    expect('[');
    std::vector<Labels> out;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      finish();
      return out;
    }
    for (;;) {
      out.push_back(read_crossing(static_cast<int>(out.size())));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    finish();
    return out;
  }

 private:
  Labels read_crossing(int which) {
    skip_ws();
    expect_word("X");
    skip_ws();
    char open = peek();
    if (open != '(' && open != '[') fail("expected '(' after X");
    ++pos_;
    const char close = open == '(' ? ')' : ']';
    std::vector<long> labels;
    for (;;) {
      skip_ws();
      labels.push_back(read_int());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() != close) fail("unterminated crossing record");
      ++pos_;
      break;
    }
    if (labels.size() != 4) {
      throw ParseError("crossing " + std::to_string(which) + " has " +
                       std::to_string(labels.size()) + " labels, expected 4");
    }
    return {labels[0], labels[1], labels[2], labels[3]};
  }

  long read_int() {
    long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer label");
    pos_ += static_cast<size_t>(ptr - first);
    return value;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

PlaneDiagram PlaneDiagram::from_crossings(std::vector<Labels> crossings) {
  PlaneDiagram d;
  d.crossings_ = std::move(crossings);
  const int darts = d.dart_count();

  std::map<long, std::vector<int>> by_label;
  for (int i = 0; i < darts; ++i) {
    by_label[d.crossings_[i / 4][i % 4]].push_back(i);
  }
  d.twin_.assign(static_cast<size_t>(darts), -1);
  d.edge_of_.assign(static_cast<size_t>(darts), -1);
  for (const auto& [label, where] : by_label) {
    if (where.size() != 2) {
      throw ParseError("arc label " + std::to_string(label) + " appears " +
                       std::to_string(where.size()) + " times, expected 2");
    }
    const int e = static_cast<int>(d.edges_.size());
    d.edges_.push_back({where[0], where[1]});
    d.labels_.push_back(label);
    d.twin_[where[0]] = where[1];
    d.twin_[where[1]] = where[0];
    d.edge_of_[where[0]] = e;
    d.edge_of_[where[1]] = e;
  }
  return d;
}

bool PlaneDiagram::has_loop() const {
  for (int e = 0; e < edge_count(); ++e) {
    if (is_loop(e)) return true;
  }
  return false;
}

int PlaneDiagram::link_components() const {
  // Following strands from outgoing darts visits every component once in
  // each direction.
  std::vector<bool> seen(static_cast<size_t>(dart_count()), false);
  int cycles = 0;
  for (int i = 0; i < dart_count(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    int cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = index(opposite(twin(dart(cur))));
    }
  }
  return cycles / 2;
}

std::string PlaneDiagram::to_pd() const {
  std::ostringstream out;
  out << "PD[";
  for (size_t c = 0; c < crossings_.size(); ++c) {
    if (c) out << ", ";
    const auto& x = crossings_[c];
    out << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  out << ']';
  return out.str();
}

PlaneDiagram parse_pd(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty PD text");
  return PlaneDiagram::from_crossings(PdReader(text).read());
}

bool is_alternating(const PlaneDiagram& d) {
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [a, b] = d.edge_darts(e);
    if (strand_type(a) == strand_type(b)) return false;
  }
  return true;
}

bool is_connected(const PlaneDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return true;
  UnionFind uf(n);
  int parts = n;
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [a, b] = d.edge_darts(e);
    if (uf.unite(a.crossing, b.crossing)) --parts;
  }
  return parts == 1;
}

bool is_reduced(const PlaneDiagram& d) {
  if (!is_connected(d)) throw ValidationError("is_reduced requires a connected diagram");
  const int n = d.crossing_count();
  // Nodes: crossings 0..n-1, then four stubs standing in for the deleted one.
  for (int cut = 0; cut < n; ++cut) {
    UnionFind uf(n + 4);
    auto node = [&](Dart x) { return x.crossing == cut ? n + x.slot : x.crossing; };
    for (int e = 0; e < d.edge_count(); ++e) {
      auto [a, b] = d.edge_darts(e);
      uf.unite(node(a), node(b));
    }
    const int root = uf.find(n);
    for (int v = 0; v < n + 4; ++v) {
      if (v == cut) continue;
      if (uf.find(v) != root) return false;
    }
  }
  return true;
}

std::vector<PlaneDiagram> connected_components(const PlaneDiagram& d) {
  const int n = d.crossing_count();
  UnionFind uf(std::max(n, 1));
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [a, b] = d.edge_darts(e);
    uf.unite(a.crossing, b.crossing);
  }
  std::map<int, std::vector<Labels>> groups;  // keyed by smallest member
  for (int c = 0; c < n; ++c) groups[uf.find(c)].push_back(d.crossings()[c]);
  std::vector<PlaneDiagram> out;
  out.reserve(groups.size());
  for (auto& [root, records] : groups) out.push_back(PlaneDiagram::from_crossings(std::move(records)));
  return out;
}

namespace {

// Breadth-first relabeling from `start`, reading darts counterclockwise.
std::vector<int> code_from(const PlaneDiagram& d, Dart start) {
  const int n = d.crossing_count();
  std::vector<int> label(static_cast<size_t>(n), -1);
  std::vector<int> entry_slot(static_cast<size_t>(n), 0);
  std::vector<int> queue{start.crossing};
  label[start.crossing] = 0;
  entry_slot[start.crossing] = start.slot;
  std::vector<int> code;
  code.reserve(static_cast<size_t>(9 * n));
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    code.push_back(static_cast<int>(strand_type({v, entry_slot[v]})));
    for (int k = 0; k < 4; ++k) {
      const Dart t = d.twin({v, (entry_slot[v] + k) % 4});
      if (label[t.crossing] < 0) {
        label[t.crossing] = static_cast<int>(queue.size());
        entry_slot[t.crossing] = t.slot;
        queue.push_back(t.crossing);
      }
      code.push_back(label[t.crossing]);
      code.push_back((t.slot - entry_slot[t.crossing] + 4) % 4);
    }
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(const PlaneDiagram& d) {
  std::vector<std::vector<int>> parts;
  for (const auto& component : connected_components(d)) {
    std::vector<int> best;
    for (int i = 0; i < component.dart_count(); ++i) {
      auto code = code_from(component, PlaneDiagram::dart(i));
      if (best.empty() || code < best) best = std::move(code);
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<int> out;
  for (const auto& p : parts) {
    out.push_back(-1);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  int line_no = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    CorpusEntry entry;
    entry.line = line_no;
    const size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      entry.name = "line" + std::to_string(line_no);
      entry.pd = std::string(line);
      entry.error = "missing 'name:' prefix";
    } else {
      entry.name = std::string(trim(line.substr(0, colon)));
      entry.pd = std::string(trim(line.substr(colon + 1)));
      if (entry.name.empty()) {
        entry.name = "line" + std::to_string(line_no);
        entry.error = "empty diagram name";
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace threepage
