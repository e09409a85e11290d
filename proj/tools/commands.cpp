#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "threepage/nsis.hpp"
#include "threepage/pipeline.hpp"
#include "threepage/serialize.hpp"

namespace threepage::cli {

using nlohmann::json;

namespace {

void fail(Row& row, int code, const std::string& what) {
  row.code = code;
  row.error = what;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string opt(int v) { return v < 0 ? "" : std::to_string(v); }

json row_json(const Row& r, const RunConfig& cfg) {
  json j = {{"name", r.name}, {"line", r.line}, {"status", r.code == kOk ? "ok" : "error"}, {"code", r.code}};
  if (r.code != kOk) {
    j["error"] = r.error;
    return j;
  }
  j.update({{"n", r.n},
            {"components", r.components},
            {"F", r.faces},
            {"alternating", r.alternating},
            {"reduced", r.reduced},
            {"m_greedy", r.m_greedy},
            {"m", r.m},
            {"points_unrepaired", r.points_unrepaired},
            {"bound", r.bound},
            {"repaired", r.repaired},
            {"verified", r.verified},
            {"theorem", r.theorem},
            {"notes", r.notes}});
  if (r.m_exact >= 0) {
    j["m_exact"] = r.m_exact;
    j["exact_complete"] = r.exact_complete;
  }
  if (cfg.nsis) {
    j["nsis_max"] = r.nsis_max;
    j["nsis_greedy"] = r.nsis_greedy;
  }
  if (cfg.oracle) j["oracle_m"] = r.oracle_m >= 0 ? json(r.oracle_m) : json(nullptr);
  json ps = json::array();
  for (const auto& p : r.presentations) ps.push_back(to_json(p));
  j["presentations"] = ps;
  return j;
}

std::vector<std::string> csv_header(const RunConfig& cfg) {
  std::vector<std::string> h{"name",     "n",       "components",        "F",     "alternating", "reduced",
                             "m_greedy", "m_exact", "m", "points_unrepaired", "bound", "repaired",
                             "verified", "theorem"};
  if (cfg.nsis) h.insert(h.end(), {"nsis_max", "nsis_greedy"});
  if (cfg.oracle) h.push_back("oracle_m");
  h.insert(h.end(), {"status", "error"});
  return h;
}

std::vector<std::string> csv_row(const Row& r, const RunConfig& cfg) {
  const bool ok = r.code == kOk;
  auto num = [&](int v) { return ok ? opt(v) : std::string(); };
  auto flag = [&](bool b) { return ok ? yes_no(b) : std::string(); };
  std::vector<std::string> f{r.name,           num(r.n),        num(r.components),
                             num(r.faces),     flag(r.alternating), flag(r.reduced),
                             num(r.m_greedy),  num(r.m_exact),  num(r.m),
                             num(r.points_unrepaired), num(r.bound), flag(r.repaired),
                             flag(r.verified), ok ? r.theorem : ""};
  if (cfg.nsis) f.insert(f.end(), {num(r.nsis_max), num(r.nsis_greedy)});
  if (cfg.oracle) f.push_back(num(r.oracle_m));
  f.push_back(ok ? "ok" : "error:" + std::to_string(r.code));
  f.push_back(r.error);
  return f;
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

void write_text(std::ostream& out, const Row& r, const RunConfig& cfg) {
  out << r.name << ": ";
  if (r.code != kOk) {
    out << "error " << r.code << ": " << r.error << '\n';
    return;
  }
  out << "n=" << r.n << " F=" << r.faces;
  if (r.components > 1) out << " components=" << r.components;
  out << (r.alternating ? " alternating" : " non-alternating") << (r.reduced ? " reduced" : " not-reduced");
  out << " m_greedy=" << r.m_greedy;
  if (r.m_exact >= 0) out << " m_exact=" << r.m_exact << (r.exact_complete ? "" : "(incomplete)");
  out << " m=" << r.m << " points=" << r.points_unrepaired << " bound=" << r.bound;
  if (r.repaired) out << " repaired";
  out << " theorem=" << r.theorem;
  if (cfg.nsis) out << " nsis_max=" << r.nsis_max << " nsis_greedy=" << r.nsis_greedy;
  if (cfg.oracle) out << " oracle_m=" << (r.oracle_m >= 0 ? std::to_string(r.oracle_m) : "-");
  out << (r.verified ? " verified" : " UNVERIFIED") << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

int write_svgs(const std::vector<Row>& rows, const RunConfig& cfg, std::ostream& err) {
  if (cfg.svg_dir.empty()) return kOk;
  std::error_code ec;
  std::filesystem::create_directories(cfg.svg_dir, ec);
  int code = kOk;
  for (const auto& r : rows) {
    if (r.code != kOk) continue;
    for (size_t k = 0; k < r.presentations.size(); ++k) {
      std::string stem = svg_file_name(r.name);
      if (r.presentations.size() > 1) stem += "-" + std::to_string(k + 1);
      const auto path = std::filesystem::path(cfg.svg_dir) / (stem + ".svg");
      std::ofstream f(path, std::ios::binary);
      SvgOptions o;
      o.title = r.name + " (" + std::to_string(r.presentations[k].bound()) + " arcs)";
      f << render_svg(r.presentations[k], o);
      if (!f) {
        err << "cannot write " << path.string() << '\n';
        code = std::max(code, static_cast<int>(kParse));
      }
    }
  }
  return code;
}

int emit(std::vector<Row>& rows, const RunConfig& cfg, std::ostream& out, std::ostream& err, bool sorted) {
  if (sorted) {
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.name < b.name; });
  }
  int code = kOk;
  for (const auto& r : rows) code = std::max(code, r.code);
  switch (cfg.format) {
    case Format::Json: {
      json a = json::array();
      for (const auto& r : rows) a.push_back(row_json(r, cfg));
      out << a.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      write_csv_line(out, csv_header(cfg));
      for (const auto& r : rows) write_csv_line(out, csv_row(r, cfg));
      break;
    case Format::Text:
      for (const auto& r : rows) write_text(out, r, cfg);
      break;
  }
  for (const auto& r : rows) {
    if (r.code != kOk) err << r.name << " (line " << r.line << "): " << r.error << '\n';
  }
  return std::max(code, write_svgs(rows, cfg, err));
}

std::vector<Row> analyze_all(const std::vector<CorpusEntry>& entries, const RunConfig& cfg) {
  std::vector<Row> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) rows.push_back(analyze_entry(e, cfg));
  return rows;
}

}  // namespace

std::string svg_file_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                      c == '_' || c == '-';
    out += keep ? c : '_';
  }
  return out.empty() ? "diagram" : out;
}

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read " + path);
  ss << f.rdbuf();
  return ss.str();
}

Row analyze_entry(const CorpusEntry& entry, const RunConfig& cfg) {
  Row row;
  row.name = entry.name;
  row.line = entry.line;
  if (!entry.error.empty()) {
    fail(row, kParse, entry.error);
    return row;
  }
  try {
    const PlaneDiagram d = parse_pd(entry.pd);
    row.n = d.crossing_count();
    if (row.n == 0) {
      row.components = 1;
      row.faces = 1;
      row.alternating = row.reduced = true;
      row.presentations.push_back(ThreePagePresentation{});
      row.bound = row.points_unrepaired = 1;
      row.verified = verify_pages(row.presentations.back()).ok();
      row.notes.push_back("crossingless diagram: empty presentation, bound 1 by convention");
      if (!row.verified) fail(row, kVerification, "empty presentation failed page checks");
      return row;
    }
    const auto parts = connected_components(d);
    row.components = static_cast<int>(parts.size());
    row.alternating = row.reduced = true;
    row.verified = true;
    if (cfg.nsis) row.nsis_max = row.nsis_greedy = 0;
    if (cfg.oracle) row.oracle_m = 0;
    bool theorem_applies = row.components == 1;
    CertifyOptions o;
    o.exact = cfg.exact;
    o.extend = cfg.extend;
    o.repair = cfg.repair;
    o.budget = cfg.budget;
    o.seed = cfg.seed;
    if (cfg.exact) row.m_exact = 0;
    for (const auto& part : parts) {
      const CellComplex cx(part);
      const Certificate c = certify(cx, o);
      const PageReport pr = verify_presentation(c.presentation, part);
      if (!pr.ok() || !verify_binding(c.binding, part).ok()) {
        fail(row, kVerification, "presentation failed verification");
        row.verified = false;
        return row;
      }
      row.faces += c.faces;
      row.alternating = row.alternating && c.alternating;
      row.reduced = row.reduced && c.reduced;
      row.m_greedy += c.m_greedy;
      if (c.m_exact >= 0) {
        row.m_exact += c.m_exact;
        row.exact_complete = row.exact_complete && c.exact_complete;
      }
      row.m += c.m;
      row.points_unrepaired += c.points_unrepaired;
      row.bound += c.bound();
      row.repaired = row.repaired || c.presentation.repaired;
      for (const auto& n : c.notes) row.notes.push_back(n);
      row.presentations.push_back(c.presentation);
      if (cfg.nsis) {
        const SimpleGraph g = SimpleGraph::from_dual(dual_graph(cx));
        row.nsis_max += nsis_exact(g, cfg.budget).size;
        row.nsis_greedy += static_cast<int>(nsis_greedy_leafy(g, cfg.seed).size());
      }
      if (cfg.oracle) {
        if (row.oracle_m >= 0 && cx.vertex_count() <= kOracleMaxCrossings) {
          row.oracle_m += oracle_max_faces(cx);
        } else {
          row.oracle_m = -1;
        }
      }
    }
    if (row.components > 1) row.notes.push_back("split diagram: bound summed over components");
    if (theorem_applies && !cfg.extend) {
      row.notes.push_back("--no-extend: plain spanning tree, 3n-1 check skipped");
    } else if (theorem_applies && row.reduced && row.n >= 3) {
      row.theorem = row.bound <= 3 * row.n - 1 ? "yes" : "no";
      if (row.theorem == "no") fail(row, kVerification, "bound exceeds 3n-1 on a reduced diagram");
    } else if (theorem_applies && row.n <= 2) {
      row.notes.push_back("n<3: general 3n+1-m bound only");
    }
  } catch (const ParseError& e) {
    fail(row, kParse, e.what());
  } catch (const ValidationError& e) {
    fail(row, kValidation, e.what());
  } catch (const std::exception& e) {
    fail(row, kVerification, e.what());
  }
  return row;
}

int cmd_analyze(const std::vector<CorpusEntry>& entries, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  auto rows = analyze_all(entries, cfg);
  return emit(rows, cfg, out, err, false);
}

int cmd_batch(const std::vector<CorpusEntry>& entries, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto rows = analyze_all(entries, cfg);
  return emit(rows, cfg, out, err, true);
}

int cmd_render(const std::vector<CorpusEntry>& entries, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  if (cfg.svg_dir.empty()) {
    err << "render needs --svg DIR\n";
    return kParse;
  }
  auto rows = analyze_all(entries, cfg);
  int code = kOk;
  for (const auto& r : rows) {
    code = std::max(code, r.code);
    if (r.code != kOk) {
      err << r.name << " (line " << r.line << "): " << r.error << '\n';
      continue;
    }
    out << r.name << ": " << r.bound << " arcs -> " << svg_file_name(r.name) << ".svg\n";
  }
  return std::max(code, write_svgs(rows, cfg, err));
}

int cmd_oracle(const std::vector<CorpusEntry>& entries, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  struct OracleRow {
    std::string name;
    int code = kOk;
    std::string error;
    int n = 0;
    int exact = 0;
    int oracle = 0;
    bool skipped = false;
  };
  std::vector<OracleRow> rows;
  int code = kOk;
  for (const auto& e : entries) {
    OracleRow r;
    r.name = e.name;
    try {
      if (!e.error.empty()) throw ParseError(e.error);
      const PlaneDiagram d = parse_pd(e.pd);
      r.n = d.crossing_count();
      for (const auto& part : d.crossing_count() ? connected_components(d) : std::vector<PlaneDiagram>{}) {
        const CellComplex cx(part);
        if (cx.vertex_count() > kOracleMaxCrossings) {
          r.skipped = true;
          break;
        }
        r.exact += exact_max_faces(cx, cfg.budget).m;
        r.oracle += oracle_max_faces(cx);
      }
      if (!r.skipped && r.exact != r.oracle) {
        r.code = kVerification;
        r.error = "exact search and oracle disagree";
      }
    } catch (const ParseError& x) {
      r.code = kParse;
      r.error = x.what();
    } catch (const ValidationError& x) {
      r.code = kValidation;
      r.error = x.what();
    } catch (const std::exception& x) {
      r.code = kVerification;
      r.error = x.what();
    }
    code = std::max(code, r.code);
    if (r.code != kOk) err << r.name << ": " << r.error << '\n';
    rows.push_back(std::move(r));
  }
  auto agree = [](const OracleRow& r) { return r.skipped ? "skipped" : (r.exact == r.oracle ? "yes" : "no"); };
  switch (cfg.format) {
    case Format::Json: {
      json a = json::array();
      for (const auto& r : rows) {
        json j = {{"name", r.name}, {"code", r.code}, {"agree", agree(r)}};
        if (r.code == kOk && !r.skipped) j.update({{"n", r.n}, {"m_exact", r.exact}, {"m_oracle", r.oracle}});
        if (!r.error.empty()) j["error"] = r.error;
        a.push_back(j);
      }
      out << a.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "name,n,m_exact,m_oracle,agree,error\n";
      for (const auto& r : rows) {
        const bool show = r.code == kOk && !r.skipped;
        write_csv_line(out, {r.name, r.code == kOk ? std::to_string(r.n) : "", show ? std::to_string(r.exact) : "",
                             show ? std::to_string(r.oracle) : "", r.code == kOk ? agree(r) : "", r.error});
      }
      break;
    case Format::Text:
      for (const auto& r : rows) {
        out << r.name << ": ";
        if (r.code != kOk) {
          out << "error " << r.code << ": " << r.error << '\n';
        } else if (r.skipped) {
          out << "n=" << r.n << " skipped (oracle limit " << kOracleMaxCrossings << " crossings)\n";
        } else {
          out << "n=" << r.n << " m_exact=" << r.exact << " m_oracle=" << r.oracle << " agree=" << agree(r) << '\n';
        }
      }
      break;
  }
  return code;
}

int cmd_nsis(const std::vector<CorpusEntry>& entries, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunConfig c = cfg;
  c.exact = true;
  c.nsis = true;
  auto rows = analyze_all(entries, c);
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.name < b.name; });
  int code = kOk;
  std::vector<ProbeRecord> records;
  for (auto& r : rows) {
    if (r.code == kOk && r.m_exact > r.nsis_max) {
      r.code = kVerification;
      r.error = "m_max exceeds nsis_max";
    }
    code = std::max(code, r.code);
    if (r.code != kOk) {
      err << r.name << " (line " << r.line << "): " << r.error << '\n';
      continue;
    }
    records.push_back({r.name, r.n, r.faces, r.nsis_max, r.m_exact, r.bound});
  }
  const ProbeReport probe = conjecture_probe(records);
  switch (cfg.format) {
    case Format::Json:
      out << to_json(probe).dump(2) << '\n';
      break;
    case Format::Csv: {
      out << "name,n,F,nsis_max,nsis_greedy,m_max,bound,nsis_ratio,m_ratio\n";
      size_t k = 0;
      for (const auto& r : rows) {
        if (r.code != kOk || r.n == 0) continue;
        const auto& p = probe.rows.at(k++);
        char ratios[64];
        std::snprintf(ratios, sizeof ratios, "%.4f,%.4f", p.nsis_ratio, p.m_ratio);
        out << csv_field(r.name) << ',' << r.n << ',' << r.faces << ',' << r.nsis_max << ',' << r.nsis_greedy << ','
            << r.m_exact << ',' << r.bound << ',' << ratios << '\n';
      }
      break;
    }
    case Format::Text: {
      char line[160];
      std::snprintf(line, sizeof line, "%-12s %3s %3s %8s %6s %6s %10s %8s\n", "name", "n", "F", "nsis_max", "m_max",
                    "bound", "nsis_ratio", "m_ratio");
      out << line;
      for (const auto& p : probe.rows) {
        std::snprintf(line, sizeof line, "%-12s %3d %3d %8d %6d %6d %10.3f %8.3f\n", p.record.name.c_str(),
                      p.record.n, p.record.faces, p.record.nsis_max, p.record.m_max, p.record.bound, p.nsis_ratio,
                      p.m_ratio);
        out << line;
      }
      if (!probe.empty()) {
        std::snprintf(line, sizeof line, "min nsis_max/n = %.3f (%s), min m_max/n = %.3f (%s)\n",
                      probe.min_nsis_ratio, probe.min_nsis_name.c_str(), probe.min_m_ratio, probe.min_m_name.c_str());
        out << line;
      }
      out << "m_max != nsis_max: " << (probe.discrepancies.empty() ? "none" : "") ;
      for (size_t i = 0; i < probe.discrepancies.size(); ++i) out << (i ? ", " : "") << probe.discrepancies[i];
      out << '\n';
      break;
    }
  }
  return code;
}

}  // namespace threepage::cli
