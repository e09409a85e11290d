#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "support.hpp"

using namespace threepage;
using namespace threepage::cli;
using namespace tp_test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(int (*cmd)(const std::vector<CorpusEntry>&, const RunConfig&, std::ostream&, std::ostream&),
        const std::string& text, const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = cmd(parse_corpus(text), cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Format f = Format::Text) {
  RunConfig c;
  c.format = f;
  return c;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze single diagrams") {
  auto cfg = config();
  cfg.exact = true;
  const auto r = run(cmd_analyze, std::string("t: ") + kTrefoil + "\nh: " + kHopf + "\n", cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.find("t: n=3") != std::string::npos);
  CHECK(r.out.find("bound=8") != std::string::npos);
  CHECK(r.out.find("bound=6") != std::string::npos);
  CHECK(r.out.find("theorem=yes") != std::string::npos);
  CHECK(r.out.find("t:") < r.out.find("h:"));
}

TEST_CASE("rows") {
  auto cfg = config();
  cfg.exact = true;
  const auto t = analyze_entry({"t", kTrefoil, 1, {}}, cfg);
  CHECK(t.bound == 8);
  CHECK(t.verified);
  CHECK(t.theorem == "yes");
  const auto h = analyze_entry({"h", kHopf, 1, {}}, cfg);
  CHECK(h.bound == 6);
  CHECK(h.theorem == "n/a");
  const auto s = analyze_entry({"s", kSplit, 1, {}}, cfg);
  CHECK(s.components == 2);
  CHECK(s.bound == 6 + 8);
  CHECK(s.presentations.size() == 2);
  const auto z = analyze_entry({"z", "PD[]", 1, {}}, cfg);
  CHECK(z.code == kOk);
  CHECK(z.bound == 1);
  cfg.extend = false;
  CHECK(analyze_entry({"t", kTrefoil, 1, {}}, cfg).bound == 10);
}

TEST_CASE("reduced corpus bounds stay within 3n-1") {
  auto cfg = config();
  cfg.exact = true;
  for (const auto& e : parse_corpus(slurp(THREEPAGE_CORPUS))) {
    const auto r = analyze_entry(e, cfg);
    CAPTURE(e.name);
    REQUIRE(r.code == kOk);
    if (r.components == 1 && r.reduced && r.n >= 3) CHECK(r.bound <= 3 * r.n - 1);
  }
}

TEST_CASE("exit codes") {
  const auto cfg = config();
  CHECK(run(cmd_analyze, "bad: PD[X(1,2,3)]\n", cfg).code == kParse);
  CHECK(run(cmd_analyze, "no separator\n", cfg).code == kParse);
  CHECK(run(cmd_analyze, "np: PD[X(1,1,2,2),X(3,4,3,4)]\n", cfg).code == kValidation);
  auto no_repair = cfg;
  no_repair.repair = false;
  CHECK(run(cmd_analyze, std::string("s: ") + kSwitchedTrefoil + "\n", no_repair).code == kVerification);
  CHECK(run(cmd_analyze, std::string("s: ") + kSwitchedTrefoil + "\n", cfg).code == kOk);
}

TEST_CASE("batch is sorted, deterministic and flags bad rows") {
  auto cfg = config(Format::Csv);
  cfg.nsis = true;
  const std::string text = std::string("z: ") + kTrefoil + "\nbroken line\na: " + kHopf + "\nm: PD[X(1,2,3)]\n";
  const auto a = run(cmd_batch, text, cfg);
  const auto b = run(cmd_batch, text, cfg);
  CHECK(a.out == b.out);
  CHECK(a.code == kParse);
  std::istringstream lines(a.out);
  std::string header, l1, l2, l3, l4;
  std::getline(lines, header);
  std::getline(lines, l1);
  std::getline(lines, l2);
  std::getline(lines, l3);
  std::getline(lines, l4);
  CHECK(header.find("nsis_max") != std::string::npos);
  CHECK(l1.rfind("a,", 0) == 0);
  CHECK(l2.rfind("line2,", 0) == 0);
  CHECK(l3.rfind("m,", 0) == 0);
  CHECK(l4.rfind("z,", 0) == 0);
  CHECK(l1.find(",ok,") != std::string::npos);
  CHECK(l2.find("error:1") != std::string::npos);
  CHECK(l4.find(",ok,") != std::string::npos);
}

TEST_CASE("whole corpus batch passes") {
  auto cfg = config(Format::Json);
  cfg.exact = true;
  cfg.nsis = true;
  cfg.oracle = true;
  const auto r = run(cmd_batch, slurp(THREEPAGE_CORPUS), cfg);
  CHECK(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() >= 15);
  for (const auto& row : j) {
    CAPTURE(row["name"].get<std::string>());
    CHECK(row["verified"] == true);
    CHECK(row["m_exact"].get<int>() <= row["nsis_max"].get<int>());
    if (!row["oracle_m"].is_null()) CHECK(row["oracle_m"] == row["m_exact"]);
  }
  CHECK(run(cmd_batch, slurp(THREEPAGE_CORPUS), cfg).out == r.out);
}

TEST_CASE("oracle and nsis commands") {
  const auto o = run(cmd_oracle, slurp(THREEPAGE_CORPUS), config(Format::Csv));
  CHECK(o.code == kOk);
  CHECK(o.out.find(",no,") == std::string::npos);
  CHECK(o.out.find("3_1,3,2,2,yes") != std::string::npos);
  const auto n = run(cmd_nsis, slurp(THREEPAGE_CORPUS), config());
  CHECK(n.code == kOk);
  CHECK(n.out.find("min nsis_max/n") != std::string::npos);
  const auto j = run(cmd_nsis, slurp(THREEPAGE_CORPUS), config(Format::Json));
  CHECK(nlohmann::json::parse(j.out)["rows"].size() >= 15);
}

TEST_CASE("render writes deterministic files") {
  const auto dir = std::filesystem::temp_directory_path() / "threepage_render_test";
  std::filesystem::remove_all(dir);
  auto cfg = config();
  cfg.svg_dir = dir.string();
  cfg.extend = false;
  const std::string text = std::string("3_1: ") + kTrefoil + "\n2_1^2: " + kHopf + "\n";
  REQUIRE(run(cmd_render, text, cfg).code == kOk);
  const auto first = slurp((dir / "3_1.svg").string());
  CHECK(first.find("data-points=\"10\"") != std::string::npos);
  REQUIRE(run(cmd_render, text, cfg).code == kOk);
  CHECK(slurp((dir / "3_1.svg").string()) == first);
  CHECK(std::filesystem::exists(dir / "2_1_2.svg"));
  cfg.svg_dir.clear();
  CHECK(run(cmd_render, text, cfg).code == kParse);
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg names") {
  CHECK(svg_file_name("3_1#-3_1") == "3_1_-3_1");
  CHECK(svg_file_name("") == "diagram");
}

}
