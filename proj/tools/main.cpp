#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace threepage;
using namespace threepage::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certified three-page presentations of link diagrams"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input;
  std::string pd;
  std::string format;

  auto add_common = [&](CLI::App* sub, const char* default_format) {
    sub->add_option("input", input, "corpus file (`name: PD[...]` per line), or - for stdin");
    sub->add_option("--pd", pd, "a single PD code instead of an input file");
    sub->add_flag("--exact", cfg.exact, "maximize m by exact branch-and-bound");
    sub->add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber);
    sub->add_flag("--no-repair", [&](std::int64_t) { cfg.repair = false; }, "skip the non-alternating repair");
    sub->add_flag("--no-extend", [&](std::int64_t) { cfg.extend = false; }, "plain spanning tree (m = 0)");
    sub->add_flag("--oracle", cfg.oracle, "also run the subcomplex enumeration oracle (n <= 6)");
    sub->add_flag("--nsis", cfg.nsis, "add non-separating independent set columns");
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_str(default_format);
    sub->add_option("--seed", cfg.seed, "seed for randomized strategies");
    sub->add_option("--svg", cfg.svg_dir, "write one SVG per diagram into DIR");
  };

  auto* analyze = app.add_subcommand("analyze", "certify bounds for each diagram, in input order");
  auto* batch = app.add_subcommand("batch", "corpus report, rows sorted by name");
  auto* oracle = app.add_subcommand("oracle", "compare exact search with full enumeration");
  auto* nsis = app.add_subcommand("nsis", "dual-graph NSIS report and ratio table");
  auto* render = app.add_subcommand("render", "write SVG figures (requires --svg DIR)");
  add_common(analyze, "text");
  add_common(batch, "csv");
  add_common(oracle, "text");
  add_common(nsis, "text");
  add_common(render, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  if (format.empty()) format = *batch ? "csv" : "text";
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  std::vector<CorpusEntry> entries;
  try {
    if (!pd.empty()) {
      entries.push_back({"input", pd, 1, {}});
    } else if (!input.empty()) {
      entries = parse_corpus(read_input(input));
    } else {
      std::cerr << "no input: give a corpus file, - for stdin, or --pd\n";
      return kParse;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  }

  if (*analyze) return cmd_analyze(entries, cfg, std::cout, std::cerr);
  if (*batch) return cmd_batch(entries, cfg, std::cout, std::cerr);
  if (*oracle) return cmd_oracle(entries, cfg, std::cout, std::cerr);
  if (*nsis) return cmd_nsis(entries, cfg, std::cout, std::cerr);
  return cmd_render(entries, cfg, std::cout, std::cerr);
}
