#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "threepage/diagram.hpp"
#include "threepage/presentation.hpp"

namespace threepage::cli {

enum class Mode { Analyze, Batch, Oracle, Nsis, Render };
enum class Format { Json, Csv, Text };

enum ExitCode : int { kOk = 0, kParse = 1, kValidation = 2, kVerification = 3 };

struct RunConfig {
  Mode mode = Mode::Analyze;
  bool exact = false;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  bool repair = true;
  bool extend = true;
  bool oracle = false;
  bool nsis = false;
  Format format = Format::Text;
  std::string svg_dir;  ///< empty: no SVG output
};

/// One diagram's results; split diagrams are summed over components.
struct Row {
  std::string name;
  int line = 0;
  int code = kOk;
  std::string error;

  int n = 0;
  int components = 0;
  int faces = 0;
  bool alternating = false;
  bool reduced = false;
  int m_greedy = 0;
  int m_exact = -1;
  bool exact_complete = true;
  int m = 0;
  int points_unrepaired = 0;
  int bound = 0;
  bool repaired = false;
  bool verified = false;
  std::string theorem = "n/a";  ///< bound <= 3n-1 where it applies: yes/no/n/a
  int nsis_max = -1;
  int nsis_greedy = -1;
  int oracle_m = -1;  ///< -1: not run or too large
  std::vector<std::string> notes;
  std::vector<ThreePagePresentation> presentations;  ///< one per component
};

Row analyze_entry(const CorpusEntry& entry, const RunConfig& config);

/// Corpus text from a file, or from stdin for "-". Throws ParseError when the
/// file cannot be read.
std::string read_input(const std::string& path);

int cmd_analyze(const std::vector<CorpusEntry>& entries, const RunConfig& config, std::ostream& out,
                std::ostream& err);
int cmd_batch(const std::vector<CorpusEntry>& entries, const RunConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_oracle(const std::vector<CorpusEntry>& entries, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_nsis(const std::vector<CorpusEntry>& entries, const RunConfig& config, std::ostream& out,
             std::ostream& err);
/// Writes one SVG per diagram into config.svg_dir.
int cmd_render(const std::vector<CorpusEntry>& entries, const RunConfig& config, std::ostream& out,
               std::ostream& err);

/// File name for a diagram's SVG: characters outside [A-Za-z0-9._-] become '_'.
std::string svg_file_name(const std::string& name);

}  // namespace threepage::cli
