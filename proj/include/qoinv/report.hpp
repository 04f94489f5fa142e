#pragma once

// Front end shared by the qo-invariants tool and the tests: input document
// parsing, the full per-branch pipeline, and report rendering.

#include "qoinv/branch.hpp"
#include "qoinv/comparison.hpp"
#include "qoinv/error.hpp"
#include "qoinv/invariants.hpp"
#include "qoinv/zeta.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qoinv {

/// {"branch": [["2/7", "4/5"], ...], "strict": false}
struct InputDocument {
  CharacteristicTuple branch;
  bool strict = false;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

class ParseError : public InvalidInput {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Throws ParseError on malformed JSON, duplicate keys, unknown keys or a
/// bad fraction, and InvalidTuple(Empty) for an empty branch. Everything else
/// about the tuple is left to validate().
InputDocument parse_input(std::string_view text);

/// Canonical JSON text for `doc`; parse_input(render_input(doc)) == doc.
std::string render_input(const InputDocument& doc);

enum class Mode { Report, Verify, Zeta };
enum class AxisChoice { One, Two, Both };
enum class Format { Text, Structured };

struct AxisAnalysis {
  DerivationSequence seq;
  std::vector<BigInt> degrees;        // d^(k)
  std::vector<ExactRational> euler;   // chi^(k)
  CycloProduct horizontal;            // H(axis)
  CycloProduct vertical;              // V(axis)
  std::vector<BigInt> xi;             // xi^(k)
};

struct Analysis {
  CharacteristicTuple input;
  bool strict = false;
  std::optional<AxisAnalysis> axis1;
  std::optional<AxisAnalysis> axis2;
  std::optional<ComparisonReport> comparison;  // both axes only
  std::optional<BettiReport> betti;            // absent if its assertions failed
  std::vector<Check> checks;                   // zeta, Euler and Betti checks

  const AxisAnalysis& primary() const { return axis1 ? *axis1 : *axis2; }
  std::vector<Check> all_checks() const;
  bool all_pass() const;
};

/// Validates `input` (throws InvalidTuple) and runs the pipeline for the
/// requested axes. Identity failures are recorded as checks, not thrown.
Analysis analyze(const CharacteristicTuple& input, AxisChoice axes = AxisChoice::Both, bool strict = false);

struct RunOptions {
  Mode mode = Mode::Report;
  AxisChoice axes = AxisChoice::Both;
  Format format = Format::Text;
  bool strict = false;  // or-ed with the document's own flag
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_input = 1;
inline constexpr int theorem_violation = 2;
} // namespace exit_code

struct RunResult {
  int status = exit_code::ok;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

RunResult run(const InputDocument& input, const RunOptions& options);

std::string render_text(const Analysis& a, Mode mode);
std::string render_structured(const Analysis& a, Mode mode);

} // namespace qoinv
