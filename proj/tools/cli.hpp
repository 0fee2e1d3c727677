#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aluffi/polynomial.hpp"
#include "aluffi/ring.hpp"
#include "aluffi/syzygy.hpp"

namespace aluffi::cli {

using Json = nlohmann::ordered_json;

/// A line of the input file that is parsed later, in a ring that only exists
/// once the computation has started (candidates live in R[T]).
struct DeferredLine {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Parsed input file:
///
///   # comment
///   ring: x,y,z | params: u | order: grevlex
///   ideal: x+y, x-y          (repeatable)
///   I: ...   J: ...   certificate: c1, ..., cn   (one per J generator)
///   curve: f     family: F     matrix: [a, b; c, d]
///   candidate: x, y, T3      (repeatable; ideals in R[T])
struct InputFile {
  RingPtr ring;
  std::vector<std::vector<Polynomial>> ideals;
  std::optional<std::vector<Polynomial>> I, J;
  std::vector<std::vector<Polynomial>> certificates;
  std::optional<Polynomial> curve;
  std::optional<Polynomial> family;
  std::optional<PolyMatrix> matrix;
  std::vector<DeferredLine> candidates;
};

/// Throws ParseError (with line and column) on malformed input, unknown
/// variables or keys, and a missing or repeated ring header.
InputFile parse_input(std::string_view text, std::optional<std::string> order = std::nullopt);

/// "[a, b; c, d]" in `ring`.
PolyMatrix parse_matrix(const RingPtr& ring, std::string_view text, std::size_t line = 1, std::size_t column = 1);

struct Options {
  std::optional<std::string> order;
  int bound = 4;
  std::uint64_t seed = 1;
  std::optional<std::size_t> work_limit;
  std::optional<int> degree_cap;
  // Command-specific.
  int size = 1;
  int power = 2;
  int samples = 1;
  bool full = false;
  bool all = false;
  std::vector<std::string> vars;
  std::optional<std::string> block;
  std::optional<std::string> poly;
  std::vector<std::string> alpha;
  std::vector<std::string> members;
  std::vector<std::string> avoid;
  std::vector<std::string> names;
  std::optional<std::string> only;
  std::vector<int> inject;
};

/// command: e.g. {"gb"}, {"ideal", "intersect"}, {"aluffi", "torsion"},
/// {"family", "analyze"}, {"fixtures", "run"}, {"acceptance"}.
struct Job {
  std::vector<std::string> command;
  std::string input;
  Options options;
};

enum ExitCode : int { kSuccess = 0, kVerdictFailure = 1, kInputError = 2, kResourceLimit = 3 };

struct Outcome {
  Json report;
  int exit_code = kSuccess;
};

/// Runs a job. Input errors are reported in the outcome, never thrown; a
/// resource limit yields the partial report with the limit noted.
Outcome run(const Job& job);

/// Table rendering of a report; `seconds` is appended when given.
std::string render_human(const Json& report, std::optional<double> seconds = std::nullopt);
std::string render_machine(const Json& report);

struct FixtureInfo {
  std::string name;
  std::string kind;
  std::string provenance;
};

/// Catalog families first, then the worked examples, in a fixed order.
std::vector<FixtureInfo> fixture_list();

}  // namespace aluffi::cli
