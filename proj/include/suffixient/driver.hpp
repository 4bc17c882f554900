#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "suffixient/sre_ledger.hpp"
#include "suffixient/sre_ltr.hpp"
#include "suffixient/sre_rtl.hpp"

// Glue shared by the command-line tool, the acceptance suite and the Python
// bindings: sentinel policy, JSONL traces, oracle cross-checks and cost runs.
namespace suffixient {

enum class EmitMode { kChi, kDeltas, kSss };

/// Right-to-left sentinel policy. kAuto keeps a trailing byte that occurs
/// nowhere else and otherwise appends 0x00; kByte appends `byte` unless the
/// input already ends with it; kNone requires the last byte to be unique.
struct Sentinel {
  enum class Kind { kAuto, kByte, kNone };
  Kind kind = Kind::kAuto;
  std::uint8_t byte = 0;

  static Sentinel automatic() { return {}; }
  static Sentinel of(std::uint8_t b) { return {Kind::kByte, b}; }
  static Sentinel none() { return {Kind::kNone, 0}; }
};

struct StreamOptions {
  Direction direction = Direction::kLeftToRight;
  AlphaEngine engine = AlphaEngine::kFringe;
  EmitMode emit = EmitMode::kDeltas;
  Sentinel sentinel;  // right-to-left only
  bool include_costs = false;
};

/// Logical text to feed right-to-left. Throws InputError when the policy
/// cannot produce a text ending with a unique letter.
std::string prepare_rtl_text(std::string_view input, Sentinel sentinel);

/// One JSONL record. Positions are in the stable coordinate of the
/// direction: from-right offsets (<= 0) for RTL, 1-based for LTR.
std::string trace_line(const DeltaReport& delta, const WeinerTree& tree, bool include_costs);

/// Feeds `input` (logical order) and writes the requested output.
void run_stream(std::string_view input, const StreamOptions& options, std::ostream& out);

/// The JSONL trace of a run, one string per step.
std::vector<std::string> trace_of(std::span<const LetterCode> logical, Direction direction,
                                  AlphaEngine engine, std::uint32_t alphabet_size,
                                  bool include_costs = false);

struct VerifyOptions {
  bool right_to_left = true;
  bool left_to_right = true;
  /// Compare every round with the naive builder (slow; n <= 64 advised).
  bool structure = false;
  /// Require identical traces from both ancestor engines.
  bool engines = true;
  bool inject_fault = false;
};

struct Divergence {
  std::string direction;
  std::size_t step = 0;
  std::string what;
};

/// Runs both maintainers over `body` (letters below `sigma`; RTL appends the
/// sentinel letter `sigma`) and compares every step with the oracle.
std::optional<Divergence> verify_sequence(std::span<const LetterCode> body, std::uint32_t sigma,
                                          const VerifyOptions& options);

/// Greedily deletes letters while verification still fails.
std::vector<LetterCode> shrink_failure(std::vector<LetterCode> body, std::uint32_t sigma,
                                       const VerifyOptions& options);

struct FuzzCase {
  std::vector<LetterCode> body;
  std::uint32_t sigma = 2;
};

/// Case `index` of a seeded fuzz run: sigma uniform in [2, max_sigma],
/// length uniform in [1, max_n], letters uniform below sigma.
std::vector<FuzzCase> fuzz_cases(std::size_t count, std::size_t max_n, std::uint32_t max_sigma,
                                 std::uint64_t seed);

struct FuzzFailure {
  FuzzCase original;
  std::vector<LetterCode> shrunk;
  Divergence divergence;  // of the shrunk case
};

/// Verifies every case; stops at the first failure and shrinks it.
std::optional<FuzzFailure> run_fuzz(std::span<const FuzzCase> cases, const VerifyOptions& options);

struct BenchRow {
  std::size_t step = 0;
  LetterCode letter = 0;
  OpCounters cost;
};

struct BenchSummary {
  std::uint64_t max = 0;
  double p999 = 0;
  double mean = 0;
};

/// Per-step costs of feeding `input` (logical order). RTL input is passed
/// through prepare_rtl_text first.
std::vector<BenchRow> run_bench(std::string_view input, Direction direction, AlphaEngine engine,
                                Sentinel sentinel = {});
BenchSummary summarize(std::span<const BenchRow> rows);
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace suffixient
