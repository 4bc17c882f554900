#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "suffixient/driver.hpp"
#include "suffixient/errors.hpp"
#include "suffixient/generators.hpp"

namespace {

using namespace suffixient;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

enum class LogLevel { kQuiet, kInfo, kDebug };

LogLevel log_level() {
  const char* env = std::getenv("SUFFIXIENT_LOG");
  if (!env) return LogLevel::kQuiet;
  const std::string v = env;
  if (v == "debug") return LogLevel::kDebug;
  if (v == "info") return LogLevel::kInfo;
  return LogLevel::kQuiet;
}

void log(LogLevel level, const std::string& message) {
  if (log_level() >= level) std::cerr << "[suffixient] " << message << '\n';
}

std::string read_input(const std::string& literal, const std::string& path) {
  if (!literal.empty() && !path.empty()) throw UsageError("give either TEXT or --input, not both");
  if (!literal.empty()) return literal;
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Sentinel parse_sentinel(const std::string& arg) {
  if (arg == "none") return Sentinel::none();
  if (arg == "auto") return Sentinel::automatic();
  if (arg.size() == 1) return Sentinel::of(static_cast<std::uint8_t>(arg[0]));
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(arg, &used, 0);
  } catch (const std::exception&) {
  }
  if (used != arg.size() || value < 0 || value > 255) {
    throw UsageError("sentinel must be a single character, a byte value, 'auto' or 'none'");
  }
  return Sentinel::of(static_cast<std::uint8_t>(value));
}

std::string letters_to_string(const std::vector<LetterCode>& body, std::uint32_t sigma) {
  std::string out;
  for (auto x : body) {
    if (sigma <= 26) {
      out.push_back(static_cast<char>('a' + x));
    } else {
      out += (out.empty() ? "" : " ") + std::to_string(x);
    }
  }
  return out;
}

const std::map<std::string, Direction> kDirections{{"rtl", Direction::kRightToLeft},
                                                   {"ltr", Direction::kLeftToRight}};
const std::map<std::string, AlphaEngine> kEngines{{"fringe", AlphaEngine::kFringe},
                                                  {"naive-walk", AlphaEngine::kNaiveWalk}};
const std::map<std::string, EmitMode> kEmits{
    {"chi", EmitMode::kChi}, {"deltas", EmitMode::kDeltas}, {"sss", EmitMode::kSss}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online suffixient sets and supermaximal right-extensions"};
  app.require_subcommand(1);

  // stream
  auto* stream = app.add_subcommand("stream", "feed a text and report SREs, chi or an SSS");
  std::string stream_text, stream_input, stream_out, stream_sentinel = "auto";
  StreamOptions stream_opts;
  stream->add_option("text", stream_text, "literal input text (default: stdin)");
  stream->add_option("--input", stream_input, "input file, '-' for stdin");
  stream->add_option("--direction", stream_opts.direction)
      ->transform(CLI::CheckedTransformer(kDirections).description("{ltr,rtl}"))
      ->default_str("ltr");
  stream->add_option("--engine", stream_opts.engine)
      ->transform(CLI::CheckedTransformer(kEngines).description("{fringe,naive-walk}"))
      ->default_str("fringe");
  stream->add_option("--emit", stream_opts.emit)
      ->transform(CLI::CheckedTransformer(kEmits).description("{chi,deltas,sss}"))
      ->default_str("deltas");
  stream->add_option("--sentinel", stream_sentinel, "rtl sentinel: auto, character, byte value or none")
      ->capture_default_str();
  stream->add_option("--out", stream_out, "output file (default: stdout)");
  stream->add_flag("--costs", stream_opts.include_costs, "add max_ops_this_step to trace records");

  // check
  auto* check = app.add_subcommand("check", "cross-validate both maintainers against the oracle");
  std::size_t fuzz_count = 0, max_n = 64;
  std::uint32_t sigma = 4;
  std::uint64_t seed = 1;
  std::string check_input;
  VerifyOptions verify;
  auto* fuzz_opt = check->add_option("--fuzz", fuzz_count, "number of random cases");
  check->add_option("--max-n", max_n, "maximum case length")->capture_default_str();
  check->add_option("--sigma", sigma, "maximum alphabet size per case")->capture_default_str();
  check->add_option("--seed", seed)->capture_default_str();
  check->add_option("--input", check_input, "verify the bytes of a file instead")->excludes(fuzz_opt);
  check->add_flag("--structure", verify.structure, "also compare trees with the naive builder");
  check->add_flag("--inject-fault", verify.inject_fault)->group("");

  // gen
  auto* gen = app.add_subcommand("gen", "write a test corpus to stdout");
  std::string kind;
  std::size_t gen_n = 0;
  std::uint32_t gen_sigma = 2, gen_order = 0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"fibonacci", "debruijn", "random"}));
  gen->add_option("--n", gen_n, "length (order for debruijn when --order is absent)");
  gen->add_option("--order", gen_order, "de Bruijn order");
  gen->add_option("--sigma", gen_sigma)->capture_default_str();
  gen->add_option("--seed", gen_seed)->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "per-step operation counts");
  std::string bench_input, report, bench_sentinel = "auto";
  Direction bench_dir = Direction::kLeftToRight;
  AlphaEngine bench_engine = AlphaEngine::kFringe;
  bench->add_option("--direction", bench_dir)
      ->transform(CLI::CheckedTransformer(kDirections).description("{ltr,rtl}"))
      ->default_str("ltr");
  bench->add_option("--engine", bench_engine)
      ->transform(CLI::CheckedTransformer(kEngines).description("{fringe,naive-walk}"))
      ->default_str("fringe");
  bench->add_option("--input", bench_input, "input file, '-' for stdin");
  bench->add_option("--sentinel", bench_sentinel)->capture_default_str();
  bench->add_option("--report", report, "CSV destination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (stream->parsed()) {
      stream_opts.sentinel = parse_sentinel(stream_sentinel);
      const auto input = read_input(stream_text, stream_input);
      log(LogLevel::kInfo, "stream: " + std::to_string(input.size()) + " bytes");
      if (stream_out.empty()) {
        run_stream(input, stream_opts, std::cout);
      } else {
        std::ofstream out(stream_out, std::ios::binary);
        if (!out) throw InputError("cannot write " + stream_out);
        run_stream(input, stream_opts, out);
      }
      return 0;
    }

    if (check->parsed()) {
      std::vector<FuzzCase> cases;
      if (!check_input.empty()) {
        const auto bytes = read_input("", check_input);
        FuzzCase c;
        c.sigma = 256;
        c.body.assign(reinterpret_cast<const unsigned char*>(bytes.data()),
                      reinterpret_cast<const unsigned char*>(bytes.data()) + bytes.size());
        cases.push_back(std::move(c));
      } else {
        cases = fuzz_cases(fuzz_count, max_n, sigma, seed);
      }
      log(LogLevel::kInfo, "check: " + std::to_string(cases.size()) + " cases");
      if (const auto failure = run_fuzz(cases, verify)) {
        const auto& d = failure->divergence;
        std::cout << "FAIL " << d.direction << " step " << d.step << ": " << d.what << '\n'
                  << "original: " << letters_to_string(failure->original.body, failure->original.sigma)
                  << '\n'
                  << "shrunk: " << letters_to_string(failure->shrunk, failure->original.sigma) << '\n';
        return kExitVerification;
      }
      std::cout << "ok " << cases.size() << " cases\n";
      return 0;
    }

    if (gen->parsed()) {
      if (kind == "fibonacci") {
        std::cout << gen::fibonacci(gen_n);
      } else if (kind == "debruijn") {
        const auto order = gen_order ? gen_order : static_cast<std::uint32_t>(gen_n);
        if (order == 0) throw UsageError("debruijn needs --order or --n");
        std::cout << gen::de_bruijn(gen_sigma, order);
      } else {
        std::cout << gen::random_text(gen_n, gen_sigma, gen_seed);
      }
      return 0;
    }

    if (bench->parsed()) {
      const auto input = read_input("", bench_input);
      const auto rows = run_bench(input, bench_dir, bench_engine, parse_sentinel(bench_sentinel));
      if (!report.empty()) {
        std::ofstream out(report);
        if (!out) throw InputError("cannot write " + report);
        write_bench_csv(out, rows);
      }
      const auto s = summarize(rows);
      std::cout << "steps " << rows.size() << " max " << s.max << " p99.9 " << s.p999 << " mean "
                << s.mean << '\n';
      return 0;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
