#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "suffixient/driver.hpp"
#include "suffixient/errors.hpp"
#include "suffixient/oracle.hpp"

using namespace suffixient;

namespace {

std::string stream(const std::string& input, Direction d, EmitMode emit, Sentinel s = {}) {
  StreamOptions o;
  o.direction = d;
  o.emit = emit;
  o.sentinel = s;
  std::ostringstream out;
  run_stream(input, o, out);
  return out.str();
}

}  // namespace

TEST_CASE("stream outputs") {
  CHECK(stream("aabaababa$", Direction::kLeftToRight, EmitMode::kSss) == "5 8 10\n");
  CHECK(stream("aabaababa$", Direction::kRightToLeft, EmitMode::kChi) == "3\n");
  CHECK(stream("aabaabaab$", Direction::kLeftToRight, EmitMode::kSss) == "2 3 7 10\n");
  CHECK(stream("aabaabaab$", Direction::kRightToLeft, EmitMode::kSss) == "7 8 9 10\n");
  CHECK(stream("", Direction::kLeftToRight, EmitMode::kChi) == "0\n");
}

TEST_CASE("sentinel policy") {
  CHECK(prepare_rtl_text("ab$", Sentinel::automatic()) == "ab$");
  CHECK(prepare_rtl_text("abab", Sentinel::automatic()) == std::string("abab\0", 5));
  CHECK(prepare_rtl_text("ab", Sentinel::of('#')) == "ab#");
  CHECK(prepare_rtl_text("ab#", Sentinel::of('#')) == "ab#");
  CHECK_THROWS_AS(prepare_rtl_text("a#b", Sentinel::of('#')), InputError);
  CHECK_THROWS_AS(prepare_rtl_text("aba", Sentinel::none()), InputError);
  CHECK_THROWS_AS(prepare_rtl_text("", Sentinel::none()), InputError);
  CHECK(prepare_rtl_text("ab", Sentinel::none()) == "ab");
  CHECK_THROWS_AS(prepare_rtl_text(std::string("a\0a", 3), Sentinel::automatic()), InputError);
  // The default byte changes the string and hence chi.
  CHECK(stream("aabaababa$", Direction::kRightToLeft, EmitMode::kChi, Sentinel::of(0)) == "4\n");
}

TEST_CASE("trace records") {
  const auto out = stream("aab", Direction::kLeftToRight, EmitMode::kDeltas);
  std::istringstream lines(out);
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(lines, line)) records.push_back(nlohmann::json::parse(line));
  REQUIRE(records.size() == 3);
  CHECK(records[2]["step"] == 2);
  CHECK(records[2]["letter"] == 'b');
  CHECK(records[2]["chi"] == 2);
  CHECK(records[2]["added"].size() == 2);
  for (const auto& rec : records) CHECK_FALSE(rec.contains("max_ops_this_step"));
  std::size_t chi = 0;
  for (const auto& rec : records) chi += rec["added"].size() - rec["removed"].size();
  CHECK(chi == 2);

  StreamOptions o;
  o.include_costs = true;
  std::ostringstream costed;
  run_stream("aab", o, costed);
  CHECK(nlohmann::json::parse(costed.str().substr(0, costed.str().find('\n')))
            .contains("max_ops_this_step"));
}

TEST_CASE("traces are deterministic and engine independent") {
  const auto w = oracle::from_text("abracadabraabracadabra");
  for (auto d : {Direction::kLeftToRight, Direction::kRightToLeft}) {
    auto logical = w;
    if (d == Direction::kRightToLeft) logical.push_back('$');
    const auto a = trace_of(logical, d, AlphaEngine::kFringe, 256);
    CHECK(a == trace_of(logical, d, AlphaEngine::kFringe, 256));
    CHECK(a == trace_of(logical, d, AlphaEngine::kNaiveWalk, 256));
  }
}

TEST_CASE("verification and shrinking") {
  const std::vector<LetterCode> body{0, 0, 1, 0, 0, 1, 0, 1, 0};
  VerifyOptions options;
  options.structure = true;
  CHECK_FALSE(verify_sequence(body, 2, options));
  options.inject_fault = true;
  const auto d = verify_sequence(body, 2, options);
  REQUIRE(d);
  const auto shrunk = shrink_failure(body, 2, options);
  CHECK(shrunk.size() <= body.size());
  CHECK(verify_sequence(shrunk, 2, options));
  // Minimal: no single deletion still fails.
  for (std::size_t i = 0; i < shrunk.size(); ++i) {
    auto smaller = shrunk;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    CHECK_FALSE(verify_sequence(smaller, 2, options));
  }
}

TEST_CASE("fuzz cases are seeded") {
  const auto a = fuzz_cases(50, 20, 4, 3);
  const auto b = fuzz_cases(50, 20, 4, 3);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].body == b[i].body);
    CHECK(a[i].sigma >= 2);
    CHECK(a[i].sigma <= 4);
    CHECK_FALSE(a[i].body.empty());
    CHECK(a[i].body.size() <= 20);
  }
  CHECK_FALSE(run_fuzz(a, VerifyOptions{}));
  CHECK_THROWS_AS(fuzz_cases(1, 0, 4, 1), UsageError);
}

TEST_CASE("bench rows and summary") {
  const auto rows = run_bench(std::string(10000, 'a'), Direction::kLeftToRight, AlphaEngine::kFringe);
  CHECK(rows.size() == 10000);
  const auto s = summarize(rows);
  CHECK(s.max >= s.p999);
  CHECK(s.p999 >= 1);
  CHECK(s.mean > 0);
  std::ostringstream csv;
  write_bench_csv(csv, std::span(rows).first(2));
  const auto text = csv.str();
  CHECK(text.rfind("step,letter,list_ops,lca_steps,tree_updates\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  CHECK(summarize({}).max == 0);
}
