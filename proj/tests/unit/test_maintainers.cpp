#include <random>

#include "doctest.h"
#include "suffixient/errors.hpp"
#include "suffixient/oracle.hpp"
#include "suffixient/sre_ltr.hpp"
#include "suffixient/sre_rtl.hpp"

using namespace suffixient;

namespace {

SrePairs expected_pairs(std::initializer_list<std::pair<std::string, char>> list) {
  SrePairs out;
  for (const auto& [u, x] : list) out.emplace_back(oracle::from_text(u), static_cast<LetterCode>(x));
  std::sort(out.begin(), out.end());
  return out;
}

RtlMaintainer run_rtl(const std::string& text, MaintainerOptions options = {}) {
  RtlMaintainer m(options);
  for (auto it = text.rbegin(); it != text.rend(); ++it) m.feed(static_cast<unsigned char>(*it));
  m.finish();
  return m;
}

LtrMaintainer run_ltr(const std::string& text, MaintainerOptions options = {}) {
  LtrMaintainer m(options);
  for (char c : text) m.feed(static_cast<unsigned char>(c));
  return m;
}

}  // namespace

TEST_CASE("first example string in both directions") {
  const auto pairs = expected_pairs({{"aaba", 'a'}, {"aaba", 'b'}, {"aba", '$'}});
  const std::vector<std::int64_t> sss{5, 8, 10};
  const auto r = run_rtl("aabaababa$");
  CHECK(r.chi() == 3);
  CHECK(r.sre_pairs() == pairs);
  CHECK(r.sss_positions() == sss);
  const auto l = run_ltr("aabaababa$");
  CHECK(l.chi() == 3);
  CHECK(l.sre_pairs() == pairs);
  CHECK(l.sss_positions() == sss);
}

TEST_CASE("second example string in both directions") {
  const auto pairs = expected_pairs({{"a", 'a'}, {"a", 'b'}, {"aabaab", 'a'}, {"aabaab", '$'}});
  const auto r = run_rtl("aabaabaab$");
  CHECK(r.sre_pairs() == pairs);
  CHECK(r.sss_positions() == std::vector<std::int64_t>{7, 8, 9, 10});
  const auto l = run_ltr("aabaabaab$");
  CHECK(l.sre_pairs() == pairs);
  CHECK(l.sss_positions() == std::vector<std::int64_t>{2, 3, 7, 10});
}

TEST_CASE("chi traces follow the oracle on every prefix and suffix") {
  const std::string w = "abaababaabaababaababa";
  const auto seq = oracle::from_text(w);
  const auto l = run_ltr(w);
  REQUIRE(l.chi_trace().size() == w.size());
  for (std::size_t k = 1; k <= w.size(); ++k) {
    CHECK(l.chi_trace()[k - 1] == oracle::chi(std::span(seq).first(k)));
  }
  const auto r = run_rtl(w + "$");
  const auto full = oracle::from_text(w + "$");
  for (std::size_t k = 1; k <= full.size(); ++k) {
    CHECK(r.chi_trace()[k - 1] == oracle::chi(std::span(full).last(k)));
  }
}

TEST_CASE("current sss uses a coordinate of the direction") {
  const auto r = run_rtl("ab$");
  for (const auto& c : r.current_sss()) CHECK(c.scheme == CoordScheme::kFromLeft);
  CHECK(r.sss_positions() == oracle::canonical_sss(oracle::from_text("ab$"), oracle::Side::kRightmost));
}

TEST_CASE("right-to-left misuse") {
  RtlMaintainer m;
  m.feed('$');
  CHECK_THROWS_AS(m.feed('$'), InputError);
  CHECK_THROWS_AS(m.feed(300), AlphabetError);
  m.feed('a');
  m.finish();
  CHECK_THROWS_AS(m.feed('b'), StateError);
  LtrMaintainer l;
  CHECK_THROWS_AS(l.feed(256), AlphabetError);
}

TEST_CASE("empty runs") {
  RtlMaintainer r;
  CHECK(r.chi() == 0);
  CHECK(r.sss_positions().empty());
  LtrMaintainer l;
  CHECK(l.sre_pairs().empty());
}

TEST_CASE("random inputs against the oracle, both growth modes") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    const auto sigma = 2 + rng() % 3;
    const auto n = 1 + rng() % 40;
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<char>('a' + rng() % sigma));
    MaintainerOptions options;
    options.growth = t % 2 ? GrowthMode::kIncremental : GrowthMode::kDoubling;
    const auto l = run_ltr(w, options);
    const auto seq = oracle::from_text(w);
    SrePairs expected;
    for (const auto& e : oracle::supermaximal_extensions(seq)) expected.emplace_back(e.u, e.x);
    REQUIRE(l.sre_pairs() == expected);
    REQUIRE(l.sss_positions() == oracle::canonical_sss(seq, oracle::Side::kLeftmost));

    const auto r = run_rtl(w + "$", options);
    const auto full = oracle::from_text(w + "$");
    expected.clear();
    for (const auto& e : oracle::supermaximal_extensions(full)) expected.emplace_back(e.u, e.x);
    REQUIRE(r.sre_pairs() == expected);
    REQUIRE(r.sss_positions() == oracle::canonical_sss(full, oracle::Side::kRightmost));
  }
}

TEST_CASE("fault injection is visible") {
  MaintainerOptions options;
  options.inject_fault = true;
  bool diverged = false;
  try {
    const auto l = run_ltr("aabaababa$", options);
    diverged = l.sss_positions() != std::vector<std::int64_t>{5, 8, 10};
  } catch (const InvariantViolation&) {
    diverged = true;
  }
  CHECK(diverged);
}
