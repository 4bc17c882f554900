#include "suffixient/driver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "json.hpp"

#include "suffixient/errors.hpp"
#include "suffixient/naive_tree.hpp"
#include "suffixient/oracle.hpp"

namespace suffixient {

namespace {

constexpr std::uint32_t kByteAlphabet = 256;

nlohmann::ordered_json entries_json(const std::vector<SreEntry>& entries, const WeinerTree& tree) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json item;
    item["u_len"] = tree.node(e.key.node).depth;
    item["x"] = e.key.letter;
    item["position"] = e.position.value;
    arr.push_back(std::move(item));
  }
  return arr;
}

template <class Maintainer, class Fn>
void feed_all(Maintainer& m, std::span<const LetterCode> logical, Direction direction, Fn&& on_step) {
  if (direction == Direction::kLeftToRight) {
    for (auto c : logical) on_step(m.feed(c));
  } else {
    for (auto it = logical.rbegin(); it != logical.rend(); ++it) on_step(m.feed(*it));
  }
}

std::vector<LetterCode> bytes_of(std::string_view text) {
  return {reinterpret_cast<const unsigned char*>(text.data()),
          reinterpret_cast<const unsigned char*>(text.data()) + text.size()};
}

SrePairs as_pairs(const oracle::ExtensionSet& set) {
  SrePairs out;
  out.reserve(set.size());
  for (const auto& e : set) out.emplace_back(e.u, e.x);
  return out;
}

std::string positions_to_string(const std::vector<std::int64_t>& p) {
  std::string s;
  for (auto v : p) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "{" + s + "}";
}

// Structural comparison with the naive builder, plus recovery of every
// defined W-link from hard links alone.
std::optional<std::string> check_structure(const WeinerTree& tree) {
  const auto naive = naive_builder(tree.buffer());
  const auto actual = canonical_form(tree);
  if (auto diff = describe_difference(naive.nodes, actual); !diff.empty()) return diff;
  for (std::uint32_t id = 0; id < tree.node_count(); ++id) {
    const NodeId node{id};
    const auto label = tree.label(node);
    const auto& expected = naive.links.contains(label) ? naive.links.at(label)
                                                       : std::map<LetterCode, WLink>{};
    if (expected.empty() && tree.lambda() != node) {
      return "node " + label_to_string(label) + " has no defined W-link";
    }
    for (const auto& [x, link] : expected) {
      const auto got = tree.resolve_wlink(node, x);
      if (!got || tree.label(*got) != link.destination) {
        return "W-link " + std::to_string(x) + " of " + label_to_string(label) + " resolves wrongly";
      }
    }
    for (LetterCode x = 0; x < tree.buffer().alphabet_size(); ++x) {
      if (!expected.contains(x) && tree.resolve_wlink(node, x)) {
        return "undefined W-link " + std::to_string(x) + " of " + label_to_string(label) +
               " resolves";
      }
    }
  }
  return std::nullopt;
}

template <class Maintainer>
std::optional<std::string> compare_with_oracle(const Maintainer& m,
                                               std::span<const LetterCode> current,
                                               oracle::Side side) {
  const auto expected = as_pairs(oracle::supermaximal_extensions(current));
  const auto got = m.sre_pairs();
  if (got != expected) {
    return "SRE set differs: expected " + std::to_string(expected.size()) + " entries, got " +
           std::to_string(got.size());
  }
  if (m.chi() != expected.size()) return "chi differs from the SRE count";
  const auto sss = m.sss_positions();
  if (sss.size() != m.chi()) return "SSS size differs from chi";
  if (!oracle::is_suffixient(current, sss)) return "SSS " + positions_to_string(sss) + " is not suffixient";
  const auto canonical = oracle::canonical_sss(current, side);
  if (sss != canonical) {
    return "SSS " + positions_to_string(sss) + " differs from extreme-ends set " +
           positions_to_string(canonical);
  }
  return std::nullopt;
}

}  // namespace

std::string prepare_rtl_text(std::string_view input, Sentinel sentinel) {
  const bool unique_last =
      !input.empty() && input.substr(0, input.size() - 1).find(input.back()) == std::string_view::npos;
  switch (sentinel.kind) {
    case Sentinel::Kind::kNone:
      if (!unique_last) throw InputError("last byte is not a unique sentinel");
      return std::string(input);
    case Sentinel::Kind::kAuto:
      if (unique_last) return std::string(input);
      break;
    case Sentinel::Kind::kByte:
      break;
  }
  const char s = static_cast<char>(sentinel.byte);
  std::string_view body = input;
  if (!body.empty() && body.back() == s) body.remove_suffix(1);
  if (body.find(s) != std::string_view::npos) {
    throw InputError("sentinel byte " + std::to_string(sentinel.byte) + " occurs inside the input");
  }
  std::string out(body);
  out.push_back(s);
  return out;
}

std::string trace_line(const DeltaReport& delta, const WeinerTree& tree, bool include_costs) {
  nlohmann::ordered_json j;
  j["step"] = delta.step;
  j["letter"] = delta.letter;
  j["added"] = entries_json(delta.added, tree);
  j["removed"] = entries_json(delta.removed, tree);
  j["chi"] = delta.chi;
  if (include_costs) j["max_ops_this_step"] = delta.cost.total();
  return j.dump();
}

std::vector<std::string> trace_of(std::span<const LetterCode> logical, Direction direction,
                                  AlphaEngine engine, std::uint32_t alphabet_size,
                                  bool include_costs) {
  MaintainerOptions options;
  options.alphabet_size = alphabet_size;
  options.engine = engine;
  std::vector<std::string> lines;
  auto run = [&](auto& m) {
    feed_all(m, logical, direction,
             [&](const DeltaReport& d) { lines.push_back(trace_line(d, m.tree(), include_costs)); });
  };
  if (direction == Direction::kLeftToRight) {
    LtrMaintainer m(options);
    run(m);
  } else {
    RtlMaintainer m(options);
    run(m);
  }
  return lines;
}

void run_stream(std::string_view input, const StreamOptions& options, std::ostream& out) {
  MaintainerOptions mo;
  mo.alphabet_size = kByteAlphabet;
  mo.engine = options.engine;
  auto run = [&](auto& m, std::span<const LetterCode> letters) {
    feed_all(m, letters, options.direction, [&](const DeltaReport& d) {
      if (options.emit == EmitMode::kDeltas) out << trace_line(d, m.tree(), options.include_costs) << '\n';
    });
    if (options.emit == EmitMode::kChi) out << m.chi() << '\n';
    if (options.emit == EmitMode::kSss) {
      std::string line;
      for (auto p : m.sss_positions()) line += (line.empty() ? "" : " ") + std::to_string(p);
      out << line << '\n';
    }
  };
  if (options.direction == Direction::kLeftToRight) {
    const auto letters = bytes_of(input);
    LtrMaintainer m(mo);
    run(m, letters);
  } else {
    const auto letters = bytes_of(prepare_rtl_text(input, options.sentinel));
    RtlMaintainer m(mo);
    run(m, letters);
    m.finish();
  }
}

std::optional<Divergence> verify_sequence(std::span<const LetterCode> body, std::uint32_t sigma,
                                          const VerifyOptions& options) {
  MaintainerOptions mo;
  mo.alphabet_size = sigma + 1;
  mo.inject_fault = options.inject_fault;
  MaintainerOptions walk = mo;
  walk.engine = AlphaEngine::kNaiveWalk;

  if (options.left_to_right) {
    LtrMaintainer fringe(mo);
    LtrMaintainer naive(walk);
    for (std::size_t k = 0; k < body.size(); ++k) {
      try {
        const auto d = fringe.feed(body[k]);
        if (options.engines) {
          const auto dn = naive.feed(body[k]);
          if (trace_line(d, fringe.tree(), false) != trace_line(dn, naive.tree(), false)) {
            return Divergence{"ltr", k, "ancestor engines disagree"};
          }
        }
        if (auto err = compare_with_oracle(fringe, body.subspan(0, k + 1), oracle::Side::kLeftmost)) {
          return Divergence{"ltr", k, *err};
        }
        if (options.structure) {
          if (auto err = check_structure(fringe.tree())) return Divergence{"ltr", k, *err};
        }
      } catch (const Error& e) {
        return Divergence{"ltr", k, e.what()};
      }
    }
  }
  if (options.right_to_left) {
    std::vector<LetterCode> full(body.begin(), body.end());
    full.push_back(sigma);
    RtlMaintainer fringe(mo);
    RtlMaintainer naive(walk);
    for (std::size_t k = 0; k < full.size(); ++k) {
      const auto letter = full[full.size() - 1 - k];
      try {
        const auto d = fringe.feed(letter);
        if (options.engines) {
          const auto dn = naive.feed(letter);
          if (trace_line(d, fringe.tree(), false) != trace_line(dn, naive.tree(), false)) {
            return Divergence{"rtl", k, "ancestor engines disagree"};
          }
        }
        const auto current = std::span<const LetterCode>(full).subspan(full.size() - 1 - k);
        if (auto err = compare_with_oracle(fringe, current, oracle::Side::kRightmost)) {
          return Divergence{"rtl", k, *err};
        }
        if (options.structure) {
          if (auto err = check_structure(fringe.tree())) return Divergence{"rtl", k, *err};
        }
      } catch (const Error& e) {
        return Divergence{"rtl", k, e.what()};
      }
    }
  }
  return std::nullopt;
}

std::vector<LetterCode> shrink_failure(std::vector<LetterCode> body, std::uint32_t sigma,
                                       const VerifyOptions& options) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
      auto candidate = body;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      if (verify_sequence(candidate, sigma, options)) {
        body = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return body;
}

std::vector<FuzzCase> fuzz_cases(std::size_t count, std::size_t max_n, std::uint32_t max_sigma,
                                 std::uint64_t seed) {
  if (max_n == 0) throw UsageError("max_n must be positive");
  if (max_sigma < 2) throw UsageError("sigma must be at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_sigma(2, max_sigma);
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  std::vector<FuzzCase> cases(count);
  for (auto& c : cases) {
    c.sigma = pick_sigma(rng);
    c.body.resize(pick_n(rng));
    std::uniform_int_distribution<LetterCode> pick_letter(0, c.sigma - 1);
    for (auto& x : c.body) x = pick_letter(rng);
  }
  return cases;
}

std::optional<FuzzFailure> run_fuzz(std::span<const FuzzCase> cases, const VerifyOptions& options) {
  for (const auto& c : cases) {
    if (!verify_sequence(c.body, c.sigma, options)) continue;
    FuzzFailure f;
    f.original = c;
    f.shrunk = shrink_failure(c.body, c.sigma, options);
    f.divergence = *verify_sequence(f.shrunk, c.sigma, options);
    return f;
  }
  return std::nullopt;
}

std::vector<BenchRow> run_bench(std::string_view input, Direction direction, AlphaEngine engine,
                                Sentinel sentinel) {
  MaintainerOptions mo;
  mo.alphabet_size = kByteAlphabet;
  mo.engine = engine;
  std::vector<BenchRow> rows;
  rows.reserve(input.size() + 1);
  auto record = [&](const DeltaReport& d) { rows.push_back({d.step, d.letter, d.cost}); };
  if (direction == Direction::kLeftToRight) {
    const auto letters = bytes_of(input);
    LtrMaintainer m(mo);
    feed_all(m, letters, direction, record);
  } else {
    const auto letters = bytes_of(prepare_rtl_text(input, sentinel));
    RtlMaintainer m(mo);
    feed_all(m, letters, direction, record);
  }
  return rows;
}

BenchSummary summarize(std::span<const BenchRow> rows) {
  BenchSummary s;
  if (rows.empty()) return s;
  std::vector<std::uint64_t> totals;
  totals.reserve(rows.size());
  for (const auto& r : rows) totals.push_back(r.cost.total());
  std::sort(totals.begin(), totals.end());
  s.max = totals.back();
  const auto rank = static_cast<std::size_t>(std::ceil(0.999 * static_cast<double>(totals.size())));
  s.p999 = static_cast<double>(totals[std::max<std::size_t>(rank, 1) - 1]);
  s.mean = std::accumulate(totals.begin(), totals.end(), 0.0) / static_cast<double>(totals.size());
  return s;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "step,letter,list_ops,lca_steps,tree_updates\n";
  for (const auto& r : rows) {
    out << r.step << ',' << r.letter << ',' << r.cost.list_ops << ',' << r.cost.lca_steps << ','
        << r.cost.tree_updates << '\n';
  }
}

}  // namespace suffixient
