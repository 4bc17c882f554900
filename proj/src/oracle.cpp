#include "suffixient/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "suffixient/errors.hpp"

namespace suffixient::oracle {

namespace {

// Distinct substrings of one length L, as equivalence classes of start
// positions. Two starts share a class iff w[i, i+L) == w[j, j+L).
struct Level {
  std::size_t length = 0;
  std::vector<std::uint32_t> class_of;              // start i in [0, n-L]
  std::vector<std::vector<std::uint32_t>> starts;   // per class
  std::vector<std::set<LetterCode>> followers;      // letters seen after
};

Level first_level(std::span<const LetterCode> w) {
  Level level;
  level.class_of.assign(w.size() + 1, 0);
  level.starts.assign(1, {});
  level.followers.assign(1, {});
  for (std::uint32_t i = 0; i <= w.size(); ++i) level.starts[0].push_back(i);
  for (auto c : w) level.followers[0].insert(c);
  return level;
}

// Substrings of length L+1 are equal iff their length-L prefixes are equal
// and the next letters agree.
Level next_level(std::span<const LetterCode> w, const Level& prev) {
  Level level;
  level.length = prev.length + 1;
  const std::size_t starts = w.size() - prev.length;
  level.class_of.resize(starts);
  std::map<std::pair<std::uint32_t, LetterCode>, std::uint32_t> ids;
  for (std::size_t i = 0; i < starts; ++i) {
    const auto key = std::make_pair(prev.class_of[i], w[i + prev.length]);
    auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
    if (fresh) level.starts.emplace_back();
    level.class_of[i] = it->second;
    level.starts[it->second].push_back(static_cast<std::uint32_t>(i));
  }
  level.followers.resize(level.starts.size());
  for (std::size_t i = 0; i + level.length < w.size(); ++i) {
    level.followers[level.class_of[i]].insert(w[i + level.length]);
  }
  return level;
}

struct Visit {
  std::span<const LetterCode> w;
  std::size_t length;                 // |u|
  std::uint32_t first_start;          // some occurrence of u
  LetterCode x;
  bool supermaximal;
  std::vector<std::int64_t> ends;     // 1-based end positions of ux
};

// Calls `visit` once per right extension, in increasing |u|.
void for_each_right_extension(std::span<const LetterCode> w, std::size_t max_length,
                              const std::function<void(const Visit&)>& visit) {
  if (w.size() > max_length) {
    throw SizeError("oracle input of length " + std::to_string(w.size()) + " exceeds bound " +
                    std::to_string(max_length));
  }
  if (w.empty()) return;
  Level cur = first_level(w);
  while (cur.length < w.size()) {
    Level nxt = next_level(w, cur);
    bool any_right_maximal = false;
    for (std::uint32_t c = 0; c < cur.starts.size(); ++c) {
      if (cur.followers[c].size() < 2) continue;
      any_right_maximal = true;
      for (LetterCode x : cur.followers[c]) {
        Visit v{w, cur.length, cur.starts[c].front(), x, true, {}};
        for (auto i : cur.starts[c]) {
          if (i + cur.length < w.size() && w[i + cur.length] == x) {
            v.ends.push_back(static_cast<std::int64_t>(i + cur.length + 1));
          }
          // zu occurs at i-1; (zu, x) is a right extension iff zu is
          // right-maximal and followed by x somewhere.
          if (i >= 1) {
            const auto& f = nxt.followers[nxt.class_of[i - 1]];
            if (f.size() >= 2 && f.contains(x)) v.supermaximal = false;
          }
        }
        visit(v);
      }
    }
    if (!any_right_maximal && cur.starts.size() == cur.class_of.size()) break;
    cur = std::move(nxt);
  }
}

Extension make_extension(const Visit& v) {
  Extension e;
  e.u.assign(v.w.begin() + v.first_start, v.w.begin() + v.first_start + v.length);
  e.x = v.x;
  return e;
}

}  // namespace

ExtensionSet right_extensions(std::span<const LetterCode> w, std::size_t max_length) {
  ExtensionSet out;
  for_each_right_extension(w, max_length, [&](const Visit& v) { out.insert(make_extension(v)); });
  return out;
}

ExtensionSet supermaximal_extensions(std::span<const LetterCode> w, std::size_t max_length) {
  ExtensionSet out;
  for_each_right_extension(w, max_length, [&](const Visit& v) {
    if (v.supermaximal) out.insert(make_extension(v));
  });
  return out;
}

std::size_t chi(std::span<const LetterCode> w, std::size_t max_length) {
  std::size_t count = 0;
  for_each_right_extension(w, max_length, [&](const Visit& v) { count += v.supermaximal; });
  return count;
}

bool is_suffixient(std::span<const LetterCode> w, std::span<const std::int64_t> positions,
                   std::size_t max_length) {
  const std::unordered_set<std::int64_t> chosen(positions.begin(), positions.end());
  for (auto p : positions) {
    if (p < 1 || p > static_cast<std::int64_t>(w.size())) {
      throw BoundsError("position " + std::to_string(p) + " outside the string");
    }
  }
  bool ok = true;
  for_each_right_extension(w, max_length, [&](const Visit& v) {
    if (!ok) return;
    ok = std::any_of(v.ends.begin(), v.ends.end(), [&](auto e) { return chosen.contains(e); });
  });
  return ok;
}

std::vector<std::int64_t> canonical_sss(std::span<const LetterCode> w, Side side,
                                        std::size_t max_length) {
  std::vector<std::int64_t> out;
  for_each_right_extension(w, max_length, [&](const Visit& v) {
    if (!v.supermaximal) return;
    const auto [lo, hi] = std::minmax_element(v.ends.begin(), v.ends.end());
    out.push_back(side == Side::kLeftmost ? *lo : *hi);
  });
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvariantViolation("two supermaximal extensions share an end position");
  }
  return out;
}

std::set<std::vector<std::int64_t>> all_sss(std::span<const LetterCode> w,
                                            std::size_t max_combinations,
                                            std::size_t max_length) {
  std::vector<std::vector<std::int64_t>> choices;
  for_each_right_extension(w, max_length, [&](const Visit& v) {
    if (v.supermaximal) choices.push_back(v.ends);
  });
  std::size_t combos = 1;
  for (const auto& c : choices) {
    if (combos > max_combinations / c.size()) {
      throw SizeError("more than " + std::to_string(max_combinations) + " SSS combinations");
    }
    combos *= c.size();
  }
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> pick(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == choices.size()) {
      auto sorted = pick;
      std::sort(sorted.begin(), sorted.end());
      out.insert(std::move(sorted));
      return;
    }
    for (auto e : choices[k]) {
      pick[k] = e;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

Sequence from_text(std::string_view text) {
  Sequence out;
  out.reserve(text.size());
  for (unsigned char c : text) out.push_back(c);
  return out;
}

}  // namespace suffixient::oracle
