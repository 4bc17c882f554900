#include "suffixient/generators.hpp"

#include <random>
#include <vector>

#include "suffixient/errors.hpp"

namespace suffixient::gen {

std::string fibonacci(std::size_t n) {
  std::string prev = "a";
  std::string cur = "ab";
  if (n <= 1) return prev.substr(0, n);
  while (cur.size() < n) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(n);
  return cur;
}

// Lyndon-word concatenation (Fredricksen-Kessler-Maiorana).
std::string de_bruijn(std::uint32_t sigma, std::uint32_t order) {
  if (sigma < 1 || sigma > 26) throw UsageError("de Bruijn alphabet must have 1..26 letters");
  if (order < 1) throw UsageError("de Bruijn order must be at least 1");
  double total = 1;
  for (std::uint32_t i = 0; i < order; ++i) total *= sigma;
  if (total > 1e8) throw UsageError("de Bruijn sequence too long");

  // Duval's successor enumerates Lyndon words in lexicographic order; those
  // whose length divides `order` concatenate to the de Bruijn cycle.
  std::string cyclic;
  std::vector<std::int64_t> word{-1};
  while (!word.empty()) {
    ++word.back();
    const std::size_t m = word.size();
    if (order % m == 0) {
      for (auto c : word) cyclic.push_back(static_cast<char>('a' + c));
    }
    while (word.size() < order) word.push_back(word[word.size() - m]);
    while (!word.empty() && word.back() == static_cast<std::int64_t>(sigma) - 1) word.pop_back();
  }
  return cyclic + cyclic.substr(0, order - 1);
}

std::string random_text(std::size_t n, std::uint32_t sigma, std::uint64_t seed) {
  if (sigma < 1 || sigma > 26) throw UsageError("random alphabet must have 1..26 letters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, sigma - 1);
  std::string out(n, 'a');
  for (auto& c : out) c = static_cast<char>('a' + pick(rng));
  return out;
}

}  // namespace suffixient::gen
