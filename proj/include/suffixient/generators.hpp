#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace suffixient::gen {

/// First n letters of the Fibonacci word over {a, b}
/// (s1 = "a", s2 = "ab", s_k = s_{k-1} s_{k-2}).
std::string fibonacci(std::size_t n);

/// Linearized de Bruijn sequence over the first `sigma` lowercase letters:
/// the cyclic sequence of length sigma^order followed by its first order-1
/// letters, so every word of length `order` occurs exactly once.
std::string de_bruijn(std::uint32_t sigma, std::uint32_t order);

/// n letters drawn uniformly from the first `sigma` lowercase letters.
std::string random_text(std::size_t n, std::uint32_t sigma, std::uint64_t seed);

}  // namespace suffixient::gen
