#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "suffixient/text_model.hpp"

// Brute-force ground truth for right extensions, supermaximal extensions and
// suffixient sets. Shares no code with the online maintainers.
//
// Positions are 1-based end positions in w.
namespace suffixient::oracle {

using Sequence = std::vector<LetterCode>;

inline constexpr std::size_t kDefaultMaxLength = 2048;
inline constexpr std::size_t kDefaultMaxCombinations = 1'000'000;

struct Extension {
  Sequence u;
  LetterCode x = 0;

  friend auto operator<=>(const Extension&, const Extension&) = default;
  friend bool operator==(const Extension&, const Extension&) = default;
};

using ExtensionSet = std::set<Extension>;

enum class Side { kRightmost, kLeftmost };

/// All (u, x) with u right-maximal and ux a substring.
ExtensionSet right_extensions(std::span<const LetterCode> w,
                              std::size_t max_length = kDefaultMaxLength);

/// Right extensions (u, x) such that no (zu, x) is a right extension.
ExtensionSet supermaximal_extensions(std::span<const LetterCode> w,
                                     std::size_t max_length = kDefaultMaxLength);

/// Number of supermaximal extensions.
std::size_t chi(std::span<const LetterCode> w, std::size_t max_length = kDefaultMaxLength);

/// Whether every right extension ux has an occurrence ending at a position
/// of `positions`. Throws BoundsError for positions outside [1, n].
bool is_suffixient(std::span<const LetterCode> w, std::span<const std::int64_t> positions,
                   std::size_t max_length = kDefaultMaxLength);

/// For each supermaximal extension, the extreme end position of ux; sorted.
std::vector<std::int64_t> canonical_sss(std::span<const LetterCode> w, Side side,
                                        std::size_t max_length = kDefaultMaxLength);

/// Every smallest suffixient set, as sorted position lists. Throws SizeError
/// when the number of occurrence combinations exceeds `max_combinations`.
std::set<std::vector<std::int64_t>> all_sss(std::span<const LetterCode> w,
                                            std::size_t max_combinations = kDefaultMaxCombinations,
                                            std::size_t max_length = kDefaultMaxLength);

/// Letters of a byte string, for tests and tools.
Sequence from_text(std::string_view text);

}  // namespace suffixient::oracle
