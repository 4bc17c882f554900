#include "suffixient/sre_ledger.hpp"

#include <algorithm>
#include <string>

#include "suffixient/errors.hpp"

namespace suffixient {

SreLedger::SreLedger(Direction direction, GrowthMode growth)
    : direction_(direction), bits_(growth) {}

std::size_t SreLedger::slot(Coord c) const {
  if (c.scheme != stable_scheme(direction_)) {
    throw UsageError("SRE position recorded in the wrong coordinate scheme");
  }
  return static_cast<std::size_t>(direction_ == Direction::kRightToLeft ? -c.value : c.value - 1);
}

void SreLedger::add(SreKey key, Coord position) {
  auto [it, fresh] = live_.emplace(pack(key), position);
  if (!fresh) {
    throw InvariantViolation("SRE (node " + std::to_string(key.node.value) + ", letter " +
                             std::to_string(key.letter) + ") is already live");
  }
  bits_.set(slot(position));
}

std::optional<Coord> SreLedger::remove(SreKey key) {
  auto it = live_.find(pack(key));
  if (it == live_.end()) return std::nullopt;
  const auto pos = it->second;
  live_.erase(it);
  bits_.clear(slot(pos));
  return pos;
}

bool SreLedger::contains(SreKey key) const { return live_.contains(pack(key)); }

std::optional<Coord> SreLedger::position(SreKey key) const {
  auto it = live_.find(pack(key));
  if (it == live_.end()) return std::nullopt;
  return it->second;
}

std::vector<SreEntry> SreLedger::entries() const {
  std::vector<SreEntry> out;
  out.reserve(live_.size());
  for (const auto& [k, pos] : live_) {
    out.push_back({SreKey{NodeId{static_cast<std::uint32_t>(k >> 32)},
                          static_cast<LetterCode>(k & 0xffffffffu)},
                   pos});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

}  // namespace suffixient
