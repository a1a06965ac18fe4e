#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "coalval/errors.hpp"

namespace coalval {

/// A coalition is a bitmask over player indices 0..n-1; player i is a member
/// iff bit i is set. Dense tables are indexed by this mask.
using Coalition = std::uint32_t;

/// Hard cap on the player count: 2^26 doubles per table stay under 0.5 GiB.
inline constexpr int kMaxPlayers = 26;

constexpr Coalition empty_coalition() { return 0u; }
constexpr Coalition full_coalition(int n) { return (Coalition{1} << n) - 1u; }
constexpr Coalition singleton(int i) { return Coalition{1} << i; }

constexpr bool contains(Coalition s, int i) { return (s >> i) & 1u; }
constexpr Coalition with_player(Coalition s, int i) { return s | singleton(i); }
constexpr Coalition without_player(Coalition s, int i) { return s & ~singleton(i); }
constexpr bool subset_of(Coalition s, Coalition t) { return (s & t) == s; }
constexpr int cardinality(Coalition s) { return std::popcount(s); }

/// Number of coalitions over n players; throws size_guard_error for n outside
/// [1, kMaxPlayers].
inline std::size_t table_size(int n) {
  if (n < 1 || n > kMaxPlayers)
    throw size_guard_error("player count " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxPlayers) + "]");
  return std::size_t{1} << n;
}

/// "{1,3}" style rendering; 1-based player numbers, or names when provided.
std::string format_coalition(Coalition s, const std::vector<std::string>* names = nullptr);

/// A bijection on {0..n-1}.
class PlayerPermutation {
public:
  explicit PlayerPermutation(std::vector<int> mapping);

  static PlayerPermutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }

  PlayerPermutation inverse() const;

  /// Image coalition: i in S maps to map(i) in the result.
  Coalition apply(Coalition s) const;

private:
  std::vector<int> map_;
};

} // namespace coalval
