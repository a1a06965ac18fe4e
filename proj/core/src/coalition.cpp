#include "coalval/coalition.hpp"

#include <algorithm>

namespace coalval {

std::string format_coalition(Coalition s, const std::vector<std::string>* names) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; s >> i; ++i) {
    if (!contains(s, i)) continue;
    if (!first) out += ",";
    first = false;
    if (names && i < static_cast<int>(names->size()))
      out += (*names)[static_cast<std::size_t>(i)];
    else
      out += std::to_string(i + 1);
  }
  out += "}";
  return out;
}

PlayerPermutation::PlayerPermutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int n = static_cast<int>(map_.size());
  if (n < 1 || n > kMaxPlayers) throw input_error("permutation size out of range");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw input_error("mapping is not a bijection on {0..n-1}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PlayerPermutation PlayerPermutation::identity(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i;
  return PlayerPermutation(std::move(map));
}

PlayerPermutation PlayerPermutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  return PlayerPermutation(std::move(inv));
}

Coalition PlayerPermutation::apply(Coalition s) const {
  Coalition out = 0;
  for (int i = 0; i < size(); ++i)
    if (contains(s, i)) out = with_player(out, (*this)(i));
  return out;
}

} // namespace coalval
