#include "coalval/game.hpp"

#include <cmath>
#include <utility>

namespace coalval {

TUGame TUGame::from_table(int n, std::vector<double> worth) {
  const std::size_t size = table_size(n);
  if (worth.size() != size) throw input_error("worth table must have 2^n entries");
  if (worth[0] != 0.0) throw input_error("v(empty) must be 0");
  TUGame g;
  g.n_ = n;
  g.table_ = std::move(worth);
  return g;
}

TUGame TUGame::weighted(std::vector<double> weights, double quota) {
  if (weights.empty()) throw input_error("weight list must be non-empty");
  for (double w : weights)
    if (!(w >= 0.0)) throw input_error("weights must be non-negative");
  if (!(quota > 0.0)) throw input_error("quota must be positive");
  table_size(static_cast<int>(weights.size())); // size guard
  TUGame g;
  g.n_ = static_cast<int>(weights.size());
  g.weighted_ = true;
  g.weights_ = std::move(weights);
  g.quota_ = quota;
  return g;
}

double TUGame::worth(Coalition s) const {
  if (!weighted_) return table_[s];
  double total = 0.0;
  for (int i = 0; i < n_; ++i)
    if (contains(s, i)) total += weights_[static_cast<std::size_t>(i)];
  return total >= quota_ ? 1.0 : 0.0;
}

const std::vector<double>& TUGame::weights() const {
  if (!weighted_) throw input_error("game has no weighted-voting rule");
  return weights_;
}

double TUGame::quota() const {
  if (!weighted_) throw input_error("game has no weighted-voting rule");
  return quota_;
}

std::vector<double> TUGame::dense() const {
  if (!weighted_) return table_;
  const std::size_t size = table_size(n_);
  std::vector<double> table(size);
  for (Coalition s = 0; s < size; ++s) table[s] = worth(s);
  return table;
}

TUGame make_weighted_game(std::vector<double> weights, double quota) {
  return TUGame::weighted(std::move(weights), quota);
}

double majority_quota(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  return std::floor(total / 2.0) + 1.0;
}

TUGame make_unanimity_game(int n, Coalition t) {
  const std::size_t size = table_size(n);
  if (t == 0) throw input_error("unanimity game requires a non-empty coalition");
  if (t >= size) throw input_error("coalition not contained in the player set");
  std::vector<double> table(size, 0.0);
  for (Coalition s = t; s < size; ++s)
    if (subset_of(t, s)) table[s] = 1.0;
  return TUGame::from_table(n, std::move(table));
}

TUGame permute_game(const TUGame& game, const PlayerPermutation& pi) {
  if (pi.size() != game.n()) throw input_error("permutation size differs from player count");
  if (game.is_weighted()) {
    std::vector<double> weights(game.weights().size());
    for (int i = 0; i < game.n(); ++i)
      weights[static_cast<std::size_t>(pi(i))] = game.weights()[static_cast<std::size_t>(i)];
    return TUGame::weighted(std::move(weights), game.quota());
  }
  const std::size_t size = table_size(game.n());
  std::vector<double> table(size);
  for (Coalition s = 0; s < size; ++s) table[pi.apply(s)] = game.worth(s);
  return TUGame::from_table(game.n(), std::move(table));
}

void subset_zeta_inplace(std::span<double> f, int n) {
  for (int i = 0; i < n; ++i)
    for (Coalition s = 0; s < f.size(); ++s)
      if (contains(s, i)) f[s] += f[without_player(s, i)];
}

void subset_mobius_inplace(std::span<double> f, int n) {
  for (int i = 0; i < n; ++i)
    for (Coalition s = 0; s < f.size(); ++s)
      if (contains(s, i)) f[s] -= f[without_player(s, i)];
}

void subset_mobius_inplace(std::span<std::int64_t> f, int n) {
  for (int i = 0; i < n; ++i)
    for (Coalition s = 0; s < f.size(); ++s)
      if (contains(s, i)) f[s] -= f[without_player(s, i)];
}

UnanimityDecomposition harsanyi_dividends(const TUGame& game) {
  UnanimityDecomposition d;
  d.n = game.n();
  d.alpha = game.dense();
  subset_mobius_inplace(d.alpha, d.n);
  return d;
}

std::vector<std::int64_t> harsanyi_dividends_int(const TUGame& game) {
  const std::vector<double> table = game.dense();
  std::vector<std::int64_t> f(table.size());
  for (std::size_t s = 0; s < table.size(); ++s) {
    const double w = table[s];
    if (w != std::floor(w)) throw input_error("exact mode requires integer worths");
    f[s] = static_cast<std::int64_t>(w);
  }
  subset_mobius_inplace(std::span<std::int64_t>(f), game.n());
  return f;
}

double UnanimityDecomposition::reconstruct(Coalition s) const {
  // Sum over subsets of s; alpha[0] is zero so including it is harmless.
  double total = 0.0;
  Coalition t = s;
  while (true) {
    total += alpha[t];
    if (t == 0) break;
    t = (t - 1) & s;
  }
  return total;
}

std::vector<Coalition> UnanimityDecomposition::support(double threshold) const {
  std::vector<Coalition> out;
  for (Coalition s = 1; s < alpha.size(); ++s)
    if (std::abs(alpha[s]) > threshold) out.push_back(s);
  return out;
}

} // namespace coalval
