#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coalval/coalition.hpp"
#include "coalval/game.hpp"

namespace coalval {

/// Probability distribution over all 2^n coalitions. Entries are
/// non-negative and sum to 1 (within 1e-9), except for the all-zero
/// sub-measure produced by conditioning on a null event.
class CoalitionMeasure {
public:
  CoalitionMeasure(int n, std::vector<double> mass);

  int n() const { return n_; }
  double mass(Coalition s) const { return mass_[s]; }
  const std::vector<double>& table() const { return mass_; }

  /// True for the all-zero sub-measure.
  bool is_degenerate() const { return degenerate_; }

private:
  int n_;
  std::vector<double> mass_;
  bool degenerate_;
};

/// P(S) = 2^-n for every coalition.
CoalitionMeasure uniform_measure(int n);

/// Independent memberships with marginals p: P(S) = prod_{i in S} p_i *
/// prod_{i notin S} (1 - p_i).
CoalitionMeasure product_measure(std::span<const double> p);

/// Conditional distribution given membership (member = true) or
/// non-membership of player i. Returns the all-zero measure when the
/// conditioning event has probability zero.
CoalitionMeasure condition(const CoalitionMeasure& p, int player, bool member);

/// p_i = sum_{S containing i} P(S). Rejects degenerate input.
std::vector<double> membership_probabilities(const CoalitionMeasure& p);

/// Measure with P'(pi S) = P(S).
CoalitionMeasure permute_measure(const CoalitionMeasure& p, const PlayerPermutation& pi);

/// If P is a product measure with all marginals strictly inside (0,1),
/// returns the marginals; the candidate is built from the marginals and
/// compared entrywise against P within tol.
std::optional<std::vector<double>> detect_product_measure(const CoalitionMeasure& p,
                                                          double tol = 1e-9);

enum class Side { plus, minus };

/// The distributions that turn the conditional decisiveness measures into
/// the Shapley value: side = plus puts mass 1/(s C(n,s) H_n) on every
/// non-empty S, side = minus mass 1/((n-s) C(n,s) H_n) on every S != N.
CoalitionMeasure shapley_inducing_measure(int n, Side side);

/// A TU game together with a coalition measure on the same player set.
struct ProbabilisticGame {
  ProbabilisticGame(TUGame g, CoalitionMeasure p);

  TUGame game;
  CoalitionMeasure measure;

  int n() const { return game.n(); }
};

/// Result of removing a dependent player: indices re-packed to 0..n-2.
/// old_to_new[i] is the new index of old player i, -1 for the removed one.
struct ReducedGame {
  ProbabilisticGame game;
  std::vector<int> old_to_new;
};

/// Removal of a dependent player i (v({i}) = 0): probabilities of S and
/// S u i are merged and worths convex-combined with the same weights.
ReducedGame reduce(const ProbabilisticGame& g, int player);

} // namespace coalval
