#pragma once

#include <vector>

#include "coalval/measure.hpp"

namespace coalval {

/// One real number per player.
using ValueVector = std::vector<double>;

/// Difference of the two conditional expectations of v(S):
/// xi_i = E_{P|i}[v(S)] - E_{P|not i}[v(S)], with a null conditioning event
/// contributing 0.
ValueVector prediction_value(const ProbabilisticGame& g);

/// Shapley value, weights |S|!(n-|S|-1)!/n! over S not containing i.
ValueVector shapley(const TUGame& game);

/// Banzhaf value, all 2^(n-1) marginal contributions weighted equally.
ValueVector banzhaf(const TUGame& game);

/// Expected marginal contribution conditional on membership (plus) or
/// non-membership (minus) of the player.
ValueVector decisiveness(const ProbabilisticGame& g, Side side);

/// Per-size weights q_0..q_{n-1} of a semivalue, subject to the
/// normalization sum_k C(n-1,k) q_k = 1.
struct SemivalueWeights {
  std::vector<double> q;

  int n() const { return static_cast<int>(q.size()); }
};

SemivalueWeights shapley_weights(int n);
SemivalueWeights banzhaf_weights(int n);
SemivalueWeights binomial_weights(int n, double p);

/// f_i = sum_{S subseteq N\i} q_|S| (v(S u i) - v(S)). Rejects weights that
/// violate the normalization by more than 1e-9.
ValueVector semivalue(const TUGame& game, const SemivalueWeights& weights);

/// Semivalue with q_k = p^k (1-p)^(n-k-1), 0 < p < 1.
ValueVector binomial_semivalue(const TUGame& game, double p);

/// Per-player probability distributions weighting marginal contributions.
/// Inclusive: Q_i lives on {S : i in S} and weights v(S) - v(S\i);
/// exclusive: Q_i lives on {S : i notin S} and weights v(S u i) - v(S).
struct ProbabilisticValueFamily {
  enum class Convention { inclusive, exclusive };

  Convention convention;
  std::vector<CoalitionMeasure> q; // one proper measure per player

  int n() const { return static_cast<int>(q.size()); }
};

ValueVector probabilistic_value(const TUGame& game, const ProbabilisticValueFamily& family);

} // namespace coalval
