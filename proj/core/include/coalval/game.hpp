#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coalval/coalition.hpp"

namespace coalval {

/// A TU game: player count plus characteristic function v with v(empty) = 0.
/// Either a dense worth table of length 2^n or a weighted-voting rule
/// (v(S) = 1 iff total weight of S reaches the quota).
class TUGame {
public:
  static TUGame from_table(int n, std::vector<double> worth);
  static TUGame weighted(std::vector<double> weights, double quota);

  int n() const { return n_; }
  double worth(Coalition s) const;

  bool is_weighted() const { return weighted_; }
  const std::vector<double>& weights() const;
  double quota() const;

  /// Dense worth table (materialized on demand for rule-based games).
  std::vector<double> dense() const;

private:
  TUGame() = default;

  int n_ = 0;
  bool weighted_ = false;
  std::vector<double> table_;   // dense representation
  std::vector<double> weights_; // rule representation
  double quota_ = 0.0;
};

/// Simple game with v(S) = 1 iff the coalition weight reaches the quota.
TUGame make_weighted_game(std::vector<double> weights, double quota);

/// Quota for a simple majority of the total weight: floor(W/2) + 1.
double majority_quota(std::span<const double> weights);

/// Unanimity game u_T: worth 1 exactly on supersets of the non-empty T.
TUGame make_unanimity_game(int n, Coalition t);

/// Game v' with v'(pi S) = v(S) for all S.
TUGame permute_game(const TUGame& game, const PlayerPermutation& pi);

/// Coefficients of the unanimity-basis decomposition v = sum alpha_T u_T.
struct UnanimityDecomposition {
  int n = 0;
  std::vector<double> alpha; // indexed by coalition bitmask; alpha[0] == 0

  /// v(S) rebuilt as the sum of dividends over non-empty subsets of S.
  double reconstruct(Coalition s) const;

  /// Non-empty coalitions with |alpha| above the threshold, ascending bitmask.
  std::vector<Coalition> support(double threshold = 1e-9) const;
};

/// Moebius inversion of the worth table, alpha_T = sum_{S subseteq T}
/// (-1)^{|T|-|S|} v(S), computed by the in-place subset transform.
UnanimityDecomposition harsanyi_dividends(const TUGame& game);

/// Exact integer dividends; requires every worth to be integral.
std::vector<std::int64_t> harsanyi_dividends_int(const TUGame& game);

/// In-place fast subset transforms over dense tables, O(n 2^n).
void subset_zeta_inplace(std::span<double> f, int n);
void subset_mobius_inplace(std::span<double> f, int n);
void subset_mobius_inplace(std::span<std::int64_t> f, int n);

} // namespace coalval
