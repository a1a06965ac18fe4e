// Slow, independent reference implementations the fast library code is
// tested against. Everything here is written from the defining formulas,
// with no shared machinery beyond the coalition bitmask encoding.
#pragma once

#include <cstdint>
#include <vector>

#include "coalval/coalition.hpp"
#include "coalval/measure.hpp"

namespace oracle {

/// Dividends by the defining alternating sum over all subset pairs, O(4^n).
template <typename T>
std::vector<T> naive_dividends(int n, const std::vector<T>& worth) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<T> alpha(size, T{});
  for (coalval::Coalition t = 0; t < size; ++t)
    for (coalval::Coalition s = 0; s < size; ++s) {
      if (!coalval::subset_of(s, t)) continue;
      const int parity = (coalval::cardinality(t) - coalval::cardinality(s)) % 2;
      alpha[t] += parity ? -worth[s] : worth[s];
    }
  return alpha;
}

/// Shapley value straight from the |S|!(n-|S|-1)!/n! definition.
inline std::vector<double> naive_shapley(const coalval::TUGame& game) {
  const int n = game.n();
  std::vector<double> factorial(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k)
    factorial[static_cast<std::size_t>(k)] = factorial[static_cast<std::size_t>(k - 1)] * k;
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  const std::size_t size = std::size_t{1} << n;
  for (int i = 0; i < n; ++i)
    for (coalval::Coalition s = 0; s < size; ++s) {
      if (coalval::contains(s, i)) continue;
      const int k = coalval::cardinality(s);
      const double weight = factorial[static_cast<std::size_t>(k)] *
                            factorial[static_cast<std::size_t>(n - k - 1)] /
                            factorial[static_cast<std::size_t>(n)];
      out[static_cast<std::size_t>(i)] +=
          weight * (game.worth(coalval::with_player(s, i)) - game.worth(s));
    }
  return out;
}

/// Prediction value straight from the two conditional expectations.
inline std::vector<double> naive_prediction_value(const coalval::ProbabilisticGame& g) {
  const int n = g.n();
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double in_mass = 0.0, out_mass = 0.0;
    for (coalval::Coalition s = 0; s < size; ++s)
      (coalval::contains(s, i) ? in_mass : out_mass) += g.measure.mass(s);
    double e_in = 0.0, e_out = 0.0;
    for (coalval::Coalition s = 0; s < size; ++s) {
      if (coalval::contains(s, i) && in_mass > 0.0)
        e_in += g.measure.mass(s) / in_mass * g.game.worth(s);
      if (!coalval::contains(s, i) && out_mass > 0.0)
        e_out += g.measure.mass(s) / out_mass * g.game.worth(s);
    }
    out[static_cast<std::size_t>(i)] = e_in - e_out;
  }
  return out;
}

} // namespace oracle
