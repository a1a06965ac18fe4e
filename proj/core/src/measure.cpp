#include "coalval/measure.hpp"

#include <cmath>
#include <utility>

namespace coalval {

namespace {
constexpr double kTotalTol = 1e-9;
} // namespace

CoalitionMeasure::CoalitionMeasure(int n, std::vector<double> mass)
    : n_(n), mass_(std::move(mass)) {
  const std::size_t size = table_size(n);
  if (mass_.size() != size) throw input_error("measure must have 2^n entries");
  double total = 0.0;
  bool all_zero = true;
  for (double m : mass_) {
    if (!(m >= 0.0)) throw input_error("measure entries must be non-negative");
    if (m != 0.0) all_zero = false;
    total += m;
  }
  if (!all_zero && std::abs(total - 1.0) > kTotalTol)
    throw input_error("measure total must be 1 (or exactly 0 for a conditional sub-measure)");
  degenerate_ = all_zero;
}

CoalitionMeasure uniform_measure(int n) {
  const std::size_t size = table_size(n);
  return CoalitionMeasure(n, std::vector<double>(size, std::ldexp(1.0, -n)));
}

CoalitionMeasure product_measure(std::span<const double> p) {
  const int n = static_cast<int>(p.size());
  const std::size_t size = table_size(n);
  for (double pi : p)
    if (!(pi >= 0.0 && pi <= 1.0)) throw input_error("marginals must lie in [0,1]");
  std::vector<double> mass(size);
  for (Coalition s = 0; s < size; ++s) {
    double m = 1.0;
    for (int i = 0; i < n; ++i) m *= contains(s, i) ? p[i] : 1.0 - p[i];
    mass[s] = m;
  }
  return CoalitionMeasure(n, std::move(mass));
}

CoalitionMeasure condition(const CoalitionMeasure& p, int player, bool member) {
  if (player < 0 || player >= p.n()) throw input_error("player index out of range");
  const std::size_t size = p.table().size();
  double event = 0.0;
  for (Coalition s = 0; s < size; ++s)
    if (contains(s, player) == member) event += p.mass(s);
  std::vector<double> mass(size, 0.0);
  if (event > 0.0)
    for (Coalition s = 0; s < size; ++s)
      if (contains(s, player) == member) mass[s] = p.mass(s) / event;
  return CoalitionMeasure(p.n(), std::move(mass));
}

std::vector<double> membership_probabilities(const CoalitionMeasure& p) {
  if (p.is_degenerate()) throw input_error("membership probabilities of a zero measure");
  std::vector<double> out(static_cast<std::size_t>(p.n()), 0.0);
  const std::size_t size = p.table().size();
  for (Coalition s = 0; s < size; ++s) {
    const double m = p.mass(s);
    if (m == 0.0) continue;
    for (int i = 0; i < p.n(); ++i)
      if (contains(s, i)) out[static_cast<std::size_t>(i)] += m;
  }
  return out;
}

CoalitionMeasure permute_measure(const CoalitionMeasure& p, const PlayerPermutation& pi) {
  if (pi.size() != p.n()) throw input_error("permutation size differs from player count");
  const std::size_t size = p.table().size();
  std::vector<double> mass(size);
  for (Coalition s = 0; s < size; ++s) mass[pi.apply(s)] = p.mass(s);
  return CoalitionMeasure(p.n(), std::move(mass));
}

std::optional<std::vector<double>> detect_product_measure(const CoalitionMeasure& p, double tol) {
  const std::vector<double> marginals = membership_probabilities(p);
  for (double m : marginals)
    if (!(m > 0.0 && m < 1.0)) return std::nullopt;
  const CoalitionMeasure candidate = product_measure(marginals);
  const std::size_t size = p.table().size();
  for (Coalition s = 0; s < size; ++s)
    if (std::abs(candidate.mass(s) - p.mass(s)) > tol) return std::nullopt;
  return marginals;
}

CoalitionMeasure shapley_inducing_measure(int n, Side side) {
  const std::size_t size = table_size(n);
  double harmonic = 0.0;
  for (int t = 1; t <= n; ++t) harmonic += 1.0 / t;
  // C(n,s) per size.
  std::vector<double> binom(static_cast<std::size_t>(n) + 1);
  binom[0] = 1.0;
  for (int s = 1; s <= n; ++s) binom[static_cast<std::size_t>(s)] =
      binom[static_cast<std::size_t>(s - 1)] * (n - s + 1) / s;
  std::vector<double> mass(size, 0.0);
  for (Coalition s = 0; s < size; ++s) {
    const int k = cardinality(s);
    if (side == Side::plus) {
      if (k == 0) continue;
      mass[s] = 1.0 / (k * binom[static_cast<std::size_t>(k)] * harmonic);
    } else {
      if (k == n) continue;
      mass[s] = 1.0 / ((n - k) * binom[static_cast<std::size_t>(k)] * harmonic);
    }
  }
  return CoalitionMeasure(n, std::move(mass));
}

ProbabilisticGame::ProbabilisticGame(TUGame g, CoalitionMeasure p)
    : game(std::move(g)), measure(std::move(p)) {
  if (game.n() != measure.n())
    throw input_error("game and measure are over different player sets");
}

ReducedGame reduce(const ProbabilisticGame& g, int player) {
  const int n = g.n();
  if (n < 2) throw input_error("reduction needs at least two players");
  if (player < 0 || player >= n) throw input_error("player index out of range");
  if (g.game.worth(singleton(player)) != 0.0)
    throw input_error("only a dependent player (v({i}) = 0) can be removed");

  std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
  std::vector<int> kept;
  for (int i = 0; i < n; ++i) {
    if (i == player) continue;
    old_to_new[static_cast<std::size_t>(i)] = static_cast<int>(kept.size());
    kept.push_back(i);
  }

  const int m = n - 1;
  const std::size_t size = table_size(m);
  std::vector<double> mass(size), worth(size, 0.0);
  for (Coalition s = 0; s < size; ++s) {
    Coalition lifted = 0;
    for (int k = 0; k < m; ++k)
      if (contains(s, k)) lifted = with_player(lifted, kept[static_cast<std::size_t>(k)]);
    const Coalition with_i = with_player(lifted, player);
    const double p0 = g.measure.mass(lifted);
    const double p1 = g.measure.mass(with_i);
    mass[s] = p0 + p1;
    if (mass[s] > 0.0)
      worth[s] = (p0 * g.game.worth(lifted) + p1 * g.game.worth(with_i)) / mass[s];
  }
  return ReducedGame{ProbabilisticGame(TUGame::from_table(m, std::move(worth)),
                                       CoalitionMeasure(m, std::move(mass))),
                     std::move(old_to_new)};
}

} // namespace coalval
