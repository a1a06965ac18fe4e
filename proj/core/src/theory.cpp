#include "coalval/theory.hpp"

#include <cmath>
#include <fmt/format.h>

#include "coalval/random.hpp"

namespace coalval {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::anonymity: return "anonymity";
    case Axiom::linearity: return "linearity";
    case Axiom::consistency: return "consistency";
    case Axiom::full_control: return "full_control";
    case Axiom::iddp: return "iddp";
  }
  return "?";
}

namespace {

ValueVector truncated_prediction_value(const ProbabilisticGame& g) {
  // xi with both conditional sums cut off at coalitions of size two.
  const int n = g.n();
  const std::size_t size = g.measure.table().size();
  ValueVector out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double p_in = 0.0, p_out = 0.0, w_in = 0.0, w_out = 0.0;
    for (Coalition s = 0; s < size; ++s) {
      const double m = g.measure.mass(s);
      const bool small = cardinality(s) <= 2;
      if (contains(s, i)) {
        p_in += m;
        if (small) w_in += m * g.game.worth(s);
      } else {
        p_out += m;
        if (small) w_out += m * g.game.worth(s);
      }
    }
    out[static_cast<std::size_t>(i)] =
        (p_in > 0.0 ? w_in / p_in : 0.0) - (p_out > 0.0 ? w_out / p_out : 0.0);
  }
  return out;
}

ValueVector dividend_support_value(const ProbabilisticGame& g) {
  // Sum of xi over the unanimity games carried by non-zero dividends.
  const UnanimityDecomposition d = harsanyi_dividends(g.game);
  ValueVector out(static_cast<std::size_t>(g.n()), 0.0);
  for (Coalition s : d.support(1e-9)) {
    const ValueVector xi =
        prediction_value(ProbabilisticGame(make_unanimity_game(g.n(), s), g.measure));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += xi[i];
  }
  return out;
}

void record(std::optional<AxiomViolation>& worst, double deviation, std::string description) {
  if (!worst || deviation > worst->deviation)
    worst = AxiomViolation{std::move(description), deviation};
}

double max_abs_diff(const ValueVector& a, const ValueVector& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

TUGame scaled_sum(const TUGame& v, const TUGame& w, double a, double b) {
  const std::size_t size = table_size(v.n());
  std::vector<double> table(size);
  for (Coalition s = 0; s < size; ++s) table[s] = a * v.worth(s) + b * w.worth(s);
  table[0] = 0.0;
  return TUGame::from_table(v.n(), std::move(table));
}

TUGame negate(const TUGame& v) { return scaled_sum(v, v, -2.0, 1.0); }

/// P(N) = P(empty) = 1/2.
CoalitionMeasure perfect_correlation_measure(int n) {
  std::vector<double> mass(table_size(n), 0.0);
  mass.front() = 0.5;
  mass.back() = 0.5;
  return CoalitionMeasure(n, std::move(mass));
}

void check_anonymity(const ExtendedValue& value, int trials, std::uint64_t seed, double tol,
                     std::optional<AxiomViolation>& worst) {
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const int n = 2 + static_cast<int>(rng() % 5);
    const ProbabilisticGame g(random_game(n, rng), random_measure(n, rng));
    const PlayerPermutation pi = random_permutation(n, rng);
    const ProbabilisticGame permuted(permute_game(g.game, pi), permute_measure(g.measure, pi));
    const ValueVector lhs = value.eval(g);
    const ValueVector rhs = value.eval(permuted);
    for (int i = 0; i < n; ++i) {
      const double dev = std::abs(lhs[static_cast<std::size_t>(i)] -
                                  rhs[static_cast<std::size_t>(pi(i))]);
      if (dev > tol)
        record(worst, dev,
               fmt::format("trial {}: n={}, player {} -> {}: value {:.12g} vs {:.12g} "
                           "after relabeling (dev {:.3e})",
                           t, n, i, pi(i), lhs[static_cast<std::size_t>(i)],
                           rhs[static_cast<std::size_t>(pi(i))], dev));
    }
  }
}

void check_linearity(const ExtendedValue& value, int trials, std::uint64_t seed, double tol,
                     std::optional<AxiomViolation>& worst) {
  const auto run_case = [&](const TUGame& v, const TUGame& w, double a, double b,
                            const CoalitionMeasure& p, const std::string& label) {
    const ValueVector combined = value.eval(ProbabilisticGame(scaled_sum(v, w, a, b), p));
    const ValueVector lhs_v = value.eval(ProbabilisticGame(v, p));
    const ValueVector lhs_w = value.eval(ProbabilisticGame(w, p));
    for (std::size_t i = 0; i < combined.size(); ++i) {
      const double expected = a * lhs_v[i] + b * lhs_w[i];
      const double dev = std::abs(combined[i] - expected);
      if (dev > tol)
        record(worst, dev,
               fmt::format("{}: player {}: value({:.3g}v+{:.3g}w) = {:.12g} vs {:.12g} (dev {:.3e})",
                           label, i, a, b, combined[i], expected, dev));
    }
  };

  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const int n = 2 + static_cast<int>(rng() % 5);
    const CoalitionMeasure p = random_measure(n, rng);
    const TUGame v = random_game(n, rng);
    const TUGame w = random_game(n, rng);
    std::uniform_real_distribution<double> scalar(-2.0, 2.0);
    const double a = scalar(rng), b = scalar(rng);
    run_case(v, w, a, b, p, fmt::format("trial {}: n={}", t, n));
  }
  // Fixture: summands with cancelling dividends, so the combined game's
  // dividend support shrinks to nothing.
  for (int f = 0; f < 4; ++f) {
    auto rng = trial_rng(seed, 0x10000000ull + static_cast<std::uint64_t>(f));
    const int n = 3 + static_cast<int>(rng() % 2);
    const CoalitionMeasure p = random_measure(n, rng);
    const TUGame v = random_game(n, rng);
    run_case(v, negate(v), 1.0, 1.0, p, fmt::format("cancelling-dividends fixture: n={}", n));
  }
}

void check_consistency(const ExtendedValue& value, int trials, std::uint64_t seed, double tol,
                       std::optional<AxiomViolation>& worst) {
  const auto run_case = [&](const ProbabilisticGame& g, int removed, const std::string& label) {
    const ReducedGame reduced = reduce(g, removed);
    const ValueVector before = value.eval(g);
    const ValueVector after = value.eval(reduced.game);
    for (int j = 0; j < g.n(); ++j) {
      if (j == removed) continue;
      const int mapped = reduced.old_to_new[static_cast<std::size_t>(j)];
      const double dev = std::abs(before[static_cast<std::size_t>(j)] -
                                  after[static_cast<std::size_t>(mapped)]);
      if (dev > tol)
        record(worst, dev,
               fmt::format("{}: remove player {}, player {}: {:.12g} vs {:.12g} after "
                           "reduction (dev {:.3e})",
                           label, removed, j, before[static_cast<std::size_t>(j)],
                           after[static_cast<std::size_t>(mapped)], dev));
    }
  };

  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<double> worth = random_game(n, rng).dense();
    const int removed = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    worth[singleton(removed)] = 0.0; // force a dependent player
    const ProbabilisticGame g(TUGame::from_table(n, std::move(worth)), random_measure(n, rng));
    run_case(g, removed, fmt::format("trial {}: n={}", t, n));
  }
  // Fixture: n=3 with perfect correlation P(N) = P(empty) = 1/2.
  for (int f = 0; f < 4; ++f) {
    auto rng = trial_rng(seed, 0x20000000ull + static_cast<std::uint64_t>(f));
    const int n = 3;
    std::vector<double> worth = random_game(n, rng).dense();
    const int removed = static_cast<int>(rng() % 3);
    worth[singleton(removed)] = 0.0;
    worth.back() = 1.0 + worth.back() * worth.back(); // keep v(N) != 0
    const ProbabilisticGame g(TUGame::from_table(n, std::move(worth)),
                              perfect_correlation_measure(n));
    run_case(g, removed, "fixture: n=3, P(N)=P(empty)=1/2");
  }
}

void check_full_control(const ExtendedValue& value, int trials, std::uint64_t seed, double tol,
                        std::optional<AxiomViolation>& worst) {
  const auto run_case = [&](double theta, const std::string& label) {
    const CoalitionMeasure p(1, {1.0 - theta, theta});
    const ProbabilisticGame g(make_unanimity_game(1, singleton(0)), p);
    const double expected = theta > 0.0 ? 1.0 : 0.0;
    const double actual = value.eval(g)[0];
    const double dev = std::abs(actual - expected);
    if (dev > tol)
      record(worst, dev,
             fmt::format("{}: ({{i}}, u_i, P({{i}})={:.6g}): value {:.12g}, expected {:.6g} "
                         "(dev {:.3e})",
                         label, theta, actual, expected, dev));
  };

  run_case(0.0, "fixture");
  run_case(0.3, "fixture");
  run_case(1.0, "fixture");
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    run_case(dist(rng), fmt::format("trial {}", t));
  }
}

void check_iddp(const ExtendedValue& value, int trials, std::uint64_t seed, double tol,
                std::optional<AxiomViolation>& worst) {
  const auto run_case = [&](int i, const CoalitionMeasure& p, const std::string& label) {
    const int j = 1 - i;
    const ProbabilisticGame g(make_unanimity_game(2, singleton(j)), p);
    const CoalitionMeasure given_in = condition(p, i, true);
    const CoalitionMeasure given_out = condition(p, i, false);
    const double expected = given_in.mass(full_coalition(2)) - given_out.mass(singleton(j));
    const double actual = value.eval(g)[static_cast<std::size_t>(i)];
    const double dev = std::abs(actual - expected);
    if (dev > tol)
      record(worst, dev,
             fmt::format("{}: ({{i,j}}, u_j, i={}): value {:.12g}, expected P|i(ij)-P|not i(j) "
                         "= {:.12g} (dev {:.3e})",
                         label, i, actual, expected, dev));
  };

  run_case(0, perfect_correlation_measure(2), "correlated-dictator fixture");
  run_case(1, perfect_correlation_measure(2), "correlated-dictator fixture");
  const std::vector<double> half{0.5, 0.5};
  run_case(0, product_measure(half), "independence fixture");
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    run_case(static_cast<int>(rng() % 2), random_measure(2, rng), fmt::format("trial {}", t));
  }
}

} // namespace

ValueVector counterexample_value(CounterexampleKind kind, const ProbabilisticGame& g) {
  switch (kind) {
    case CounterexampleKind::psi1:
      return decisiveness(g, Side::plus);
    case CounterexampleKind::psi2: {
      ValueVector out = prediction_value(g);
      const ValueVector phi = decisiveness(g, Side::plus);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] -= phi[i];
      return out;
    }
    case CounterexampleKind::psi3:
      return truncated_prediction_value(g);
    case CounterexampleKind::psi4:
      return dividend_support_value(g);
  }
  throw input_error("unknown counterexample kind");
}

ExtendedValue prediction_value_handle() {
  return {"PV", [](const ProbabilisticGame& g) { return prediction_value(g); }};
}

ExtendedValue decisiveness_handle(Side side) {
  return {side == Side::plus ? "Phi+" : "Phi-",
          [side](const ProbabilisticGame& g) { return decisiveness(g, side); }};
}

ExtendedValue psi_handle(CounterexampleKind kind) {
  static const char* names[] = {"Psi1", "Psi2", "Psi3", "Psi4"};
  return {names[static_cast<int>(kind)],
          [kind](const ProbabilisticGame& g) { return counterexample_value(kind, g); }};
}

ExtendedValue semivalue_handle(SemivalueWeights weights) {
  return {fmt::format("semivalue(n={})", weights.n()),
          [w = std::move(weights)](const ProbabilisticGame& g) { return semivalue(g.game, w); }};
}

AxiomReport check_axiom(const ExtendedValue& value, Axiom axiom, int trials, std::uint64_t seed,
                        double tol) {
  if (trials < 1) throw input_error("trials must be at least 1");
  AxiomReport report;
  report.axiom = axiom;
  std::optional<AxiomViolation> worst;
  switch (axiom) {
    case Axiom::anonymity: check_anonymity(value, trials, seed, tol, worst); break;
    case Axiom::linearity: check_linearity(value, trials, seed, tol, worst); break;
    case Axiom::consistency: check_consistency(value, trials, seed, tol, worst); break;
    case Axiom::full_control: check_full_control(value, trials, seed, tol, worst); break;
    case Axiom::iddp: check_iddp(value, trials, seed, tol, worst); break;
  }
  report.holds = !worst.has_value();
  report.witness = std::move(worst);
  return report;
}

std::optional<ProbabilisticValueFamily> pv_equals_probabilistic_value(const CoalitionMeasure& p,
                                                                      double tol) {
  if (p.is_degenerate()) throw input_error("degenerate measure");
  if (p.n() < 2) throw input_error("equivalence is stated for n > 1");
  const auto marginals = detect_product_measure(p, tol);
  if (!marginals) return std::nullopt;
  ProbabilisticValueFamily family;
  family.convention = ProbabilisticValueFamily::Convention::inclusive;
  family.q.reserve(static_cast<std::size_t>(p.n()));
  for (int i = 0; i < p.n(); ++i) family.q.push_back(condition(p, i, true));
  return family;
}

std::optional<double> binomial_parameter(const SemivalueWeights& weights, double tol) {
  const int n = weights.n();
  if (n < 1) throw input_error("empty weight vector");
  // Normalization gate, same rule the semivalue evaluation enforces.
  double c = 1.0, total = 0.0;
  for (int k = 0; k < n; ++k) {
    total += c * weights.q[static_cast<std::size_t>(k)];
    c = c * (n - 1 - k) / (k + 1);
  }
  if (std::abs(total - 1.0) > 1e-9) throw input_error("weights violate the normalization");

  for (double qk : weights.q)
    if (!(qk > 0.0)) return std::nullopt;
  if (n == 1) return 1.0; // every alpha gives the same 1-player value
  const double alpha = weights.q[1] / weights.q[0];
  double predicted = weights.q[0];
  for (int k = 1; k < n; ++k) {
    predicted *= alpha;
    if (std::abs(weights.q[static_cast<std::size_t>(k)] - predicted) > tol) return std::nullopt;
  }
  return alpha;
}

CoalitionMeasure measure_for_binomial_semivalue(double alpha, int n) {
  if (!(alpha > 0.0)) throw input_error("alpha must be positive");
  const std::vector<double> p(static_cast<std::size_t>(n), alpha / (1.0 + alpha));
  return product_measure(p);
}

} // namespace coalval
