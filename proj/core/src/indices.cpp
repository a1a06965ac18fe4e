#include "coalval/indices.hpp"

#include <cmath>

namespace coalval {

namespace {

std::vector<double> binomials(int n) {
  // C(n-1, k) for k = 0..n-1.
  std::vector<double> c(static_cast<std::size_t>(n));
  c[0] = 1.0;
  for (int k = 1; k < n; ++k)
    c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] * (n - k) / k;
  return c;
}

} // namespace

ValueVector prediction_value(const ProbabilisticGame& g) {
  const int n = g.n();
  const std::size_t size = g.measure.table().size();
  std::vector<double> p_in(static_cast<std::size_t>(n), 0.0), w_in(static_cast<std::size_t>(n), 0.0);
  std::vector<double> p_out(static_cast<std::size_t>(n), 0.0), w_out(static_cast<std::size_t>(n), 0.0);
  for (Coalition s = 0; s < size; ++s) {
    const double m = g.measure.mass(s);
    if (m == 0.0) continue;
    const double mv = m * g.game.worth(s);
    for (int i = 0; i < n; ++i) {
      if (contains(s, i)) {
        p_in[static_cast<std::size_t>(i)] += m;
        w_in[static_cast<std::size_t>(i)] += mv;
      } else {
        p_out[static_cast<std::size_t>(i)] += m;
        w_out[static_cast<std::size_t>(i)] += mv;
      }
    }
  }
  ValueVector xi(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const double in = p_in[k] > 0.0 ? w_in[k] / p_in[k] : 0.0;
    const double out = p_out[k] > 0.0 ? w_out[k] / p_out[k] : 0.0;
    xi[k] = in - out;
  }
  return xi;
}

ValueVector shapley(const TUGame& game) {
  const int n = game.n();
  const std::size_t size = table_size(n);
  // w[s] = s!(n-s-1)!/n!; w[0] = 1/n, w[s] = w[s-1] * s / (n-s).
  std::vector<double> w(static_cast<std::size_t>(n));
  w[0] = 1.0 / n;
  for (int s = 1; s < n; ++s)
    w[static_cast<std::size_t>(s)] = w[static_cast<std::size_t>(s - 1)] * s / (n - s);
  ValueVector phi(static_cast<std::size_t>(n), 0.0);
  for (Coalition s = 0; s < size; ++s) {
    const int k = cardinality(s);
    if (k == n) continue;
    const double vs = game.worth(s);
    const double ws = w[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i) {
      if (contains(s, i)) continue;
      phi[static_cast<std::size_t>(i)] += ws * (game.worth(with_player(s, i)) - vs);
    }
  }
  return phi;
}

ValueVector banzhaf(const TUGame& game) {
  const int n = game.n();
  const std::size_t size = table_size(n);
  const double scale = std::ldexp(1.0, -(n - 1));
  ValueVector beta(static_cast<std::size_t>(n), 0.0);
  for (Coalition s = 0; s < size; ++s) {
    const double vs = game.worth(s);
    for (int i = 0; i < n; ++i) {
      if (contains(s, i)) continue;
      beta[static_cast<std::size_t>(i)] += game.worth(with_player(s, i)) - vs;
    }
  }
  for (double& b : beta) b *= scale;
  return beta;
}

ValueVector decisiveness(const ProbabilisticGame& g, Side side) {
  const int n = g.n();
  const std::size_t size = g.measure.table().size();
  std::vector<double> event(static_cast<std::size_t>(n), 0.0);
  std::vector<double> swing(static_cast<std::size_t>(n), 0.0);
  for (Coalition s = 0; s < size; ++s) {
    const double m = g.measure.mass(s);
    for (int i = 0; i < n; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      if (side == Side::plus) {
        if (!contains(s, i)) continue;
        event[k] += m;
        if (m != 0.0) swing[k] += m * (g.game.worth(s) - g.game.worth(without_player(s, i)));
      } else {
        if (contains(s, i)) continue;
        event[k] += m;
        if (m != 0.0) swing[k] += m * (g.game.worth(with_player(s, i)) - g.game.worth(s));
      }
    }
  }
  ValueVector phi(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    phi[k] = event[k] > 0.0 ? swing[k] / event[k] : 0.0;
  }
  return phi;
}

SemivalueWeights shapley_weights(int n) {
  table_size(n);
  const std::vector<double> c = binomials(n);
  SemivalueWeights w;
  w.q.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w.q[static_cast<std::size_t>(k)] = 1.0 / (n * c[static_cast<std::size_t>(k)]);
  return w;
}

SemivalueWeights banzhaf_weights(int n) {
  table_size(n);
  SemivalueWeights w;
  w.q.assign(static_cast<std::size_t>(n), std::ldexp(1.0, -(n - 1)));
  return w;
}

SemivalueWeights binomial_weights(int n, double p) {
  table_size(n);
  if (!(p > 0.0 && p < 1.0)) throw input_error("binomial parameter must lie in (0,1)");
  SemivalueWeights w;
  w.q.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    w.q[static_cast<std::size_t>(k)] = std::pow(p, k) * std::pow(1.0 - p, n - k - 1);
  return w;
}

ValueVector semivalue(const TUGame& game, const SemivalueWeights& weights) {
  const int n = game.n();
  if (weights.n() != n) throw input_error("semivalue weights sized for a different game");
  const std::vector<double> c = binomials(n);
  double total = 0.0;
  bool nonzero = false;
  for (int k = 0; k < n; ++k) {
    const double qk = weights.q[static_cast<std::size_t>(k)];
    if (!(qk >= 0.0)) throw input_error("semivalue weights must be non-negative");
    if (qk != 0.0) nonzero = true;
    total += c[static_cast<std::size_t>(k)] * qk;
  }
  if (!nonzero || std::abs(total - 1.0) > 1e-9)
    throw input_error("semivalue weights violate the normalization");

  const std::size_t size = table_size(n);
  ValueVector f(static_cast<std::size_t>(n), 0.0);
  for (Coalition s = 0; s < size; ++s) {
    const double vs = game.worth(s);
    for (int i = 0; i < n; ++i) {
      if (contains(s, i)) continue;
      const double marginal = game.worth(with_player(s, i)) - vs;
      f[static_cast<std::size_t>(i)] += weights.q[static_cast<std::size_t>(cardinality(s))] * marginal;
    }
  }
  return f;
}

ValueVector binomial_semivalue(const TUGame& game, double p) {
  return semivalue(game, binomial_weights(game.n(), p));
}

ValueVector probabilistic_value(const TUGame& game, const ProbabilisticValueFamily& family) {
  const int n = game.n();
  if (family.n() != n) throw input_error("family sized for a different game");
  ValueVector out(static_cast<std::size_t>(n), 0.0);
  const std::size_t size = table_size(n);
  const bool inclusive = family.convention == ProbabilisticValueFamily::Convention::inclusive;
  for (int i = 0; i < n; ++i) {
    const CoalitionMeasure& q = family.q[static_cast<std::size_t>(i)];
    if (q.n() != n) throw input_error("family member sized for a different game");
    if (q.is_degenerate()) throw input_error("family members must be proper measures");
    double total = 0.0;
    for (Coalition s = 0; s < size; ++s) {
      const double m = q.mass(s);
      if (contains(s, i) != inclusive) {
        if (m != 0.0) throw input_error("family member has mass off its stated support");
        continue;
      }
      if (m == 0.0) continue;
      total += inclusive ? m * (game.worth(s) - game.worth(without_player(s, i)))
                         : m * (game.worth(with_player(s, i)) - game.worth(s));
    }
    out[static_cast<std::size_t>(i)] = total;
  }
  return out;
}

} // namespace coalval
