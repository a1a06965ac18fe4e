#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "coalval/indices.hpp"

namespace coalval {

enum class Axiom { anonymity, linearity, consistency, full_control, iddp };

std::string_view axiom_name(Axiom a);

/// The four values used to separate the axioms:
///   psi1 = Phi+;
///   psi2 = xi - Phi+;
///   psi3 = xi with both conditional sums truncated to |S| <= 2;
///   psi4 = sum of xi(N, u_S, P) over the coalitions S whose Harsanyi
///          dividend is non-zero (|alpha_S| > 1e-9 on float input).
/// psi4's source definition assumes n >= 3; for smaller n the same formula
/// is evaluated (it collapses to xi there).
enum class CounterexampleKind { psi1, psi2, psi3, psi4 };

ValueVector counterexample_value(CounterexampleKind kind, const ProbabilisticGame& g);

/// An abstract extended value: whatever maps probabilistic games to value
/// vectors can be run through the axiom checks.
struct ExtendedValue {
  std::string name;
  std::function<ValueVector(const ProbabilisticGame&)> eval;
};

ExtendedValue prediction_value_handle();
ExtendedValue decisiveness_handle(Side side);
ExtendedValue psi_handle(CounterexampleKind kind);
ExtendedValue semivalue_handle(SemivalueWeights weights);

struct AxiomViolation {
  std::string description; // game/measure, player, expected vs actual
  double deviation = 0.0;
};

/// Outcome of a falsification run: holds = true only means no violation was
/// found within the given trials and fixtures, never a proof.
struct AxiomReport {
  Axiom axiom;
  bool holds = true;
  std::optional<AxiomViolation> witness; // worst violation found
};

/// Runs the axiom's defining identity on seeded random probabilistic games
/// plus the axiom's fixed fixtures (1-player games for full control,
/// 2-player unanimity games for iddp, the perfect-correlation measure for
/// consistency, cancelling dividends for linearity).
AxiomReport check_axiom(const ExtendedValue& value, Axiom axiom, int trials,
                        std::uint64_t seed, double tol);

/// If P is a product measure with marginals strictly inside (0,1), returns
/// the inclusive family Q_i = P|i, for which the probabilistic value
/// coincides with the prediction value on every game; otherwise nothing.
std::optional<ProbabilisticValueFamily> pv_equals_probabilistic_value(const CoalitionMeasure& p,
                                                                      double tol = 1e-9);

/// Returns alpha > 0 with q_k = q_0 alpha^k (within tol) if the semivalue is
/// binomial, nothing otherwise. Every positive q qualifies for n <= 2.
std::optional<double> binomial_parameter(const SemivalueWeights& weights, double tol = 1e-9);

/// Product measure with all marginals p = alpha / (1 + alpha); the
/// p-binomial semivalue equals the prediction value under this measure.
CoalitionMeasure measure_for_binomial_semivalue(double alpha, int n);

} // namespace coalval
