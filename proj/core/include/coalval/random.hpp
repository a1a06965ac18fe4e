#pragma once

#include <cstdint>
#include <random>

#include "coalval/game.hpp"
#include "coalval/measure.hpp"

namespace coalval {

/// Independent per-trial stream derived from (seed, trial-index), so trial
/// results do not depend on evaluation order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Worths i.i.d. uniform on [-1, 1], v(empty) = 0.
TUGame random_game(int n, std::mt19937_64& rng);

/// Masses i.i.d. uniform on [0, 1], normalized to total 1.
CoalitionMeasure random_measure(int n, std::mt19937_64& rng);

/// Product measure with marginals i.i.d. uniform on [lo, hi].
CoalitionMeasure random_product_measure(int n, std::mt19937_64& rng, double lo, double hi);

PlayerPermutation random_permutation(int n, std::mt19937_64& rng);

} // namespace coalval
