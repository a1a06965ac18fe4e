#include "coalval/random.hpp"

#include <algorithm>
#include <numeric>

namespace coalval {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

} // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (trial + 0x51ed2701a9b5d1e7ull)));
}

TUGame random_game(int n, std::mt19937_64& rng) {
  const std::size_t size = table_size(n);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> worth(size);
  worth[0] = 0.0;
  for (std::size_t s = 1; s < size; ++s) worth[s] = dist(rng);
  return TUGame::from_table(n, std::move(worth));
}

CoalitionMeasure random_measure(int n, std::mt19937_64& rng) {
  const std::size_t size = table_size(n);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> mass(size);
  double total = 0.0;
  for (std::size_t s = 0; s < size; ++s) total += mass[s] = dist(rng);
  for (std::size_t s = 0; s < size; ++s) mass[s] /= total;
  return CoalitionMeasure(n, std::move(mass));
}

CoalitionMeasure random_product_measure(int n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& pi : p) pi = dist(rng);
  return product_measure(p);
}

PlayerPermutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  std::shuffle(map.begin(), map.end(), rng);
  return PlayerPermutation(std::move(map));
}

} // namespace coalval
