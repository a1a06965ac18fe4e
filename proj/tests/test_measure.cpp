#include <cmath>
#include <doctest.h>

#include "coalval/measure.hpp"
#include "coalval/random.hpp"

using namespace coalval;

TEST_SUITE("measures") {
  TEST_CASE("construction validates mass") {
    CHECK_THROWS_AS(CoalitionMeasure(1, {0.5, 0.4}), input_error);   // sums to 0.9
    CHECK_THROWS_AS(CoalitionMeasure(1, {-0.1, 1.1}), input_error);  // negative entry
    CHECK_THROWS_AS(CoalitionMeasure(2, {0.5, 0.5}), input_error);   // wrong length
    CHECK(!CoalitionMeasure(1, {0.25, 0.75}).is_degenerate());
    CHECK(CoalitionMeasure(1, {0.0, 0.0}).is_degenerate()); // null sub-measure allowed
  }

  TEST_CASE("uniform") {
    const CoalitionMeasure p = uniform_measure(3);
    for (Coalition s = 0; s < 8; ++s) CHECK(p.mass(s) == 0.125);
  }

  TEST_CASE("product measure") {
    const std::vector<double> marginals{0.3, 0.6};
    const CoalitionMeasure p = product_measure(marginals);
    CHECK(p.mass(0b00u) == doctest::Approx(0.7 * 0.4));
    CHECK(p.mass(0b01u) == doctest::Approx(0.3 * 0.4));
    CHECK(p.mass(0b10u) == doctest::Approx(0.7 * 0.6));
    CHECK(p.mass(0b11u) == doctest::Approx(0.3 * 0.6));
    CHECK_THROWS_AS(product_measure(std::vector<double>{1.5}), input_error);
  }

  TEST_CASE("membership probabilities recover marginals") {
    const std::vector<double> marginals{0.2, 0.5, 0.9};
    const std::vector<double> recovered = membership_probabilities(product_measure(marginals));
    for (std::size_t i = 0; i < marginals.size(); ++i)
      CHECK(recovered[i] == doctest::Approx(marginals[i]).epsilon(1e-12));
  }

  TEST_CASE("conditioning") {
    auto rng = trial_rng(23, 0);
    const CoalitionMeasure p = random_measure(3, rng);
    const CoalitionMeasure in = condition(p, 1, true);
    const CoalitionMeasure out = condition(p, 1, false);
    double in_total = 0.0;
    for (Coalition s = 0; s < 8; ++s) {
      if (contains(s, 1)) {
        CHECK(out.mass(s) == 0.0);
        in_total += in.mass(s);
      } else {
        CHECK(in.mass(s) == 0.0);
      }
    }
    CHECK(in_total == doctest::Approx(1.0).epsilon(1e-12));

    // Null conditioning event: all-zero sub-measure, no throw.
    const CoalitionMeasure point(2, {0.0, 0.0, 1.0, 0.0}); // always exactly {2}
    const CoalitionMeasure given_one = condition(point, 0, true);
    CHECK(given_one.is_degenerate());
    CHECK_THROWS_AS(membership_probabilities(given_one), input_error);
  }

  TEST_CASE("product detection accepts products and rejects the rest") {
    const std::vector<double> marginals{0.3, 0.6, 0.45};
    const auto found = detect_product_measure(product_measure(marginals));
    REQUIRE(found.has_value());
    for (std::size_t i = 0; i < marginals.size(); ++i)
      CHECK((*found)[i] == doctest::Approx(marginals[i]).epsilon(1e-12));

    // Perfect correlation is not a product.
    CHECK(!detect_product_measure(CoalitionMeasure(2, {0.5, 0.0, 0.0, 0.5})));
    // Boundary marginals are excluded even though the measure factorizes.
    CHECK(!detect_product_measure(product_measure(std::vector<double>{1.0, 0.5})));
  }

  TEST_CASE("permuted measure mass relation") {
    auto rng = trial_rng(29, 0);
    const CoalitionMeasure p = random_measure(4, rng);
    const PlayerPermutation pi = random_permutation(4, rng);
    const CoalitionMeasure q = permute_measure(p, pi);
    for (Coalition s = 0; s < 16; ++s) CHECK(q.mass(pi.apply(s)) == doctest::Approx(p.mass(s)));
  }

  TEST_CASE("decisiveness-inducing distributions are proper") {
    for (int n = 1; n <= 8; ++n) {
      const CoalitionMeasure plus = shapley_inducing_measure(n, Side::plus);
      const CoalitionMeasure minus = shapley_inducing_measure(n, Side::minus);
      CHECK(plus.mass(empty_coalition()) == 0.0);
      CHECK(minus.mass(full_coalition(n)) == 0.0);
      double pt = 0.0, mt = 0.0;
      for (Coalition s = 0; s < table_size(n); ++s) {
        pt += plus.mass(s);
        mt += minus.mass(s);
      }
      CHECK(pt == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(mt == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_SUITE("reduction") {
  TEST_CASE("requires a dependent player") {
    const TUGame g = TUGame::from_table(2, {0.0, 0.5, 0.0, 1.0});
    const ProbabilisticGame pg(g, uniform_measure(2));
    CHECK_THROWS_AS(reduce(pg, 0), input_error); // v({1}) = 0.5 != 0
    CHECK_NOTHROW(reduce(pg, 1));
  }

  TEST_CASE("merges probabilities and convex-combines worths") {
    // n=2, remove player 1 (mask bit 1), keep player 0.
    const TUGame g = TUGame::from_table(2, {0.0, 3.0, 0.0, 5.0});
    const CoalitionMeasure p(2, {0.1, 0.2, 0.3, 0.4});
    const ReducedGame r = reduce(ProbabilisticGame(g, p), 1);
    CHECK(r.game.n() == 1);
    CHECK(r.old_to_new == std::vector<int>{0, -1});
    CHECK(r.game.measure.mass(0u) == doctest::Approx(0.4));  // 0.1 + 0.3
    CHECK(r.game.measure.mass(1u) == doctest::Approx(0.6));  // 0.2 + 0.4
    // v'({0}) = (0.2*v({0}) + 0.4*v({0,1})) / 0.6
    CHECK(r.game.game.worth(1u) == doctest::Approx((0.2 * 3.0 + 0.4 * 5.0) / 0.6));
    // v'(empty) = (0.1*v(empty) + 0.3*v({1})) / 0.4 = 0, as required of a game
    CHECK(r.game.game.worth(0u) == 0.0);
  }

  TEST_CASE("zero merged mass yields zero worth, not a division") {
    const TUGame g = TUGame::from_table(2, {0.0, 1.0, 0.0, 1.0});
    const CoalitionMeasure p(2, {0.5, 0.0, 0.5, 0.0}); // player 0 never in
    const ReducedGame r = reduce(ProbabilisticGame(g, p), 1);
    CHECK(r.game.measure.mass(1u) == 0.0);
    CHECK(r.game.game.worth(1u) == 0.0);
  }

  TEST_CASE("index re-packing for an interior player") {
    const TUGame g = TUGame::from_table(3, {0.0, 1.0, 0.0, 2.0, 4.0, 5.0, 6.0, 7.0});
    const ReducedGame r = reduce(ProbabilisticGame(g, uniform_measure(3)), 1);
    CHECK(r.old_to_new == std::vector<int>{0, -1, 1});
    CHECK(r.game.n() == 2);
    // Uniform measure merges to uniform; worths average pairs.
    CHECK(r.game.measure.mass(0b01u) == doctest::Approx(0.25));
    CHECK(r.game.game.worth(0b01u) == doctest::Approx(0.5 * (1.0 + 2.0)));
    CHECK(r.game.game.worth(0b10u) == doctest::Approx(0.5 * (4.0 + 6.0)));
  }
}
