#include <cmath>
#include <doctest.h>
#include <sstream>

#include "coalval/rollcall.hpp"

using namespace coalval;

namespace {

RollCallDataset parse(const std::string& text) {
  std::istringstream in(text);
  return parse_rollcall_csv(in);
}

} // namespace

TEST_SUITE("roll-call parsing") {
  TEST_CASE("basic encoding") {
    const RollCallDataset ds = parse("a,b\n1,1\n1,0\n");
    CHECK(ds.players == std::vector<std::string>{"a", "b"});
    CHECK(ds.records == std::vector<Coalition>{0b11u, 0b01u});
    CHECK(ds.count() == 2);
  }

  TEST_CASE("yes/no letters and whitespace are accepted") {
    const RollCallDataset ds = parse("a, b\nY, n\ny, N\n0, 1\n");
    CHECK(ds.records == std::vector<Coalition>{0b01u, 0b01u, 0b10u});
  }

  TEST_CASE("errors carry row and column") {
    CHECK_THROWS_WITH_AS(parse("a,b\n1,x\n"), doctest::Contains("row 2, column 2"), input_error);
    CHECK_THROWS_WITH_AS(parse("a,b\n1\n"), doctest::Contains("row 2"), input_error);
    CHECK_THROWS_AS(parse(""), input_error);
    CHECK_THROWS_AS(parse("a,,b\n"), input_error); // empty name
  }

  TEST_CASE("blank lines are skipped") {
    const RollCallDataset ds = parse("a,b\n\n1,0\n\n");
    CHECK(ds.count() == 1);
  }
}

TEST_SUITE("empirical measures") {
  TEST_CASE("frequencies") {
    const RollCallDataset ds = parse("a,b\n1,1\n1,1\n1,0\n");
    const CoalitionMeasure p = empirical_measure(ds);
    CHECK(p.mass(0b11u) == doctest::Approx(2.0 / 3.0));
    CHECK(p.mass(0b01u) == doctest::Approx(1.0 / 3.0));
    CHECK(p.mass(0b00u) == 0.0);
    CHECK(p.mass(0b10u) == 0.0);
  }

  TEST_CASE("smoothing") {
    const RollCallDataset ds = parse("a\n1\n");
    const CoalitionMeasure p = empirical_measure(ds, 1.0);
    CHECK(p.mass(0u) == doctest::Approx(1.0 / 3.0)); // (0+1)/(1+2)
    CHECK(p.mass(1u) == doctest::Approx(2.0 / 3.0)); // (1+1)/(1+2)
    CHECK_THROWS_AS(empirical_measure(ds, -0.5), input_error);
  }

  TEST_CASE("yes-rates equal membership probabilities") {
    const RollCallDataset ds = parse("a,b,c\n1,0,1\n1,1,0\n0,1,1\n1,0,0\n");
    const std::vector<double> p = membership_probabilities(empirical_measure(ds));
    CHECK(p[0] == doctest::Approx(0.75));
    CHECK(p[1] == doctest::Approx(0.5));
    CHECK(p[2] == doctest::Approx(0.5));
  }
}

TEST_SUITE("vote correlations") {
  TEST_CASE("identical columns give exactly 1, opposite columns -1") {
    const RollCallDataset ds = parse("a,b,c\n1,1,0\n0,0,1\n1,1,0\n0,0,1\n1,1,0\n");
    const CorrelationMatrix m = vote_correlation_matrix(ds);
    REQUIRE(m.defined(0, 1));
    CHECK(m.at(0, 1) == 1.0); // bit-identical series: exact unity required
    CHECK(m.at(0, 2) == -1.0);
    CHECK(m.at(0, 0) == 1.0);
  }

  TEST_CASE("constant series are flagged undefined, diagonal included") {
    const RollCallDataset ds = parse("a,b\n1,1\n1,0\n1,1\n");
    const CorrelationMatrix m = vote_correlation_matrix(ds);
    CHECK(!m.defined(0, 0));
    CHECK(!m.defined(0, 1));
    CHECK(!m.defined(1, 0));
    CHECK(m.defined(1, 1));
  }

  TEST_CASE("symmetry and range") {
    const RollCallDataset ds =
        parse("a,b,c,d\n1,0,1,1\n0,1,1,0\n1,1,0,0\n0,0,1,1\n1,1,1,0\n0,1,0,1\n");
    const CorrelationMatrix m = vote_correlation_matrix(ds);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        REQUIRE(m.defined(i, j));
        CHECK(m.at(i, j) == doctest::Approx(m.at(j, i)).epsilon(1e-12));
        CHECK(std::abs(m.at(i, j)) <= 1.0 + 1e-12);
      }
  }

  TEST_CASE("fewer than two records is an error") {
    CHECK_THROWS_AS(vote_correlation_matrix(parse("a,b\n1,0\n")), input_error);
  }
}
