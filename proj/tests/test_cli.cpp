// Black-box tests of the command-line tool; each case shells out to the
// built binary (CLI_PATH) with fixtures from DATA_DIR or a temp directory.
#include <array>
#include <cmath>
#include <cstdio>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

#include "coalval/indices.hpp"
#include "coalval/json_io.hpp"

using namespace coalval;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout and stderr interleaved
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe) != nullptr)
    result.output += buffer.data();
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

} // namespace

TEST_SUITE("cli value") {
  TEST_CASE("bimodal fixture prints 2/3 in every pv row") {
    const RunResult r = run("value --game " + data("example1.json") + " --measure " +
                            data("example1-measure.json") + " --indices pv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.666667") != std::string::npos);
  }

  TEST_CASE("dutch fixture resolves names and both power indices") {
    const RunResult r =
        run("value --game " + data("dutch.json") + " --indices shapley,banzhaf --out json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    double cda_shapley = 0.0, cda_banzhaf = 0.0;
    for (const auto& row : j["results"]) {
      if (row["player"] != "CDA") continue;
      (row["index"] == "shapley" ? cda_shapley : cda_banzhaf) = row["value"].get<double>();
    }
    CHECK(std::nearbyint(cda_shapley * 1000) == 317);
    CHECK(std::nearbyint(cda_banzhaf * 1000) == 597);
  }

  TEST_CASE("json values round-trip the in-memory results exactly") {
    const RunResult r = run("value --game " + data("example1.json") + " --measure " +
                            data("example1-measure.json") + " --indices pv --out json");
    REQUIRE(r.exit_code == 0);
    const NamedGame named = load_game(data("example1.json"));
    const CoalitionMeasure p = load_measure(data("example1-measure.json"), named.game.n());
    const ValueVector xi = prediction_value(ProbabilisticGame(named.game, p));
    const json j = json::parse(r.output);
    REQUIRE(j["results"].size() == xi.size());
    for (const auto& row : j["results"]) {
      const int player = std::stoi(row["player"].get<std::string>()) - 1;
      CHECK(row["value"].get<double>() == xi[static_cast<std::size_t>(player)]);
    }
  }

  TEST_CASE("inline uniform measure makes pv coincide with banzhaf") {
    const RunResult r = run("value --game " + data("dutch.json") +
                            " --measure '{\"type\":\"uniform\"}' --indices pv,banzhaf --out json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    std::map<std::string, double> pv, bz;
    for (const auto& row : j["results"])
      (row["index"] == "pv" ? pv : bz)[row["player"].get<std::string>()] =
          row["value"].get<double>();
    for (const auto& [name, value] : pv) CHECK(std::abs(value - bz[name]) < 1e-9);
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(run("value --game /nonexistent.json --indices shapley").exit_code == 2);
    CHECK(run("value --game " + data("dutch.json") + " --indices pv").exit_code == 2); // no measure
    CHECK(run("value --game " + data("dutch.json") + " --indices nonsense").exit_code == 2);
    CHECK(run("value --indices shapley").exit_code == 2); // missing --game
  }

  TEST_CASE("the size guard can be lowered via the environment, never raised") {
    const RunResult low = run("value --game " + data("dutch.json") + " --indices shapley",
                              "COALITION_MAX_N=5");
    CHECK(low.exit_code == 3);
    const RunResult high = run("value --game " + data("dutch.json") + " --indices shapley",
                               "COALITION_MAX_N=100");
    CHECK(high.exit_code == 0); // still capped at 26, 11 players pass
    CHECK(run("value --game " + data("dutch.json") + " --indices shapley",
              "COALITION_MAX_N=bogus")
              .exit_code == 2);
  }
}

TEST_SUITE("cli ingest") {
  TEST_CASE("toy csv yields a 2/3-1/3 sparse measure and a summary") {
    const auto out_path = std::filesystem::temp_directory_path() / "toy-measure.json";
    const RunResult r = run("ingest " + data("toy-rollcall.csv") +
                            " --measure " + out_path.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("records: 3") != std::string::npos);
    std::ifstream in(out_path);
    REQUIRE(in.good());
    const json j = json::parse(in);
    REQUIRE(j["type"] == "sparse");
    REQUIRE(j["entries"].size() == 2);
    const CoalitionMeasure p = measure_from_json(j, 2);
    CHECK(p.mass(0b01u) == doctest::Approx(1.0 / 3.0));
    CHECK(p.mass(0b11u) == doctest::Approx(2.0 / 3.0));
  }

  TEST_CASE("identical columns are reported as correlation 1") {
    const auto csv = temp_file("clones.csv", "a,b,c\n1,1,0\n0,0,1\n1,1,1\n");
    const RunResult r = run("ingest " + csv.string() + " --out json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["correlation"][0][1].get<double>() == 1.0);
  }

  TEST_CASE("ragged rows exit with 2 and name the row") {
    const auto csv = temp_file("ragged.csv", "a,b\n1,0\n1\n");
    const RunResult r = run("ingest " + csv.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("row 3") != std::string::npos);
  }
}

TEST_SUITE("cli decompose") {
  TEST_CASE("unanimity basis element prints a single line") {
    const auto game = temp_file("u12.json", R"({"n":3,"type":"unanimity","T":[0,1]})");
    const RunResult r = run("decompose --game " + game.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "{1,2}: 1\n");
  }

  TEST_CASE("three-player majority lists pairs and the grand coalition") {
    const auto game =
        temp_file("maj3.json", R"({"n":3,"type":"weighted","weights":[1,1,1],"quota":2})");
    const RunResult r = run("decompose --game " + game.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "{1,2}: 1\n{1,3}: 1\n{2,3}: 1\n{1,2,3}: -2\n");
  }

  TEST_CASE("zero game reports no dividends") {
    const auto game = temp_file("zero.json", R"({"n":2,"type":"table","worth":[0,0,0,0]})");
    const RunResult r = run("decompose --game " + game.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("no nonzero dividends") != std::string::npos);
  }
}

TEST_SUITE("cli verify") {
  TEST_CASE("same seed gives byte-identical reports") {
    const std::string args = "verify --trials 5 --seed 42";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
    CHECK(a.output.find("PV / anonymity") != std::string::npos);
  }

  TEST_CASE("designated failures are labeled, not hidden") {
    const RunResult r = run("verify --trials 5 --seed 1");
    CHECK(r.output.find("(designated failure)") != std::string::npos);
  }
}
