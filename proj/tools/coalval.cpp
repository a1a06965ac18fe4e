// Command-line front-end: compute coalition value indices, ingest roll-call
// CSVs into empirical coalition measures, run the self-verification suite,
// and print unanimity-basis decompositions.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coalval/indices.hpp"
#include "coalval/json_io.hpp"
#include "coalval/rollcall.hpp"
#include "coalval/verify.hpp"

namespace {

using namespace coalval;
using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeGuard = 3;

int effective_max_players() {
  const char* env = std::getenv("COALITION_MAX_N");
  if (env == nullptr || *env == '\0') return kMaxPlayers;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1)
    throw input_error(fmt::format("COALITION_MAX_N=\"{}\" is not a positive integer", env));
  return value < kMaxPlayers ? static_cast<int>(value) : kMaxPlayers; // never raises the cap
}

void enforce_size_guard(int n) {
  const int limit = effective_max_players();
  if (n > limit)
    throw size_guard_error(fmt::format("{} players exceeds the active limit of {}", n, limit));
}

std::string player_label(const std::vector<std::string>& names, int i) {
  return names.empty() ? std::to_string(i + 1) : names[static_cast<std::size_t>(i)];
}

// ---------------------------------------------------------------- value ----

struct ValueConfig {
  std::string game_path;
  std::string measure_spec;
  std::vector<std::string> indices{"pv"};
  std::string out = "table";
  double p = 0.5;
  std::vector<double> q;
};

bool needs_measure(const std::string& index) {
  return index == "pv" || index == "phi_plus" || index == "phi_minus";
}

ValueVector evaluate_index(const std::string& index, const TUGame& game,
                           const std::optional<CoalitionMeasure>& measure,
                           const ValueConfig& cfg) {
  const auto require_measure = [&]() -> const CoalitionMeasure& {
    if (!measure) throw input_error(fmt::format("index \"{}\" requires --measure", index));
    return *measure;
  };
  if (index == "pv") return prediction_value(ProbabilisticGame(game, require_measure()));
  if (index == "shapley") return shapley(game);
  if (index == "banzhaf") return banzhaf(game);
  if (index == "phi_plus")
    return decisiveness(ProbabilisticGame(game, require_measure()), Side::plus);
  if (index == "phi_minus")
    return decisiveness(ProbabilisticGame(game, require_measure()), Side::minus);
  if (index == "binomial") return binomial_semivalue(game, cfg.p);
  if (index == "semivalue") {
    if (cfg.q.empty()) throw input_error("index \"semivalue\" requires --q");
    if (static_cast<int>(cfg.q.size()) != game.n())
      throw input_error(fmt::format("--q needs {} weights for this game, got {}", game.n(),
                                    cfg.q.size()));
    return semivalue(game, SemivalueWeights{cfg.q});
  }
  throw input_error(fmt::format(
      "unknown index \"{}\" (choose from pv, shapley, banzhaf, phi_plus, phi_minus, "
      "semivalue, binomial)",
      index));
}

int cmd_value(const ValueConfig& cfg) {
  const NamedGame named = load_game(cfg.game_path);
  enforce_size_guard(named.game.n());
  std::optional<CoalitionMeasure> measure;
  if (!cfg.measure_spec.empty()) measure = load_measure(cfg.measure_spec, named.game.n());

  std::vector<std::pair<std::string, ValueVector>> columns;
  for (const std::string& index : cfg.indices)
    columns.emplace_back(index, evaluate_index(index, named.game, measure, cfg));

  if (cfg.out == "json") {
    json rows = json::array();
    for (const auto& [index, values] : columns)
      for (int i = 0; i < named.game.n(); ++i)
        rows.push_back({{"player", player_label(named.names, i)},
                        {"index", index},
                        {"value", values[static_cast<std::size_t>(i)]}});
    std::cout << json{{"results", std::move(rows)}}.dump(2) << '\n';
    return 0;
  }

  std::size_t name_width = 6;
  for (int i = 0; i < named.game.n(); ++i)
    name_width = std::max(name_width, player_label(named.names, i).size());
  fmt::print("{:<{}}", "player", name_width);
  for (const auto& [index, values] : columns) fmt::print("  {:>12}", index);
  fmt::print("\n");
  for (int i = 0; i < named.game.n(); ++i) {
    fmt::print("{:<{}}", player_label(named.names, i), name_width);
    for (const auto& [index, values] : columns)
      fmt::print("  {:>12.6f}", values[static_cast<std::size_t>(i)]);
    fmt::print("\n");
  }
  return 0;
}

// --------------------------------------------------------------- ingest ----

struct IngestConfig {
  std::string csv_path;
  std::string measure_out;
  double smoothing = 0.0;
  std::string out = "table";
};

int cmd_ingest(const IngestConfig& cfg) {
  std::ifstream in(cfg.csv_path);
  if (!in) throw input_error(fmt::format("cannot open {}", cfg.csv_path));
  const RollCallDataset ds = parse_rollcall_csv(in);
  enforce_size_guard(ds.n());
  const CoalitionMeasure measure = empirical_measure(ds, cfg.smoothing);
  const CorrelationMatrix corr = vote_correlation_matrix(ds);
  const json measure_json = measure_to_sparse_json(measure, &ds.players);

  std::vector<double> yes_rate(static_cast<std::size_t>(ds.n()), 0.0);
  if (ds.count() > 0)
    for (Coalition s : ds.records)
      for (int i = 0; i < ds.n(); ++i)
        if (contains(s, i)) yes_rate[static_cast<std::size_t>(i)] += 1.0 / ds.count();

  if (!cfg.measure_out.empty()) {
    std::ofstream out(cfg.measure_out);
    if (!out) throw input_error(fmt::format("cannot write {}", cfg.measure_out));
    out << measure_json.dump(2) << '\n';
  }

  if (cfg.out == "json") {
    json correlation = json::array();
    for (int i = 0; i < corr.n; ++i) {
      json row = json::array();
      for (int j = 0; j < corr.n; ++j)
        row.push_back(corr.defined(i, j) ? json(corr.at(i, j)) : json(nullptr));
      correlation.push_back(std::move(row));
    }
    json summary{{"players", ds.players},
                 {"records", ds.count()},
                 {"yes_rates", yes_rate},
                 {"correlation", std::move(correlation)}};
    if (cfg.measure_out.empty()) summary["measure"] = measure_json;
    std::cout << summary.dump(2) << '\n';
    return 0;
  }

  fmt::print("records: {}\n\nyes-rates:\n", ds.count());
  for (int i = 0; i < ds.n(); ++i)
    fmt::print("  {}: {:.6f}\n", ds.players[static_cast<std::size_t>(i)],
               yes_rate[static_cast<std::size_t>(i)]);
  fmt::print("\ncorrelation matrix (--: undefined, constant series):\n");
  for (int i = 0; i < corr.n; ++i) {
    fmt::print("  {:>10}", ds.players[static_cast<std::size_t>(i)]);
    for (int j = 0; j < corr.n; ++j) {
      if (corr.defined(i, j))
        fmt::print("  {:>7.4f}", corr.at(i, j));
      else
        fmt::print("  {:>7}", "--");
    }
    fmt::print("\n");
  }
  if (cfg.measure_out.empty()) {
    fmt::print("\nempirical measure:\n{}\n", measure_json.dump(2));
  } else {
    fmt::print("\nempirical measure written to {}\n", cfg.measure_out);
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const VerifyOptions& options, const std::string& out) {
  const std::vector<CheckResult> results = run_verification_suite(options);
  bool clean = true;
  for (const CheckResult& r : results) clean = clean && r.as_designated();

  if (out == "json") {
    json rows = json::array();
    for (const CheckResult& r : results)
      rows.push_back({{"name", r.name},
                      {"holds", r.holds},
                      {"expected_holds", r.expected_holds},
                      {"as_designated", r.as_designated()},
                      {"detail", r.detail}});
    std::cout << json{{"checks", std::move(rows)}, {"clean", clean}}.dump(2) << '\n';
  } else {
    for (const CheckResult& r : results) {
      const char* status = r.holds ? "PASS" : "FAIL";
      const std::string qualifier =
          r.as_designated() ? (r.expected_holds ? "" : " (designated failure)")
                            : fmt::format(" (EXPECTED {})", r.expected_holds ? "PASS" : "FAIL");
      fmt::print("{:4}{}  {} — {}\n", status, qualifier, r.name, r.detail);
    }
    fmt::print("\n{}: {} checks, {} as designated\n", clean ? "CLEAN" : "NOT CLEAN",
               results.size(),
               std::count_if(results.begin(), results.end(),
                             [](const CheckResult& r) { return r.as_designated(); }));
  }
  return clean ? 0 : kExitVerifyFailure;
}

// ------------------------------------------------------------ decompose ----

int cmd_decompose(const std::string& game_path, const std::string& out) {
  const NamedGame named = load_game(game_path);
  enforce_size_guard(named.game.n());
  if (named.game.n() > 20)
    throw size_guard_error(
        fmt::format("decompose is limited to 20 players, game has {}", named.game.n()));
  const UnanimityDecomposition decomposition = harsanyi_dividends(named.game);
  const std::vector<Coalition> support = decomposition.support(1e-9);
  const std::vector<std::string>* names = named.names.empty() ? nullptr : &named.names;

  if (out == "json") {
    json rows = json::array();
    for (Coalition s : support) {
      json members = json::array();
      for (int i = 0; i < named.game.n(); ++i)
        if (contains(s, i)) members.push_back(i);
      rows.push_back({{"coalition", std::move(members)},
                      {"dividend", decomposition.alpha[s]}});
    }
    std::cout << json{{"dividends", std::move(rows)}}.dump(2) << '\n';
    return 0;
  }

  if (support.empty()) {
    fmt::print("no nonzero dividends\n");
    return 0;
  }
  for (Coalition s : support)
    fmt::print("{}: {:g}\n", format_coalition(s, names), decomposition.alpha[s]);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition value calculator for probabilistic cooperative games"};
  app.require_subcommand(1);

  ValueConfig value_cfg;
  CLI::App* value = app.add_subcommand("value", "Compute value indices for a game");
  value->add_option("--game", value_cfg.game_path, "Game JSON file")->required();
  value->add_option("--measure", value_cfg.measure_spec,
                    "Measure JSON file or inline JSON object");
  value->add_option("--indices", value_cfg.indices,
                    "Comma-separated list from pv, shapley, banzhaf, phi_plus, phi_minus, "
                    "semivalue, binomial")
      ->delimiter(',');
  value->add_option("--out", value_cfg.out, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  value->add_option("--p", value_cfg.p, "Success probability for the binomial index");
  value->add_option("--q", value_cfg.q, "Size weights q_0..q_{n-1} for the semivalue index")
      ->delimiter(',');

  IngestConfig ingest_cfg;
  CLI::App* ingest = app.add_subcommand("ingest", "Build an empirical measure from roll-call CSV");
  ingest->add_option("csv", ingest_cfg.csv_path, "Roll-call CSV file")->required();
  ingest->add_option("--measure", ingest_cfg.measure_out, "Write the sparse measure JSON here");
  ingest->add_option("--smoothing", ingest_cfg.smoothing, "Additive smoothing pseudo-count");
  ingest->add_option("--out", ingest_cfg.out, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  VerifyOptions verify_opts;
  std::string verify_out = "table";
  CLI::App* verify = app.add_subcommand("verify", "Run the axiom and theory verification suite");
  verify->add_option("--seed", verify_opts.seed, "Random seed");
  verify->add_option("--trials", verify_opts.trials, "Trials per randomized check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", verify_opts.tol, "Numerical tolerance");
  verify->add_option("--out", verify_out, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  std::string decompose_game;
  std::string decompose_out = "table";
  CLI::App* decompose =
      app.add_subcommand("decompose", "Print the nonzero dividends of the unanimity expansion");
  decompose->add_option("--game", decompose_game, "Game JSON file")->required();
  decompose->add_option("--out", decompose_out, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (value->parsed()) return cmd_value(value_cfg);
    if (ingest->parsed()) return cmd_ingest(ingest_cfg);
    if (verify->parsed()) return cmd_verify(verify_opts, verify_out);
    return cmd_decompose(decompose_game, decompose_out);
  } catch (const size_guard_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitSizeGuard;
  } catch (const input_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInputError;
  }
}
