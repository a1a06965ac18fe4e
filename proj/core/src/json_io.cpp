#include "coalval/json_io.hpp"

#include <fmt/format.h>
#include <fstream>
#include <nlohmann/json.hpp>

#include "coalval/errors.hpp"

namespace coalval {

namespace {

using nlohmann::json;

json parse_json(std::istream& in, const std::string& origin) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error(fmt::format("{}: {}", origin, e.what()));
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(fmt::format("cannot open {}", path));
  return parse_json(in, path);
}

int read_player_count(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw input_error("game JSON: missing integer field \"n\"");
  const int n = j["n"].get<int>();
  table_size(n); // range check, throws size_guard_error
  return n;
}

std::vector<double> read_number_array(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_array())
    throw input_error(fmt::format("missing array field \"{}\"", field));
  std::vector<double> out;
  out.reserve(j[field].size());
  for (const auto& x : j[field]) {
    if (!x.is_number()) throw input_error(fmt::format("\"{}\" must contain only numbers", field));
    out.push_back(x.get<double>());
  }
  return out;
}

Coalition read_coalition(const json& j, int n, const std::string& field) {
  if (!j.is_array()) throw input_error(fmt::format("\"{}\" must be an array of player indices", field));
  Coalition s = empty_coalition();
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw input_error(fmt::format("\"{}\" must contain integer player indices", field));
    const int i = x.get<int>();
    if (i < 0 || i >= n)
      throw input_error(fmt::format("\"{}\": player index {} out of range [0, {})", field, i, n));
    s = with_player(s, i);
  }
  return s;
}

} // namespace

NamedGame game_from_json(const json& j) {
  if (!j.is_object()) throw input_error("game JSON: expected an object");
  const int n = read_player_count(j);
  if (!j.contains("type") || !j["type"].is_string())
    throw input_error("game JSON: missing string field \"type\"");
  const std::string type = j["type"].get<std::string>();

  NamedGame out{TUGame::from_table(1, {0.0, 0.0}), {}};
  if (type == "weighted") {
    const std::vector<double> weights = read_number_array(j, "weights");
    if (static_cast<int>(weights.size()) != n)
      throw input_error(fmt::format("game JSON: expected {} weights, got {}", n, weights.size()));
    if (!j.contains("quota") || !j["quota"].is_number())
      throw input_error("game JSON: weighted game needs a numeric \"quota\"");
    out.game = TUGame::weighted(weights, j["quota"].get<double>());
  } else if (type == "table") {
    std::vector<double> worth = read_number_array(j, "worth");
    if (worth.size() != table_size(n))
      throw input_error(fmt::format("game JSON: expected {} worths, got {}", table_size(n),
                                    worth.size()));
    out.game = TUGame::from_table(n, std::move(worth));
  } else if (type == "unanimity") {
    if (!j.contains("T")) throw input_error("game JSON: unanimity game needs \"T\"");
    out.game = make_unanimity_game(n, read_coalition(j["T"], n, "T"));
  } else {
    throw input_error(fmt::format("game JSON: unknown type \"{}\"", type));
  }

  if (j.contains("names")) {
    if (!j["names"].is_array() || static_cast<int>(j["names"].size()) != n)
      throw input_error(fmt::format("game JSON: \"names\" must list {} strings", n));
    for (const auto& x : j["names"]) {
      if (!x.is_string()) throw input_error("game JSON: \"names\" must contain strings");
      out.names.push_back(x.get<std::string>());
    }
  }
  return out;
}

NamedGame load_game(const std::string& path) { return game_from_json(load_json_file(path)); }

CoalitionMeasure measure_from_json(const json& j, int n) {
  if (!j.is_object()) throw input_error("measure JSON: expected an object");
  if (!j.contains("type") || !j["type"].is_string())
    throw input_error("measure JSON: missing string field \"type\"");
  const std::string type = j["type"].get<std::string>();

  if (type == "uniform") return uniform_measure(n);
  if (type == "product") {
    const std::vector<double> p = read_number_array(j, "p");
    if (static_cast<int>(p.size()) != n)
      throw input_error(fmt::format("measure JSON: expected {} probabilities, got {}", n,
                                    p.size()));
    return product_measure(p);
  }
  if (type == "table") {
    std::vector<double> mass = read_number_array(j, "mass");
    if (mass.size() != table_size(n))
      throw input_error(fmt::format("measure JSON: expected {} masses, got {}", table_size(n),
                                    mass.size()));
    return CoalitionMeasure(n, std::move(mass));
  }
  if (type == "sparse") {
    if (!j.contains("entries") || !j["entries"].is_array())
      throw input_error("measure JSON: sparse measure needs an \"entries\" array");
    std::vector<double> mass(table_size(n), 0.0);
    for (const auto& entry : j["entries"]) {
      if (!entry.is_object() || !entry.contains("coalition") || !entry.contains("p") ||
          !entry["p"].is_number())
        throw input_error("measure JSON: each sparse entry needs \"coalition\" and numeric \"p\"");
      mass[read_coalition(entry["coalition"], n, "coalition")] += entry["p"].get<double>();
    }
    return CoalitionMeasure(n, std::move(mass));
  }
  throw input_error(fmt::format("measure JSON: unknown type \"{}\"", type));
}

CoalitionMeasure load_measure(const std::string& path_or_inline, int n) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && path_or_inline[first] == '{') {
    try {
      return measure_from_json(json::parse(path_or_inline), n);
    } catch (const json::exception& e) {
      throw input_error(fmt::format("inline measure spec: {}", e.what()));
    }
  }
  return measure_from_json(load_json_file(path_or_inline), n);
}

json measure_to_sparse_json(const CoalitionMeasure& p, const std::vector<std::string>* names) {
  json entries = json::array();
  const std::size_t size = p.table().size();
  for (Coalition s = 0; s < size; ++s) {
    const double m = p.mass(s);
    if (m == 0.0) continue;
    json members = json::array();
    for (int i = 0; i < p.n(); ++i)
      if (contains(s, i)) members.push_back(i);
    json entry{{"coalition", std::move(members)}, {"p", m}};
    if (names) {
      json labels = json::array();
      for (int i = 0; i < p.n(); ++i)
        if (contains(s, i)) labels.push_back((*names)[static_cast<std::size_t>(i)]);
      entry["members"] = std::move(labels);
    }
    entries.push_back(std::move(entry));
  }
  return json{{"type", "sparse"}, {"entries", std::move(entries)}};
}

} // namespace coalval
