#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

#include "coalval/measure.hpp"

namespace coalval {

/// Game plus optional display names, as read from a game JSON object:
/// {"n":..., "type":"weighted"|"table"|"unanimity", ...}.
struct NamedGame {
  TUGame game;
  std::vector<std::string> names; // empty when the file has none
};

NamedGame game_from_json(const nlohmann::json& j);
NamedGame load_game(const std::string& path);

/// Measure JSON: {"type":"uniform"} | {"type":"product","p":[...]} |
/// {"type":"table","mass":[...]} | {"type":"sparse","entries":[...]}.
/// n is taken from the game the measure accompanies.
CoalitionMeasure measure_from_json(const nlohmann::json& j, int n);
CoalitionMeasure load_measure(const std::string& path_or_inline, int n);

/// Sparse measure JSON listing only coalitions with positive mass.
nlohmann::json measure_to_sparse_json(const CoalitionMeasure& p,
                                      const std::vector<std::string>* names = nullptr);

} // namespace coalval
