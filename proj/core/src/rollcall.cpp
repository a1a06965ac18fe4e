#include "coalval/rollcall.hpp"

#include <cmath>
#include <fmt/format.h>
#include <istream>

#include "coalval/errors.hpp"

namespace coalval {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool parse_vote_cell(const std::string& cell, std::size_t row, std::size_t column) {
  if (cell == "1" || cell == "Y" || cell == "y") return true;
  if (cell == "0" || cell == "N" || cell == "n") return false;
  throw input_error(fmt::format("row {}, column {}: expected 0/1/Y/N, got \"{}\"", row, column,
                                cell));
}

} // namespace

RollCallDataset parse_rollcall_csv(std::istream& input) {
  RollCallDataset ds;
  std::string line;
  std::size_t row = 0;
  while (std::getline(input, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_csv_row(line);
    if (ds.players.empty()) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].empty())
          throw input_error(fmt::format("row {}, column {}: empty player name", row, c + 1));
        ds.players.push_back(cells[c]);
      }
      if (ds.players.size() > static_cast<std::size_t>(kMaxPlayers))
        throw size_guard_error(fmt::format("{} players exceeds the supported maximum of {}",
                                           ds.players.size(), kMaxPlayers));
      continue;
    }
    if (cells.size() != ds.players.size())
      throw input_error(fmt::format("row {}: expected {} cells, got {}", row, ds.players.size(),
                                    cells.size()));
    Coalition s = empty_coalition();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (parse_vote_cell(cells[c], row, c + 1)) s = with_player(s, static_cast<int>(c));
    ds.records.push_back(s);
  }
  if (ds.players.empty()) throw input_error("empty roll-call file: missing header row");
  return ds;
}

CoalitionMeasure empirical_measure(const RollCallDataset& ds, double smoothing) {
  if (!(smoothing >= 0.0)) throw input_error("smoothing must be non-negative");
  const std::size_t size = table_size(ds.n());
  if (ds.records.empty() && smoothing == 0.0)
    throw input_error("no divisions recorded and no smoothing: measure undefined");
  std::vector<double> mass(size, smoothing);
  for (Coalition s : ds.records) mass[s] += 1.0;
  const double total =
      static_cast<double>(ds.count()) + smoothing * static_cast<double>(size);
  for (double& m : mass) m /= total;
  return CoalitionMeasure(ds.n(), std::move(mass));
}

CorrelationMatrix vote_correlation_matrix(const RollCallDataset& ds) {
  const int n = ds.n();
  CorrelationMatrix out;
  out.n = n;
  out.r.assign(static_cast<std::size_t>(n) * n, 0.0);
  out.flag.assign(static_cast<std::size_t>(n) * n, 0);
  if (ds.count() < 2) throw input_error("correlation needs at least 2 records");

  const std::int64_t t = static_cast<std::int64_t>(ds.count());
  std::vector<std::int64_t> ones(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> both(static_cast<std::size_t>(n) * n, 0);
  for (Coalition s : ds.records)
    for (int i = 0; i < n; ++i) {
      if (!contains(s, i)) continue;
      ++ones[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j)
        if (contains(s, j)) ++both[static_cast<std::size_t>(i) * n + j];
    }

  // For 0/1 series, sum(x^2) = sum(x), so the variance numerator is
  // t*ones - ones^2; a zero numerator means a constant column.
  std::vector<std::int64_t> var(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    var[static_cast<std::size_t>(i)] =
        t * ones[static_cast<std::size_t>(i)] -
        ones[static_cast<std::size_t>(i)] * ones[static_cast<std::size_t>(i)];

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::int64_t vi = var[static_cast<std::size_t>(i)];
      const std::int64_t vj = var[static_cast<std::size_t>(j)];
      if (vi == 0 || vj == 0) continue; // constant series: leave undefined
      const std::size_t idx = static_cast<std::size_t>(i) * n + j;
      const std::int64_t cov = t * both[idx] - ones[static_cast<std::size_t>(i)] *
                                                   ones[static_cast<std::size_t>(j)];
      out.flag[idx] = 1;
      if (vi == vj && cov == vi) {
        out.r[idx] = 1.0; // identical columns are exactly 1
      } else if (vi == vj && cov == -vi) {
        out.r[idx] = -1.0;
      } else {
        out.r[idx] = static_cast<double>(cov) /
                     std::sqrt(static_cast<double>(vi) * static_cast<double>(vj));
      }
    }
  return out;
}

} // namespace coalval
