#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coalval/measure.hpp"

namespace coalval {

/// Roll-call voting records: each division is stored as the coalition of
/// yes-voters.
struct RollCallDataset {
  std::vector<std::string> players;
  std::vector<Coalition> records;

  int n() const { return static_cast<int>(players.size()); }
  std::size_t count() const { return records.size(); }
};

/// CSV with a header row of player names and one row per division, cells in
/// {0,1,Y,N,y,n}. Parse errors carry the offending row and column.
RollCallDataset parse_rollcall_csv(std::istream& input);

/// P(S) = (freq(S) + smoothing) / (count + smoothing 2^n); smoothing 0
/// gives the raw empirical frequencies.
CoalitionMeasure empirical_measure(const RollCallDataset& ds, double smoothing = 0.0);

/// Pairwise Pearson correlations of the 0/1 membership indicator series.
/// Entries involving a constant series are undefined and flagged, including
/// the diagonal.
struct CorrelationMatrix {
  int n = 0;
  std::vector<double> r;          // n*n, row-major; 0 where undefined
  std::vector<std::uint8_t> flag; // 1 = defined

  double at(int i, int j) const { return r[static_cast<std::size_t>(i) * n + j]; }
  bool defined(int i, int j) const { return flag[static_cast<std::size_t>(i) * n + j] != 0; }
};

CorrelationMatrix vote_correlation_matrix(const RollCallDataset& ds);

} // namespace coalval
