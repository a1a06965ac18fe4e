#pragma once

#include <stdexcept>
#include <string>

namespace coalval {

/// Malformed input: bad weights, invalid measure totals, parse failures, ...
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Player count exceeds the dense-table limit (or a caller-lowered cap).
class size_guard_error : public std::runtime_error {
public:
  explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coalval
