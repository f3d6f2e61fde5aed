#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "extalg/linalg.hpp"

namespace extalg {

/// Parameters shared by every CLI command.
struct SessionConfig {
  Dimension dim{1};
  Matrix metric = Matrix::identity(1);
  std::uint64_t seed = 1;
  int trials = 200;
  double tolerance = 1e-9;
};

/// Malformed config text. line and column are 1-based; 0 when the problem is
/// not tied to a position (e.g. a missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Line-oriented `key = value` text with `#` comments. Keys: dim (required),
/// metric (row-major nested list, defaults to the identity), seed, trials,
/// tolerance. A metric asymmetric by at most 1e-12 is symmetrized; anything
/// more, a shape mismatch, or |det| <= 1e-10 is rejected.
SessionConfig parse_config(std::string_view text);

/// Reads and parses a config file.
SessionConfig load_config(const std::string& path);

}  // namespace extalg
