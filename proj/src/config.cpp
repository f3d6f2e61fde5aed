#include "extalg/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "extalg/metric.hpp"

namespace extalg {

ConfigError::ConfigError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view value, int line, int column, const char* key) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string("invalid value for '") + key + "'", line, column);
  }
  return out;
}

std::vector<std::vector<double>> parse_matrix(std::string_view value, int line, int column) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(value);
  } catch (const nlohmann::json::parse_error& e) {
    const int offset = e.byte > 0 ? static_cast<int>(e.byte) - 1 : 0;
    throw ConfigError("malformed metric list", line, column + offset);
  }
  std::vector<std::vector<double>> rows;
  if (!j.is_array()) throw ConfigError("metric must be a list of rows", line, column);
  for (const auto& row : j) {
    if (!row.is_array()) throw ConfigError("metric must be a list of rows", line, column);
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ConfigError("metric entries must be numbers", line, column);
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

SessionConfig parse_config(std::string_view text) {
  std::optional<int> dim;
  std::optional<std::vector<std::vector<double>>> rows;
  int metric_line = 0;
  int dim_line = 0;
  std::set<std::string> seen;
  SessionConfig cfg;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      const auto col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
      throw ConfigError("expected 'key = value'", line_no, col);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const int value_col = value.empty() ? static_cast<int>(eq) + 2
                                        : static_cast<int>(value.data() - raw.data()) + 1;
    if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no, value_col);
    if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'", line_no, 1);

    if (key == "dim") {
      dim = parse_number<int>(value, line_no, value_col, "dim");
      dim_line = line_no;
    } else if (key == "metric") {
      rows = parse_matrix(value, line_no, value_col);
      metric_line = line_no;
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, line_no, value_col, "seed");
    } else if (key == "trials") {
      cfg.trials = parse_number<int>(value, line_no, value_col, "trials");
      if (cfg.trials < 1) throw ConfigError("trials must be at least 1", line_no, value_col);
    } else if (key == "tolerance") {
      cfg.tolerance = parse_number<double>(value, line_no, value_col, "tolerance");
      if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive", line_no, value_col);
    } else {
      throw ConfigError("unknown key '" + key + "'", line_no, 1 + static_cast<int>(raw.find_first_not_of(" \t")));
    }
  }

  if (!dim) throw ConfigError("missing required key 'dim'", 0, 0);
  try {
    cfg.dim = Dimension(*dim);
  } catch (const DomainError& e) {
    throw ConfigError(e.what(), dim_line, 1);
  }
  const int n = cfg.dim.n();
  if (!rows) {
    cfg.metric = Matrix::identity(n);
    return cfg;
  }
  if (static_cast<int>(rows->size()) != n) {
    throw ConfigError("metric shape mismatch: expected " + std::to_string(n) + " rows, got " +
                          std::to_string(rows->size()),
                      metric_line, 1);
  }
  for (const auto& r : *rows) {
    if (static_cast<int>(r.size()) != n) {
      throw ConfigError("metric shape mismatch: expected rows of length " + std::to_string(n), metric_line, 1);
    }
  }
  Matrix g = Matrix::from_rows(*rows);
  if (max_asymmetry(g) > kSymmetryTolerance) throw ConfigError("metric is not symmetric", metric_line, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g(i, j) = g(j, i) = 0.5 * (g(i, j) + g(j, i));
  const double det = determinant(g);
  if (!(std::abs(det) > kDegeneracyFloor)) {
    throw ConfigError("metric is degenerate (det = " + std::to_string(det) + ")", metric_line, 1);
  }
  cfg.metric = std::move(g);
  return cfg;
}

SessionConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace extalg
