#include "extalg/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>

#include "extalg/bench.hpp"
#include "extalg/config.hpp"
#include "extalg/expression.hpp"
#include "extalg/identities.hpp"
#include "extalg/metric.hpp"
#include "extalg/products.hpp"

namespace extalg {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string format_row(const Matrix& m, int r) {
  std::string line;
  char buf[32];
  for (int c = 0; c < m.cols(); ++c) {
    std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
    if (c) line += ' ';
    line += buf;
  }
  return line;
}

void print_matrix(std::ostream& out, const char* title, const Matrix& m) {
  out << title << '\n';
  for (int r = 0; r < m.rows(); ++r) out << "  " << format_row(m, r) << '\n';
}

int cmd_check(const SessionConfig& base, int trials, std::uint64_t seed, unsigned threads, bool seed_set,
              std::ostream& out) {
  SessionConfig cfg = base;
  if (trials > 0) cfg.trials = trials;
  if (seed_set) cfg.seed = seed;
  const auto reports = run_identity_suite(cfg, threads);
  int passed = 0;
  for (const auto& r : reports) {
    out << format_report(r) << '\n';
    passed += r.pass ? 1 : 0;
  }
  out << passed << '/' << reports.size() << " identities passed\n";
  return all_passed(reports) ? 0 : kExitFailure;
}

int cmd_eval(const SessionConfig& cfg, const std::string& text, std::ostream& out) {
  const auto expr = parse_expression(text);
  const MetricExtensor gamma(cfg.metric);
  out << format_value(evaluate(*expr, gamma)) << '\n';
  return 0;
}

int cmd_invert(const SessionConfig& cfg, std::ostream& out) {
  const Matrix formula = inverse_via_formula(cfg.metric);
  const Matrix lu = inverse(cfg.metric);
  print_matrix(out, "formula:", formula);
  print_matrix(out, "lu:", lu);
  char buf[64];
  std::snprintf(buf, sizeof buf, "max_abs_diff %.3e", max_abs_diff(formula, lu));
  out << buf << '\n';
  return 0;
}

int cmd_bench(const SessionConfig& cfg, int reps, std::ostream& out) {
  for (const auto& e : run_bench(cfg, reps)) out << format_bench_entry(e) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exterior algebra with metric extensors", "extalg"};
  app.require_subcommand(1);

  std::string config_path;
  int trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string expression;
  int reps = 25;

  auto* check = app.add_subcommand("check", "Run the identity suite");
  check->add_option("--config", config_path, "Config file")->required();
  auto* trials_opt = check->add_option("--trials", trials, "Trials per identity")->check(CLI::PositiveNumber);
  auto* seed_opt = check->add_option("--seed", seed, "Random seed");
  check->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("--config", config_path, "Config file")->required();
  eval->add_option("expr", expression, "Expression")->required();

  auto* invert = app.add_subcommand("invert", "Invert the metric by formula and by LU");
  invert->add_option("--config", config_path, "Config file")->required();

  auto* bench = app.add_subcommand("bench", "Time the core kernels");
  bench->add_option("--config", config_path, "Config file")->required();
  bench->add_option("--reps", reps, "Repetitions (at least 20)");

  std::vector<std::string> storage{"extalg"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const SessionConfig cfg = load_config(config_path);
    if (check->parsed()) return cmd_check(cfg, trials_opt->count() ? trials : 0, seed, threads, seed_opt->count() > 0, out);
    if (eval->parsed()) return cmd_eval(cfg, expression, out);
    if (invert->parsed()) return cmd_invert(cfg, out);
    return cmd_bench(cfg, reps, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const KindError& e) {
    err << "kind error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace extalg
