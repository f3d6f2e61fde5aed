#include <sstream>

#include "extalg/cli.hpp"
#include "support.hpp"

using namespace extalg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(EXTALG_SOURCE_DIR) + "/configs/" + name; }

}  // namespace

TEST_CASE("check is reproducible and reports every identity") {
  const auto a = run({"check", "--config", sample("minkowski4.cfg"), "--trials", "20", "--seed", "3"});
  const auto b = run({"check", "--config", sample("minkowski4.cfg"), "--trials", "20", "--seed", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("Fund1 20 ") != std::string::npos);
  CHECK(a.out.find("gamma7b 20 ") != std::string::npos);
  CHECK(a.out.find("FAIL") == std::string::npos);
  const auto c = run({"check", "--config", sample("minkowski4.cfg"), "--trials", "20", "--seed", "4"});
  CHECK(c.out != a.out);
}

TEST_CASE("eval examples") {
  CHECK(run({"eval", "--config", sample("diag23.cfg"), "e1 . e1"}).out == "2\n");
  CHECK(run({"eval", "--config", sample("diag23.cfg"), "pair(J, I)"}).out == "1\n");
  CHECK(run({"eval", "--config", sample("diag23.cfg"), "ginv(d1)"}).out == "0.5*e1\n");

  const auto kind = run({"eval", "--config", sample("diag23.cfg"), "e1 . d1"});
  CHECK(kind.code == 2);
  CHECK(kind.err.find("kind error") != std::string::npos);
  const auto syntax = run({"eval", "--config", sample("diag23.cfg"), "e1 ^"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("parse error") != std::string::npos);
  CHECK(run({"eval", "--config", sample("diag23.cfg"), "e5"}).code == 2);
}

TEST_CASE("invert prints both inverses") {
  const auto r = run({"invert", "--config", sample("diag23.cfg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("formula:\n  0.5 0\n  0 0.33333333333333331\n") == 0);
  CHECK(r.out.find("lu:\n") != std::string::npos);
  CHECK(r.out.find("max_abs_diff") != std::string::npos);
}

TEST_CASE("bench prints one line per kernel") {
  const auto r = run({"bench", "--config", sample("euclidean3.cfg"), "--reps", "20"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(r.out.find("inversion_formula n=3 reps=20") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--config", sample("diag23.cfg"), "--trials", "0"}).code == 2);
  const auto missing = run({"check", "--config", "/nonexistent.cfg"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("config error") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
