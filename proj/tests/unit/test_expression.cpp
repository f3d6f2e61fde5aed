#include "extalg/expression.hpp"
#include "extalg/metric.hpp"
#include "support.hpp"

using namespace extalg;

namespace {

std::string eval_text(const std::string& text, const Matrix& g) {
  return format_value(evaluate(*parse_expression(text), MetricExtensor(g)));
}

const std::vector<std::string> kCorpus = {
    "e1",
    "d2",
    "I",
    "J",
    "3",
    "0.25",
    "1e-3",
    "2.5E+2",
    "-e1",
    "--e1",
    "e1 ^ e2",
    "e1 ^ e2 ^ e3",
    "e1 ^ (e2 ^ e3)",
    "(e1 ^ e2) ^ e3",
    "d1 _| (e1 ^ e2)",
    "d1 _| e1 ^ e2",
    "(e1 ^ e2) |_ d2",
    "e1 _| e1 ^ e2",
    "e1 _| e2 _| I",
    "e1 _| (e2 _| I)",
    "e1 |_ e2 _| e3",
    "e1 . e1",
    "e1 . e2 + e2 . e2",
    "(e1 + e2) . (e1 - e2)",
    "d1 . d1 * 3",
    "2 * e1",
    "2 * 3 * e1",
    "2 * (3 * e1)",
    "e1 + e2 - e3",
    "e1 - (e2 - e3)",
    "e1 - e2 + e3",
    "-(e1 + e2)",
    "-e1 ^ e2",
    "-(e1 ^ e2)",
    "rev(e1 ^ e2)",
    "inv(e1 + e1 ^ e2)",
    "rev(inv(I))",
    "g(e1)",
    "g(e1 ^ e2) + J",
    "ginv(d1)",
    "ginv(g(e1 + e2))",
    "pair(J, I)",
    "pair(e1, d1)",
    "pair(d1 ^ d2, e1 ^ e2) * e1",
    "pair(2, e1)",
    "1 + e1",
    "1 ^ e1",
    "3 . 4",
    "(2 + 3) * (d1 + d2)",
    "e1 ^ e2 . e1 ^ e2",
    "(e1 ^ e2) . (e1 ^ e2)",
    "d1 _| (d1 ^ d2)",
    "J |_ e3",
    "e2 _| J",
    "rev(d1 ^ d2 ^ d3) _| I",
    "g(I) . J",
    "1 - -1",
    "0.5 * ginv(d1) - e1 * 0.5",
    "e12",
    "pair(e1 ^ e2, d1 ^ d2) . 2",
    "  e1   ^e2 ",
    "e1∧e2",
    "d1 ⌟ (e1 ∧ e2)",
    "(e1 ∧ e2) ⌞ d2",
    "e1 · e1",
    "e1 − e2",
};

}  // namespace

TEST_CASE("parse examples") {
  const auto w = parse_expression("e1 ^ e2");
  CHECK(w->op == Op::wedge);
  CHECK(w->kind == ValueKind::vector);
  CHECK(w->args[0]->op == Op::vector);
  CHECK(w->args[1]->index == 2);

  const auto c = parse_expression("d1 _| (e1 ^ e2)");
  CHECK(c->op == Op::lcontr);
  CHECK(c->kind == ValueKind::vector);
  CHECK(c->args[1]->op == Op::wedge);

  CHECK_THROWS_AS(parse_expression("e1 . d1"), KindError);
  try {
    parse_expression("e1 . d1");
  } catch (const KindError& e) {
    CHECK(std::string(e.what()).find("same kind") != std::string::npos);
  }
}

TEST_CASE("precedence") {
  CHECK(to_string(*parse_expression("e1 + e2 ^ e3")) == "e1 + e2 ^ e3");
  CHECK(parse_expression("e1 + e2 ^ e3")->op == Op::add);
  CHECK(parse_expression("d1 _| e1 ^ e2")->op == Op::lcontr);
  CHECK(parse_expression("e1 . e2 _| e3")->op == Op::dot);
  CHECK(parse_expression("2 * e1 . e1")->op == Op::mul);
  CHECK(parse_expression("-e1 ^ e2")->op == Op::wedge);
  CHECK(to_string(*parse_expression("(e1 ^ e2) ^ e3")) == "e1 ^ e2 ^ e3");
  CHECK(to_string(*parse_expression("e1 ^ (e2 ^ e3)")) == "e1 ^ (e2 ^ e3)");
  CHECK(to_string(*parse_expression("e1 - (e2 - e3)")) == "e1 - (e2 - e3)");
  CHECK(to_string(*parse_expression("d1⌟(e1∧e2)")) == "d1 _| e1 ^ e2");
}

TEST_CASE("lexical and syntax errors") {
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("e1 +"), ParseError);
  CHECK_THROWS_AS(parse_expression("(e1 ^ e2"), ParseError);
  CHECK_THROWS_AS(parse_expression("e1 ^ e2)"), ParseError);
  CHECK_THROWS_AS(parse_expression("e0"), ParseError);
  CHECK_THROWS_AS(parse_expression("e13"), ParseError);
  CHECK_THROWS_AS(parse_expression("x1"), ParseError);
  CHECK_THROWS_AS(parse_expression("e1 $ e2"), ParseError);
  CHECK_THROWS_AS(parse_expression("pair(e1)"), ParseError);
  CHECK_THROWS_AS(parse_expression("rev e1"), ParseError);
  CHECK_THROWS_AS(parse_expression("e1 e2"), ParseError);
  try {
    parse_expression("e1 ^ ^ e2");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("kind discipline") {
  CHECK_THROWS_AS(parse_expression("e1 ^ d1"), KindError);
  CHECK_THROWS_AS(parse_expression("e1 + d1"), KindError);
  CHECK_THROWS_AS(parse_expression("e1 * e2"), KindError);
  CHECK_THROWS_AS(parse_expression("pair(e1, e2)"), KindError);
  CHECK_THROWS_AS(parse_expression("pair(d1, d2)"), KindError);
  CHECK_THROWS_AS(parse_expression("g(d1)"), KindError);
  CHECK_THROWS_AS(parse_expression("ginv(e1)"), KindError);
  CHECK_THROWS_AS(parse_expression("(d1 _| e1) + d1"), KindError);
  CHECK(parse_expression("d1 _| e1")->kind == ValueKind::vector);
  CHECK(parse_expression("e1 _| d1")->kind == ValueKind::form);
  CHECK(parse_expression("e1 |_ d1")->kind == ValueKind::vector);
  CHECK(parse_expression("d1 |_ e1")->kind == ValueKind::form);
  CHECK(parse_expression("pair(d1, e1)")->kind == ValueKind::scalar);
  CHECK(parse_expression("g(e1)")->kind == ValueKind::form);
  CHECK(parse_expression("2 ^ d1")->kind == ValueKind::form);
}

TEST_CASE("pretty printing round-trips") {
  REQUIRE(kCorpus.size() >= 50);
  for (const auto& text : kCorpus) {
    CAPTURE(text);
    const auto first = parse_expression(text);
    const std::string printed = to_string(*first);
    const auto second = parse_expression(printed);
    CHECK(structurally_equal(*first, *second));
    CHECK(to_string(*second) == printed);
  }
  CHECK_FALSE(structurally_equal(*parse_expression("e1 ^ e2"), *parse_expression("e2 ^ e1")));
  CHECK_FALSE(structurally_equal(*parse_expression("2"), *parse_expression("3")));
}

TEST_CASE("evaluation examples") {
  const Matrix g23 = Matrix::diagonal({2, 3});
  CHECK(eval_text("e1 . e1", g23) == "2");
  CHECK(eval_text("pair(J, I)", g23) == "1");
  CHECK(eval_text("ginv(d1)", g23) == "0.5*e1");
  CHECK(eval_text("d1 _| (e1 ^ e2)", g23) == "e2");
  CHECK(eval_text("(e1 ^ e2) |_ d2", g23) == "e1");
  CHECK(eval_text("e1 _| (e1 ^ e2)", g23) == "2*e2");
  CHECK(eval_text("e2 ^ e1", g23) == "-e1^e2");
  CHECK(eval_text("1 + 2*e1 - 3*e1^e2", g23) == "1 + 2*e1 - 3*e1^e2");
  CHECK(eval_text("g(e1 ^ e2)", g23) == "6*d1^d2");
  CHECK(eval_text("e1 _| d1", g23) == "1");
  CHECK(eval_text("rev(e1 ^ e2) + inv(e1)", g23) == "-e1 - e1^e2");
  CHECK(eval_text("e1 ^ e1", g23) == "0");
  CHECK(eval_text("2 * 3 + 1", g23) == "7");
  CHECK(eval_text("(e1 + e2) . (e1 + e2)", g23) == "5");
  CHECK(eval_text("d2 . d2", g23) == "0.3333333333333333");
  CHECK_THROWS_AS(eval_text("e3", g23), DomainError);
}
