#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "extalg/graded.hpp"
#include "extalg/metric.hpp"

namespace extalg {

/// Static kind of an expression. Scalars fit either algebra and adopt the
/// kind of whatever they are combined with.
enum class ValueKind { scalar, vector, form };

enum class Op {
  number,     // literal
  vector,     // e<k>
  form,       // d<k>
  e_wedge,    // I
  eps_wedge,  // J
  neg,
  rev,
  inv,
  g,
  ginv,
  pair,
  wedge,   // ^
  lcontr,  // _|
  rcontr,  // |_
  dot,     // .
  mul,     // *
  add,
  sub,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  Op op;
  ValueKind kind;
  double number = 0.0;  // Op::number
  int index = 0;        // Op::vector, Op::form (1-based)
  std::vector<ExprPtr> args;
};

/// Lexical or syntax error; column is the 1-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int column);
  int column() const noexcept { return column_; }

 private:
  int column_;
};

/// Operand kinds that no rule accepts, e.g. a scalar product across kinds.
class KindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and kind-checks. Precedence, tightest first: unary and calls, ^,
/// _| and |_, ., *, + and -. Binary operators are left-associative. The
/// Unicode spellings of the operators are accepted as aliases.
ExprPtr parse_expression(std::string_view text);

/// Canonical ASCII form with the minimal parentheses; reparses to an
/// identical tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

using Value = std::variant<double, Multivector, Multiform>;

/// Evaluates against the session metric. _| and |_ are duality contractions
/// when the operand kinds differ and metric contractions otherwise. Throws
/// DomainError when a basis index exceeds the metric's dimension.
Value evaluate(const Expr& e, const MetricExtensor& gamma);

/// "2", "0.5*e1", "1 - 3*d1^d2". Coefficients below 1e-14 of the largest one
/// are dropped as rounding noise.
std::string format_value(const Value& v);

}  // namespace extalg
