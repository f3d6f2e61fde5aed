#include "extalg/expression.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "extalg/algebra.hpp"
#include "extalg/duality.hpp"
#include "extalg/products.hpp"

namespace extalg {

ParseError::ParseError(const std::string& message, int column)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

namespace {

enum class Tok { number, vector, form, pseudo_e, pseudo_eps, func, lparen, rparen, comma, wedge, lcontr, rcontr, dot, star, plus, minus, end };

struct Token {
  Tok type;
  int column;
  double number = 0.0;
  int index = 0;
  Op func = Op::neg;
};

struct Alias {
  std::string_view bytes;
  Tok type;
};

constexpr std::array<Alias, 5> kAliases{{
    {"∧", Tok::wedge},
    {"⌟", Tok::lcontr},
    {"⌞", Tok::rcontr},
    {"·", Tok::dot},
    {"−", Tok::minus},
}};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < s.size() && is_digit(s[i + 1]))) {
      // digits [. digits] [e [+-] digits]; a bare '.' stays an operator.
      std::size_t j = i;
      while (j < s.size() && is_digit(s[j])) ++j;
      if (j + 1 < s.size() && s[j] == '.' && is_digit(s[j + 1])) {
        ++j;
        while (j < s.size() && is_digit(s[j])) ++j;
      }
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && is_digit(s[k])) {
          j = k;
          while (j < s.size() && is_digit(s[j])) ++j;
        }
      }
      double v = 0.0;
      const auto res = std::from_chars(s.data() + i, s.data() + j, v);
      if (res.ec != std::errc() || !std::isfinite(v)) throw ParseError("number out of range", col);
      out.push_back({Tok::number, col, v});
      i = j;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t j = i;
      while (j < s.size() && is_alpha(s[j])) ++j;
      const std::string_view word = s.substr(i, j - i);
      std::size_t k = j;
      while (k < s.size() && is_digit(s[k])) ++k;
      const std::string_view digits = s.substr(j, k - j);
      if ((word == "e" || word == "d") && !digits.empty()) {
        int idx = 0;
        const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
        if (res.ec != std::errc() || idx < 1 || idx > kMaxDimension)
          throw ParseError("basis index out of range 1.." + std::to_string(kMaxDimension), col);
        Token t{word == "e" ? Tok::vector : Tok::form, col};
        t.index = idx;
        out.push_back(t);
      } else if (!digits.empty()) {
        throw ParseError("unknown identifier '" + std::string(s.substr(i, k - i)) + "'", col);
      } else if (word == "I") {
        out.push_back({Tok::pseudo_e, col});
      } else if (word == "J") {
        out.push_back({Tok::pseudo_eps, col});
      } else {
        Token t{Tok::func, col};
        if (word == "rev") t.func = Op::rev;
        else if (word == "inv") t.func = Op::inv;
        else if (word == "g") t.func = Op::g;
        else if (word == "ginv") t.func = Op::ginv;
        else if (word == "pair") t.func = Op::pair;
        else throw ParseError("unknown identifier '" + std::string(word) + "'", col);
        out.push_back(t);
      }
      i = k;
      continue;
    }
    if (c == '_' && i + 1 < s.size() && s[i + 1] == '|') {
      out.push_back({Tok::lcontr, col});
      i += 2;
      continue;
    }
    if (c == '|' && i + 1 < s.size() && s[i + 1] == '_') {
      out.push_back({Tok::rcontr, col});
      i += 2;
      continue;
    }
    Tok single = Tok::end;
    switch (c) {
      case '(': single = Tok::lparen; break;
      case ')': single = Tok::rparen; break;
      case ',': single = Tok::comma; break;
      case '^': single = Tok::wedge; break;
      case '.': single = Tok::dot; break;
      case '*': single = Tok::star; break;
      case '+': single = Tok::plus; break;
      case '-': single = Tok::minus; break;
      default: break;
    }
    if (single != Tok::end) {
      out.push_back({single, col});
      ++i;
      continue;
    }
    const auto alias = std::find_if(kAliases.begin(), kAliases.end(),
                                    [&](const Alias& a) { return s.substr(i).starts_with(a.bytes); });
    if (alias == kAliases.end()) throw ParseError("unexpected character", col);
    out.push_back({alias->type, col});
    i += alias->bytes.size();
  }
  out.push_back({Tok::end, static_cast<int>(s.size()) + 1});
  return out;
}

const char* kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::scalar: return "scalar";
    case ValueKind::vector: return "multivector";
    case ValueKind::form: return "multiform";
  }
  return "?";
}

const char* op_symbol(Op op) {
  switch (op) {
    case Op::wedge: return "^";
    case Op::lcontr: return "_|";
    case Op::rcontr: return "|_";
    case Op::dot: return ".";
    case Op::mul: return "*";
    case Op::add: return "+";
    case Op::sub: return "-";
    case Op::neg: return "-";
    case Op::rev: return "rev";
    case Op::inv: return "inv";
    case Op::g: return "g";
    case Op::ginv: return "ginv";
    case Op::pair: return "pair";
    default: return "?";
  }
}

// Common kind of two operands where scalars adapt; nullopt-like failure is
// signalled by returning false.
bool unify(ValueKind a, ValueKind b, ValueKind& out) {
  if (a == ValueKind::scalar) {
    out = b;
    return true;
  }
  if (b == ValueKind::scalar || a == b) {
    out = a;
    return true;
  }
  return false;
}

[[noreturn]] void kind_error(const std::string& rule, ValueKind a, ValueKind b) {
  throw KindError(rule + " (got " + kind_name(a) + " and " + kind_name(b) + ")");
}

ExprPtr make_leaf(Op op, ValueKind kind, double number = 0.0, int index = 0) {
  return std::make_shared<const Expr>(Expr{op, kind, number, index, {}});
}

ExprPtr make_unary(Op op, ExprPtr a) {
  ValueKind k = a->kind;
  if (op == Op::g) {
    if (k == ValueKind::form) throw KindError("g applies to a multivector (got multiform)");
    if (k == ValueKind::vector) k = ValueKind::form;
  } else if (op == Op::ginv) {
    if (k == ValueKind::vector) throw KindError("ginv applies to a multiform (got multivector)");
    if (k == ValueKind::form) k = ValueKind::vector;
  }
  return std::make_shared<const Expr>(Expr{op, k, 0.0, 0, {std::move(a)}});
}

ExprPtr make_binary(Op op, ExprPtr a, ExprPtr b) {
  const ValueKind ka = a->kind;
  const ValueKind kb = b->kind;
  ValueKind k = ValueKind::scalar;
  switch (op) {
    case Op::wedge:
      if (!unify(ka, kb, k)) kind_error("wedge needs operands of the same kind", ka, kb);
      break;
    case Op::add:
    case Op::sub:
      if (!unify(ka, kb, k)) kind_error("sum needs operands of the same kind", ka, kb);
      break;
    case Op::dot:
      if (!unify(ka, kb, k)) kind_error("metric product '.' needs operands of the same kind", ka, kb);
      k = ValueKind::scalar;
      break;
    case Op::mul:
      if (ka != ValueKind::scalar && kb != ValueKind::scalar)
        kind_error("'*' needs at least one scalar operand", ka, kb);
      k = ka == ValueKind::scalar ? kb : ka;
      break;
    case Op::lcontr:
      // Same kind: metric contraction. Mixed: duality contraction into b's algebra.
      if (!unify(ka, kb, k)) k = kb;
      break;
    case Op::rcontr:
      if (!unify(ka, kb, k)) k = ka;
      break;
    case Op::pair:
      if (ka != ValueKind::scalar && ka == kb) kind_error("pair needs a multiform and a multivector", ka, kb);
      k = ValueKind::scalar;
      break;
    default:
      break;
  }
  return std::make_shared<const Expr>(Expr{op, k, 0.0, 0, {std::move(a), std::move(b)}});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ExprPtr parse() {
    auto e = expr();
    if (peek().type != Tok::end) {
      throw ParseError(peek().type == Tok::rparen ? "unmatched ')'" : "unexpected token", peek().column);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  void expect(Tok t, const char* what) {
    if (peek().type != t) throw ParseError(std::string("expected ") + what, peek().column);
    ++pos_;
  }

  ExprPtr expr() {
    auto lhs = term();
    while (peek().type == Tok::plus || peek().type == Tok::minus) {
      const Op op = take().type == Tok::plus ? Op::add : Op::sub;
      lhs = make_binary(op, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = factor();
    while (peek().type == Tok::star) {
      take();
      lhs = make_binary(Op::mul, lhs, factor());
    }
    return lhs;
  }

  ExprPtr factor() {
    auto lhs = sp();
    while (peek().type == Tok::dot) {
      take();
      lhs = make_binary(Op::dot, lhs, sp());
    }
    return lhs;
  }

  ExprPtr sp() {
    auto lhs = contr();
    while (peek().type == Tok::lcontr || peek().type == Tok::rcontr) {
      const Op op = take().type == Tok::lcontr ? Op::lcontr : Op::rcontr;
      lhs = make_binary(op, lhs, contr());
    }
    return lhs;
  }

  ExprPtr contr() {
    auto lhs = wedgeterm();
    while (peek().type == Tok::wedge) {
      take();
      lhs = make_binary(Op::wedge, lhs, wedgeterm());
    }
    return lhs;
  }

  ExprPtr wedgeterm() {
    const Token& t = take();
    switch (t.type) {
      case Tok::number: return make_leaf(Op::number, ValueKind::scalar, t.number);
      case Tok::vector: return make_leaf(Op::vector, ValueKind::vector, 0.0, t.index);
      case Tok::form: return make_leaf(Op::form, ValueKind::form, 0.0, t.index);
      case Tok::pseudo_e: return make_leaf(Op::e_wedge, ValueKind::vector);
      case Tok::pseudo_eps: return make_leaf(Op::eps_wedge, ValueKind::form);
      case Tok::minus: return make_unary(Op::neg, wedgeterm());
      case Tok::lparen: {
        auto e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::func: {
        expect(Tok::lparen, "'(' after function name");
        auto a = expr();
        ExprPtr e;
        if (t.func == Op::pair) {
          expect(Tok::comma, "',' in pair");
          e = make_binary(Op::pair, a, expr());
        } else {
          e = make_unary(t.func, a);
        }
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::end: throw ParseError("unexpected end of input", t.column);
      case Tok::rparen: throw ParseError("unmatched ')'", t.column);
      default: throw ParseError("expected an operand", t.column);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul: return 2;
    case Op::dot: return 3;
    case Op::lcontr:
    case Op::rcontr: return 4;
    case Op::wedge: return 5;
    default: return 6;
  }
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void print(const Expr& e, int min_prec, std::string& out) {
  const int prec = precedence(e.op);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.op) {
    case Op::number: out += shortest(e.number); break;
    case Op::vector: out += "e" + std::to_string(e.index); break;
    case Op::form: out += "d" + std::to_string(e.index); break;
    case Op::e_wedge: out += 'I'; break;
    case Op::eps_wedge: out += 'J'; break;
    case Op::neg:
      out += '-';
      print(*e.args[0], 6, out);
      break;
    case Op::rev:
    case Op::inv:
    case Op::g:
    case Op::ginv:
      out += op_symbol(e.op);
      out += '(';
      print(*e.args[0], 0, out);
      out += ')';
      break;
    case Op::pair:
      out += "pair(";
      print(*e.args[0], 0, out);
      out += ", ";
      print(*e.args[1], 0, out);
      out += ')';
      break;
    default:
      print(*e.args[0], prec, out);
      out += ' ';
      out += op_symbol(e.op);
      out += ' ';
      print(*e.args[1], prec + 1, out);
      break;
  }
  if (parens) out += ')';
}

// ---- evaluation ------------------------------------------------------------

Multivector as_vector(const Value& v, Dimension dim) {
  if (const auto* s = std::get_if<double>(&v)) return Multivector::scalar(dim, *s);
  return std::get<Multivector>(v);
}

Multiform as_form(const Value& v, Dimension dim) {
  if (const auto* s = std::get_if<double>(&v)) return Multiform::scalar(dim, *s);
  return std::get<Multiform>(v);
}

ValueKind kind_of(const Value& v) {
  if (std::holds_alternative<double>(v)) return ValueKind::scalar;
  return std::holds_alternative<Multivector>(v) ? ValueKind::vector : ValueKind::form;
}

[[noreturn]] void inconsistent() { throw InternalInconsistency("expression evaluated to an unexpected kind"); }

class Evaluator {
 public:
  explicit Evaluator(const MetricExtensor& gamma) : gamma_(gamma), dim_(gamma.dim()) {}

  Value eval(const Expr& e) {
    switch (e.op) {
      case Op::number: return e.number;
      case Op::vector: return Multivector::basis(dim_, e.index);
      case Op::form: return Multiform::basis(dim_, e.index);
      case Op::e_wedge: return Multivector::pseudoscalar(dim_);
      case Op::eps_wedge: return Multiform::pseudoscalar(dim_);
      case Op::neg:
      case Op::rev:
      case Op::inv:
      case Op::g:
      case Op::ginv: return unary(e.op, eval(*e.args[0]));
      default: return binary(e.op, eval(*e.args[0]), eval(*e.args[1]));
    }
  }

 private:
  template <class F>
  static Value map_graded(const Value& v, F f) {
    if (const auto* s = std::get_if<double>(&v)) return *s;
    if (const auto* x = std::get_if<Multivector>(&v)) return f(*x);
    return f(std::get<Multiform>(v));
  }

  Value unary(Op op, const Value& a) {
    switch (op) {
      case Op::neg:
        if (const auto* s = std::get_if<double>(&a)) return -*s;
        return map_graded(a, [](const auto& x) { return -x; });
      case Op::rev: return map_graded(a, [](const auto& x) { return reversion(x); });
      case Op::inv: return map_graded(a, [](const auto& x) { return grade_involution(x); });
      case Op::g:
        if (std::holds_alternative<double>(a)) return a;
        if (const auto* x = std::get_if<Multivector>(&a)) return extend(gamma_, *x);
        inconsistent();
      case Op::ginv:
        if (std::holds_alternative<double>(a)) return a;
        if (const auto* x = std::get_if<Multiform>(&a)) return extend_inverse(gamma_, *x);
        inconsistent();
      default: inconsistent();
    }
  }

  Value binary(Op op, const Value& a, const Value& b) {
    const ValueKind ka = kind_of(a);
    const ValueKind kb = kind_of(b);
    if (ka == ValueKind::scalar && kb == ValueKind::scalar) {
      const double x = std::get<double>(a);
      const double y = std::get<double>(b);
      switch (op) {
        case Op::add: return x + y;
        case Op::sub: return x - y;
        default: return x * y;  // every product of two scalars
      }
    }
    ValueKind k = ValueKind::scalar;
    const bool same = unify(ka, kb, k);
    if (op == Op::mul) {
      const double s = std::get<double>(ka == ValueKind::scalar ? a : b);
      return map_graded(ka == ValueKind::scalar ? b : a, [s](const auto& x) { return s * x; });
    }
    if (op == Op::pair) {
      if (ka == ValueKind::form || kb == ValueKind::vector) return pairing(as_form(a, dim_), as_vector(b, dim_));
      return pairing(as_vector(a, dim_), as_form(b, dim_));
    }
    if (same) {
      if (k == ValueKind::vector) return same_kind(op, as_vector(a, dim_), as_vector(b, dim_));
      return same_kind(op, as_form(a, dim_), as_form(b, dim_));
    }
    // Mixed kinds: duality contractions.
    if (op == Op::lcontr) {
      if (ka == ValueKind::form) return left_contract(std::get<Multiform>(a), std::get<Multivector>(b));
      return left_contract(std::get<Multivector>(a), std::get<Multiform>(b));
    }
    if (op == Op::rcontr) {
      if (ka == ValueKind::vector) return right_contract(std::get<Multivector>(a), std::get<Multiform>(b));
      return right_contract(std::get<Multiform>(a), std::get<Multivector>(b));
    }
    inconsistent();
  }

  template <Kind K>
  Value same_kind(Op op, const Graded<K>& a, const Graded<K>& b) {
    switch (op) {
      case Op::add: return a + b;
      case Op::sub: return a - b;
      case Op::wedge: return wedge(a, b);
      case Op::dot: return scalar_product(gamma_, a, b);
      case Op::lcontr: return lcontract(gamma_, a, b);
      case Op::rcontr: return rcontract(gamma_, a, b);
      default: inconsistent();
    }
  }

  const MetricExtensor& gamma_;
  Dimension dim_;
};

template <Kind K>
std::string format_graded(const Graded<K>& x, char prefix) {
  const double floor = 1e-14 * x.max_abs();
  std::string out;
  for (const auto& masks : blade_tables(x.dim()).by_grade) {
    for (std::uint32_t m : masks) {
      const double c = x.coeff(m);
      if (c == 0.0 || std::abs(c) < floor) continue;
      if (out.empty()) {
        if (c < 0) out += '-';
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const double a = std::abs(c);
      if (m == 0) {
        out += shortest(a);
      } else {
        if (a != 1.0) out += shortest(a) + "*";
        out += blade_name(BladeIndex(m), prefix);
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.kind != b.kind || a.index != b.index || a.args.size() != b.args.size()) return false;
  if (a.op == Op::number && a.number != b.number) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

Value evaluate(const Expr& e, const MetricExtensor& gamma) { return Evaluator(gamma).eval(e); }

std::string format_value(const Value& v) {
  if (const auto* s = std::get_if<double>(&v)) return shortest(*s == 0.0 ? 0.0 : *s);
  if (const auto* x = std::get_if<Multivector>(&v)) return format_graded(*x, 'e');
  return format_graded(std::get<Multiform>(v), 'd');
}

}  // namespace extalg
