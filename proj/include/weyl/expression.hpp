#ifndef WEYL_EXPRESSION_HPP
#define WEYL_EXPRESSION_HPP

// Text front-end for both algebras.
//
// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | 'i' | VARIABLE | '(' expr ')'
//   VARIABLE:= 'z' N | 'zb' N        (polynomial context: z_j, conj(z_j))
//            | 'a' N | 'c' N         (Weyl context: a_j and the creation a_j^+)
//
// Products in the Weyl context are taken in the written order and then
// normal-ordered.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyl/cpolynomial.hpp"
#include "weyl/errors.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

enum class VariableKind { z, zbar, annihilation, creation };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, imaginary_unit, variable, add, subtract, multiply, power, negate, paren };

  Kind kind = Kind::number;
  Rational value{0};                    // number (nonnegative)
  VariableKind variable = VariableKind::z;
  std::size_t index = 0;                // variable, from 1
  unsigned exponent = 0;                // power
  std::vector<ExprPtr> children;

  static ExprPtr number(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::number;
    e->value = std::move(v);
    return e;
  }
  static ExprPtr imaginary_unit() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::imaginary_unit;
    return e;
  }
  static ExprPtr var(VariableKind v, std::size_t index) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::variable;
    e->variable = v;
    e->index = index;
    return e;
  }
  static ExprPtr node(Kind kind, std::vector<ExprPtr> children, unsigned exponent = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->children = std::move(children);
    e->exponent = exponent;
    return e;
  }
};

inline bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case Expr::Kind::number:
      if (a.value != b.value) return false;
      break;
    case Expr::Kind::variable:
      if (a.variable != b.variable || a.index != b.index) return false;
      break;
    case Expr::Kind::power:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k)
    if (!(*a.children[k] == *b.children[k])) return false;
  return true;
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      // Operands are parsed before the node is built so that a ParseError
      // never escapes from inside a braced initializer list.
      Expr::Kind kind;
      if (accept('+'))
        kind = Expr::Kind::add;
      else if (accept('-'))
        kind = Expr::Kind::subtract;
      else
        return lhs;
      ExprPtr rhs = parse_term();
      lhs = Expr::node(kind, {lhs, rhs});
    }
  }
  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (accept('*')) {
      ExprPtr rhs = parse_unary();
      lhs = Expr::node(Expr::Kind::multiply, {lhs, rhs});
    }
    return lhs;
  }
  ExprPtr parse_unary() {
    if (accept('-')) {
      ExprPtr operand = parse_unary();
      return Expr::node(Expr::Kind::negate, {operand});
    }
    return parse_power();
  }
  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected integer exponent", at);
      if (digits.size() > 4) throw ParseError("exponent too large", at);
      return Expr::node(Expr::Kind::power, {base}, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }
  ExprPtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return Expr::node(Expr::Kind::paren, {inner});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", pos_);
      }
      Integer d(den, 10);
      if (d == 0) throw ParseError("zero denominator", at);
      Rational v(Integer(num, 10), d);
      v.canonicalize();
      return Expr::number(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return Expr::imaginary_unit();
      std::optional<VariableKind> kind;
      if (name == "z") kind = VariableKind::z;
      if (name == "zb") kind = VariableKind::zbar;
      if (name == "a") kind = VariableKind::annihilation;
      if (name == "c") kind = VariableKind::creation;
      if (!kind) throw ParseError("unknown symbol '" + name + "'", start);
      std::string digits = read_digits();
      if (digits.empty() || digits.size() > 6) throw ParseError("expected mode index after '" + name + "'", pos_);
      std::size_t index = std::stoul(digits);
      if (index == 0) throw ParseError("mode indices start at 1", start);
      return Expr::var(*kind, index);
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Prints the AST as written; explicit parentheses come only from paren nodes.
inline std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.value.get_str();
    case Expr::Kind::imaginary_unit:
      return "i";
    case Expr::Kind::variable: {
      static const char* names[] = {"z", "zb", "a", "c"};
      return names[static_cast<int>(e.variable)] + std::to_string(e.index);
    }
    case Expr::Kind::add:
      return to_string(*e.children[0]) + " + " + to_string(*e.children[1]);
    case Expr::Kind::subtract:
      return to_string(*e.children[0]) + " - " + to_string(*e.children[1]);
    case Expr::Kind::multiply:
      return to_string(*e.children[0]) + "*" + to_string(*e.children[1]);
    case Expr::Kind::power:
      return to_string(*e.children[0]) + "^" + std::to_string(e.exponent);
    case Expr::Kind::negate:
      return "-" + to_string(*e.children[0]);
    case Expr::Kind::paren:
      return "(" + to_string(*e.children[0]) + ")";
  }
  return {};
}

namespace detail {

inline void collect_variables(const Expr& e, bool& poly, bool& weyl, std::size_t& max_index) {
  if (e.kind == Expr::Kind::variable) {
    bool is_poly = e.variable == VariableKind::z || e.variable == VariableKind::zbar;
    (is_poly ? poly : weyl) = true;
    max_index = std::max(max_index, e.index);
  }
  for (const auto& c : e.children) collect_variables(*c, poly, weyl, max_index);
}

template <class Algebra, class Leaf>
Algebra evaluate(const Expr& e, std::size_t d, const Leaf& leaf) {
  switch (e.kind) {
    case Expr::Kind::number:
      return leaf.constant(GaussRational(e.value));
    case Expr::Kind::imaginary_unit:
      return leaf.constant(GaussRational::i());
    case Expr::Kind::variable:
      return leaf.variable(e.variable, e.index);
    case Expr::Kind::add:
      return evaluate<Algebra>(*e.children[0], d, leaf) + evaluate<Algebra>(*e.children[1], d, leaf);
    case Expr::Kind::subtract:
      return evaluate<Algebra>(*e.children[0], d, leaf) - evaluate<Algebra>(*e.children[1], d, leaf);
    case Expr::Kind::multiply:
      return evaluate<Algebra>(*e.children[0], d, leaf) * evaluate<Algebra>(*e.children[1], d, leaf);
    case Expr::Kind::power:
      return pow(evaluate<Algebra>(*e.children[0], d, leaf), e.exponent);
    case Expr::Kind::negate:
      return -evaluate<Algebra>(*e.children[0], d, leaf);
    case Expr::Kind::paren:
      return evaluate<Algebra>(*e.children[0], d, leaf);
  }
  throw InvalidInput("unknown expression node");
}

struct PolyLeaf {
  std::size_t d;
  CPolynomial constant(const GaussRational& c) const { return CPolynomial::constant(d, c); }
  CPolynomial variable(VariableKind v, std::size_t j) const {
    return v == VariableKind::z ? CPolynomial::z(d, j) : CPolynomial::zbar(d, j);
  }
};

struct WeylLeaf {
  std::size_t d;
  WeylElement constant(const GaussRational& c) const { return WeylElement::scalar(d, c); }
  WeylElement variable(VariableKind v, std::size_t j) const {
    return v == VariableKind::annihilation ? WeylElement::annihilation(d, j)
                                           : WeylElement::creation(d, j);
  }
};

inline std::size_t resolve_modes(const Expr& e, std::optional<std::size_t> d, bool want_poly) {
  bool poly = false, weyl = false;
  std::size_t max_index = 0;
  collect_variables(e, poly, weyl, max_index);
  if (want_poly && weyl)
    throw InvalidInput("Weyl generators a_j / c_j are not allowed in a polynomial expression");
  if (!want_poly && poly)
    throw InvalidInput("polynomial variables z_j / zb_j are not allowed in a Weyl expression");
  std::size_t modes = d.value_or(std::max<std::size_t>(max_index, 1));
  if (max_index > modes)
    throw InvalidInput("mode index " + std::to_string(max_index) + " exceeds d=" + std::to_string(modes));
  return modes;
}

}  // namespace detail

/// Evaluates a polynomial-context AST; d defaults to the largest mode index.
inline CPolynomial evaluate_poly(const Expr& e, std::optional<std::size_t> d = std::nullopt) {
  std::size_t modes = detail::resolve_modes(e, d, true);
  return detail::evaluate<CPolynomial>(e, modes, detail::PolyLeaf{modes});
}

inline WeylElement evaluate_weyl(const Expr& e, std::optional<std::size_t> d = std::nullopt) {
  std::size_t modes = detail::resolve_modes(e, d, false);
  return detail::evaluate<WeylElement>(e, modes, detail::WeylLeaf{modes});
}

inline CPolynomial parse_poly(std::string_view text, std::optional<std::size_t> d = std::nullopt) {
  return evaluate_poly(*parse_expression(text), d);
}

inline WeylElement parse_weyl(std::string_view text, std::optional<std::size_t> d = std::nullopt) {
  return evaluate_weyl(*parse_expression(text), d);
}

namespace detail {

struct FactorNames {
  const char* first;
  const char* second;
};

inline std::string render_terms(const std::map<BiIndex, GaussRational>& terms, FactorNames names) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string factors;
    auto emit = [&](const MultiIndex& exps, const char* name) {
      for (std::size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += name + std::to_string(j + 1);
        if (exps[j] > 1) factors += "^" + std::to_string(exps[j]);
      }
    };
    emit(mono.first, names.first);
    emit(mono.second, names.second);

    std::string cs = to_string(c);
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    if (factors.empty())
      out += cs;
    else if (cs == "1")
      out += factors;
    else
      out += cs + "*" + factors;
  }
  return out;
}

}  // namespace detail

/// "c1*a1 + 1": terms by descending (degree, beta, alpha), creations c_j
/// written before annihilations a_j.
inline std::string to_string(const WeylElement& w) {
  return detail::render_terms(w.terms(), {"c", "a"});
}

/// Terms by descending (degree, alpha, beta); z_j before zb_j.
inline std::string to_string(const CPolynomial& p) {
  return detail::render_terms(p.terms(), {"z", "zb"});
}

}  // namespace weyl

#endif  // WEYL_EXPRESSION_HPP
