#ifndef TRIGSTURM_PARSER_HPP
#define TRIGSTURM_PARSER_HPP

// Text form of trigonometric polynomials, e.g.
//   "4*sin(x) + 3*sin(2x) + 2*sin(3x) - 0.8*sin(4x)"
//   "sin(x) + sin(2x)/2 + (sin(3x) + 3*sin(4x)/4)/sqrt(2)"
//   "2*sin(x) + sin(2x) + a*sin(3x)"          (affine in the parameter a)
// Decimals are read exactly. Multiplying two non-constant terms is
// rejected, as is any nonlinear use of the parameter.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigsturm/exactnum.hpp"
#include "trigsturm/paramsolve.hpp"
#include "trigsturm/trig.hpp"

namespace trigsturm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at column " + std::to_string(position + 1) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parsed expression: base + a * direction (direction is zero when the
/// parameter does not occur).
struct ExprAst {
  TrigPoly base;
  TrigPoly direction;

  bool has_parameter() const { return !direction.is_zero(); }
  ParamFamily family() const { return {base, direction}; }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) { tokenize(); }

  ExprAst parse() {
    ExprAst v = expr();
    if (peek().kind != Tok::end) fail(peek().pos, "unexpected '" + peek().text + "'");
    return v;
  }

 private:
  enum class Tok { number, ident, op, end };
  struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
  };

  [[noreturn]] static void fail(std::size_t pos, const std::string& msg) { throw ParseError(pos, msg); }

  void tokenize() {
    std::size_t i = 0;
    while (i < src_.size()) {
      const char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t j = i;
        while (j < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[j])) || src_[j] == '.')) ++j;
        toks_.push_back({Tok::number, std::string(src_.substr(i, j - i)), i});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        toks_.push_back({Tok::ident, std::string(src_.substr(i, j - i)), i});
        i = j;
      } else if (std::string_view("+-*/()").find(c) != std::string_view::npos) {
        toks_.push_back({Tok::op, std::string(1, c), i});
        ++i;
      } else {
        fail(i, std::string("unexpected character '") + c + "'");
      }
    }
    toks_.push_back({Tok::end, "end of input", src_.size()});
  }

  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  bool accept_op(char c) {
    if (peek().kind == Tok::op && peek().text[0] == c) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect_op(char c) {
    if (!accept_op(c)) fail(peek().pos, std::string("expected '") + c + "'");
  }

  static bool is_constant(const ExprAst& v) { return !v.has_parameter() && v.base.degree() == 0; }
  static bool is_affine_constant(const ExprAst& v) { return v.base.degree() == 0 && v.direction.degree() == 0; }

  ExprAst expr() {
    ExprAst acc;
    bool first = true;
    for (;;) {
      bool negate = false;
      if (accept_op('-'))
        negate = true;
      else if (!first && !accept_op('+'))
        break;
      else if (first)
        accept_op('+');
      ExprAst t = term();
      if (negate) {
        t.base = -t.base;
        t.direction = -t.direction;
      }
      acc.base = acc.base + t.base;
      acc.direction = acc.direction + t.direction;
      first = false;
    }
    return acc;
  }

  bool starts_factor() const {
    const Token& t = peek();
    return t.kind == Tok::number || t.kind == Tok::ident || (t.kind == Tok::op && t.text == "(");
  }

  ExprAst term() {
    ExprAst acc = factor();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept_op('*')) {
        acc = multiply(acc, factor(), pos);
      } else if (accept_op('/')) {
        acc = divide(acc, factor(), pos);
      } else if (starts_factor()) {
        acc = multiply(acc, factor(), pos);  // implicit product, e.g. "2sin(x)"
      } else {
        break;
      }
    }
    return acc;
  }

  static ExprAst scale(const ExprAst& v, const SurdExpr& c) { return {v.base.scaled(c), v.direction.scaled(c)}; }

  static ExprAst multiply(const ExprAst& l, const ExprAst& r, std::size_t pos) {
    if (l.has_parameter() && r.has_parameter()) fail(pos, "nonlinear use of the parameter a");
    if (is_constant(l)) return scale(r, l.base.a0());
    if (is_constant(r)) return scale(l, r.base.a0());
    // (c + d a) * trig
    if (is_affine_constant(l) && !r.has_parameter())
      return {r.base.scaled(l.base.a0()), r.base.scaled(l.direction.a0())};
    if (is_affine_constant(r) && !l.has_parameter())
      return {l.base.scaled(r.base.a0()), l.base.scaled(r.direction.a0())};
    if (l.has_parameter() || r.has_parameter()) fail(pos, "nonlinear use of the parameter a");
    fail(pos, "product of two trigonometric terms is not supported");
  }

  static ExprAst divide(const ExprAst& l, const ExprAst& r, std::size_t pos) {
    if (!is_constant(r)) fail(pos, "divisor must be a constant");
    const SurdExpr& d = r.base.a0();
    if (d.is_zero()) fail(pos, "division by zero");
    if (d.is_rational()) return scale(l, SurdExpr(Rational(1 / d.rational_part())));
    if (d.terms().size() != 1) fail(pos, "divisor must be rational or a single square-root term");
    return scale(l, d.inverse_monomial());
  }

  ExprAst factor() {
    if (accept_op('-')) {
      ExprAst v = factor();
      return {-v.base, -v.direction};
    }
    if (accept_op('+')) return factor();
    const Token tok = take();
    if (tok.kind == Tok::number) {
      try {
        return {TrigPoly::constant(SurdExpr(parse_rational(tok.text))), {}};
      } catch (const std::invalid_argument&) {
        fail(tok.pos, "malformed number '" + tok.text + "'");
      }
    }
    if (tok.kind == Tok::op && tok.text == "(") {
      ExprAst v = expr();
      expect_op(')');
      return v;
    }
    if (tok.kind == Tok::ident) {
      if (tok.text == "a") return {TrigPoly{}, TrigPoly::constant(SurdExpr(1L))};
      if (tok.text == "sqrt") return sqrt_call(tok.pos);
      if (tok.text == "sin" || tok.text == "cos") {
        expect_op('(');
        const std::size_t k = frequency();
        expect_op(')');
        const SurdExpr one(1L);
        return {tok.text == "sin" ? TrigPoly::sin_term(k, one) : TrigPoly::cos_term(k, one), {}};
      }
      fail(tok.pos, "unknown symbol '" + tok.text + "'");
    }
    fail(tok.pos, "unexpected '" + tok.text + "'");
  }

  ExprAst sqrt_call(std::size_t pos) {
    expect_op('(');
    ExprAst arg = expr();
    expect_op(')');
    if (!is_constant(arg) || !arg.base.a0().is_rational()) fail(pos, "sqrt needs a rational constant argument");
    const Rational r = arg.base.a0().rational_part();
    if (r < 0) fail(pos, "sqrt of a negative number");
    // sqrt(n/d) = sqrt(n*d)/d
    const Integer nd = r.get_num() * r.get_den();
    if (!nd.fits_ulong_p()) fail(pos, "sqrt argument too large");
    return {TrigPoly::constant(SurdExpr::sqrt(nd.get_ui()) / Rational(r.get_den())), {}};
  }

  /// k in "k*x", "kx", "x", "x*k".
  std::size_t frequency() {
    const std::size_t pos = peek().pos;
    Rational k = 1;
    bool saw_x = false;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::number) {
        k *= parse_number(take());
      } else if (t.kind == Tok::ident && t.text == "x" && !saw_x) {
        take();
        saw_x = true;
      } else if (t.kind == Tok::op && t.text == "*") {
        take();
      } else if (t.kind == Tok::op && t.text == "/") {
        take();
        if (peek().kind != Tok::number) fail(peek().pos, "expected a number");
        k /= parse_number(take());
      } else {
        break;
      }
    }
    if (!saw_x) fail(pos, "frequency must be of the form k*x");
    if (k.get_den() != 1 || k <= 0) fail(pos, "frequency must be a positive integer multiple of x");
    if (!k.get_num().fits_ulong_p()) fail(pos, "frequency too large");
    return k.get_num().get_ui();
  }

  static Rational parse_number(const Token& t) {
    try {
      Rational r = parse_rational(t.text);
      if (r == 0 && t.text.find('/') != std::string::npos) fail(t.pos, "division by zero");
      return r;
    } catch (const std::invalid_argument&) {
      fail(t.pos, "malformed number '" + t.text + "'");
    }
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

inline std::string render_coefficient(const SurdExpr& c) {
  if (c.is_rational()) return Rational(abs(c.rational_part())).get_str();
  return "(" + c.to_string() + ")";
}

}  // namespace detail

inline ExprAst parse(std::string_view src) { return detail::ExprParser(src).parse(); }

/// Parses and requires the result to be free of the parameter.
inline TrigPoly parse_trig(std::string_view src) {
  ExprAst v = parse(src);
  if (v.has_parameter()) throw ParseError(0, "unexpected parameter a");
  return v.base;
}

/// Text form that parse() reads back to the identical polynomial.
inline std::string render(const TrigPoly& t) {
  std::string out;
  auto emit = [&](const SurdExpr& c, const std::string& atom) {
    if (c.is_zero()) return;
    const bool negative = c.is_rational() && c.rational_part() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string coef = detail::render_coefficient(c);
    if (atom.empty())
      out += coef;
    else if (coef == "1")
      out += atom;
    else
      out += coef + "*" + atom;
  };
  emit(t.a0(), "");
  for (std::size_t k = 1; k <= t.degree(); ++k) {
    const std::string arg = k == 1 ? "x" : std::to_string(k) + "*x";
    emit(t.cos_coeff(k), "cos(" + arg + ")");
    emit(t.sin_coeff(k), "sin(" + arg + ")");
  }
  return out.empty() ? "0" : out;
}

inline std::string render(const ExprAst& v) {
  if (!v.has_parameter()) return render(v.base);
  std::string out = v.base.is_zero() ? "" : render(v.base) + " + ";
  const std::string d = render(v.direction);
  const bool single = d.front() != '-' && d.find(" + ") == std::string::npos && d.find(" - ") == std::string::npos;
  return out + (single ? "a*" + d : "a*(" + d + ")");
}

/// Interval endpoint tokens: "0", "pi", "pi/2", "2pi/3", "3*pi/4",
/// "3/4*pi", "9pi/64". Returns q with endpoint = q*pi.
inline Rational parse_pi_multiple(std::string_view token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0") return 0;
  const auto at = s.find("pi");
  if (at == std::string::npos) throw ParseError(0, "interval endpoint must be a rational multiple of pi: '" + s + "'");
  std::string prefix = s.substr(0, at), suffix = s.substr(at + 2);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  Rational q = 1;
  try {
    if (!prefix.empty()) q = parse_rational(prefix);
    if (!suffix.empty()) {
      if (suffix[0] != '/') throw std::invalid_argument("suffix");
      q /= parse_rational(suffix.substr(1));
    }
  } catch (const std::exception&) {
    throw ParseError(0, "malformed interval endpoint '" + s + "'");
  }
  if (prefix.find('.') != std::string::npos || suffix.find('.') != std::string::npos)
    throw ParseError(0, "interval endpoints take exact fractions, not decimals: '" + s + "'");
  return q;
}

}  // namespace trigsturm

#endif  // TRIGSTURM_PARSER_HPP
