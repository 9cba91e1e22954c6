#include <gtest/gtest.h>

#include "support.hpp"

using namespace trigsturm;
using testing_support::Gen;

namespace {
Rational r(long n, long d = 1) { return make_rational(n, d); }
SurdExpr c(long n, long d = 1) { return SurdExpr(r(n, d)); }
}  // namespace

TEST(Parse, CosineExample) {
  const TrigPoly t = parse_trig("5 + 4*cos(x) + 3*cos(2x) + 4*cos(3x)");
  const TrigPoly expect =
      TrigPoly::constant(c(5)) + TrigPoly::cos_term(1, c(4)) + TrigPoly::cos_term(2, c(3)) + TrigPoly::cos_term(3, c(4));
  EXPECT_EQ(t, expect);
}

TEST(Parse, DecimalsAreExact) {
  const TrigPoly t = parse_trig("4 sin(x) + 3 sin(2x) + 2 sin(3x) - 0.8 sin(4x)");
  EXPECT_EQ(t.sin_coeff(4), c(-4, 5));
  EXPECT_EQ(t.sin_coeff(1), c(4));
}

TEST(Parse, SurdCoefficients) {
  const TrigPoly t = parse_trig("sin(x) + sin(2x)/2 + (sin(3x) + 3*sin(4x)/4)/sqrt(2)");
  EXPECT_EQ(t.sin_coeff(2), c(1, 2));
  EXPECT_EQ(t.sin_coeff(3), SurdExpr::term(2, r(1, 2)));
  EXPECT_EQ(t.sin_coeff(4), SurdExpr::term(2, r(3, 8)));
  EXPECT_EQ(parse_trig("sqrt(12)").a0(), SurdExpr::term(3, r(2)));
  EXPECT_EQ(parse_trig("sqrt(3/2)").a0(), SurdExpr::term(6, r(1, 2)));
  EXPECT_EQ(parse_trig("sin(x)/(1 + 1)").sin_coeff(1), c(1, 2));
}

TEST(Parse, FrequencyForms) {
  const TrigPoly expect = TrigPoly::sin_term(2, c(1));
  for (const char* s : {"sin(2x)", "sin(2*x)", "sin(x*2)", "sin( 2 x )", "sin(4x/2)"}) EXPECT_EQ(parse_trig(s), expect) << s;
  EXPECT_EQ(parse_trig("cos(x)"), TrigPoly::cos_term(1, c(1)));
}

TEST(Parse, ParameterFamily) {
  const ExprAst v = parse("2*sin(x) + sin(2x) + a*sin(3x)");
  ASSERT_TRUE(v.has_parameter());
  EXPECT_EQ(v.base, parse_trig("2*sin(x) + sin(2x)"));
  EXPECT_EQ(v.direction, parse_trig("sin(3x)"));
  const ExprAst w = parse("(a + 4)*sin(x) + sin(2x)*(2 - a)/2");
  EXPECT_EQ(w.base, parse_trig("4*sin(x) + sin(2x)"));
  EXPECT_EQ(w.direction, parse_trig("sin(x) - sin(2x)/2"));
  EXPECT_THROW(parse_trig("a*sin(x)"), ParseError);
}

TEST(Parse, Errors) {
  auto column = [](const char* s) {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(column("sin(x) + tan(x)"), 9);             // unknown symbol
  EXPECT_EQ(column("sin(1.5x)"), 4);                   // non-integer frequency
  EXPECT_EQ(column("sin(x/2)"), 4);
  EXPECT_GE(column("a*a*sin(x)"), 0);                  // nonlinear parameter
  EXPECT_GE(column("a*sin(x)*sin(x)"), 0);
  EXPECT_GE(column("sin(x)*cos(x)"), 0);               // products of atoms
  EXPECT_GE(column("1/sin(x)"), 0);
  EXPECT_GE(column("1/(sqrt(2) + sqrt(3))"), 0);
  EXPECT_GE(column("sqrt(-2)"), 0);
  EXPECT_GE(column("sin(x"), 0);
  EXPECT_GE(column("3 $"), 0);
  EXPECT_GE(column("sin(0x)"), 0);
  EXPECT_EQ(column("1/0"), 1);
}

TEST(Render, ReadableForm) {
  EXPECT_EQ(render(parse_trig("5 + 4*cos(x) - 4/5*sin(4x)")), "5 + 4*cos(x) - 4/5*sin(4*x)");
  EXPECT_EQ(render(parse_trig("(1 + 3/2*sqrt(2))*sin(3x)")), "(1 + 3/2*sqrt(2))*sin(3*x)");
  EXPECT_EQ(render(TrigPoly{}), "0");
  EXPECT_EQ(render(parse_trig("-cos(x)")), "-cos(x)");
  EXPECT_EQ(render(parse("sin(x) + a*sin(3x)")), "sin(x) + a*sin(3*x)");
  EXPECT_EQ(render(parse("sin(x) + a*(sin(3x) - sin(2x))")), "sin(x) + a*(-sin(2*x) + sin(3*x))");
}

// property: parse(render(t)) == t
TEST(RenderProperty, RoundTrip) {
  Gen g(71);
  for (int i = 0; i < 300; ++i) {
    TrigPoly t = TrigPoly::constant(g.surd(static_cast<int>(g.integer(0, 2))));
    const std::size_t n = static_cast<std::size_t>(g.integer(0, 12));
    for (std::size_t k = 1; k <= n; ++k) {
      if (g.coin()) t = t + TrigPoly::cos_term(k, g.surd(static_cast<int>(g.integer(0, 3))));
      if (g.coin()) t = t + TrigPoly::sin_term(k, g.surd(static_cast<int>(g.integer(0, 3))));
    }
    const std::string text = render(t);
    EXPECT_EQ(parse_trig(text), t) << text;
  }
}

TEST(PiMultiples, Tokens) {
  EXPECT_EQ(parse_pi_multiple("0"), 0);
  EXPECT_EQ(parse_pi_multiple("pi"), 1);
  EXPECT_EQ(parse_pi_multiple("pi/2"), r(1, 2));
  EXPECT_EQ(parse_pi_multiple("2pi/3"), r(2, 3));
  EXPECT_EQ(parse_pi_multiple("3*pi/4"), r(3, 4));
  EXPECT_EQ(parse_pi_multiple("9pi/64"), r(9, 64));
  EXPECT_EQ(parse_pi_multiple("3/4*pi"), r(3, 4));
  EXPECT_THROW(parse_pi_multiple("1.57"), ParseError);
  EXPECT_THROW(parse_pi_multiple("0.5pi"), ParseError);
  EXPECT_THROW(parse_pi_multiple("pie"), ParseError);
  EXPECT_THROW(parse_pi_multiple("x"), ParseError);
}
