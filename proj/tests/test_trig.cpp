#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace trigsturm;
using testing_support::eval_mpf;
using testing_support::Gen;

namespace {
Rational r(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST(Chebyshev, LowOrderForms) {
  EXPECT_EQ(cheb_cos(0), Poly(r(1)));
  EXPECT_EQ(cheb_cos(3), (Poly{r(0), r(-3), r(0), r(4)}));
  EXPECT_EQ(cheb_sin(1), Poly(r(1)));
  EXPECT_EQ(cheb_sin(4), (Poly{r(0), r(-4), r(0), r(8)}));
  EXPECT_THROW(cheb_sin(0), std::domain_error);
}

TEST(Chebyshev, AgreesWithLibm) {
  for (std::size_t k = 0; k <= 30; ++k) {
    for (double x : {0.1, 0.7, 1.3, 2.2, 3.0}) {
      const double y = std::cos(x);
      EXPECT_NEAR(cheb_cos(k)(Rational(y)).get_d(), std::cos(static_cast<double>(k) * x), 1e-9);
      if (k >= 1) {
        EXPECT_NEAR(std::sin(x) * cheb_sin(k)(Rational(y)).get_d(), std::sin(static_cast<double>(k) * x), 1e-9);
      }
    }
  }
}

TEST(Expand, CosineExamplesBitExact) {
  const TrigPoly c1 = parse_trig("5 + 4*cos(x) + 3*cos(2x) + 4*cos(3x)");
  EXPECT_EQ(*to_rational(expand(c1).cos_part), (Poly{r(2), r(-8), r(6), r(16)}));
  EXPECT_TRUE(expand(c1).sin_part.is_zero());
  const TrigPoly c2 = parse_trig("7 + 6*cos(x) + 5*cos(2x) + 4*cos(3x) + 3*cos(4x) + 5*cos(5x)");
  const Poly p2{r(5), r(19), r(-14), r(-84), r(24), r(80)};
  EXPECT_EQ(*to_rational(expand(c2).cos_part), p2);
  // (y + 1)(80y^4 - 56y^3 - 28y^2 + 14y + 5)
  EXPECT_EQ(p2, (Poly{r(1), r(1)} * Poly{r(5), r(14), r(-28), r(-56), r(80)}));
}

TEST(Expand, SineExamplesBitExact) {
  const TrigPoly s1 = parse_trig("4*sin(x) + 3*sin(2x) + 2*sin(3x) + 0.8*sin(4x)");
  EXPECT_EQ(*to_rational(expand(s1).sin_part), (Poly{r(5), r(7), r(20), r(16)}).scaled(r(2, 5)));
  // with the opposite sign on sin(4x)
  const TrigPoly s1m = parse_trig("4*sin(x) + 3*sin(2x) + 2*sin(3x) - 0.8*sin(4x)");
  EXPECT_EQ(*to_rational(expand(s1m).sin_part), (Poly{r(5), r(23), r(20), r(-16)}).scaled(r(2, 5)));
  const TrigPoly s2 = parse_trig("8*sin(x) + 7*sin(2x) + 6*sin(3x) + 5*sin(4x) + 4*sin(5x)");
  EXPECT_EQ(*to_rational(expand(s2).sin_part), (Poly{r(6), r(-6), r(-24), r(40), r(64)}));
}

TEST(Expand, GeneralExamplePair) {
  const TrigPoly t1 = parse_trig("6 + 6*cos(x) + 6*sin(x) + 6*sin(2x) - 2*cos(3x) + 2*sin(3x) - cos(4x)");
  const Expansion e = expand(t1);
  EXPECT_EQ(*to_rational(e.sin_part), (Poly{r(4), r(12), r(8)}));
  EXPECT_EQ(*to_rational(e.cos_part), -(Poly{r(-5), r(-12), r(-8), r(8), r(8)}));
}

TEST(Expand, SurdCoefficientsStayExact) {
  const TrigPoly s3 = parse_trig("sin(x) + sin(2x)/2 + (sin(3x) + 3*sin(4x)/4)/sqrt(2)");
  const SurdPoly a = expand(s3).sin_part;
  ASSERT_EQ(a.degree(), 3);
  EXPECT_EQ(a.coeffs()[3], SurdExpr::term(2, r(3)));  // 3/4 * 8 / sqrt(2)
}

// property: B(cos x) + sin x A(cos x) reproduces the series at relative
// tolerance 1e-9 for random polynomials of degree <= 40
TEST(ExpandProperty, FloatRoundTrip) {
  Gen g(41);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(0, 40));
    TrigPoly t = TrigPoly::constant(SurdExpr(g.rational(20, 7)));
    for (std::size_t k = 1; k <= n; ++k) {
      if (g.coin()) t = t + TrigPoly::cos_term(k, g.surd(static_cast<int>(g.integer(0, 2)), 20, 7));
      if (g.coin()) t = t + TrigPoly::sin_term(k, g.surd(static_cast<int>(g.integer(0, 2)), 20, 7));
    }
    const Expansion e = expand(t);
    for (int j = 0; j < 5; ++j) {
      const double x = g.real(0, M_PI);
      long double direct = t.a0().to_double(), scale = std::fabs(t.a0().to_double());
      for (std::size_t k = 1; k <= t.degree(); ++k) {
        const long double kx = static_cast<long double>(k) * x;
        direct += t.cos_coeff(k).to_double() * std::cos(kx) + t.sin_coeff(k).to_double() * std::sin(kx);
        scale += std::fabs(t.cos_coeff(k).to_double()) + std::fabs(t.sin_coeff(k).to_double());
      }
      const mpf_class y(std::cos(x), testing_support::kOracleBits);
      const mpf_class s(std::sin(x), testing_support::kOracleBits);
      const double via = mpf_class(eval_mpf(e.cos_part, y) + s * eval_mpf(e.sin_part, y)).get_d();
      EXPECT_NEAR(via, static_cast<double>(direct), 1e-9 * std::max(1.0L, scale)) << "degree " << t.degree();
    }
  }
}

TEST(TrigDerivative, TermByTerm) {
  const TrigPoly t = parse_trig("3 + 2*sin(3x) - cos(2x)");
  EXPECT_EQ(trig_derivative(t), parse_trig("6*cos(3x) + 2*sin(2x)"));
}

TEST(CosPi, ExactValues) {
  EXPECT_EQ(*exact_cos_pi(r(0)), SurdExpr(1L));
  EXPECT_EQ(*exact_cos_pi(r(1)), SurdExpr(-1L));
  EXPECT_EQ(*exact_cos_pi(r(1, 2)), SurdExpr());
  EXPECT_EQ(*exact_cos_pi(r(2, 3)), SurdExpr(r(-1, 2)));
  EXPECT_EQ(*exact_cos_pi(r(3, 4)), SurdExpr::term(2, r(-1, 2)));
  EXPECT_EQ(*exact_cos_pi(r(1, 6)), SurdExpr::term(3, r(1, 2)));
  EXPECT_FALSE(exact_cos_pi(r(9, 64)).has_value());
}

TEST(CosPi, EnclosuresContainLibmValue) {
  for (long d : {5L, 7L, 64L, 1000L}) {
    for (long n = 0; n <= d; n += std::max(1L, d / 9)) {
      const Rational q = r(n, d);
      const Rational eps = r(1, 1000000000000L);
      const Enclosure e = cos_pi_enclosure(q, eps);
      const long double c = std::cos(static_cast<long double>(M_PI) * n / d);
      EXPECT_LE(e.width(), eps);
      EXPECT_LE(e.lo.get_d(), static_cast<double>(c) + 1e-15);
      EXPECT_GE(e.hi.get_d(), static_cast<double>(c) - 1e-15);
    }
  }
}

TEST(Intervals, ExactAndOuterImages) {
  const YInterval full = x_to_y(XInterval::full(), CoverMode::exact);
  EXPECT_EQ(full.lo, -1);
  EXPECT_EQ(full.hi, 1);
  const YInterval part = x_to_y(XInterval(r(1, 3), r(1, 2)), CoverMode::exact);
  EXPECT_EQ(part.lo, 0);
  EXPECT_EQ(part.hi, r(1, 2));
  EXPECT_THROW(x_to_y(XInterval(r(9, 64), r(1, 2)), CoverMode::exact), std::domain_error);

  const XInterval i3(r(9, 64), r(1, 2));
  const YInterval outer = x_to_y(i3, CoverMode::outer, r(1, 10000));
  const auto inner = x_to_y_inner(i3, r(1, 10000));
  ASSERT_TRUE(inner.has_value());
  const double c = std::cos(9 * M_PI / 64);
  EXPECT_GE(outer.hi.get_d(), c);
  EXPECT_LE(inner->hi.get_d(), c);
  EXPECT_LE(outer.hi - inner->hi, r(1, 5000));
  EXPECT_EQ(outer.lo, 0);
  EXPECT_THROW(XInterval(r(1, 2), r(1, 2)), std::domain_error);
  EXPECT_THROW(XInterval(r(0), r(3, 2)), std::domain_error);
}
