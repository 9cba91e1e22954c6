#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "support.hpp"

using namespace trigsturm;
using testing_support::from_roots;
using testing_support::Gen;

namespace {
Rational r(long n, long d = 1) { return make_rational(n, d); }
SurdExpr s2(long n, long d = 1) { return SurdExpr::term(2, r(n, d)); }
SurdExpr s3(long n, long d = 1) { return SurdExpr::term(3, r(n, d)); }

const char* kS3 = "sin(x) + sin(2x)/2 + (sin(3x) + 3*sin(4x)/4)/sqrt(2)";
const char* kS4 = "sin(x) + sin(2x)/2 + (sin(3x) + 3*sin(4x)/4)/sqrt(2) + (sin(5x) + 5*sin(6x)/6)/sqrt(3)";

SurdPoly shifted_sine_part(const char* src) { return expand(parse_trig(src)).sin_part.shifted(r(-1)); }
}  // namespace

// ---------------------------------------------------------------------------
// decide_poly_nonneg against independent oracles
// ---------------------------------------------------------------------------

TEST(DecidePoly, SimpleCases) {
  EXPECT_EQ(decide_poly_nonneg(Poly{r(1), r(0), r(1)}, r(-1), r(1)).verdict.status, Status::nonnegative);
  // double root touching zero
  EXPECT_EQ(decide_poly_nonneg(from_roots({r(1, 3), r(1, 3)}), r(-1), r(1)).verdict.status, Status::nonnegative);
  const Decision d = decide_poly_nonneg(from_roots({r(1, 3), r(2, 3)}), r(-1), r(1));
  ASSERT_EQ(d.verdict.status, Status::negative);
  EXPECT_LT(from_roots({r(1, 3), r(2, 3)})(*d.verdict.witness), 0);
  EXPECT_EQ(decide_poly_nonneg(Poly{}, r(0), r(1)).verdict.status, Status::nonnegative);
  EXPECT_EQ(decide_poly_nonneg(Poly(r(-1)), r(0), r(1)).verdict.status, Status::negative);
}

// Planted polynomials: c * prod (y - r_i)^{m_i} * (positive quadratics). The
// sign is constant between consecutive distinct planted roots, so sampling
// lo, hi, and every midpoint is an exact oracle.
TEST(DecidePolyProperty, PlantedRootOracle) {
  Gen g(51);
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> roots;
    int degree = 0;
    const int target = static_cast<int>(g.integer(0, 8));
    while (degree + 1 <= target) {
      const Rational root = g.rational(12, 7);
      const int mult = static_cast<int>(std::min<long>(g.integer(1, 3), target - degree));
      for (int k = 0; k < mult; ++k) roots.push_back(root);
      degree += mult;
    }
    Poly p = from_roots(roots, Rational(g.integer(1, 5) * (g.coin() ? 1 : -1)));
    if (degree + 2 <= 8 && g.coin()) p = p * Poly{r(g.integer(1, 4)), r(0), r(1)};
    Rational lo = g.rational(2, 3), hi = g.rational(2, 3);
    if (lo == hi) continue;
    if (hi < lo) std::swap(lo, hi);

    std::set<Rational> pts{lo, hi};
    std::vector<Rational> inside{lo};
    for (const auto& x : std::set<Rational>(roots.begin(), roots.end()))
      if (lo < x && x < hi) inside.push_back(x);
    inside.push_back(hi);
    for (std::size_t k = 0; k + 1 < inside.size(); ++k) pts.insert((inside[k] + inside[k + 1]) / 2);
    bool oracle_negative = false;
    for (const auto& x : pts) oracle_negative = oracle_negative || p(x) < 0;

    const Decision d = decide_poly_nonneg(p, lo, hi);
    EXPECT_EQ(d.verdict.status == Status::negative, oracle_negative) << p.to_string() << " on [" << lo << ", " << hi << "]";
    if (d.verdict.witness) {
      EXPECT_LT(p(*d.verdict.witness), 0);
    }
  }
}

// Random dense polynomials: a 4001-point grid plus the exact witness check.
TEST(DecidePolyProperty, DenseSamplingOracle) {
  Gen g(52);
  int disagreements = 0;
  for (int i = 0; i < 500; ++i) {
    const Poly p = g.poly(static_cast<int>(g.integer(0, 8)), 10, 3);
    const Rational lo = r(-1), hi = r(1);
    bool grid_negative = false;
    for (long k = 0; k <= 4000; ++k) grid_negative = grid_negative || p(Rational(lo + r(k, 2000))) < 0;
    const Decision d = decide_poly_nonneg(p, lo, hi);
    if (grid_negative) {
      EXPECT_EQ(d.verdict.status, Status::negative) << p.to_string();
    }
    if (d.verdict.status == Status::negative) {
      ASSERT_TRUE(d.verdict.witness.has_value());
      EXPECT_LT(p(*d.verdict.witness), 0);
      EXPECT_TRUE(lo <= *d.verdict.witness && *d.verdict.witness <= hi);
      if (!grid_negative) ++disagreements;  // narrower than the grid, confirmed exactly
    }
  }
  EXPECT_LT(disagreements, 25);
}

// ---------------------------------------------------------------------------
// trigonometric decisions
// ---------------------------------------------------------------------------

TEST(Prove, CosineAndSineExamples) {
  for (const char* src : {"5 + 4*cos(x) + 3*cos(2x) + 4*cos(3x)",
                          "7 + 6*cos(x) + 5*cos(2x) + 4*cos(3x) + 3*cos(4x) + 5*cos(5x)",
                          "4*sin(x) + 3*sin(2x) + 2*sin(3x) + 0.8*sin(4x)",
                          "4*sin(x) + 3*sin(2x) + 2*sin(3x) - 0.8*sin(4x)",
                          "8*sin(x) + 7*sin(2x) + 6*sin(3x) + 5*sin(4x) + 4*sin(5x)"}) {
    const Decision d = prove(parse_trig(src));
    EXPECT_EQ(d.verdict.status, Status::nonnegative) << src;
  }
  const Decision c1 = prove(parse_trig("5 + 4*cos(x) + 3*cos(2x) + 4*cos(3x)"));
  EXPECT_EQ(c1.certificate.kind, CertificateKind::cp);
}

TEST(Prove, CosineOfXIsNegativeNearPi) {
  const Decision d = prove(parse_trig("cos(x)"));
  ASSERT_EQ(d.verdict.status, Status::negative);
  EXPECT_LT(*d.verdict.witness, 0);
  EXPECT_EQ(prove(parse_trig("cos(x)"), XInterval(r(0), r(1, 2))).verdict.status, Status::nonnegative);
}

TEST(Prove, MixedExampleWithSpuriousRoots) {
  const Decision d = prove(parse_trig("7/5 + cos(x) + sin(x) + 2*sin(2x) + sin(3x)"));
  EXPECT_EQ(d.verdict.status, Status::nonnegative);
  EXPECT_EQ(d.certificate.kind, CertificateKind::mixed);
  ASSERT_EQ(d.certificate.root_boxes.size(), 2u);
  const auto& b = d.certificate.root_boxes;
  EXPECT_GE(b[0].lo, r(345, 1000));
  EXPECT_LE(b[0].hi, r(346, 1000));
  EXPECT_GE(b[1].lo, r(948, 1000));
  EXPECT_LE(b[1].hi, r(949, 1000));
}

TEST(Prove, MixedExampleWithoutResolventRoots) {
  const Decision d = prove(parse_trig("6 + 6*cos(x) + 6*sin(x) + 6*sin(2x) - 2*cos(3x) + 2*sin(3x) - cos(4x)"));
  EXPECT_EQ(d.verdict.status, Status::nonnegative);
  EXPECT_TRUE(d.certificate.root_boxes.empty());
  EXPECT_EQ(d.certificate.endpoint_variations[0], d.certificate.endpoint_variations[1]);
}

TEST(Prove, MixedNegativeHasExactWitness) {
  const TrigPoly t = parse_trig("6 + 6*cos(x) + 6*sin(x) - 2*cos(3x) + 6*sin(2x) - cos(4x)");
  const Decision d = prove(t);
  ASSERT_EQ(d.verdict.status, Status::negative);
  const Expansion e = expand(t);
  EXPECT_EQ(exact_sign_mixed(*to_rational(e.sin_part), *to_rational(e.cos_part), *d.verdict.witness), -1);
}

// property: exact mixed sign agrees with the float value away from zero
TEST(ExactSignMixedProperty, MatchesFloat) {
  Gen g(53);
  for (int i = 0; i < 500; ++i) {
    const Poly a = g.poly(static_cast<int>(g.integer(0, 4)), 5, 2), b = g.poly(static_cast<int>(g.integer(0, 4)), 5, 2);
    const Rational y = r(g.integer(-1000, 1000), 1000);
    const double f = a(y).get_d() * std::sqrt(1 - y.get_d() * y.get_d()) + b(y).get_d();
    if (std::fabs(f) < 1e-9) continue;
    EXPECT_EQ(exact_sign_mixed(a, b, y), f > 0 ? 1 : -1);
  }
}

TEST(Prove, ZeroAndConstants) {
  EXPECT_EQ(prove(TrigPoly{}).verdict.status, Status::nonnegative);
  EXPECT_EQ(prove(parse_trig("sin(x) - sin(x)")).verdict.status, Status::nonnegative);
  EXPECT_EQ(prove(parse_trig("-1 + 0*cos(x)")).verdict.status, Status::negative);
}

// ---------------------------------------------------------------------------
// surd coefficients
// ---------------------------------------------------------------------------

TEST(Pfloor, ExpansionOfS3MatchesKnownPolynomials) {
  const SurdPoly a = expand(parse_trig(kS3)).sin_part;
  const SurdPoly p3{SurdExpr(1L) - s2(1, 2), SurdExpr(1L) - s2(3, 2), s2(2), s2(3)};
  EXPECT_EQ(a, p3);
  const SurdPoly p4{SurdExpr(), SurdExpr(1L) + s2(7, 2), s2(-7), s2(3)};
  EXPECT_EQ(a.shifted(r(-1)), p4);
}

TEST(Pfloor, BitExactPrecision2) {
  EXPECT_EQ(pfloor(shifted_sine_part(kS3), 2), (Poly{r(0), r(593, 100), r(-991, 100), r(423, 100)}));
}

TEST(Pfloor, BitExactPrecision3) {
  const SurdPoly p = shifted_sine_part(kS4);
  const SurdPoly expect{SurdExpr(),
                        SurdExpr(1L) + s3(55, 9) + s2(7, 2),
                        -(s3(308, 9) + s2(7)),
                        s3(176, 3) + s2(3),
                        s3(-352, 9),
                        s3(80, 9)};
  EXPECT_EQ(p, expect);
  EXPECT_EQ(pfloor(p, 3),
            (Poly{r(0), r(16533, 1000), r(-8647, 125), r(21171, 200), r(-8468, 125), r(3079, 200)}));
}

TEST(Pfloor, Precision2LeavesTwoRoots) {
  const Poly q = pfloor(shifted_sine_part(kS4), 2);
  EXPECT_EQ(count_roots(q, r(0), r(2)), 2u);
  EXPECT_EQ(count_roots(pfloor(shifted_sine_part(kS4), 3), r(0), r(2)), 0u);
}

// property: P - Q has positive coefficients bounded by 2 * 10^-m
TEST(PfloorProperty, Dominance) {
  Gen g(54);
  for (int i = 0; i < 200; ++i) {
    std::vector<SurdExpr> cs;
    const int deg = static_cast<int>(g.integer(0, 10));
    for (int k = 0; k <= deg; ++k) cs.push_back(g.surd(static_cast<int>(g.integer(0, 3))));
    const SurdPoly p(std::move(cs));
    const unsigned m = static_cast<unsigned>(g.integer(1, 12));
    const Poly q = pfloor(p, m);
    const Rational bound = Rational(2) / Rational(pow10_int(m));
    for (std::size_t k = 0; k < p.size(); ++k) {
      const SurdExpr diff = p.coeffs()[k] - SurdExpr(q[k]);
      if (p.coeffs()[k].is_zero()) {
        EXPECT_EQ(q[k], 0);
        continue;
      }
      EXPECT_EQ(surd_sign(diff), 1);
      EXPECT_EQ(surd_sign(diff - SurdExpr(bound)), -1);
    }
  }
}

TEST(ProveSurd, FixedPrecision) {
  EXPECT_EQ(prove(parse_trig(kS3), XInterval::full(), {.m = 2}).verdict.status, Status::nonnegative);
  EXPECT_EQ(prove(parse_trig(kS4), XInterval::full(), {.m = 3}).verdict.status, Status::nonnegative);
  const Decision d = prove(parse_trig(kS4), XInterval::full(), {.m = 2});
  EXPECT_EQ(d.verdict.status, Status::inconclusive);
  ASSERT_TRUE(d.certificate.pfloor.has_value());
  EXPECT_EQ(d.certificate.pfloor->stripped_z, 1u);
}

TEST(ProveSurd, EscalatesPrecision) {
  const Decision d = prove(parse_trig(kS4));
  EXPECT_EQ(d.verdict.status, Status::nonnegative);
  EXPECT_EQ(d.certificate.pfloor->m, 3u);
}

TEST(ProveSurd, NegativeFromExactEvaluation) {
  const Decision d = prove(parse_trig("sqrt(2)*cos(x)"));
  ASSERT_EQ(d.verdict.status, Status::negative);
  EXPECT_LT(*d.verdict.witness, 0);
}

TEST(ProveSurd, RationalCoefficientExemption) {
  // odd n = 7 member of the Vietoris-type family has constant term 7/2
  const Decision d = prove(
      parse_trig("sin(x) + sin(2x)/2 + (sin(3x) + 3*sin(4x)/4)/sqrt(2) + (sin(5x) + 5*sin(6x)/6)/sqrt(3) + sin(7x)/2"),
      XInterval::full(), {.m = 9});
  EXPECT_EQ(d.verdict.status, Status::nonnegative);
  ASSERT_TRUE(d.certificate.pfloor.has_value());
  const auto& pf = *d.certificate.pfloor;
  // constant term 7/2, and the top term comes from sin(7x)/2 alone
  ASSERT_EQ(pf.rational_coefficients, (std::vector<std::size_t>{0, 6}));
  EXPECT_EQ(pf.p.coeffs()[0], SurdExpr(r(7, 2)));
  EXPECT_EQ(pf.p.coeffs()[6], SurdExpr(r(32)));
}

TEST(ProveSurd, MixedSurdInputIsRejected) {
  EXPECT_THROW(prove(parse_trig("sqrt(2)*sin(x) + cos(x)")), std::domain_error);
}

// ---------------------------------------------------------------------------
// covers for irrational interval endpoints
// ---------------------------------------------------------------------------

TEST(OuterCover, NegativeNeedsWitnessInsideTrueImage) {
  // cos(x) - cos(9pi/64) vanishes exactly at the endpoint x = 9pi/64 and is
  // negative to its right
  const XInterval iv(r(9, 64), r(1, 2));
  ProveOptions opt;
  opt.cover_width = r(1, 10000);
  const TrigPoly t = parse_trig("cos(x)");
  const Decision d = prove(t, iv, opt);
  EXPECT_EQ(d.verdict.status, Status::nonnegative);
  EXPECT_EQ(d.certificate.cover, CoverMode::outer);

  const Decision neg = prove(parse_trig("cos(x) - 1/2"), XInterval(r(9, 64), r(1, 2)), opt);
  ASSERT_EQ(neg.verdict.status, Status::negative);
  ASSERT_TRUE(neg.certificate.inner.has_value());
  EXPECT_TRUE(neg.certificate.inner->contains(*neg.verdict.witness));
}

TEST(OuterCover, MarginOnlyNegativeIsInconclusive) {
  // c - y with c about 7e-17 above the true upper image end
  // cos(9pi/64) = 0.90398929312344333158...; only the outer margin is negative
  const XInterval iv(r(9, 64), r(1, 2));
  ProveOptions opt;
  opt.cover_width = r(1, 1000);
  const Decision d = prove(parse_trig("cos(x) - 0.9039892931234434"), iv, opt);
  EXPECT_EQ(d.verdict.status, Status::negative);  // negative on most of the interval
  const Decision e = prove(parse_trig("0.9039892931234434 - cos(x)"), iv, opt);
  EXPECT_EQ(e.verdict.status, Status::inconclusive);
  EXPECT_GT(e.certificate.hi, parse_rational("0.9039892931234434"));
}
