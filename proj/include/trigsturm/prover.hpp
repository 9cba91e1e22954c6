#ifndef TRIGSTURM_PROVER_HPP
#define TRIGSTURM_PROVER_HPP

// Nonnegativity decisions for polynomials on rational intervals and for
// cosine, sine, and mixed trigonometric polynomials on subintervals of
// [0, pi]. Every decision comes with a certificate whose claims can be
// re-checked with exact arithmetic alone.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigsturm/exactnum.hpp"
#include "trigsturm/poly.hpp"
#include "trigsturm/sturm.hpp"
#include "trigsturm/trig.hpp"

namespace trigsturm {

enum class Status { nonnegative, negative, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::nonnegative: return "nonnegative";
    case Status::negative: return "negative";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

/// witness is present iff status is negative: a rational point (in the
/// variable of the decided object, y = cos x for trigonometric input) where
/// the object is strictly negative.
struct Verdict {
  Status status = Status::nonnegative;
  std::optional<Rational> witness;
};

enum class CertificateKind { poly, cp, sp, mixed, pfloor };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::poly: return "poly";
    case CertificateKind::cp: return "cp";
    case CertificateKind::sp: return "sp";
    case CertificateKind::mixed: return "mixed";
    case CertificateKind::pfloor: return "pfloor";
  }
  return "?";
}

struct SignSample {
  Rational point;
  int sign = 0;
};

struct PfloorData {
  unsigned m = 0;
  std::size_t stripped_z = 0;       // power of z divided out of p
  SurdPoly p;                       // P(z - 1) / z^stripped_z
  Poly q;                           // coefficientwise lower bound
  std::vector<int> difference_signs;  // sign of p_i - q_i for each i <= deg p
  std::vector<std::size_t> rational_coefficients;  // indices i with p_i rational (incl. zero)
};

struct Certificate {
  CertificateKind kind = CertificateKind::poly;
  // Trigonometric context; for kind == poly these stay at their defaults.
  XInterval x_interval;
  CoverMode cover = CoverMode::exact;
  std::optional<YInterval> inner;  // certified-inside y-interval (outer cover only)
  SurdPoly cos_part, sin_part;     // B and A of the expansion

  // Sign analysis of `analyzed` on [lo, hi] (y, or z = y + 1 for pfloor).
  Poly analyzed;
  Rational lo, hi;
  std::vector<Poly> chain;
  std::array<std::vector<int>, 2> endpoint_signs;  // chain signs at lo, hi
  std::array<std::size_t, 2> endpoint_variations{};
  std::vector<RootBox> root_boxes;
  std::vector<SignSample> samples;  // lo, gap points, hi: sign of the decided object

  std::optional<PfloorData> pfloor;
  std::vector<std::string> notes;
};

struct Decision {
  Verdict verdict;
  Certificate certificate;
};

inline Rational default_isolation_width() { return make_rational(1, 1000000); }

namespace detail {

/// Sign structure of an object whose zeros on [lo, hi] lie among the roots
/// of `poly`: sample lo, hi, and one point in every gap between isolated
/// roots. Fills the analysis fields of `cert` and returns the verdict.
template <class SignFn>
Verdict analyze(const Poly& poly, const Rational& lo, const Rational& hi, SignFn&& sign_at, const Rational& width,
                Certificate& cert) {
  cert.analyzed = poly;
  cert.lo = lo;
  cert.hi = hi;
  std::vector<Rational> points{lo};
  if (poly.degree() >= 1) {
    // chain of the squarefree part: a multiple root at an endpoint would
    // zero every member of the chain of poly itself
    SturmChain chain(gcd_squarefree(poly).squarefree);
    cert.chain = chain.polys();
    cert.endpoint_signs = {chain.signs_at(lo), chain.signs_at(hi)};
    cert.endpoint_variations = {chain.variations_at(lo), chain.variations_at(hi)};
    cert.root_boxes = isolate_roots(chain, lo, hi, width);
    if (!cert.root_boxes.empty() && chain.sign_of_base_at(hi) == 0) cert.root_boxes.back() = {hi, hi};
  }
  Rational prev = lo;
  for (const auto& box : cert.root_boxes) {
    if (box.lo > prev) points.emplace_back((prev + box.lo) / 2);
    prev = box.hi;
  }
  if (prev < hi) points.emplace_back((prev + hi) / 2);
  if (hi != lo) points.push_back(hi);

  Verdict v;
  for (const auto& pt : points) {
    const int s = sign_at(pt);
    cert.samples.push_back({pt, s});
    if (s < 0 && !v.witness) {
      v.status = Status::negative;
      v.witness = pt;
    }
  }
  return v;
}

inline YInterval y_cover(const XInterval& iv, const Rational& cover_width, Certificate& cert) {
  cert.x_interval = iv;
  if (iv.exact_endpoints()) {
    cert.cover = CoverMode::exact;
    return x_to_y(iv, CoverMode::exact);
  }
  cert.cover = CoverMode::outer;
  cert.inner = x_to_y_inner(iv, cover_width);
  cert.notes.push_back("y-interval is an outward rational cover of the x-interval image");
  return x_to_y(iv, CoverMode::outer, cover_width);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Complete decision of p >= 0 on [lo, hi] (never inconclusive).
inline Decision decide_poly_nonneg(const Poly& p, const Rational& lo, const Rational& hi,
                                   const Rational& width = default_isolation_width()) {
  if (!(lo < hi)) throw std::domain_error("decision interval needs lo < hi");
  Decision d;
  d.certificate.kind = CertificateKind::poly;
  if (p.is_zero()) {
    d.certificate.lo = lo;
    d.certificate.hi = hi;
    d.certificate.notes.push_back("zero polynomial");
    return d;
  }
  const auto ints = detail::primitive_integer_form(p);
  d.verdict = detail::analyze(
      p, lo, hi, [&](const Rational& y) { return detail::sign_at(ints, y); }, width, d.certificate);
  return d;
}

inline Decision decide_poly_nonneg(const Poly& p, const YInterval& iv,
                                   const Rational& width = default_isolation_width()) {
  return decide_poly_nonneg(p, iv.lo, iv.hi, width);
}

// ---------------------------------------------------------------------------
// Trigonometric polynomials
// ---------------------------------------------------------------------------

struct ProveOptions {
  Rational cover_width = make_rational(1, kDefaultCoverWidthDen);
  Rational isolation_width = default_isolation_width();
  std::optional<unsigned> m;  // fixed pfloor precision; escalate when absent
  unsigned m_min = 2;
  unsigned m_max = 12;
};

namespace detail {

/// With an outer cover a negative sample may fall outside the true image.
/// Keep the verdict only when a witness inside the certified inner interval
/// exists; otherwise downgrade to inconclusive.
template <class Redecide>
void confirm_negative(Decision& d, Redecide&& redecide_inner) {
  if (d.verdict.status != Status::negative || d.certificate.cover == CoverMode::exact) return;
  const auto& inner = d.certificate.inner;
  if (inner && inner->contains(*d.verdict.witness)) return;
  std::optional<Rational> w;
  if (inner) w = redecide_inner(*inner);
  if (w) {
    d.verdict.witness = w;
    d.certificate.notes.push_back("negative witness located inside the inner interval");
    return;
  }
  d.verdict = {Status::inconclusive, std::nullopt};
  d.certificate.notes.push_back("negative sample lies only in the outer cover margin");
}

}  // namespace detail

/// Pure cosine or pure sine polynomial with rational coefficients.
inline Decision decide_cp_sp(const TrigPoly& t, const XInterval& iv, const ProveOptions& opt = {}) {
  if (!t.is_rational()) throw std::domain_error("irrational coefficients: use decide_surd_sp");
  if (t.has_cos_part() && t.has_sin_part()) throw std::domain_error("mixed polynomial: use decide_mixed");
  Decision d;
  Certificate& cert = d.certificate;
  const Expansion e = expand(t);
  cert.cos_part = e.cos_part;
  cert.sin_part = e.sin_part;
  const YInterval y = detail::y_cover(iv, opt.cover_width, cert);
  const bool sine = t.has_sin_part();
  const Poly target = *to_rational(sine ? e.sin_part : e.cos_part);
  const auto ints = detail::primitive_integer_form(target);
  d.verdict = detail::analyze(
      target, y.lo, y.hi, [&](const Rational& pt) { return detail::sign_at(ints, pt); }, opt.isolation_width, cert);
  cert.kind = sine ? CertificateKind::sp : CertificateKind::cp;
  if (sine) cert.notes.push_back("sin(x) >= 0 on [0, pi]; the sine polynomial vanishes at x = 0 and x = pi");
  detail::confirm_negative(d, [&](const YInterval& in) { return decide_poly_nonneg(target, in, opt.isolation_width).verdict.witness; });
  return d;
}

/// Exact sign of B(y) + A(y) sqrt(1 - y^2) for rational y in [-1, 1].
inline int exact_sign_mixed(const Poly& a, const Poly& b, const Rational& y) {
  const Rational bv = b(y);
  const Rational s = 1 - y * y;
  if (s == 0) return sign(bv);
  const Rational av = a(y);
  const int sa = sign(av), sb = sign(bv);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  const Rational lhs = av * av * s, rhs = bv * bv;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

/// X = A^2 (1 - y^2) - B^2: every zero of B + A sqrt(1 - y^2) is a root.
inline Poly squared_resolvent(const Poly& a, const Poly& b) {
  const Poly one_minus_y2{Rational(1), Rational(0), Rational(-1)};
  return a * a * one_minus_y2 - b * b;
}

/// General trigonometric polynomial with rational coefficients.
inline Decision decide_mixed(const TrigPoly& t, const XInterval& iv, const ProveOptions& opt = {}) {
  if (!t.is_rational()) throw std::domain_error("mixed polynomials need rational coefficients");
  Decision d;
  Certificate& cert = d.certificate;
  cert.kind = CertificateKind::mixed;
  const Expansion e = expand(t);
  cert.cos_part = e.cos_part;
  cert.sin_part = e.sin_part;
  const Poly a = *to_rational(e.sin_part), b = *to_rational(e.cos_part);
  const YInterval y = detail::y_cover(iv, opt.cover_width, cert);
  const Poly x = squared_resolvent(a, b);
  if (x.is_zero()) {
    // A^2 (1 - y^2) = B^2 forces A = 0 (else 1 - y^2 would be a square), so B = 0 too
    cert.lo = y.lo;
    cert.hi = y.hi;
    cert.notes.push_back("identically zero");
    return d;
  }
  auto sign_fn = [&](const Rational& pt) { return exact_sign_mixed(a, b, pt); };
  d.verdict = detail::analyze(x, y.lo, y.hi, sign_fn, opt.isolation_width, cert);
  detail::confirm_negative(d, [&](const YInterval& in) {
    Certificate scratch;
    return detail::analyze(x, in.lo, in.hi, sign_fn, opt.isolation_width, scratch).witness;
  });
  return d;
}

// ---------------------------------------------------------------------------
// Irrational coefficients: rational lower-bound polynomials
// ---------------------------------------------------------------------------

/// Coefficientwise q_i = floor(p_i * 10^m - 1) / 10^m for every nonzero
/// p_i; zero coefficients stay zero. So 0 < p_i - q_i <= 2 * 10^-m.
inline Poly pfloor(const SurdPoly& p, unsigned m) {
  if (m < 1) throw std::domain_error("pfloor precision m must be >= 1");
  const Integer scale = pow10_int(m);
  std::vector<Rational> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const SurdExpr& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    q[i] = make_rational(surd_floor(c * Rational(scale)) - 1, scale);
  }
  return Poly(std::move(q));
}

/// One-sided decision for a pure sine or pure cosine polynomial with surd
/// coefficients: shift to z = y + 1, strip powers of z, bound below by
/// pfloor, then decide the rational bound on the shifted interval.
inline Decision decide_surd_sp(const TrigPoly& t, const XInterval& iv, unsigned m, const ProveOptions& opt = {}) {
  if (t.has_cos_part() && t.has_sin_part()) throw std::domain_error("mixed input is not supported on the pfloor path");
  Decision d;
  Certificate& cert = d.certificate;
  cert.kind = CertificateKind::pfloor;
  const Expansion e = expand(t);
  cert.cos_part = e.cos_part;
  cert.sin_part = e.sin_part;
  const YInterval y = detail::y_cover(iv, opt.cover_width, cert);
  const bool sine = t.has_sin_part();
  if (sine) cert.notes.push_back("sin(x) >= 0 on [0, pi]; the sine polynomial vanishes at x = 0 and x = pi");
  const SurdPoly target = sine ? e.sin_part : e.cos_part;

  PfloorData pf;
  pf.m = m;
  SurdPoly p = target.shifted(Rational(-1));
  while (!p.is_zero() && p.coeffs().front().is_zero()) {
    p = *p.divided_by_power_of_variable(1);
    ++pf.stripped_z;
  }
  pf.p = p;
  pf.q = pfloor(p, m);
  bool dominated = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const SurdExpr& c = p.coeffs()[i];
    const int s = surd_sign(c - SurdExpr(pf.q[i]));
    pf.difference_signs.push_back(s);
    if (c.is_rational()) {
      pf.rational_coefficients.push_back(i);
      if (s < 0) dominated = false;
    } else if (s <= 0) {
      dominated = false;
    }
  }
  if (!pf.rational_coefficients.empty())
    cert.notes.push_back("rational coefficient present; its difference is checked exactly (>= 0)");
  const Rational zlo = y.lo + 1, zhi = y.hi + 1;
  const Poly q = pf.q;
  cert.pfloor = std::move(pf);
  if (!dominated) {
    cert.notes.push_back("lower bound does not dominate coefficientwise");
    d.verdict = {Status::inconclusive, std::nullopt};
    cert.lo = zlo;
    cert.hi = zhi;
    return d;
  }
  if (q.is_zero()) {
    cert.lo = zlo;
    cert.hi = zhi;
    d.verdict = {Status::inconclusive, std::nullopt};
    cert.notes.push_back("lower bound is identically zero");
    return d;
  }
  const auto ints = detail::primitive_integer_form(q);
  Verdict qv = detail::analyze(
      q, zlo, zhi, [&](const Rational& z) { return detail::sign_at(ints, z); }, opt.isolation_width, cert);
  if (qv.status == Status::nonnegative) return d;

  // The bound dips below zero at z_w. The original is negative there only
  // if its exact value says so.
  const Rational yw = *qv.witness - 1;
  if (surd_sign(target(yw)) < 0) {
    d.verdict = {Status::negative, yw};
    cert.notes.push_back("exact evaluation of the original polynomial at the bound's negative sample");
    detail::confirm_negative(d, [&](const YInterval& in) -> std::optional<Rational> {
      for (const auto& s : cert.samples) {
        const Rational yy = s.point - 1;
        if (in.contains(yy) && surd_sign(target(yy)) < 0) return yy;
      }
      return std::nullopt;
    });
    return d;
  }
  d.verdict = {Status::inconclusive, std::nullopt};
  cert.notes.push_back("lower bound has a negative sample; retry with a larger m");
  return d;
}

/// Auto-routing: cp/sp or mixed for rational input, pfloor (with m
/// escalation unless fixed) for surd input.
inline Decision prove(const TrigPoly& t, const XInterval& iv = XInterval::full(), const ProveOptions& opt = {}) {
  if (t.is_zero()) {
    Decision d;
    d.certificate.kind = CertificateKind::cp;
    d.certificate.x_interval = iv;
    d.certificate.notes.push_back("identically zero");
    return d;
  }
  const bool mixed = t.has_cos_part() && t.has_sin_part();
  if (t.is_rational()) return mixed ? decide_mixed(t, iv, opt) : decide_cp_sp(t, iv, opt);
  if (mixed) throw std::domain_error("mixed polynomials with irrational coefficients are not supported");
  if (opt.m) return decide_surd_sp(t, iv, *opt.m, opt);
  Decision d;
  for (unsigned m = opt.m_min; m <= opt.m_max; ++m) {
    d = decide_surd_sp(t, iv, m, opt);
    if (d.verdict.status != Status::inconclusive) break;
  }
  return d;
}

}  // namespace trigsturm

#endif  // TRIGSTURM_PROVER_HPP
