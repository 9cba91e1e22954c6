#ifndef TRIGSTURM_TRIG_HPP
#define TRIGSTURM_TRIG_HPP

// Trigonometric polynomials a0 + sum_k (a_k cos kx + b_k sin kx) and their
// expansion B(y) + sin(x) A(y) in y = cos x. Also the map from x-intervals
// inside [0, pi] to y-intervals inside [-1, 1].

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigsturm/exactnum.hpp"
#include "trigsturm/poly.hpp"

namespace trigsturm {

class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(SurdExpr a0, std::vector<SurdExpr> cos_coeffs, std::vector<SurdExpr> sin_coeffs)
      : a0_(std::move(a0)), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    normalize();
  }

  static TrigPoly constant(const SurdExpr& c) { return TrigPoly(c, {}, {}); }
  static TrigPoly cos_term(std::size_t k, const SurdExpr& c) {
    if (k == 0) return constant(c);
    std::vector<SurdExpr> cs(k);
    cs[k - 1] = c;
    return TrigPoly({}, std::move(cs), {});
  }
  static TrigPoly sin_term(std::size_t k, const SurdExpr& c) {
    if (k == 0) throw std::invalid_argument("sin(0x) is not a basis term");
    std::vector<SurdExpr> ss(k);
    ss[k - 1] = c;
    return TrigPoly({}, {}, std::move(ss));
  }

  std::size_t degree() const { return cos_.size(); }
  const SurdExpr& a0() const { return a0_; }
  /// a_k for k >= 1 (zero beyond the degree); a_0 for k == 0.
  SurdExpr cos_coeff(std::size_t k) const {
    if (k == 0) return a0_;
    return k <= cos_.size() ? cos_[k - 1] : SurdExpr{};
  }
  SurdExpr sin_coeff(std::size_t k) const {
    if (k == 0) return {};
    return k <= sin_.size() ? sin_[k - 1] : SurdExpr{};
  }

  bool is_zero() const { return a0_.is_zero() && cos_.empty(); }
  bool has_cos_part() const {
    if (!a0_.is_zero()) return true;
    for (const auto& c : cos_)
      if (!c.is_zero()) return true;
    return false;
  }
  bool has_sin_part() const {
    for (const auto& s : sin_)
      if (!s.is_zero()) return true;
    return false;
  }
  bool is_rational() const {
    if (!a0_.is_rational()) return false;
    for (std::size_t k = 0; k < cos_.size(); ++k)
      if (!cos_[k].is_rational() || !sin_[k].is_rational()) return false;
    return true;
  }

  TrigPoly operator-() const { return scaled(SurdExpr(-1L)); }
  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    const std::size_t n = std::max(a.degree(), b.degree());
    std::vector<SurdExpr> cs(n), ss(n);
    for (std::size_t k = 1; k <= n; ++k) {
      cs[k - 1] = a.cos_coeff(k) + b.cos_coeff(k);
      ss[k - 1] = a.sin_coeff(k) + b.sin_coeff(k);
    }
    return TrigPoly(a.a0_ + b.a0_, std::move(cs), std::move(ss));
  }
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (-b); }
  TrigPoly scaled(const SurdExpr& k) const {
    std::vector<SurdExpr> cs(cos_), ss(sin_);
    for (auto& c : cs) c *= k;
    for (auto& s : ss) s *= k;
    return TrigPoly(a0_ * k, std::move(cs), std::move(ss));
  }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.a0_ == b.a0_ && a.cos_ == b.cos_ && a.sin_ == b.sin_;
  }

  double eval(double x) const {
    double v = a0_.to_double();
    for (std::size_t k = 1; k <= cos_.size(); ++k) {
      const double kx = static_cast<double>(k) * x;
      v += cos_[k - 1].to_double() * std::cos(kx) + sin_[k - 1].to_double() * std::sin(kx);
    }
    return v;
  }

 private:
  void normalize() {
    const std::size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n);
    sin_.resize(n);
    while (!cos_.empty() && cos_.back().is_zero() && sin_.back().is_zero()) {
      cos_.pop_back();
      sin_.pop_back();
    }
  }

  SurdExpr a0_;
  std::vector<SurdExpr> cos_;
  std::vector<SurdExpr> sin_;
};

// ---------------------------------------------------------------------------
// Chebyshev expansion
// ---------------------------------------------------------------------------

/// cos(kx) = T_k(cos x).
inline Poly cheb_cos(std::size_t k) {
  Poly prev{Rational(1)}, cur = Poly::identity();
  if (k == 0) return prev;
  const Poly two_y = Poly::monomial(Rational(2), 1);
  for (std::size_t i = 1; i < k; ++i) {
    Poly next = two_y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// sin(kx) = sin(x) * V_k(cos x), with V_1 = 1, V_2 = 2y.
inline Poly cheb_sin(std::size_t k) {
  if (k == 0) throw std::domain_error("cheb_sin needs k >= 1");
  Poly prev{Rational(1)}, cur = Poly::monomial(Rational(2), 1);
  if (k == 1) return prev;
  const Poly two_y = Poly::monomial(Rational(2), 1);
  for (std::size_t i = 2; i < k; ++i) {
    Poly next = two_y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// t(x) = cos_part(cos x) + sin(x) * sin_part(cos x).
struct Expansion {
  SurdPoly cos_part;  // B
  SurdPoly sin_part;  // A
};

inline Expansion expand(const TrigPoly& t) {
  const std::size_t n = t.degree();
  std::vector<SurdExpr> b(n + 1), a(n > 0 ? n : 0);
  b[0] = t.a0();
  // T_k and V_k side by side; both obey P_k = 2y P_{k-1} - P_{k-2}.
  const Poly two_y = Poly::monomial(Rational(2), 1);
  Poly t_prev{Rational(1)}, t_cur = Poly::identity();
  Poly v_prev{Rational(0)}, v_cur{Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      Poly t_next = two_y * t_cur - t_prev;
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
      Poly v_next = two_y * v_cur - v_prev;
      v_prev = std::move(v_cur);
      v_cur = std::move(v_next);
    }
    const SurdExpr ak = t.cos_coeff(k), bk = t.sin_coeff(k);
    if (!ak.is_zero())
      for (std::size_t i = 0; i < t_cur.size(); ++i)
        if (t_cur.coeffs()[i] != 0) b[i] += ak * t_cur.coeffs()[i];
    if (!bk.is_zero())
      for (std::size_t i = 0; i < v_cur.size(); ++i)
        if (v_cur.coeffs()[i] != 0) a[i] += bk * v_cur.coeffs()[i];
  }
  return {SurdPoly(std::move(b)), SurdPoly(std::move(a))};
}

/// Term-wise d/dx.
inline TrigPoly trig_derivative(const TrigPoly& t) {
  const std::size_t n = t.degree();
  std::vector<SurdExpr> cs(n), ss(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational kk(static_cast<unsigned long>(k));
    cs[k - 1] = t.sin_coeff(k) * kk;
    ss[k - 1] = -(t.cos_coeff(k) * kk);
  }
  return TrigPoly({}, std::move(cs), std::move(ss));
}

// ---------------------------------------------------------------------------
// cos(q*pi): exact values and rigorous enclosures
// ---------------------------------------------------------------------------

/// cos(q*pi) for q in {0, 1/6, 1/4, 1/3, 1/2, 2/3, 3/4, 5/6, 1}.
inline std::optional<SurdExpr> exact_cos_pi(const Rational& q) {
  const Integer& den = q.get_den();
  if (q < 0 || q > 1) return std::nullopt;
  if (den != 1 && den != 2 && den != 3 && den != 4 && den != 6) return std::nullopt;
  const Rational half = make_rational(1, 2);
  if (q == 0) return SurdExpr(1L);
  if (q == 1) return SurdExpr(-1L);
  if (q == half) return SurdExpr{};
  if (q == make_rational(1, 3)) return SurdExpr(half);
  if (q == make_rational(2, 3)) return SurdExpr(Rational(-half));
  if (q == make_rational(1, 4)) return SurdExpr::term(2, half);
  if (q == make_rational(3, 4)) return SurdExpr::term(2, Rational(-half));
  if (q == make_rational(1, 6)) return SurdExpr::term(3, half);
  if (q == make_rational(5, 6)) return SurdExpr::term(3, Rational(-half));
  return std::nullopt;
}

namespace detail {

inline Rational round_down(const Rational& r, unsigned bits) {
  Integer scale = pow2_int(bits);
  return make_rational(floor_int(r * Rational(scale)), scale);
}
inline Rational round_up(const Rational& r, unsigned bits) {
  Integer scale = pow2_int(bits);
  return make_rational(ceil_int(r * Rational(scale)), scale);
}

/// arctan(1/k) lies between consecutive partial sums of its alternating
/// series; returns [S_{2m}, S_{2m+1}].
inline Enclosure arctan_inverse(unsigned long k, unsigned bits) {
  const Rational kk(k);
  const Rational k2 = kk * kk;
  Rational power = Rational(1) / kk;  // 1/k^(2j+1)
  Rational sum = 0;
  Rational threshold = make_rational(Integer(1), pow2_int(bits + 8));
  for (unsigned long j = 0;; j += 2) {
    Rational t0 = power / Rational(2 * j + 1);
    power /= k2;
    Rational t1 = power / Rational(2 * j + 3);
    power /= k2;
    // sum + t0 is an upper bound, sum + t0 - t1 a lower bound
    if (t1 < threshold) return {sum + t0 - t1, sum + t0};
    sum += t0 - t1;
  }
}

/// pi via Machin's formula 16 atan(1/5) - 4 atan(1/239), rounded outward.
inline Enclosure pi_enclosure(unsigned bits) {
  Enclosure a5 = arctan_inverse(5, bits), a239 = arctan_inverse(239, bits);
  return {round_down(16 * a5.lo - 4 * a239.hi, bits), round_up(16 * a5.hi - 4 * a239.lo, bits)};
}

/// cos(x) for rational x >= 0 by Taylor series with Lagrange remainder
/// bound x^(2N)/(2N)!.
inline Enclosure cos_taylor(const Rational& x, unsigned bits) {
  const Rational x2 = x * x;
  const Rational threshold = make_rational(Integer(1), pow2_int(bits + 8));
  Rational term = 1;  // x^(2k)/(2k)! with sign
  Rational sum = 0;
  for (unsigned long k = 0;; ++k) {
    sum += term;
    term = -term * x2 / Rational((2 * k + 1) * (2 * k + 2));
    if (abs(term) < threshold) {
      Rational r = abs(term);
      return {round_down(sum - r, bits), round_up(sum + r, bits)};
    }
  }
}

}  // namespace detail

/// Rational enclosure of cos(q*pi) for rational q in [0, 1], width <= eps.
inline Enclosure cos_pi_enclosure(const Rational& q, const Rational& eps) {
  if (q < 0 || q > 1) throw std::domain_error("cos_pi_enclosure needs q in [0, 1]");
  if (auto exact = exact_cos_pi(q)) return enclose(*exact, eps);
  for (unsigned bits = 24;; bits *= 2) {
    Enclosure pi = detail::pi_enclosure(bits);
    // cos is decreasing on [0, pi]; q*pi.hi < pi holds once bits is moderate
    Enclosure upper = detail::cos_taylor(q * pi.lo, bits);
    Enclosure lower = detail::cos_taylor(q * pi.hi, bits);
    Enclosure out{lower.lo, upper.hi};
    if (out.width() <= eps && q * pi.hi <= pi.lo) return out;
  }
}

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

/// [lo_q*pi, hi_q*pi] with 0 <= lo_q < hi_q <= 1.
struct XInterval {
  Rational lo_q;
  Rational hi_q;

  XInterval() : lo_q(0), hi_q(1) {}
  XInterval(Rational lo, Rational hi) : lo_q(std::move(lo)), hi_q(std::move(hi)) {
    if (!(0 <= lo_q && lo_q < hi_q && hi_q <= 1))
      throw std::domain_error("x-interval must satisfy 0 <= lo < hi <= pi");
  }
  static XInterval full() { return {}; }

  bool exact_endpoints() const {
    auto lo = exact_cos_pi(lo_q), hi = exact_cos_pi(hi_q);
    return lo && hi && lo->is_rational() && hi->is_rational();
  }
};

struct YInterval {
  Rational lo;
  Rational hi;

  YInterval() : lo(-1), hi(1) {}
  YInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(-1 <= lo && lo < hi && hi <= 1)) throw std::domain_error("y-interval must satisfy -1 <= lo < hi <= 1");
  }
  bool contains(const Rational& y) const { return lo <= y && y <= hi; }
};

enum class CoverMode { exact, outer };

inline constexpr long kDefaultCoverWidthDen = 1000000;  // 1e-6

/// y = cos x maps [x_lo, x_hi] onto [cos x_hi, cos x_lo]. In outer mode any
/// irrational endpoint is replaced by an outward rational bound, so the
/// result contains the true image and is at most `width` wider at each end.
inline YInterval x_to_y(const XInterval& iv, CoverMode mode,
                        const Rational& width = make_rational(1, kDefaultCoverWidthDen)) {
  if (mode == CoverMode::exact) {
    auto lo = exact_cos_pi(iv.hi_q), hi = exact_cos_pi(iv.lo_q);
    if (!lo || !hi || !lo->is_rational() || !hi->is_rational())
      throw std::domain_error("exact y-interval needs endpoints with rational cosine");
    return {lo->rational_part(), hi->rational_part()};
  }
  Enclosure at_hi = cos_pi_enclosure(iv.hi_q, width);
  Enclosure at_lo = cos_pi_enclosure(iv.lo_q, width);
  Rational lo = at_hi.lo < -1 ? Rational(-1) : at_hi.lo;
  Rational hi = at_lo.hi > 1 ? Rational(1) : at_lo.hi;
  return {lo, hi};
}

/// Rational interval contained in the true image of iv, when one exists.
inline std::optional<YInterval> x_to_y_inner(const XInterval& iv,
                                             const Rational& width = make_rational(1, kDefaultCoverWidthDen)) {
  Enclosure at_hi = cos_pi_enclosure(iv.hi_q, width);
  Enclosure at_lo = cos_pi_enclosure(iv.lo_q, width);
  if (!(at_hi.hi < at_lo.lo)) return std::nullopt;
  return YInterval(at_hi.hi, at_lo.lo);
}

}  // namespace trigsturm

#endif  // TRIGSTURM_TRIG_HPP
