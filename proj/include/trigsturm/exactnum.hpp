#ifndef TRIGSTURM_EXACTNUM_HPP
#define TRIGSTURM_EXACTNUM_HPP

// Exact scalars: GMP rationals, real quadratic surds (finite rational
// combinations of square roots of squarefree naturals), and rational
// enclosures obtained with directed rounding.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace trigsturm {

using Integer = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline Integer floor_int(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_int(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer pow_int(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer pow10_int(unsigned long exp) { return pow_int(Integer(10), exp); }
inline Integer pow2_int(unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exp);
  return out;
}

inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

/// "n" for integers, "n/d" otherwise. Round-trips through parse_rational().
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Parses "12", "-3/4", "0.8", "-12.250" exactly. Decimals become the exact
/// fraction they denote ("0.8" is 4/5).
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw std::invalid_argument("malformed rational literal: " + s);
  // decimal exponent, e.g. 1e-12 or 2.5E3
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string::npos && body.find('/') == std::string::npos) {
    const std::string ex = body.substr(e + 1);
    const std::size_t sign_len = !ex.empty() && (ex[0] == '+' || ex[0] == '-') ? 1 : 0;
    if (ex.size() == sign_len || ex.find_first_not_of("0123456789", sign_len) != std::string::npos || ex.size() > 7)
      throw std::invalid_argument("malformed rational literal: " + s);
    exponent = std::stol(ex);
    body = body.substr(0, e);
    if (body.empty()) throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rational out;
  auto digits_only = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!digits_only(n) || !digits_only(d))
      throw std::invalid_argument("malformed rational literal: " + s);
    out = make_rational(Integer(n, 10), Integer(d, 10));
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits_only(ip) || (!fp.empty() && !digits_only(fp)))
      throw std::invalid_argument("malformed rational literal: " + s);
    out = make_rational(Integer(ip + fp, 10), pow10_int(fp.size()));
  } else {
    if (!digits_only(body)) throw std::invalid_argument("malformed rational literal: " + s);
    out = Rational(Integer(body, 10));
  }
  if (exponent > 0) out *= Rational(pow10_int(static_cast<unsigned long>(exponent)));
  if (exponent < 0) out /= Rational(pow10_int(static_cast<unsigned long>(-exponent)));
  return neg ? Rational(-out) : out;
}

/// Decimal rendering with `digits` fractional digits, truncated toward -inf.
/// Annotation only; never used for decisions.
inline std::string to_decimal(const Rational& r, unsigned digits) {
  Integer scaled = floor_int(r * Rational(pow10_int(digits)));
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return neg ? "-" + out : out;
}

// ---------------------------------------------------------------------------
// Enclosure
// ---------------------------------------------------------------------------

struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool excludes_zero() const { return lo > 0 || hi < 0; }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
};

// ---------------------------------------------------------------------------
// SurdExpr
// ---------------------------------------------------------------------------

/// Sum of r_d * sqrt(d) over squarefree radicands d; d = 1 is the rational
/// part. Zero terms are never stored, so the zero value is the empty map and
/// equality is map equality (the square roots of distinct squarefree
/// naturals are linearly independent over Q).
class SurdExpr {
 public:
  using Radicand = std::uint64_t;
  using TermMap = std::map<Radicand, Rational>;

  SurdExpr() = default;
  SurdExpr(const Rational& r) { add_term(1, r); }  // NOLINT: implicit by design of the ring
  SurdExpr(long v) : SurdExpr(Rational(v)) {}      // NOLINT

  /// sqrt(n) in normal form: n = s^2 * d with d squarefree gives s*sqrt(d).
  static SurdExpr sqrt(Radicand n) {
    SurdExpr out;
    if (n == 0) return out;
    Radicand square = 1, rest = n;
    for (Radicand f = 2; f * f <= rest; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        square *= f;
      }
    }
    out.add_term(rest, Rational(static_cast<unsigned long>(square)));
    return out;
  }

  /// coeff * sqrt(d); d must already be squarefree.
  static SurdExpr term(Radicand d, const Rational& coeff) {
    if (!is_squarefree(d)) throw std::invalid_argument("radicand is not squarefree");
    SurdExpr out;
    out.add_term(d, coeff);
    return out;
  }

  static bool is_squarefree(Radicand d) {
    if (d == 0) return false;
    for (Radicand f = 2; f * f <= d; ++f)
      if (d % (f * f) == 0) return false;
    return true;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Value as a Rational; throws if an irrational term is present.
  Rational to_rational() const {
    if (!is_rational()) throw std::domain_error("surd expression is irrational");
    return rational_part();
  }

  SurdExpr operator-() const {
    SurdExpr out = *this;
    for (auto& [d, r] : out.terms_) r = -r;
    return out;
  }
  SurdExpr& operator+=(const SurdExpr& o) {
    for (const auto& [d, r] : o.terms_) add_term(d, r);
    return *this;
  }
  SurdExpr& operator-=(const SurdExpr& o) {
    for (const auto& [d, r] : o.terms_) add_term(d, -r);
    return *this;
  }
  SurdExpr& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, r] : terms_) r *= k;
    return *this;
  }
  SurdExpr& operator/=(const Rational& k) {
    if (k == 0) throw std::domain_error("division of surd by zero");
    for (auto& [d, r] : terms_) r /= k;
    return *this;
  }

  friend SurdExpr operator+(SurdExpr a, const SurdExpr& b) { return a += b; }
  friend SurdExpr operator-(SurdExpr a, const SurdExpr& b) { return a -= b; }
  friend SurdExpr operator*(SurdExpr a, const Rational& k) { return a *= k; }
  friend SurdExpr operator*(const Rational& k, SurdExpr a) { return a *= k; }
  friend SurdExpr operator/(SurdExpr a, const Rational& k) { return a /= k; }

  friend SurdExpr operator*(const SurdExpr& a, const SurdExpr& b) {
    SurdExpr out;
    for (const auto& [da, ra] : a.terms_) {
      for (const auto& [db, rb] : b.terms_) {
        // sqrt(da)*sqrt(db) = g*sqrt((da/g)*(db/g)) with g = gcd(da, db);
        // the cofactors are coprime and squarefree, so their product is too.
        Radicand g = std::gcd(da, db);
        Radicand d = (da / g) * (db / g);
        out.add_term(d, Rational(ra * rb * Rational(static_cast<unsigned long>(g))));
      }
    }
    return out;
  }
  SurdExpr& operator*=(const SurdExpr& o) { return *this = *this * o; }

  /// Exact inverse of a single-term value r*sqrt(d), which is sqrt(d)/(r*d).
  SurdExpr inverse_monomial() const {
    if (terms_.size() != 1) throw std::domain_error("only single-term surds can be inverted");
    const auto& [d, r] = *terms_.begin();
    return term(d, Rational(1) / (r * Rational(static_cast<unsigned long>(d))));
  }

  friend bool operator==(const SurdExpr& a, const SurdExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SurdExpr& a, const SurdExpr& b) { return !(a == b); }

  /// Sum of |r_d| over the irrational terms.
  Rational irrational_weight() const {
    Rational w = 0;
    for (const auto& [d, r] : terms_)
      if (d != 1) w += abs(r);
    return w;
  }

  double to_double() const {
    double v = 0;
    for (const auto& [d, r] : terms_) v += r.get_d() * std::sqrt(static_cast<double>(d));
    return v;
  }

  /// Renders as e.g. "1 + 3/2*sqrt(2) - sqrt(6)"; parseable by the expression
  /// parser.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, r] : terms_) {
      Rational mag = abs(r);
      if (first) {
        if (r < 0) os << "-";
      } else {
        os << (r < 0 ? " - " : " + ");
      }
      first = false;
      if (d == 1) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        os << "sqrt(" << d << ")";
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const SurdExpr& s) { return os << s.to_string(); }

 private:
  void add_term(Radicand d, const Rational& r) {
    if (r == 0) return;
    auto [it, inserted] = terms_.try_emplace(d, r);
    if (!inserted) {
      it->second += r;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const SurdExpr& s) { return s.is_zero(); }

// ---------------------------------------------------------------------------
// Enclosures of surds and exact sign
// ---------------------------------------------------------------------------

/// [s/2^k, (s+1)/2^k] containing sqrt(d), with s = isqrt(d * 4^k).
inline Enclosure enclose_sqrt(SurdExpr::Radicand d, unsigned k) {
  Integer scale = pow2_int(k);
  Integer s = isqrt(Integer(static_cast<unsigned long>(d)) * scale * scale);
  Rational lo = make_rational(s, scale);
  if (s * s == Integer(static_cast<unsigned long>(d)) * scale * scale) return {lo, lo};
  return {lo, make_rational(s + 1, scale)};
}

/// Interval [lo, hi] containing v with hi - lo <= eps. Each square root is
/// bracketed by integer square roots at a power-of-two scale, so the bounds
/// are exact (no floating point involved).
inline Enclosure enclose(const SurdExpr& v, const Rational& eps) {
  if (eps <= 0) throw std::domain_error("enclosure width must be positive");
  Rational weight = v.irrational_weight();
  Rational base = v.rational_part();
  if (weight == 0) return {base, base};
  unsigned k = 0;
  while (weight / Rational(pow2_int(k)) > eps) ++k;
  Enclosure out{base, base};
  for (const auto& [d, r] : v.terms()) {
    if (d == 1) continue;
    Enclosure root = enclose_sqrt(d, k);
    if (r > 0)
      out = out + Enclosure{r * root.lo, r * root.hi};
    else
      out = out + Enclosure{r * root.hi, r * root.lo};
  }
  return out;
}

/// Exact sign; refines enclosures until zero is excluded. Terminates for
/// every nonzero value because a nonzero surd has a nonzero real value.
inline int surd_sign(const SurdExpr& v) {
  if (v.is_zero()) return 0;
  if (v.is_rational()) return sign(v.rational_part());
  Rational eps = make_rational(1, 16);
  for (;;) {
    Enclosure e = enclose(v, eps);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    eps /= 256;
  }
}

/// Exact floor of a surd value.
inline Integer surd_floor(const SurdExpr& v) {
  if (v.is_rational()) return floor_int(v.rational_part());
  Rational eps = make_rational(1, 16);
  for (;;) {
    Enclosure e = enclose(v, eps);
    Integer lo = floor_int(e.lo);
    // v is irrational, so lo < v < hi strictly
    if (lo == floor_int(e.hi)) return lo;
    if (Rational(floor_int(e.hi)) == e.hi && lo + 1 == floor_int(e.hi)) return lo;
    eps /= 256;
  }
}

}  // namespace trigsturm

#endif  // TRIGSTURM_EXACTNUM_HPP
