#ifndef TRIGSTURM_POLY_HPP
#define TRIGSTURM_POLY_HPP

// Dense univariate polynomials over exact coefficient rings (Rational or
// SurdExpr), stored in ascending degree order with no trailing zeros.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "trigsturm/exactnum.hpp"

namespace trigsturm {

namespace detail {
template <class T>
struct EvalPoint {
  using type = T;
};
template <class U>
struct EvalPoint<__gmp_expr<mpq_t, U>> {
  using type = Rational;
};
}  // namespace detail

template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
  Polynomial(const C& constant) : c_{constant} { trim(); }  // NOLINT

  static Polynomial monomial(const C& coeff, std::size_t k) {
    std::vector<C> c(k + 1);
    c[k] = coeff;
    return Polynomial(std::move(c));
  }
  /// The polynomial y.
  static Polynomial identity() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of y^k (zero beyond the degree).
  C operator[](std::size_t k) const { return k < c_.size() ? c_[k] : C(); }
  const C& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (trigsturm::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += C(a.c_[i] * b.c_[j]);
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const C& k) const {
    std::vector<C> out(c_);
    for (auto& c : out) c = C(c * k);
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Horner evaluation. For SurdExpr coefficients and a Rational point the
  /// result is an exact SurdExpr.
  template <class X0>
  auto operator()(const X0& x0) const {
    using X = typename detail::EvalPoint<X0>::type;  // rational expression templates decay
    const X& x = x0;
    using R = std::conditional_t<std::is_same_v<C, SurdExpr>, SurdExpr, X>;
    R acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = R(acc * x);
      acc += R(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      out[i - 1] = C(c_[i] * Rational(static_cast<unsigned long>(i)));
    return Polynomial(std::move(out));
  }

  /// q(z) = p(z + c), by repeated synthetic division (Taylor shift).
  Polynomial shifted(const Rational& c) const {
    std::vector<C> a(c_);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += C(a[j] * c);
    return Polynomial(std::move(a));
  }

  /// Exact division by y^k when the k lowest coefficients vanish.
  std::optional<Polynomial> divided_by_power_of_variable(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, c_.size()); ++i)
      if (!trigsturm::is_zero(c_[i])) return std::nullopt;
    if (k >= c_.size()) return Polynomial{};
    return Polynomial(std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// e.g. "80*y^4 - 56*y^3 + 5"; surd coefficients are parenthesized.
  std::string to_string(const std::string& var = "y") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const C& c = c_[k];
      if (trigsturm::is_zero(c)) continue;
      std::string coef;
      bool negative = false;
      if constexpr (std::is_same_v<C, Rational>) {
        negative = c < 0;
        coef = Rational(abs(c)).get_str();
      } else {
        if (c.is_rational()) {
          negative = c.rational_part() < 0;
          coef = Rational(abs(c.rational_part())).get_str();
        } else if (c.terms().size() == 1) {
          negative = c.terms().begin()->second < 0;
          coef = (negative ? -c : c).to_string();
        } else {
          coef = "(" + c.to_string() + ")";
        }
      }
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      if (k == 0) {
        os << coef;
        continue;
      }
      if (coef != "1") os << coef << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && trigsturm::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using Poly = Polynomial<Rational>;
using SurdPoly = Polynomial<SurdExpr>;

inline SurdPoly to_surd(const Poly& p) {
  std::vector<SurdExpr> c;
  c.reserve(p.size());
  for (const auto& r : p.coeffs()) c.emplace_back(r);
  return SurdPoly(std::move(c));
}

/// The rational polynomial equal to p, if every coefficient is rational.
inline std::optional<Poly> to_rational(const SurdPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& s : p.coeffs()) {
    if (!s.is_rational()) return std::nullopt;
    c.push_back(s.rational_part());
  }
  return Poly(std::move(c));
}

inline bool is_rational(const SurdPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const SurdExpr& s) { return s.is_rational(); });
}

// ---------------------------------------------------------------------------
// Division, gcd, squarefree part
// ---------------------------------------------------------------------------

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// a = q*b + r with deg r < deg b, exact over Q.
inline DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  std::vector<Rational> r(a.coeffs());
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] / lc;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading());
}

/// Monic gcd (zero only when both inputs are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

struct SquarefreeSplit {
  Poly gcd_with_derivative;  // monic gcd(p, p')
  Poly squarefree;           // p / gcd(p, p')
};

inline SquarefreeSplit gcd_squarefree(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  Poly g = gcd(p, p.derivative());
  if (g.is_zero()) g = Poly{Rational(1)};
  return {g, divrem(p, g).quotient};
}

// ---------------------------------------------------------------------------
// Resultant and discriminant
// ---------------------------------------------------------------------------

/// Determinant by exact Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

/// Res(a, b) as the Sylvester determinant of the actual degrees.
inline Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0 || n == 0) {
    // Res(c, b) = c^deg(b); Res(a, c) = c^deg(a)
    const Rational& c = (m == 0) ? a.leading() : b.leading();
    Rational r = 1;
    for (int i = 0; i < m + n; ++i) r *= c;
    return r;
  }
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = a.coeffs()[static_cast<std::size_t>(m - k)];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = b.coeffs()[static_cast<std::size_t>(n - k)];
  return determinant(std::move(s));
}

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
inline Rational discriminant(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
  if (n == 1) return 1;
  Rational r = resultant(p, p.derivative()) / p.leading();
  return (n * (n - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

/// Unique polynomial of degree < xs.size() through the points (Newton form).
inline Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation needs matching nonempty samples");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Poly out{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) out = out * Poly{Rational(-xs[i]), Rational(1)} + Poly{dd[i]};
  return out;
}

/// D(a) = disc_y(x0(y) + a*x1(y)) as a polynomial in a, by evaluation at
/// 2*deg+1 rational values of a where the y-degree is generic, followed by
/// interpolation. D is a polynomial because lc(X) divides Res(X, X').
inline Poly disc_affine_family(const Poly& x0, const Poly& x1) {
  const int deg = std::max(x0.degree(), x1.degree());
  if (deg < 1) throw std::domain_error("family must have positive degree in y");
  const std::size_t needed = static_cast<std::size_t>(2 * deg + 1);
  std::vector<Rational> xs, ys;
  long probe = 0;
  const long limit = 16L * static_cast<long>(needed) + 64;
  while (xs.size() < needed && probe < limit) {
    // 0, 1, -1, 2, -2, ...
    long k = (probe % 2 == 1) ? (probe + 1) / 2 : -(probe / 2);
    ++probe;
    Rational a(k);
    Poly p = x0 + x1.scaled(a);
    if (p.degree() != deg) continue;
    xs.push_back(a);
    ys.push_back(discriminant(p));
  }
  if (xs.size() < needed) throw std::runtime_error("not enough generic sample points for discriminant");
  return interpolate(xs, ys);
}

}  // namespace trigsturm

#endif  // TRIGSTURM_POLY_HPP
