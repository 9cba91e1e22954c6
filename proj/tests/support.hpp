#ifndef TRIGSTURM_TESTS_SUPPORT_HPP
#define TRIGSTURM_TESTS_SUPPORT_HPP

// Shared test helpers: seeded generators and a high-precision float oracle
// (GMP mpf) that does not use the library's enclosure code.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "trigsturm/trigsturm.hpp"

namespace testing_support {

using namespace trigsturm;

inline constexpr unsigned kOracleBits = 1024;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long max_num, long max_den) {
    return make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Poly poly(int degree, long max_num = 20, long max_den = 6) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rational(max_num, max_den));
    if (c.back() == 0) c.back() = 1;
    return Poly(std::move(c));
  }

  SurdExpr surd(int terms, long max_num = 50, long max_den = 10) {
    static const SurdExpr::Radicand radicands[] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 21, 30};
    SurdExpr out;
    for (int i = 0; i < terms; ++i)
      out += SurdExpr::term(radicands[integer(0, 11)], rational(max_num, max_den));
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline mpf_class oracle(const Rational& r) {
  mpf_class v(0, kOracleBits);
  v = r;
  return v;
}

inline mpf_class oracle(const SurdExpr& s) {
  mpf_class v(0, kOracleBits);
  for (const auto& [d, c] : s.terms()) {
    mpf_class root(static_cast<unsigned long>(d), kOracleBits);
    root = sqrt(root);
    v += oracle(c) * root;
  }
  return v;
}

/// Product of (y - r) over the given roots.
template <class C>
mpf_class eval_mpf(const Polynomial<C>& p, const mpf_class& y) {
  mpf_class acc(0, kOracleBits);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * y + oracle(p.coeffs()[i]);
  return acc;
}

inline Poly from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
  Poly p(lead);
  for (const auto& r : roots) p = p * Poly{Rational(-r), Rational(1)};
  return p;
}

inline double eval(const TrigPoly& t, double x) { return t.eval(x); }

}  // namespace testing_support

#endif  // TRIGSTURM_TESTS_SUPPORT_HPP
