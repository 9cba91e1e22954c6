#ifndef TRIGSTURM_STURM_HPP
#define TRIGSTURM_STURM_HPP

// Sturm chains, sign variations, distinct-root counting on half-open
// intervals (a, b], and root isolation by exact bisection.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "trigsturm/exactnum.hpp"
#include "trigsturm/poly.hpp"

namespace trigsturm {

/// Number of sign alternations after deleting zeros.
inline std::size_t sign_changes(std::span<const int> signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline std::size_t sign_changes(std::span<const Rational> values) {
  std::vector<int> signs;
  signs.reserve(values.size());
  for (const auto& v : values) signs.push_back(sign(v));
  return sign_changes(std::span<const int>(signs));
}

namespace detail {

/// Positive multiple of p with coprime integer coefficients; same sign as p
/// everywhere.
inline std::vector<Integer> primitive_integer_form(const Poly& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

/// Sign of p(n/d), d > 0, from d^deg * p(n/d) evaluated in integers.
inline int sign_at(const std::vector<Integer>& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = p.back();
  Integer dpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dpow *= d;
    acc *= n;
    acc += p[i] * dpow;
  }
  return sgn(acc);
}

}  // namespace detail

/// p, p', then successive negated Euclidean remainders; the last element is
/// gcd(p, p') up to a constant factor. Counts are exact for squarefree p; for
/// other p an endpoint that is a multiple root breaks them.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    if (p.degree() < 1) throw std::domain_error("Sturm chain needs a polynomial of degree >= 1");
    polys_.push_back(p);
    polys_.push_back(p.derivative());
    for (;;) {
      Poly r = divrem(polys_[polys_.size() - 2], polys_.back()).remainder;
      if (r.is_zero()) break;
      polys_.push_back(-r);
    }
    integer_forms_.reserve(polys_.size());
    for (const auto& q : polys_) integer_forms_.push_back(detail::primitive_integer_form(q));
  }

  const std::vector<Poly>& polys() const { return polys_; }
  const Poly& base() const { return polys_.front(); }
  std::size_t size() const { return polys_.size(); }

  std::vector<Rational> values_at(const Rational& x) const {
    std::vector<Rational> out;
    out.reserve(polys_.size());
    for (const auto& q : polys_) out.push_back(q(x));
    return out;
  }

  std::vector<int> signs_at(const Rational& x) const {
    std::vector<int> out;
    out.reserve(integer_forms_.size());
    for (const auto& q : integer_forms_) out.push_back(detail::sign_at(q, x));
    return out;
  }

  std::size_t variations_at(const Rational& x) const {
    auto s = signs_at(x);
    return sign_changes(std::span<const int>(s));
  }

  int sign_of_base_at(const Rational& x) const { return detail::sign_at(integer_forms_.front(), x); }

  /// Distinct real roots in the half-open interval (a, b].
  std::size_t count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw std::domain_error("count_roots needs a < b");
    const std::size_t va = variations_at(a), vb = variations_at(b);
    return va - vb;
  }

 private:
  std::vector<Poly> polys_;
  std::vector<std::vector<Integer>> integer_forms_;
};

inline std::size_t count_roots(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (!(a < b)) throw std::domain_error("count_roots needs a < b");
  if (p.degree() == 0) return 0;
  return SturmChain(gcd_squarefree(p).squarefree).count_roots(a, b);
}

/// Closed rational interval holding exactly one distinct root; lo == hi
/// when the root was hit exactly.
struct RootBox {
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Halves a box known to hold exactly one root in (lo, hi], keeping the half
/// that holds it. Returns a degenerate box if the midpoint is the root.
inline RootBox refine_root_box(const SturmChain& chain, const RootBox& box) {
  if (box.is_exact()) return box;
  Rational mid = (box.lo + box.hi) / 2;
  if (chain.sign_of_base_at(mid) == 0) return {mid, mid};
  if (chain.count_roots(box.lo, mid) == 1) return {box.lo, mid};
  return {mid, box.hi};
}

/// One box per distinct root in (a, b]. Boxes are sorted, pairwise
/// separated by nonempty open gaps, each of width <= max_width, and each
/// certified to hold exactly one root. A box never touches a if a is
/// itself a root.
inline std::vector<RootBox> isolate_roots(const SturmChain& chain, const Rational& a, const Rational& b,
                                          const Rational& max_width) {
  if (!(a < b)) throw std::domain_error("isolate_roots needs a < b");
  if (max_width <= 0) throw std::domain_error("isolation width must be positive");
  std::vector<RootBox> boxes;
  std::vector<std::tuple<Rational, Rational, std::size_t>> work;
  work.emplace_back(a, b, chain.count_roots(a, b));
  while (!work.empty()) {
    auto [l, r, c] = std::move(work.back());
    work.pop_back();
    if (c == 0) continue;
    if (c == 1) {
      boxes.push_back({l, r});
      continue;
    }
    Rational m = (l + r) / 2;
    const Rational nudge = (r - l) / Rational(pow2_int(32));
    while (chain.sign_of_base_at(m) == 0) m += nudge;
    std::size_t left = chain.count_roots(l, m);
    work.emplace_back(m, r, c - left);
    work.emplace_back(l, m, left);
  }
  std::sort(boxes.begin(), boxes.end(), [](const RootBox& x, const RootBox& y) { return x.lo < y.lo; });

  if (!boxes.empty() && chain.sign_of_base_at(a) == 0)
    while (boxes.front().lo == a) boxes.front() = refine_root_box(chain, boxes.front());

  for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
    while (boxes[i].hi >= boxes[i + 1].lo) {
      boxes[i] = refine_root_box(chain, boxes[i]);
      boxes[i + 1] = refine_root_box(chain, boxes[i + 1]);
    }
  }
  for (auto& box : boxes)
    while (box.width() > max_width) box = refine_root_box(chain, box);
  return boxes;
}

inline std::vector<RootBox> isolate_roots(const Poly& p, const Rational& a, const Rational& b,
                                          const Rational& max_width) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  if (p.degree() == 0) return {};
  return isolate_roots(SturmChain(gcd_squarefree(p).squarefree), a, b, max_width);
}

}  // namespace trigsturm

#endif  // TRIGSTURM_STURM_HPP
