#ifndef TRIGSTURM_PARAMSOLVE_HPP
#define TRIGSTURM_PARAMSOLVE_HPP

// Maximal parameter interval for families t_a = base + a * direction that
// are nonnegative on a y-interval. The nonnegative set in a is a closed
// interval whose finite endpoints are among: roots in a of X(y_lo; a) and
// X(y_hi; a), real roots of the discriminant disc_y X(y; a), and the value
// of a where the y-degree drops.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigsturm/exactnum.hpp"
#include "trigsturm/poly.hpp"
#include "trigsturm/prover.hpp"
#include "trigsturm/sturm.hpp"
#include "trigsturm/trig.hpp"

namespace trigsturm {

struct ParamFamily {
  TrigPoly base;
  TrigPoly direction;

  TrigPoly at(const Rational& a) const { return base + direction.scaled(SurdExpr(a)); }
};

enum class EndpointKind { endpoint_constraint, discriminant, degree_drop, unbounded };

inline const char* to_string(EndpointKind k) {
  switch (k) {
    case EndpointKind::endpoint_constraint: return "endpoint_constraint";
    case EndpointKind::discriminant: return "discriminant";
    case EndpointKind::degree_drop: return "degree_drop";
    case EndpointKind::unbounded: return "unbounded";
  }
  return "?";
}

/// A real number given by a defining polynomial and an isolating box; the
/// box is degenerate when the value is rational.
struct AlgebraicEndpoint {
  Poly defining;
  RootBox box;

  bool is_rational() const { return box.is_exact(); }
  Rational approx() const { return (box.lo + box.hi) / 2; }
  std::string decimal(unsigned digits = 10) const { return to_decimal(approx(), digits); }
};

struct Breakpoint {
  AlgebraicEndpoint value;
  EndpointKind kind = EndpointKind::discriminant;  // most significant origin
  bool from_endpoint = false;
  bool from_discriminant = false;
  bool from_degree_drop = false;

  void refresh_kind() {
    kind = from_endpoint       ? EndpointKind::endpoint_constraint
           : from_discriminant ? EndpointKind::discriminant
                               : EndpointKind::degree_drop;
  }
};

struct CellTest {
  Rational sample;
  Status status = Status::nonnegative;
};

struct ParamInterval {
  std::optional<AlgebraicEndpoint> lo;  // absent when unbounded
  std::optional<AlgebraicEndpoint> hi;
  EndpointKind lo_kind = EndpointKind::unbounded;
  EndpointKind hi_kind = EndpointKind::unbounded;
  std::vector<Breakpoint> breakpoints;
  std::vector<CellTest> tested;
};

inline Rational default_endpoint_width() { return make_rational(1, 1000000000); }

/// X(y; a) = X0(y) + a X1(y): the sine part A for sine families, the cosine
/// part B for cosine families.
inline std::pair<Poly, Poly> family_polys(const ParamFamily& f) {
  if (!f.base.is_rational() || !f.direction.is_rational())
    throw std::domain_error("parameter families need rational coefficients");
  const bool sine = f.base.has_sin_part() || f.direction.has_sin_part();
  const bool cosine = f.base.has_cos_part() || f.direction.has_cos_part();
  if (sine && cosine) throw std::domain_error("parameter families must be pure sine or pure cosine");
  const Expansion eb = expand(f.base), ed = expand(f.direction);
  Poly x0 = *to_rational(sine ? eb.sin_part : eb.cos_part);
  Poly x1 = *to_rational(sine ? ed.sin_part : ed.cos_part);
  if (x1.is_zero()) throw std::domain_error("family does not depend on the parameter");
  return {std::move(x0), std::move(x1)};
}

namespace detail {

/// Shrinks an algebraic box until it excludes x, or collapses it onto x when
/// x is its root.
inline void separate_from(Breakpoint& bp, const SturmChain& chain, const Rational& x) {
  while (!bp.value.box.is_exact() && bp.value.box.contains(x)) {
    if (chain.sign_of_base_at(x) == 0) {
      bp.value.box = {x, x};
      return;
    }
    bp.value.box = refine_root_box(chain, bp.value.box);
  }
}

inline Rational cauchy_bound(const Poly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 1;
}

}  // namespace detail

/// Sorted candidate endpoints with pairwise disjoint boxes.
inline std::vector<Breakpoint> breakpoints(const ParamFamily& f, const YInterval& iv,
                                           const Rational& width = default_endpoint_width()) {
  const auto [x0, x1] = family_polys(f);
  std::vector<Breakpoint> rational;
  auto add_rational = [&](const Rational& r, int origin) {
    auto it = std::find_if(rational.begin(), rational.end(), [&](const Breakpoint& b) { return b.value.box.lo == r; });
    if (it == rational.end()) {
      rational.push_back({{Poly{Rational(-r), Rational(1)}, {r, r}}});
      it = rational.end() - 1;
    }
    if (origin == 0) it->from_endpoint = true;
    if (origin == 1) it->from_discriminant = true;
    if (origin == 2) it->from_degree_drop = true;
    it->refresh_kind();
  };

  for (const Rational& e : {iv.lo, iv.hi}) {
    const Rational s = x1(e);
    if (s != 0) add_rational(Rational(-x0(e) / s), 0);
  }
  const int deg = std::max(x0.degree(), x1.degree());
  if (x1[static_cast<std::size_t>(deg)] != 0)
    add_rational(Rational(-x0[static_cast<std::size_t>(deg)] / x1[static_cast<std::size_t>(deg)]), 2);

  std::vector<Breakpoint> algebraic;
  std::optional<SturmChain> disc_chain;
  const Poly disc = deg >= 1 ? disc_affine_family(x0, x1) : Poly{};
  if (disc.degree() >= 1) {
    const Poly sf = gcd_squarefree(disc).squarefree;
    if (sf.degree() >= 1) {
      disc_chain.emplace(sf);
      const Rational bound = detail::cauchy_bound(sf);
      for (const auto& box : isolate_roots(*disc_chain, -bound, bound, width)) {
        Breakpoint bp{{sf, box}};
        bp.from_discriminant = true;
        bp.refresh_kind();
        algebraic.push_back(std::move(bp));
      }
    }
  }

  std::vector<Breakpoint> out;
  for (auto& bp : algebraic) {
    for (auto& r : rational) detail::separate_from(bp, *disc_chain, r.value.box.lo);
    if (bp.value.is_rational()) {
      add_rational(bp.value.box.lo, 1);
      continue;
    }
    out.push_back(std::move(bp));
  }
  for (auto& r : rational) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.value.box.lo < b.value.box.lo; });
  return out;
}

/// Whether X(y; a) >= 0 on iv for rational a.
inline Status test_parameter(const Poly& x0, const Poly& x1, const Rational& a, const YInterval& iv) {
  return decide_poly_nonneg(x0 + x1.scaled(a), iv).verdict.status;
}

/// Closure of the union of nonnegative cells around seed.
inline ParamInterval maximal_interval(const ParamFamily& f, const YInterval& iv, const Rational& seed,
                                      const Rational& width = default_endpoint_width()) {
  const auto [x0, x1] = family_polys(f);
  if (test_parameter(x0, x1, seed, iv) != Status::nonnegative)
    throw std::domain_error("seed parameter is not nonnegative on the interval");
  ParamInterval out;
  out.breakpoints = breakpoints(f, iv, width);
  auto& bps = out.breakpoints;
  for (auto& bp : bps) {
    if (bp.value.is_rational() || !bp.value.box.contains(seed)) continue;
    SturmChain chain(bp.value.defining);
    detail::separate_from(bp, chain, seed);
  }

  const std::size_t n = bps.size();
  // cell k lies between bps[k-1] and bps[k]; cells 0 and n are unbounded
  auto sample = [&](std::size_t k) -> Rational {
    if (n == 0) return seed;
    if (k == 0) return bps.front().value.box.lo - 1;
    if (k == n) return bps.back().value.box.hi + 1;
    return (bps[k - 1].value.box.hi + bps[k].value.box.lo) / 2;
  };
  std::vector<std::optional<bool>> cache(n + 1);
  auto passes = [&](std::size_t k) {
    if (!cache[k]) {
      const Rational s = sample(k);
      const Status st = test_parameter(x0, x1, s, iv);
      out.tested.push_back({s, st});
      cache[k] = st == Status::nonnegative;
    }
    return *cache[k];
  };

  // locate seed: inside cell c, or exactly on a rational breakpoint
  std::optional<std::size_t> on_bp;
  std::size_t cell = 0;
  while (cell < n && bps[cell].value.box.hi < seed) ++cell;
  if (cell < n && bps[cell].value.box.contains(seed)) on_bp = cell;

  std::size_t right_cell, left_cell;
  bool right_open, left_open;
  if (on_bp) {
    right_open = passes(*on_bp + 1);
    right_cell = *on_bp + 1;
    left_open = passes(*on_bp);
    left_cell = *on_bp;
  } else {
    right_open = left_open = true;
    right_cell = left_cell = cell;
  }
  std::size_t hi_index, lo_index;
  bool hi_unbounded = false, lo_unbounded = false;
  if (right_open) {
    std::size_t k = right_cell;
    while (k < n && passes(k + 1)) ++k;
    hi_unbounded = k == n;
    hi_index = k;
  } else {
    hi_index = *on_bp;
  }
  if (left_open) {
    std::size_t k = left_cell;
    while (k > 0 && passes(k - 1)) --k;
    lo_unbounded = k == 0;
    lo_index = k == 0 ? 0 : k - 1;
  } else {
    lo_index = *on_bp;
  }
  if (!hi_unbounded) {
    out.hi = bps[hi_index].value;
    out.hi_kind = bps[hi_index].kind;
  }
  if (!lo_unbounded) {
    out.lo = bps[lo_index].value;
    out.lo_kind = bps[lo_index].kind;
  }
  return out;
}

/// A rational parameter value whose family member is nonnegative on iv, if
/// any: tries every cell sample and every rational breakpoint.
inline std::optional<Rational> find_seed(const ParamFamily& f, const YInterval& iv) {
  const auto [x0, x1] = family_polys(f);
  const auto bps = breakpoints(f, iv);
  std::vector<Rational> candidates;
  if (bps.empty()) candidates.emplace_back(0);
  for (std::size_t k = 0; k <= bps.size() && !bps.empty(); ++k) {
    if (k == 0)
      candidates.push_back(bps.front().value.box.lo - 1);
    else if (k == bps.size())
      candidates.push_back(bps.back().value.box.hi + 1);
    else
      candidates.push_back((bps[k - 1].value.box.hi + bps[k].value.box.lo) / 2);
  }
  for (const auto& bp : bps)
    if (bp.value.is_rational()) candidates.push_back(bp.value.box.lo);
  for (const auto& c : candidates)
    if (test_parameter(x0, x1, c, iv) == Status::nonnegative) return c;
  return std::nullopt;
}

}  // namespace trigsturm

#endif  // TRIGSTURM_PARAMSOLVE_HPP
