#ifndef TRIGSTURM_REPORT_HPP
#define TRIGSTURM_REPORT_HPP

// Proof reports: structured (JSON) and text output, loading, and an
// independent re-check of every sign claim in a certificate.
//
// Every number in the structured form is an exact decimal-digit string,
// "n" or "n/d". Surd values are lists of [radicand, coefficient] pairs with
// radicand 1 for the rational part.

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trigsturm/exactnum.hpp"
#include "trigsturm/parser.hpp"
#include "trigsturm/poly.hpp"
#include "trigsturm/prover.hpp"
#include "trigsturm/sturm.hpp"
#include "trigsturm/trig.hpp"

namespace trigsturm {

inline constexpr const char* kReportSchema = "trigsturm.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct ProofReport {
  std::string input;
  TrigPoly normalized;
  Decision decision;
  double elapsed_ms = 0;
  std::string tool_version = kToolVersion;
};

/// Parses, proves and times one input.
inline ProofReport make_report(const std::string& input, const XInterval& iv = XInterval::full(),
                               const ProveOptions& opt = {}) {
  ProofReport r;
  r.input = input;
  r.normalized = parse_trig(input);
  const auto start = std::chrono::steady_clock::now();
  r.decision = prove(r.normalized, iv, opt);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace json_io {

using nlohmann::json;

inline json num(const Rational& r) { return r.get_str(); }

inline Rational rat(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected an exact number string");
  const std::string s = j.get<std::string>();
  if (s.find_first_of(".eE") != std::string::npos) throw std::invalid_argument("decimal in exact field: " + s);
  return parse_rational(s);
}

inline json num(const SurdExpr& v) {
  json out = json::array();
  for (const auto& [d, c] : v.terms()) out.push_back(json::array({std::to_string(d), num(c)}));
  return out;
}

inline SurdExpr surd(const json& j) {
  SurdExpr out;
  for (const auto& pair : j) {
    const std::uint64_t d = std::stoull(pair.at(0).get<std::string>());
    if (!SurdExpr::is_squarefree(d)) throw std::invalid_argument("radicand is not squarefree");
    out += SurdExpr::term(d, rat(pair.at(1)));
  }
  return out;
}

template <class C>
json poly(const Polynomial<C>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(num(c));
  return out;
}

inline Poly rpoly(const json& j) {
  std::vector<Rational> cs;
  for (const auto& c : j) cs.push_back(rat(c));
  return Poly(std::move(cs));
}

inline SurdPoly spoly(const json& j) {
  std::vector<SurdExpr> cs;
  for (const auto& c : j) cs.push_back(surd(c));
  return SurdPoly(std::move(cs));
}

inline json trig(const TrigPoly& t) {
  json c = json::array(), s = json::array();
  for (std::size_t k = 1; k <= t.degree(); ++k) {
    c.push_back(num(t.cos_coeff(k)));
    s.push_back(num(t.sin_coeff(k)));
  }
  return {{"a0", num(t.a0())}, {"cos", c}, {"sin", s}};
}

inline TrigPoly trig_from(const json& j) {
  TrigPoly t = TrigPoly::constant(surd(j.at("a0")));
  const auto& c = j.at("cos");
  const auto& s = j.at("sin");
  for (std::size_t k = 0; k < c.size(); ++k) t = t + TrigPoly::cos_term(k + 1, surd(c[k]));
  for (std::size_t k = 0; k < s.size(); ++k) t = t + TrigPoly::sin_term(k + 1, surd(s[k]));
  return t;
}

inline json box(const RootBox& b) { return json::array({num(b.lo), num(b.hi)}); }
inline RootBox box_from(const json& j) { return {rat(j.at(0)), rat(j.at(1))}; }

inline Status status_from(const std::string& s) {
  if (s == "nonnegative") return Status::nonnegative;
  if (s == "negative") return Status::negative;
  if (s == "inconclusive") return Status::inconclusive;
  throw std::invalid_argument("unknown status " + s);
}

inline CertificateKind kind_from(const std::string& s) {
  for (auto k : {CertificateKind::poly, CertificateKind::cp, CertificateKind::sp, CertificateKind::mixed,
                 CertificateKind::pfloor})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown certificate kind " + s);
}

inline json certificate(const Certificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["x_interval_over_pi"] = json::array({num(c.x_interval.lo_q), num(c.x_interval.hi_q)});
  j["cover"] = c.cover == CoverMode::exact ? "exact" : "outer";
  j["inner"] = c.inner ? json::array({num(c.inner->lo), num(c.inner->hi)}) : json(nullptr);
  j["cos_part"] = poly(c.cos_part);
  j["sin_part"] = poly(c.sin_part);
  j["analyzed"] = poly(c.analyzed);
  j["interval"] = json::array({num(c.lo), num(c.hi)});
  json chain = json::array();
  for (const auto& p : c.chain) chain.push_back(poly(p));
  j["chain"] = chain;
  j["endpoint_signs"] = json::array({c.endpoint_signs[0], c.endpoint_signs[1]});
  j["endpoint_variations"] = json::array({c.endpoint_variations[0], c.endpoint_variations[1]});
  json boxes = json::array();
  for (const auto& b : c.root_boxes) boxes.push_back(box(b));
  j["root_boxes"] = boxes;
  json samples = json::array();
  for (const auto& s : c.samples) samples.push_back({{"point", num(s.point)}, {"sign", s.sign}});
  j["samples"] = samples;
  if (c.pfloor) {
    const auto& pf = *c.pfloor;
    j["pfloor"] = {{"m", pf.m},
                   {"stripped_z", pf.stripped_z},
                   {"p", poly(pf.p)},
                   {"q", poly(pf.q)},
                   {"difference_signs", pf.difference_signs},
                   {"rational_coefficients", pf.rational_coefficients}};
  } else {
    j["pfloor"] = nullptr;
  }
  j["notes"] = c.notes;
  return j;
}

inline Certificate certificate_from(const json& j) {
  Certificate c;
  c.kind = kind_from(j.at("kind").get<std::string>());
  const auto& xi = j.at("x_interval_over_pi");
  c.x_interval = XInterval(rat(xi.at(0)), rat(xi.at(1)));
  c.cover = j.at("cover").get<std::string>() == "exact" ? CoverMode::exact : CoverMode::outer;
  if (!j.at("inner").is_null()) c.inner = YInterval(rat(j["inner"].at(0)), rat(j["inner"].at(1)));
  c.cos_part = spoly(j.at("cos_part"));
  c.sin_part = spoly(j.at("sin_part"));
  c.analyzed = rpoly(j.at("analyzed"));
  c.lo = rat(j.at("interval").at(0));
  c.hi = rat(j.at("interval").at(1));
  for (const auto& p : j.at("chain")) c.chain.push_back(rpoly(p));
  c.endpoint_signs = {j.at("endpoint_signs").at(0).get<std::vector<int>>(),
                      j.at("endpoint_signs").at(1).get<std::vector<int>>()};
  c.endpoint_variations = {j.at("endpoint_variations").at(0).get<std::size_t>(),
                           j.at("endpoint_variations").at(1).get<std::size_t>()};
  for (const auto& b : j.at("root_boxes")) c.root_boxes.push_back(box_from(b));
  for (const auto& s : j.at("samples")) c.samples.push_back({rat(s.at("point")), s.at("sign").get<int>()});
  if (!j.at("pfloor").is_null()) {
    const auto& p = j["pfloor"];
    PfloorData pf;
    pf.m = p.at("m").get<unsigned>();
    pf.stripped_z = p.at("stripped_z").get<std::size_t>();
    pf.p = spoly(p.at("p"));
    pf.q = rpoly(p.at("q"));
    pf.difference_signs = p.at("difference_signs").get<std::vector<int>>();
    pf.rational_coefficients = p.at("rational_coefficients").get<std::vector<std::size_t>>();
    c.pfloor = std::move(pf);
  }
  c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

}  // namespace json_io

inline nlohmann::json to_json(const ProofReport& r) {
  using namespace json_io;
  const auto& v = r.decision.verdict;
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = r.tool_version;
  j["input"] = r.input;
  j["normalized"] = trig(r.normalized);
  j["normalized_text"] = render(r.normalized);
  j["verdict"] = {{"status", to_string(v.status)}, {"witness_y", v.witness ? num(*v.witness) : json(nullptr)}};
  if (v.witness) j["verdict"]["witness_y_decimal"] = to_decimal(*v.witness, 12);
  j["certificate"] = certificate(r.decision.certificate);
  j["timing_ms"] = r.elapsed_ms;
  return j;
}

inline ProofReport report_from_json(const nlohmann::json& j) {
  using namespace json_io;
  if (j.at("schema").get<std::string>() != kReportSchema)
    throw std::invalid_argument("unsupported report schema " + j.at("schema").get<std::string>());
  ProofReport r;
  r.tool_version = j.at("tool_version").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.normalized = trig_from(j.at("normalized"));
  r.decision.verdict.status = status_from(j.at("verdict").at("status").get<std::string>());
  if (!j["verdict"].at("witness_y").is_null()) r.decision.verdict.witness = rat(j["verdict"]["witness_y"]);
  r.decision.certificate = certificate_from(j.at("certificate"));
  r.elapsed_ms = j.value("timing_ms", 0.0);
  return r;
}

inline std::string to_text(const ProofReport& r) {
  const auto& c = r.decision.certificate;
  const auto& v = r.decision.verdict;
  std::ostringstream out;
  out << "input:      " << r.input << "\n";
  out << "normalized: " << render(r.normalized) << "\n";
  out << "x-interval: [" << to_string(c.x_interval.lo_q) << "*pi, " << to_string(c.x_interval.hi_q) << "*pi]\n";
  out << "method:     " << to_string(c.kind) << (c.cover == CoverMode::outer ? " (outer y-cover)" : "") << "\n";
  if (!c.cos_part.is_zero()) out << "B(y) =      " << c.cos_part.to_string("y") << "\n";
  if (!c.sin_part.is_zero()) out << "A(y) =      " << c.sin_part.to_string("y") << "\n";
  if (c.pfloor) {
    out << "m =         " << c.pfloor->m << "\n";
    out << "P(z) =      " << c.pfloor->p.to_string("z") << "   (z = y + 1, z^" << c.pfloor->stripped_z
        << " removed)\n";
    out << "Q(z) =      " << c.pfloor->q.to_string("z") << "\n";
  }
  const char* var = c.kind == CertificateKind::pfloor ? "z" : "y";
  out << "interval:   [" << to_string(c.lo) << ", " << to_string(c.hi) << "] in " << var << "\n";
  out << "chain:      " << c.chain.size() << " polynomials, variations " << c.endpoint_variations[0] << " -> "
      << c.endpoint_variations[1] << "\n";
  out << "root boxes: " << c.root_boxes.size() << "\n";
  for (const auto& b : c.root_boxes)
    out << "  [" << to_string(b.lo) << ", " << to_string(b.hi) << "]  ~ " << to_decimal((b.lo + b.hi) / 2, 9) << "\n";
  out << "samples:    ";
  for (std::size_t i = 0; i < c.samples.size(); ++i)
    out << (i ? ", " : "") << to_decimal(c.samples[i].point, 6) << (c.samples[i].sign < 0 ? "(-)" : c.samples[i].sign > 0 ? "(+)" : "(0)");
  out << "\n";
  for (const auto& n : c.notes) out << "note:       " << n << "\n";
  out << "verdict:    " << to_string(v.status);
  if (v.witness) out << " at y = " << to_string(*v.witness) << " ~ " << to_decimal(*v.witness, 9);
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Independent verification
// ---------------------------------------------------------------------------

struct VerifyResult {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

namespace detail {

/// -1, 0, 1 for bound <=> cos(q pi), refining enclosures as needed.
inline int compare_with_cos_pi(const Rational& bound, const Rational& q) {
  if (auto c = exact_cos_pi(q); c && c->is_rational()) return sign(Rational(bound - c->rational_part()));
  for (unsigned bits = 20; bits <= 400; bits += 20) {
    const Enclosure e = cos_pi_enclosure(q, Rational(1, 1) / Rational(pow2_int(bits)));
    if (bound < e.lo) return -1;
    if (bound > e.hi) return 1;
  }
  throw std::runtime_error("cannot separate a bound from cos(q pi)");
}

}  // namespace detail

/// Recomputes every claim of the certificate from its exact data: the
/// expansion, the reduction to the analyzed polynomial, the y-interval, the
/// Sturm chain relations, endpoint signs, root boxes, gap samples, and the
/// pfloor domination. Does not call the prover.
inline VerifyResult verify(const ProofReport& r) {
  VerifyResult res;
  auto fail = [&](std::string m) { res.problems.push_back(std::move(m)); };
  const auto& c = r.decision.certificate;
  const auto& v = r.decision.verdict;
  const TrigPoly& t = r.normalized;

  if (t.is_zero()) {
    if (v.status != Status::nonnegative) fail("zero polynomial must be nonnegative");
    return res;
  }

  // expansion
  const Expansion e = expand(t);
  if (!(e.cos_part == c.cos_part)) fail("cos part does not match the expansion");
  if (!(e.sin_part == c.sin_part)) fail("sin part does not match the expansion");
  const bool sine = t.has_sin_part(), cosine = t.has_cos_part();

  // the polynomial whose roots carry every sign change of the target
  SurdPoly target;
  switch (c.kind) {
    case CertificateKind::poly: fail("poly certificates carry no trigonometric claim"); return res;
    case CertificateKind::cp:
    case CertificateKind::sp: {
      if (!t.is_rational() || (sine && cosine) || (c.kind == CertificateKind::sp) != sine)
        fail("cp/sp kind does not fit the input");
      target = sine ? e.sin_part : e.cos_part;
      if (!(to_surd(c.analyzed) == target)) fail("analyzed polynomial is not the expansion part");
      break;
    }
    case CertificateKind::mixed: {
      const auto a = to_rational(e.sin_part), b = to_rational(e.cos_part);
      if (!a || !b) {
        fail("mixed certificate needs rational coefficients");
        return res;
      }
      if (!(c.analyzed == squared_resolvent(*a, *b))) fail("analyzed polynomial is not A^2 (1 - y^2) - B^2");
      break;
    }
    case CertificateKind::pfloor: {
      if (!c.pfloor) {
        fail("pfloor certificate without pfloor data");
        return res;
      }
      if (sine && cosine) fail("pfloor path needs a pure sine or cosine input");
      target = sine ? e.sin_part : e.cos_part;
      const auto& pf = *c.pfloor;
      SurdPoly shifted = target.shifted(Rational(-1));
      SurdPoly rebuilt = pf.p * SurdPoly::monomial(SurdExpr(1L), pf.stripped_z);
      if (!(rebuilt == shifted)) fail("P(z) z^s does not reproduce the shifted expansion");
      if (!(c.analyzed == pf.q)) fail("analyzed polynomial is not Q");
      if (c.lo < 0) fail("z-interval must be nonnegative for coefficient domination");
      for (std::size_t i = 0; i < pf.p.size(); ++i) {
        const int s = surd_sign(pf.p.coeffs()[i] - SurdExpr(pf.q[i]));
        if (s < 0 && v.status == Status::nonnegative) fail("P - Q has a negative coefficient at z^" + std::to_string(i));
      }
      if (pf.q.degree() > pf.p.degree()) fail("Q has higher degree than P");
      break;
    }
  }

  // y-interval covers the image of the x-interval
  const Rational off = c.kind == CertificateKind::pfloor ? Rational(1) : Rational(0);
  const Rational ylo = c.lo - off, yhi = c.hi - off;
  if (c.cover == CoverMode::exact) {
    if (detail::compare_with_cos_pi(ylo, c.x_interval.hi_q) != 0 || detail::compare_with_cos_pi(yhi, c.x_interval.lo_q) != 0)
      fail("exact y-interval is not the image of the x-interval");
  } else {
    if (detail::compare_with_cos_pi(ylo, c.x_interval.hi_q) > 0 || detail::compare_with_cos_pi(yhi, c.x_interval.lo_q) < 0)
      fail("outer y-interval does not contain the image of the x-interval");
    if (c.inner && (detail::compare_with_cos_pi(c.inner->lo, c.x_interval.hi_q) < 0 ||
                    detail::compare_with_cos_pi(c.inner->hi, c.x_interval.lo_q) > 0))
      fail("inner y-interval is not inside the image");
  }

  if (v.status == Status::inconclusive) return res;  // nothing claimed
  if (c.analyzed.is_zero()) {
    if (c.kind != CertificateKind::mixed) fail("zero analyzed polynomial");
    return res;
  }

  // Sturm chain relations
  const auto& ch = c.chain;
  if (c.analyzed.degree() >= 1) {
    const Poly sqf = divrem(c.analyzed, gcd(c.analyzed, c.analyzed.derivative())).quotient;
    if (ch.size() < 2 || !(ch[0] == sqf) || !(ch[1] == sqf.derivative())) {
      fail("chain does not start with the squarefree part of p and its derivative");
      return res;
    }
    for (std::size_t i = 2; i < ch.size(); ++i)
      if (!(ch[i] == -divrem(ch[i - 2], ch[i - 1]).remainder)) fail("chain element " + std::to_string(i) + " is not a negated remainder");
    if (!divrem(ch[ch.size() - 2], ch.back()).remainder.is_zero()) fail("chain does not end at the gcd");
  } else if (!ch.empty()) {
    fail("constant polynomial with a chain");
  }

  auto chain_signs = [&](const Rational& x) {
    std::vector<int> s;
    for (const auto& p : ch) s.push_back(sign(p(x)));
    return s;
  };
  auto variations = [&](const Rational& x) {
    auto s = chain_signs(x);
    return sign_changes(std::span<const int>(s));
  };
  if (!ch.empty()) {
    if (chain_signs(c.lo) != c.endpoint_signs[0] || chain_signs(c.hi) != c.endpoint_signs[1])
      fail("endpoint sign sequences do not match");
    if (variations(c.lo) != c.endpoint_variations[0] || variations(c.hi) != c.endpoint_variations[1])
      fail("endpoint variation counts do not match");
    if (c.endpoint_variations[0] - c.endpoint_variations[1] != c.root_boxes.size())
      fail("number of root boxes differs from the Sturm count");
  } else if (!c.root_boxes.empty()) {
    fail("root boxes for a constant polynomial");
  }

  // boxes: inside (lo, hi], disjoint, one root each
  for (std::size_t i = 0; i < c.root_boxes.size(); ++i) {
    const auto& b = c.root_boxes[i];
    if (b.lo < c.lo || b.hi > c.hi || b.hi < b.lo) fail("root box outside the interval");
    if (b.is_exact()) {
      if (c.analyzed(b.lo) != 0 || b.lo == c.lo) fail("degenerate root box is not an interior root");
    } else if (variations(b.lo) - variations(b.hi) != 1) {
      fail("root box does not hold exactly one root");
    }
    if (i > 0 && !(c.root_boxes[i - 1].hi < b.lo)) fail("root boxes overlap");
  }

  // samples: lo, hi and a point in every gap, signs recomputed
  std::function<int(const Rational&)> object_sign;
  if (c.kind == CertificateKind::mixed) {
    const Poly a = *to_rational(e.sin_part), b = *to_rational(e.cos_part);
    object_sign = [a, b](const Rational& y) { return exact_sign_mixed(a, b, y); };
  } else {
    const Poly q = c.analyzed;
    object_sign = [q](const Rational& x) { return sign(q(x)); };
  }
  auto sampled = [&](const Rational& l, const Rational& h, bool closed) {
    for (const auto& s : c.samples)
      if (closed ? (l <= s.point && s.point <= h) : (l < s.point && s.point < h)) return true;
    return false;
  };
  if (!sampled(c.lo, c.lo, true) || !sampled(c.hi, c.hi, true)) fail("interval endpoints not sampled");
  Rational prev = c.lo;
  for (const auto& b : c.root_boxes) {
    if (prev < b.lo && !sampled(prev, b.lo, false)) fail("gap without a sample");
    prev = b.hi;
  }
  if (prev < c.hi && !sampled(prev, c.hi, false)) fail("gap without a sample");
  for (const auto& s : c.samples) {
    if (s.point < c.lo || s.point > c.hi) fail("sample outside the interval");
    if (object_sign(s.point) != s.sign) fail("sample sign mismatch at " + to_string(s.point));
  }

  if (v.status == Status::nonnegative) {
    for (const auto& s : c.samples)
      if (s.sign < 0) fail("negative sample under a nonnegative verdict");
  } else {
    if (!v.witness) {
      fail("negative verdict without a witness");
      return res;
    }
    const Rational& w = *v.witness;
    int s;
    if (c.kind == CertificateKind::mixed) {
      s = object_sign(w);
    } else if (c.kind == CertificateKind::pfloor) {
      s = surd_sign(target(w));
    } else {
      s = sign(c.analyzed(w));
    }
    if (s >= 0) fail("witness is not negative");
    const bool inside = c.cover == CoverMode::exact ? (ylo <= w && w <= yhi) : (c.inner && c.inner->contains(w));
    if (!inside) fail("witness is not inside the certified image");
  }
  return res;
}

}  // namespace trigsturm

#endif  // TRIGSTURM_REPORT_HPP
