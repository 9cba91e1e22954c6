// trigsturm: command-line front end.
//
//   trigsturm prove   "7/5 + cos(x) + sin(x) + 2*sin(2x) + sin(3x)"
//   trigsturm expand  "5 + 4*cos(x) + 3*cos(2x) + 4*cos(3x)"
//   trigsturm count   "4*sin(x) + 3*sin(2x)" --xlo 0 --xhi pi/2
//   trigsturm isolate "..." --width 1/1000000
//   trigsturm pfloor  "sin(x) + sin(2x)/2 + (sin(3x) + 3*sin(4x)/4)/sqrt(2)" --m 2
//   trigsturm param   "2*sin(x) + sin(2x) + a*sin(3x)"
//   trigsturm repro
//   trigsturm check   report.json
//
// Exit codes: 0 nonnegative / success, 1 negative (or a failed check),
// 2 inconclusive, 3 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigsturm/trigsturm.hpp"

namespace {

using namespace trigsturm;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Flags {
  std::string expr;
  std::string xlo = "0";
  std::string xhi = "pi";
  std::optional<unsigned> m;
  std::string width = "1/1000000";
  std::string cover_width = "1/1000000";
  std::string format = "text";
  std::optional<std::string> seed;
  std::string file;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

XInterval x_interval(const Flags& f) {
  const Rational lo = parse_pi_multiple(f.xlo), hi = parse_pi_multiple(f.xhi);
  if (!(0 <= lo && lo < hi && hi <= 1)) throw UsageError("need 0 <= xlo < xhi <= pi");
  return {lo, hi};
}

Rational positive_rational(const std::string& s, const char* what) {
  Rational r;
  try {
    r = parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("malformed ") + what + ": " + s);
  }
  if (r <= 0) throw UsageError(std::string(what) + " must be positive");
  return r;
}

ProveOptions options(const Flags& f) {
  ProveOptions o;
  o.m = f.m;
  o.isolation_width = positive_rational(f.width, "--width");
  o.cover_width = positive_rational(f.cover_width, "--cover-width");
  return o;
}

int exit_code(Status s) {
  switch (s) {
    case Status::nonnegative: return kExitOk;
    case Status::negative: return kExitNegative;
    case Status::inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

bool structured(const Flags& f) { return f.format == "structured"; }

/// The rational polynomial whose roots govern the sign: B, A, or
/// A^2 (1 - y^2) - B^2.
Poly associated_poly(const TrigPoly& t) {
  if (!t.is_rational()) throw UsageError("count/isolate need rational coefficients (use pfloor)");
  const Expansion e = expand(t);
  const Poly a = *to_rational(e.sin_part), b = *to_rational(e.cos_part);
  if (t.has_cos_part() && t.has_sin_part()) return squared_resolvent(a, b);
  return t.has_sin_part() ? a : b;
}

YInterval y_interval(const XInterval& iv, const Flags& f) {
  if (iv.exact_endpoints()) return x_to_y(iv, CoverMode::exact);
  return x_to_y(iv, CoverMode::outer, positive_rational(f.cover_width, "--cover-width"));
}

int cmd_prove(const Flags& f) {
  const ProofReport r = make_report(f.expr, x_interval(f), options(f));
  if (structured(f))
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return exit_code(r.decision.verdict.status);
}

int cmd_expand(const Flags& f) {
  const TrigPoly t = parse_trig(f.expr);
  const Expansion e = expand(t);
  if (structured(f)) {
    std::cout << json{{"input", f.expr},
                      {"normalized", json_io::trig(t)},
                      {"cos_part", json_io::poly(e.cos_part)},
                      {"sin_part", json_io::poly(e.sin_part)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "B(y) = " << e.cos_part.to_string("y") << "\n";
    std::cout << "A(y) = " << e.sin_part.to_string("y") << "\n";
    std::cout << "t = B(cos x) + sin(x) A(cos x)\n";
  }
  return kExitOk;
}

int cmd_count(const Flags& f, bool boxes) {
  const TrigPoly t = parse_trig(f.expr);
  const Poly p = associated_poly(t);
  const YInterval y = y_interval(x_interval(f), f);
  if (p.is_zero()) throw UsageError("associated polynomial is identically zero");
  // closed interval [lo, hi]: (lo, hi] plus a root at lo
  const bool root_at_lo = p(y.lo) == 0;
  std::vector<RootBox> found;
  if (root_at_lo) found.push_back({y.lo, y.lo});
  if (p.degree() >= 1) {
    auto rest = isolate_roots(p, y.lo, y.hi, positive_rational(f.width, "--width"));
    found.insert(found.end(), rest.begin(), rest.end());
  }
  if (structured(f)) {
    json j{{"polynomial", json_io::poly(p)},
           {"y_interval", {json_io::num(y.lo), json_io::num(y.hi)}},
           {"distinct_roots", found.size()}};
    if (boxes) {
      j["root_boxes"] = json::array();
      for (const auto& b : found) j["root_boxes"].push_back(json_io::box(b));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "polynomial: " << p.to_string("y") << "\n";
    std::cout << "y-interval: [" << to_string(y.lo) << ", " << to_string(y.hi) << "]\n";
    std::cout << "distinct roots: " << found.size() << "\n";
    if (boxes)
      for (const auto& b : found)
        std::cout << "  [" << to_string(b.lo) << ", " << to_string(b.hi) << "]  ~ " << to_decimal((b.lo + b.hi) / 2, 12)
                  << "\n";
  }
  return kExitOk;
}

int cmd_pfloor(const Flags& f) {
  const TrigPoly t = parse_trig(f.expr);
  if (t.has_cos_part() && t.has_sin_part()) throw UsageError("pfloor needs a pure sine or pure cosine polynomial");
  const Expansion e = expand(t);
  SurdPoly p = (t.has_sin_part() ? e.sin_part : e.cos_part).shifted(Rational(-1));
  std::size_t stripped = 0;
  while (!p.is_zero() && p.coeffs().front().is_zero()) {
    p = *p.divided_by_power_of_variable(1);
    ++stripped;
  }
  const unsigned m = f.m.value_or(2);
  const Poly q = pfloor(p, m);
  if (structured(f)) {
    std::cout << json{{"m", m}, {"stripped_z", stripped}, {"p", json_io::poly(p)}, {"q", json_io::poly(q)}}.dump(2)
              << "\n";
  } else {
    std::cout << "P(z) = " << p.to_string("z") << "   (z = y + 1, z^" << stripped << " removed)\n";
    std::cout << "Q(z) = " << q.to_string("z") << "   (m = " << m << ")\n";
  }
  return kExitOk;
}

json endpoint_json(const std::optional<AlgebraicEndpoint>& e, EndpointKind kind) {
  if (!e) return nullptr;
  return {{"kind", to_string(kind)},
          {"defining", json_io::poly(e->defining)},
          {"box", json_io::box(e->box)},
          {"decimal", e->decimal(12)}};
}

std::string endpoint_text(const std::optional<AlgebraicEndpoint>& e, EndpointKind kind, bool upper) {
  if (!e) return upper ? "+inf" : "-inf";
  std::string s = e->is_rational() ? to_string(e->box.lo) : "~" + e->decimal(12);
  s += " (" + std::string(to_string(kind));
  if (!e->is_rational())
    s += "; root of " + e->defining.to_string("a") + " in [" + to_string(e->box.lo) + ", " + to_string(e->box.hi) + "]";
  return s + ")";
}

int cmd_param(const Flags& f) {
  const ExprAst ast = parse(f.expr);
  if (!ast.has_parameter()) throw UsageError("expression has no parameter a");
  const XInterval iv = x_interval(f);
  if (!iv.exact_endpoints()) throw UsageError("param needs interval endpoints with rational cosine");
  const YInterval y = x_to_y(iv, CoverMode::exact);
  const ParamFamily fam = ast.family();
  std::optional<Rational> seed;
  if (f.seed)
    seed = parse_rational(*f.seed);
  else
    seed = find_seed(fam, y);
  if (!seed) {
    std::cout << (structured(f) ? json{{"input", f.expr}, {"interval", nullptr}}.dump(2) : "no parameter value is nonnegative")
              << "\n";
    return kExitNegative;
  }
  const ParamInterval r = maximal_interval(fam, y, *seed);
  if (structured(f)) {
    json j{{"input", f.expr},
           {"family", render(ast)},
           {"seed", json_io::num(*seed)},
           {"lo", endpoint_json(r.lo, r.lo_kind)},
           {"hi", endpoint_json(r.hi, r.hi_kind)}};
    j["tested"] = json::array();
    for (const auto& c : r.tested) j["tested"].push_back({{"a", json_io::num(c.sample)}, {"status", to_string(c.status)}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family: " << render(ast) << "\n";
    std::cout << "lo: " << endpoint_text(r.lo, r.lo_kind, false) << "\n";
    std::cout << "hi: " << endpoint_text(r.hi, r.hi_kind, true) << "\n";
  }
  return kExitOk;
}

int cmd_repro(const Flags& f) {
  const auto results = run_corpus(corpus());
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (structured(f)) {
    json j = json::array();
    for (const auto& r : results)
      j.push_back({{"case", r.name},
                   {"passed", r.passed},
                   {"warning", r.warning},
                   {"expected", r.expected},
                   {"observed", r.observed},
                   {"ms", r.elapsed_ms}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_table(results);
    std::cout << (all ? "all cases passed" : "some cases FAILED") << "\n";
  }
  return all ? kExitOk : kExitNegative;
}

int cmd_check(const Flags& f) {
  std::ifstream in(f.file);
  if (!in) throw UsageError("cannot open " + f.file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("not a JSON report: ") + e.what());
  }
  const ProofReport r = report_from_json(j);
  const VerifyResult v = verify(r);
  if (v.ok()) {
    std::cout << "certificate verified: " << to_string(r.decision.verdict.status) << "\n";
    return kExitOk;
  }
  for (const auto& p : v.problems) std::cout << "problem: " << p << "\n";
  return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nonnegativity proofs for trigonometric polynomials"};
  app.require_subcommand(1);
  Flags f;

  auto add_interval = [&](CLI::App* c) {
    c->add_option("--xlo", f.xlo, "left endpoint as q*pi (e.g. 0, pi/2, 9pi/64)");
    c->add_option("--xhi", f.xhi, "right endpoint as q*pi");
    c->add_option("--cover-width", f.cover_width, "outer cover width for irrational cosines");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", f.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };

  auto* prove = app.add_subcommand("prove", "decide nonnegativity on [xlo, xhi]");
  auto* expand_c = app.add_subcommand("expand", "print B(y) and A(y) with t = B + sin(x) A");
  auto* count = app.add_subcommand("count", "number of distinct roots of the associated polynomial");
  auto* isolate = app.add_subcommand("isolate", "isolating boxes for those roots");
  auto* pfloor_c = app.add_subcommand("pfloor", "rational lower bound Q of the shifted polynomial");
  auto* param = app.add_subcommand("param", "maximal interval of a for which the family is nonnegative");
  auto* repro = app.add_subcommand("repro", "run the reproduction corpus");
  auto* check = app.add_subcommand("check", "re-verify a structured proof report");

  for (auto* c : {prove, expand_c, count, isolate, pfloor_c, param}) {
    c->add_option("expr", f.expr, "trigonometric polynomial in x")->required();
    add_format(c);
  }
  for (auto* c : {prove, count, isolate, param}) add_interval(c);
  for (auto* c : {prove, pfloor_c}) c->add_option("--m", f.m, "pfloor precision (decimal digits)");
  for (auto* c : {prove, count, isolate}) c->add_option("--width", f.width, "isolation width (rational)");
  param->add_option("--seed", f.seed, "parameter value known to give a nonnegative member");
  add_format(repro);
  check->add_option("file", f.file, "report written by prove --format structured")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*prove) return cmd_prove(f);
    if (*expand_c) return cmd_expand(f);
    if (*count) return cmd_count(f, false);
    if (*isolate) return cmd_count(f, true);
    if (*pfloor_c) return cmd_pfloor(f);
    if (*param) return cmd_param(f);
    if (*repro) return cmd_repro(f);
    if (*check) return cmd_check(f);
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
