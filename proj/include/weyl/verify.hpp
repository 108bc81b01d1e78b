#ifndef WEYL_VERIFY_HPP
#define WEYL_VERIFY_HPP

// Verification suites behind `weylcalc verify`. Each suite checks a family of
// identities at user-chosen parameters and returns a Report; randomized suites
// draw from RandomSource(seed), so a recorded seed reproduces the report.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/expression.hpp"
#include "weyl/hypergeometric.hpp"
#include "weyl/json_io.hpp"
#include "weyl/numerics.hpp"
#include "weyl/radial.hpp"
#include "weyl/random.hpp"

namespace weyl {

enum class CaseStatus { pass, fail, info };

inline const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "PASS";
    case CaseStatus::fail:
      return "FAIL";
    case CaseStatus::info:
      return "INFO";
  }
  return "?";
}

struct CaseResult {
  std::string id;
  CaseStatus status = CaseStatus::pass;
  std::string detail;
};

struct Report {
  std::string suite;
  Json params = Json::object();
  std::vector<CaseResult> cases;
  std::uint64_t seed = 0;

  void add(std::string id, bool ok, std::string detail = {}) {
    cases.push_back({std::move(id), ok ? CaseStatus::pass : CaseStatus::fail, std::move(detail)});
  }
  void info(std::string id, std::string detail) {
    cases.push_back({std::move(id), CaseStatus::info, std::move(detail)});
  }
  bool passed() const {
    return std::none_of(cases.begin(), cases.end(),
                        [](const CaseResult& c) { return c.status == CaseStatus::fail; });
  }
  std::size_t count(CaseStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
  }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& c : cases) cs.push_back(Json{{"id", c.id}, {"status", weyl::to_string(c.status)}, {"detail", c.detail}});
    return Json{{"suite", suite}, {"params", params}, {"cases", std::move(cs)}, {"seed", seed}};
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "suite " << suite << "  " << params.dump() << "  seed=" << seed << "\n";
    std::size_t width = 4;
    for (const auto& c : cases) width = std::max(width, c.id.size());
    for (const auto& c : cases)
      os << weyl::to_string(c.status) << "  " << std::left << std::setw(static_cast<int>(width)) << c.id << "  "
         << c.detail << "\n";
    os << count(CaseStatus::pass) << " passed, " << count(CaseStatus::fail) << " failed";
    if (count(CaseStatus::info) > 0) os << ", " << count(CaseStatus::info) << " informational";
    os << "\n";
    return os.str();
  }
};

/// Options shared by all suites; unset values take per-suite defaults.
struct VerifyOptions {
  std::optional<std::size_t> d;
  std::optional<Rational> q;
  std::optional<unsigned> kmax;
  std::optional<unsigned> deg;
  std::optional<unsigned> order;
  std::optional<unsigned> count;
  std::optional<double> tol;
  std::optional<double> lambda;
  std::uint64_t seed = 0;
  bool quick = false;
};

namespace detail {

inline std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

inline void require_range(const char* name, long value, long lo, long hi) {
  if (value < lo || value > hi)
    throw InvalidInput(std::string("--") + name + " must lie in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "], got " + std::to_string(value));
}

struct Resolved {
  std::size_t d;
  Rational q;
  unsigned kmax;
  unsigned deg;
  unsigned order;
  unsigned count;
  double tol;
  double lambda;
};

inline Resolved resolve(const VerifyOptions& o, unsigned kmax, unsigned deg, double tol) {
  Resolved r{o.d.value_or(2),
             o.q.value_or(make_rational(1, 3)),
             o.kmax.value_or(kmax),
             o.deg.value_or(deg),
             o.order.value_or(10),
             o.count.value_or(o.quick ? 10 : 50),
             o.tol.value_or(tol),
             o.lambda.value_or(1.0)};
  require_range("d", static_cast<long>(r.d), 1, 6);
  require_range("count", r.count, 1, 1000);
  if (!(r.tol > 0.0)) throw InvalidInput("--tol must be positive");
  return r;
}

/// Runs `check` on `count` random samples; PASS iff all hold. The detail names
/// the first failing sample.
template <class Sample, class Make, class Check>
void random_case(Report& rep, const std::string& id, unsigned count, Make make, Check check,
                 const std::function<std::string(const Sample&)>& show) {
  for (unsigned n = 0; n < count; ++n) {
    Sample s = make();
    if (!check(s)) {
      rep.add(id, false, "sample " + std::to_string(n) + ": " + show(s));
      return;
    }
  }
  rep.add(id, true, std::to_string(count) + " samples");
}

inline std::string show_poly(const CPolynomial& p) { return to_string(p); }
inline std::string show_weyl(const WeylElement& w) { return to_string(w); }

}  // namespace detail

/// [R,L] = -E, [E,R] = 2R, [E,L] = -2L on P and on W.
inline Report verify_sl2(const VerifyOptions& o) {
  auto r = detail::resolve(o, 6, 4, 1.0);
  detail::require_range("deg", r.deg, 0, 8);
  Report rep{"sl2", Json{{"d", r.d}, {"q", to_string(r.q)}, {"deg", r.deg}, {"count", r.count}}, {}, o.seed};
  RandomSource rng(o.seed);
  const OrderingContext ctx(r.d, r.q);
  auto make_p = [&] { return rng.poly(r.d, r.deg); };
  auto make_w = [&] { return rng.weyl(r.d, r.deg); };
  const std::function<std::string(const CPolynomial&)> sp = detail::show_poly;
  const std::function<std::string(const WeylElement&)> sw = detail::show_weyl;

  detail::random_case<CPolynomial>(rep, "P:[R,L]=-E", r.count, make_p, [](const CPolynomial& p) {
    return op_R(op_L(p)) - op_L(op_R(p)) == -op_E(p);
  }, sp);
  detail::random_case<CPolynomial>(rep, "P:[E,R]=2R", r.count, make_p, [](const CPolynomial& p) {
    return op_E(op_R(p)) - op_R(op_E(p)) == op_R(p) * GaussRational(2);
  }, sp);
  detail::random_case<CPolynomial>(rep, "P:[E,L]=-2L", r.count, make_p, [](const CPolynomial& p) {
    return op_E(op_L(p)) - op_L(op_E(p)) == op_L(p) * GaussRational(-2);
  }, sp);
  detail::random_case<WeylElement>(rep, "W:[R,L]=-E", r.count, make_w, [&](const WeylElement& w) {
    return cal_R(ctx, cal_L(ctx, w)) - cal_L(ctx, cal_R(ctx, w)) == -cal_E(ctx, w);
  }, sw);
  detail::random_case<WeylElement>(rep, "W:[E,R]=2R", r.count, make_w, [&](const WeylElement& w) {
    return cal_E(ctx, cal_R(ctx, w)) - cal_R(ctx, cal_E(ctx, w)) == cal_R(ctx, w) * GaussRational(2);
  }, sw);
  detail::random_case<WeylElement>(rep, "W:[E,L]=-2L", r.count, make_w, [&](const WeylElement& w) {
    return cal_E(ctx, cal_L(ctx, w)) - cal_L(ctx, cal_E(ctx, w)) == cal_L(ctx, w) * GaussRational(-2);
  }, sw);
  return rep;
}

/// O_q R = R_q O_q etc. on random homogeneous p, plus the first- and
/// second-step relations, the factorization and the inverse.
inline Report verify_intertwine(const VerifyOptions& o) {
  auto r = detail::resolve(o, 6, 4, 1.0);
  detail::require_range("deg", r.deg, 0, 8);
  Report rep{"intertwine", Json{{"d", r.d}, {"q", to_string(r.q)}, {"deg", r.deg}, {"count", r.count}}, {}, o.seed};
  RandomSource rng(o.seed);
  const OrderingContext ctx(r.d, r.q);
  auto make = [&] { return rng.homogeneous(r.d, static_cast<unsigned>(rng.uniform(0, r.deg))); };
  const std::function<std::string(const CPolynomial&)> sp = detail::show_poly;

  detail::random_case<CPolynomial>(rep, "O R = R_q O", r.count, make, [&](const CPolynomial& p) {
    return order_q(ctx, op_R(p)) == cal_R(ctx, order_q(ctx, p));
  }, sp);
  detail::random_case<CPolynomial>(rep, "O L = L_q O", r.count, make, [&](const CPolynomial& p) {
    return order_q(ctx, op_L(p)) == cal_L(ctx, order_q(ctx, p));
  }, sp);
  detail::random_case<CPolynomial>(rep, "O E = E_q O", r.count, make, [&](const CPolynomial& p) {
    return order_q(ctx, op_E(p)) == cal_E(ctx, order_q(ctx, p));
  }, sp);
  detail::random_case<CPolynomial>(rep, "O(z_j p) = M_j O(p)", r.count, make, [&](const CPolynomial& p) {
    for (std::size_t j = 1; j <= r.d; ++j) {
      WeylElement op = order_q(ctx, p);
      if (!(order_q(ctx, CPolynomial::z(r.d, j) * p) == apply_M(ctx, j, op))) return false;
      if (!(order_q(ctx, CPolynomial::zbar(r.d, j) * p) == apply_Mplus(ctx, j, op))) return false;
    }
    return true;
  }, sp);
  detail::random_case<CPolynomial>(rep, "O(dp) = ad O(p)", r.count, make, [&](const CPolynomial& p) {
    for (std::size_t j = 1; j <= r.d; ++j) {
      WeylElement op = order_q(ctx, p);
      if (!(order_q(ctx, partial(p, j, false)) == -ad(WeylElement::creation(r.d, j), op))) return false;
      if (!(order_q(ctx, partial(p, j, true)) == ad(WeylElement::annihilation(r.d, j), op))) return false;
    }
    return true;
  }, sp);
  detail::random_case<CPolynomial>(rep, "B factorization", r.count, make, [&](const CPolynomial& p) {
    for (const auto& [m, c] : p.terms())
      if (!(order_monomial(ctx, m) == order_monomial_via_M(ctx, m))) return false;
    return true;
  }, sp);
  detail::random_case<CPolynomial>(rep, "unorder o order = id", r.count, make, [&](const CPolynomial& p) {
    return unorder_q(ctx, order_q(ctx, p)) == p;
  }, sp);
  return rep;
}

/// Table of omega_k with the recurrence, closed form, Weyl path and the
/// difference, weight-basis and g-recurrence identities.
inline Report verify_radial(const VerifyOptions& o) {
  auto r = detail::resolve(o, 8, 0, 1.0);
  detail::require_range("kmax", r.kmax, 0, 20);
  const unsigned weyl_kmax = std::min(r.kmax, o.quick ? 4u : 6u);
  Report rep{"radial", Json{{"d", r.d}, {"q", to_string(r.q)}, {"kmax", r.kmax}, {"weyl_kmax", weyl_kmax}}, {}, o.seed};
  const RadialContext ctx(r.d, r.q);
  auto w = omega_sequence(ctx, r.kmax + 1);
  auto etas = eta_sequence(ctx, weyl_kmax);
  UniPoly iterate(GaussRational(1));
  for (unsigned k = 0; k <= r.kmax; ++k) {
    bool ok = omega_closed_form(ctx, k) == w[k] && iterate == w[k];
    std::string detail = to_string(w[k]);
    if (k <= weyl_kmax) {
      try {
        ok = ok && express_in_N(etas[k]) == w[k];
        detail += "   [Weyl path]";
      } catch (const NotRadial&) {
        ok = false;
        detail += "   [eta_k not radial]";
      }
    }
    rep.add("omega_" + std::to_string(k), ok, detail);
    iterate = apply_Rq_univariate(ctx, iterate);
  }
  bool dif = true, weight = true;
  for (unsigned k = 0; k <= r.kmax; ++k) {
    dif = dif && satisfies_difference_equation(ctx, w[k], k);
    weight = weight && check_weight_basis_univariate(ctx, k);
  }
  rep.add("difference equation", dif, "k <= " + std::to_string(r.kmax));
  rep.add("weight basis (C[t])", weight, "k <= " + std::to_string(r.kmax));
  bool weight_weyl = true;
  for (unsigned k = 0; k + 1 <= weyl_kmax; ++k) weight_weyl = weight_weyl && check_weight_basis_weyl(ctx, k);
  rep.add("weight basis (W)", weight_weyl, "k < " + std::to_string(weyl_kmax));
  bool cert = true;
  for (unsigned k = 1; k <= r.kmax; ++k) {
    GaussRational expected(Rational(-r.q * (1 - r.q) * Rational(static_cast<long>(k * (k + r.d - 1)))));
    cert = cert && nonorthogonality_certificate(ctx, k) == expected;
  }
  rep.add("A_{k-1} A_k C_k = -q(1-q)k(k+d-1)", cert, "k = 1.." + std::to_string(r.kmax));
  if (ctx.alpha_defined()) {
    rep.add("g recurrence pulled back", check_fg_recurrence(ctx, r.kmax), "k <= " + std::to_string(r.kmax));
  } else {
    rep.info("g recurrence pulled back", "alpha undefined at q = " + to_string(r.q));
  }
  return rep;
}

/// Harmonic dimensions, q-independence of Weyl harmonics and the
/// decomposition round trip.
inline Report verify_harmonics(const VerifyOptions& o) {
  auto r = detail::resolve(o, 0, o.quick ? 4 : 6, 1.0);
  detail::require_range("deg", r.deg, 0, 8);
  if (r.d > 3) throw InvalidInput("--d must be <= 3 for the harmonics suite");
  Report rep{"harmonics", Json{{"d", r.d}, {"q", to_string(r.q)}, {"deg", r.deg}, {"count", r.count}}, {}, o.seed};
  for (unsigned m = 0; m <= r.deg; ++m) {
    std::size_t kernel = laplacian_kernel_dim(r.d, m);
    Integer expected = harmonic_dim(static_cast<unsigned>(2 * r.d), m);
    rep.add("dim H^" + std::to_string(m), Integer(static_cast<unsigned long>(kernel)) == expected,
            std::to_string(kernel) + " (formula " + expected.get_str() + ")");
  }
  const std::vector<Rational> others{Rational(0), make_rational(1, 2), Rational(1)};
  for (unsigned m = 0; m <= std::min(r.deg, 4u); ++m) {
    bool ok = true;
    for (const auto& q2 : others)
      if (q2 != r.q) ok = ok && weyl_harmonic_spans_equal(r.d, m, r.q, q2);
    rep.add("span O_q(H^" + std::to_string(m) + ") independent of q", ok, "against q = 0, 1/2, 1");
  }
  RandomSource rng(o.seed);
  const OrderingContext ctx(r.d, r.q);
  const std::function<std::string(const WeylElement&)> sw = detail::show_weyl;
  detail::random_case<WeylElement>(rep, "decompose/reassemble", r.count,
                                   [&] { return rng.weyl(r.d, std::min(r.deg, 5u)); },
                                   [&](const WeylElement& w) {
                                     auto h = decompose_weyl(ctx, w);
                                     for (const auto& hk : h)
                                       if (!is_harmonic(hk)) return false;
                                     return reassemble_weyl(ctx, h) == w;
                                   },
                                   sw);
  return rep;
}

/// Continuous Hahn and Meixner-Pollaczek forms of g_k at q = 1/2 and the Krawtchouk/Meixner
/// parameterizations of omega_k.
inline Report verify_hahn(const VerifyOptions& o) {
  auto r = detail::resolve(o, 8, 0, 1.0);
  detail::require_range("kmax", r.kmax, 0, 16);
  const auto d = static_cast<unsigned>(r.d);
  Report rep{"hahn", Json{{"d", r.d}, {"kmax", r.kmax}}, {}, o.seed};
  auto g = g_sequence_symmetric(r.d, r.kmax);
  const GaussRational a(make_rational(static_cast<long>(d), 4));
  for (unsigned k = 0; k <= r.kmax; ++k) {
    bool hahn = g_continuous_hahn_form(d, k) == g[k];
    bool mp = g_meixner_pollaczek_form(d, k) == g[k];
    bool bridge = g_from_omega_symmetric(r.d, k) == g[k];
    auto sides = hypergeometric_connection(k, a);
    bool parity = g[k].compose_affine(GaussRational(-1), GaussRational()) ==
                  g[k] * GaussRational(k % 2 == 0 ? 1 : -1);
    bool real = true;
    for (const auto& c : g[k].coefficients()) real = real && c.is_real();
    rep.add("g_" + std::to_string(k), hahn && mp && bridge && sides.lhs == sides.rhs && parity && real,
            to_string(g[k], "lambda") + (hahn ? "" : "  [continuous Hahn mismatch]") +
                (mp ? "" : "  [Meixner-Pollaczek mismatch]") + (bridge ? "" : "  [omega bridge mismatch]") +
                (sides.lhs == sides.rhs ? "" : "  [2F1/3F2 connection mismatch]"));
  }
  for (const Rational& q : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
    bool ok = true;
    for (unsigned k = 0; k <= r.kmax; ++k) ok = ok && krawtchouk_meixner_check(k, q, d);
    rep.add("Krawtchouk/Meixner q=" + to_string(q), ok, "k <= " + std::to_string(r.kmax));
  }
  bool contiguous = true;
  for (unsigned k = 0; k <= r.kmax; ++k)
    for (const Rational& x : {Rational(1), Rational(2), make_rational(4, 3)})
      contiguous = contiguous && gauss_contiguous_check(k, GaussRational(static_cast<long>(d)), GaussRational(x));
  rep.add("Gauss contiguous relations", contiguous, "x in {1, 2, 4/3}");
  return rep;
}

/// Normalized Gram matrix of g_0..g_kmax under |Gamma(d/2 + i lambda/2)|^2.
inline Report verify_orthogonality(const VerifyOptions& o) {
  auto r = detail::resolve(o, 8, 0, 1e-8);
  detail::require_range("kmax", r.kmax, 0, 12);
  const auto d = static_cast<unsigned>(r.d);
  auto spec = numerics::QuadratureSpec::for_orthogonality(d, r.kmax);
  Report rep{"orthogonality",
             Json{{"d", r.d}, {"kmax", r.kmax}, {"tol", r.tol}, {"half_width", spec.half_width},
                  {"panels", spec.panel_count}},
             {},
             o.seed};
  auto report = numerics::orthogonality_matrix(d, r.kmax, spec);
  for (unsigned m = 0; m <= r.kmax; ++m)
    for (unsigned n = m + 1; n <= r.kmax; ++n) {
      double v = report.normalized[m][n];
      rep.add("I_" + std::to_string(m) + "," + std::to_string(n), v < r.tol, detail::sci(v));
    }
  rep.add("diagonal positive", report.min_diagonal > 0.0, "min I_kk = " + detail::sci(report.min_diagonal));
  rep.add("panel doubling", report.panel_doubling_change < 1e-9, "change " + detail::sci(report.panel_doubling_change));
  rep.add("wider window", report.half_width_change < 1e-9, "change " + detail::sci(report.half_width_change));
  rep.info("tail estimate", detail::sci(report.tail_estimate));
  for (unsigned k = 0; k <= r.kmax; ++k) rep.info("I_" + std::to_string(k) + "," + std::to_string(k), detail::sci(report.gram[k][k]));
  return rep;
}

/// Taylor coefficients of the generating function against g_k, and the ODE
/// it was integrated from.
inline Report verify_genfun(const VerifyOptions& o) {
  VerifyOptions with_q = o;
  if (!with_q.q) with_q.q = make_rational(1, 2);
  auto r = detail::resolve(with_q, 0, 0, 1e-10);
  detail::require_range("order", r.order, 0, 20);
  if (r.q <= 0 || r.q >= 1) throw InvalidInput("--q must lie strictly between 0 and 1 for genfun");
  const auto d = static_cast<unsigned>(r.d);
  const double q = r.q.get_d();
  const bool symmetric = r.q == make_rational(1, 2);
  const double line_tol = o.tol.value_or(1e-9);
  Report rep{"genfun",
             Json{{"q", to_string(r.q)}, {"d", r.d}, {"lambda", r.lambda}, {"order", r.order}, {"tol", r.tol}},
             {},
             o.seed};
  using numerics::cdouble;

  if (symmetric) {
    auto coeffs = numerics::genfun_coefficients(q, d, cdouble(r.lambda, 0.0), r.order);
    auto g = g_sequence_symmetric(r.d, r.order);
    double worst = 0.0;
    for (unsigned k = 0; k <= r.order; ++k) {
      cdouble expected = g[k].eval(cdouble(r.lambda, 0.0));
      worst = std::max(worst, std::abs(coeffs[k] - expected) / std::max(1.0, std::abs(expected)));
    }
    rep.add("coefficients vs g_k(lambda)", worst < r.tol, "max rel. error " + detail::sci(worst));
  }

  // Coefficients on the line lambda = i alpha (t + t0) against (i alpha)^k omega_k(t) / k!.
  const RadialContext ctx(r.d, r.q);
  const double alpha = 1.0 / std::sqrt(q * (1.0 - q));
  for (int t = 0; t <= 2; ++t) {
    cdouble lambda(0.0, alpha * (t + ctx.t0.get_d()));
    auto coeffs = numerics::genfun_coefficients(q, d, lambda, r.order);
    auto expected = numerics::genfun_expected(ctx, static_cast<double>(t), r.order);
    cdouble g0 = numerics::genfun_eval(q, d, lambda, 0.0);
    double literal = 0.0, normalized = 0.0;
    for (unsigned k = 0; k <= r.order; ++k) {
      double scale = std::max(1.0, std::abs(expected[k]));
      literal = std::max(literal, std::abs(coeffs[k] - expected[k]) / scale);
      normalized = std::max(normalized, std::abs(coeffs[k] / g0 - expected[k]) / scale);
    }
    std::string ts = "t=" + std::to_string(t);
    rep.add("line " + ts + ": coefficients of G", literal < line_tol,
            "max rel. error " + detail::sci(literal) + ", G(0) = " + detail::sci(std::abs(g0)));
    rep.add("line " + ts + ": coefficients of G/G(0)", normalized < line_tol,
            "max rel. error " + detail::sci(normalized));
  }

  const double radius = numerics::genfun_radius(q);
  const std::vector<cdouble> points{0.0, 0.1 * radius, cdouble(-0.2, 0.15) * radius, cdouble(0.0, -0.3) * radius};
  const std::vector<cdouble> lambdas{cdouble(r.lambda, 0.0), cdouble(0.5, 0.0), cdouble(-1.5, 0.5)};
  double worst = 0.0, control = 1e300;
  for (auto s : points)
    for (auto lambda : lambdas) {
      worst = std::max(worst, std::abs(numerics::genfun_ode_residual(q, d, lambda, s)));
      // At s = 0 the sign of the d s term is irrelevant.
      if (s != 0.0) control = std::min(control, std::abs(numerics::genfun_ode_residual(q, d, lambda, s, -1)));
    }
  rep.add("ODE residual", worst < 1e-8, "max " + detail::sci(worst));
  rep.add("ODE negative control", control > 1e-3, "min wrong-sign residual " + detail::sci(control));
  return rep;
}

inline std::vector<std::string> verify_suite_names() {
  return {"sl2", "intertwine", "radial", "harmonics", "hahn", "orthogonality", "genfun", "all"};
}

/// Runs one suite, or every suite at its defaults for "all".
inline std::vector<Report> run_verify(const std::string& suite, const VerifyOptions& o) {
  using Runner = Report (*)(const VerifyOptions&);
  const std::vector<std::pair<std::string, Runner>> suites{
      {"sl2", verify_sl2},     {"intertwine", verify_intertwine},       {"radial", verify_radial},
      {"harmonics", verify_harmonics}, {"hahn", verify_hahn}, {"orthogonality", verify_orthogonality},
      {"genfun", verify_genfun}};
  std::vector<Report> out;
  for (const auto& [name, run] : suites)
    if (suite == name || suite == "all") out.push_back(run(o));
  if (out.empty()) throw InvalidInput("unknown suite '" + suite + "'");
  return out;
}

}  // namespace weyl

#endif  // WEYL_VERIFY_HPP
