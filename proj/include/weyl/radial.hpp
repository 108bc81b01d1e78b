#ifndef WEYL_RADIAL_HPP
#define WEYL_RADIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "weyl/harmonic.hpp"
#include "weyl/linalg.hpp"
#include "weyl/hypergeometric.hpp"
#include "weyl/ordering.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

/// Parameters of the radial theory: mode count d, ordering q, and the shift
/// t0 = d(1-q). The quantity alpha = (q(1-q))^{-1/2} is never formed; only
/// alpha^2 is, and only for q outside {0, 1}.
struct RadialContext {
  std::size_t d;
  Rational q;
  Rational t0;

  RadialContext(std::size_t modes, Rational param)
      : d(modes), q(std::move(param)), t0(Rational(static_cast<long>(modes)) * (1 - q)) {
    if (d == 0) throw InvalidInput("radial context needs d >= 1");
  }
  explicit RadialContext(const OrderingContext& ctx) : RadialContext(ctx.d, ctx.q) {}

  OrderingContext ordering() const { return {d, q}; }
  bool alpha_defined() const { return q != 0 && q != 1; }
  /// alpha^2 = 1 / (q(1-q)).
  Rational alpha_squared() const {
    if (!alpha_defined()) throw InvalidInput("alpha is undefined for q in {0, 1}");
    return Rational(1 / (q * (1 - q)));
  }
};

/// p(N) as a Weyl element, N = sum_j a_j^+ a_j.
inline WeylElement poly_of_N(std::size_t d, const UniPoly& p) {
  WeylElement out(d);
  WeylElement power = WeylElement::identity(d);
  const WeylElement n = number_operator(d);
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k > 0) power = power * n;
    out += power * p.coefficients()[k];
  }
  return out;
}

/// eta_k = R_q^k I for k = 0..k_max.
inline std::vector<WeylElement> eta_sequence(const RadialContext& ctx, unsigned k_max) {
  OrderingContext oc = ctx.ordering();
  std::vector<WeylElement> etas{WeylElement::identity(ctx.d)};
  for (unsigned k = 0; k < k_max; ++k) etas.push_back(cal_R(oc, etas.back()));
  return etas;
}

inline WeylElement eta(const RadialContext& ctx, unsigned k) { return eta_sequence(ctx, k).back(); }

/// The polynomial p with p(N) = w. Throws NotRadial when w is not in C[N].
/// The top-degree part of N^m contains (a_1^+)^m a_1^m with coefficient 1, so
/// the coefficients are read off from the highest degree downwards.
inline UniPoly express_in_N(const WeylElement& w) {
  const std::size_t d = w.d();
  const WeylElement n = number_operator(d);
  std::vector<WeylElement> powers{WeylElement::identity(d)};
  std::vector<GaussRational> coeffs;
  WeylElement rest = w;
  while (!rest.is_zero()) {
    int top = rest.degree();
    if (top % 2 != 0) throw NotRadial("element has a term of odd degree");
    unsigned m = static_cast<unsigned>(top / 2);
    while (powers.size() <= m) powers.push_back(powers.back() * n);
    GaussRational c = rest.coeff({unit_index(d, 0, m), unit_index(d, 0, m)});
    if (c.is_zero()) throw NotRadial("top-degree part is not a multiple of N^m");
    if (coeffs.size() <= m) coeffs.resize(m + 1);
    coeffs[m] = c;
    rest -= powers[m] * c;
    if (rest.degree() >= top) throw NotRadial("top-degree part is not a multiple of N^m");
  }
  return UniPoly(std::move(coeffs));
}

/// R_q p(N) = q(1-q)(2N+d) p(N) + (1-q)^2 (N+d) p(N+1) + q^2 N p(N-1), on C[t].
inline UniPoly apply_Rq_univariate(const RadialContext& ctx, const UniPoly& p) {
  const GaussRational q(ctx.q), pq(Rational(1 - ctx.q)), d(static_cast<long>(ctx.d));
  const GaussRational one(1);
  UniPoly out = UniPoly{d, GaussRational(2)} * p * (q * pq);
  out += UniPoly{d, one} * p.compose_shift(one) * (pq * pq);
  out += UniPoly::t() * p.compose_shift(-one) * (q * q);
  return out;
}

/// omega_0..omega_{k_max} from
///   omega_{k+1} = [t + (1-q)d - (2q-1)k] omega_k + q(1-q) k (k+d-1) omega_{k-1}.
inline std::vector<UniPoly> omega_sequence(const RadialContext& ctx, unsigned k_max) {
  std::vector<UniPoly> w{UniPoly(GaussRational(1))};
  const Rational& q = ctx.q;
  const long d = static_cast<long>(ctx.d);
  for (unsigned k = 0; k < k_max; ++k) {
    Rational shift = ctx.t0 - (2 * q - 1) * Rational(static_cast<long>(k));
    UniPoly next = UniPoly{GaussRational(shift), GaussRational(1)} * w[k];
    if (k > 0) {
      Rational c = q * (1 - q) * Rational(static_cast<long>(k) * (static_cast<long>(k) + d - 1));
      next += w[k - 1] * GaussRational(c);
    }
    w.push_back(std::move(next));
  }
  return w;
}

inline UniPoly omega(const RadialContext& ctx, unsigned k) { return omega_sequence(ctx, k).back(); }

/// omega_k(t) = (d)_k (1-q)^k 2F1(-t, -k; d; 1/(1-q)); at q = 1 the limit is
/// the falling factorial t(t-1)...(t-k+1).
inline UniPoly omega_closed_form(const RadialContext& ctx, unsigned k) {
  if (ctx.q == 1) return falling_factorial_poly(k);
  const GaussRational d(static_cast<long>(ctx.d));
  const Rational one_minus_q = 1 - ctx.q;
  UniPoly f = hyp2F1_terminating_poly(k, d, GaussRational(Rational(1 / one_minus_q)));
  return f * (pochhammer(d, k) * GaussRational(rational_pow(one_minus_q, k)));
}

struct DifferenceTriple {
  UniPoly R;
  UniPoly L;
  UniPoly E;
};

/// The sl2 triple transferred to C[t]:
///   R p = (1-q)^2 (t+d) Dp - q^2 t Np + (t + d(1-q)) p
///   L p = (t+d) Dp - t Np
///   E p = 2(1-q)(t+d) Dp + 2q t Np + d p
/// with D, N the forward and backward differences.
inline DifferenceTriple difference_triple(const RadialContext& ctx, const UniPoly& p) {
  const GaussRational q(ctx.q), pq(Rational(1 - ctx.q)), d(static_cast<long>(ctx.d));
  const UniPoly t_plus_d{d, GaussRational(1)};
  const UniPoly t = UniPoly::t();
  const UniPoly fwd = t_plus_d * p.forward_difference();
  const UniPoly bwd = t * p.backward_difference();
  DifferenceTriple r;
  r.R = fwd * (pq * pq) - bwd * (q * q) + UniPoly{GaussRational(ctx.t0), GaussRational(1)} * p;
  r.L = fwd - bwd;
  r.E = fwd * (GaussRational(2) * pq) + bwd * (GaussRational(2) * q) + p * d;
  return r;
}

/// q t Np + (1-q)(t+d) Dp == k p.
inline bool satisfies_difference_equation(const RadialContext& ctx, const UniPoly& p, unsigned k) {
  const GaussRational q(ctx.q), pq(Rational(1 - ctx.q)), d(static_cast<long>(ctx.d));
  UniPoly lhs = UniPoly::t() * p.backward_difference() * q +
                UniPoly{d, GaussRational(1)} * p.forward_difference() * pq;
  return lhs == p * GaussRational(static_cast<long>(k));
}

inline bool check_difference_equation(const RadialContext& ctx, unsigned k) {
  return satisfies_difference_equation(ctx, omega(ctx, k), k);
}

/// g_0..g_{k_max} at q = 1/2 from (k+2) g_{k+2} = lambda g_{k+1} - (k+d) g_k,
/// g_0 = 1, g_1 = lambda.
inline std::vector<UniPoly> g_sequence_symmetric(std::size_t d, unsigned k_max) {
  std::vector<UniPoly> g{UniPoly(GaussRational(1)), UniPoly::t()};
  for (unsigned k = 0; k + 2 <= k_max; ++k) {
    UniPoly next = UniPoly::t() * g[k + 1] - g[k] * GaussRational(static_cast<long>(k + d));
    g.push_back(next * GaussRational(make_rational(1, static_cast<long>(k + 2))));
  }
  g.resize(k_max + 1);
  return g;
}

inline UniPoly g_poly_symmetric(std::size_t d, unsigned k) { return g_sequence_symmetric(d, k).back(); }

/// Element a + alpha b of C[t][alpha] / (alpha^2 - alpha_sq), used to test
/// identities that involve alpha without taking a square root.
class AlphaPoly {
 public:
  AlphaPoly(Rational alpha_sq, UniPoly rational_part, UniPoly alpha_part = {})
      : alpha_sq_(std::move(alpha_sq)), a_(std::move(rational_part)), b_(std::move(alpha_part)) {}

  const UniPoly& rational_part() const { return a_; }
  const UniPoly& alpha_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// alpha^k as an element.
  static AlphaPoly alpha_power(const Rational& alpha_sq, unsigned k) {
    GaussRational even(rational_pow(alpha_sq, k / 2));
    return k % 2 == 0 ? AlphaPoly(alpha_sq, UniPoly(even)) : AlphaPoly(alpha_sq, UniPoly(), UniPoly(even));
  }

  friend AlphaPoly operator+(const AlphaPoly& x, const AlphaPoly& y) {
    return {x.alpha_sq_, x.a_ + y.a_, x.b_ + y.b_};
  }
  friend AlphaPoly operator-(const AlphaPoly& x, const AlphaPoly& y) {
    return {x.alpha_sq_, x.a_ - y.a_, x.b_ - y.b_};
  }
  friend AlphaPoly operator*(const AlphaPoly& x, const AlphaPoly& y) {
    return {x.alpha_sq_, x.a_ * y.a_ + x.b_ * y.b_ * GaussRational(x.alpha_sq_),
            x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend AlphaPoly operator*(const AlphaPoly& x, const GaussRational& c) {
    return {x.alpha_sq_, x.a_ * c, x.b_ * c};
  }
  /// Division by alpha^k.
  AlphaPoly divide_by_alpha_power(unsigned k) const {
    GaussRational inv_even(Rational(1 / rational_pow(alpha_sq_, k / 2)));
    AlphaPoly r(alpha_sq_, a_ * inv_even, b_ * inv_even);
    if (k % 2 == 1)  // (a + alpha b)/alpha = b + alpha a/alpha^2
      r = AlphaPoly(alpha_sq_, r.b_, r.a_ * GaussRational(Rational(1 / alpha_sq_)));
    return r;
  }

 private:
  Rational alpha_sq_;
  UniPoly a_;
  UniPoly b_;
};

/// g_k = (i^k alpha^k / k!) omega_k(t) under lambda = i alpha (t + t0).
inline AlphaPoly g_pulled_back(const RadialContext& ctx, const UniPoly& omega_k, unsigned k) {
  const Rational a2 = ctx.alpha_squared();
  GaussRational scalar = pow(GaussRational::i(), k) / GaussRational(Rational(factorial(k)));
  return AlphaPoly::alpha_power(a2, k) * AlphaPoly(a2, omega_k * scalar);
}

/// Left side of (k+2) g_{k+2} + (k+d) g_k + [-lambda + 2 s0 (k+1)] g_{k+1}
/// with lambda = i alpha (t+t0) and s0 = i alpha (q - 1/2), for arbitrary
/// polynomials w_k, w_{k+1}, w_{k+2} standing in for omega.
inline AlphaPoly fg_residual(const RadialContext& ctx, const UniPoly& w0, const UniPoly& w1,
                             const UniPoly& w2, unsigned k) {
  const Rational a2 = ctx.alpha_squared();
  const GaussRational i = GaussRational::i();
  AlphaPoly lambda(a2, UniPoly(), UniPoly{GaussRational(ctx.t0), GaussRational(1)} * i);
  AlphaPoly s0(a2, UniPoly(), UniPoly(i * GaussRational(Rational(ctx.q - Rational(1, 2)))));
  AlphaPoly g0 = g_pulled_back(ctx, w0, k);
  AlphaPoly g1 = g_pulled_back(ctx, w1, k + 1);
  AlphaPoly g2 = g_pulled_back(ctx, w2, k + 2);
  AlphaPoly bracket = s0 * GaussRational(static_cast<long>(2 * (k + 1))) - lambda;
  return g2 * GaussRational(static_cast<long>(k + 2)) +
         g0 * GaussRational(static_cast<long>(k + ctx.d)) + bracket * g1;
}

/// omega_{k+2} - [t + t0 - (2q-1)(k+1)] omega_{k+1} - q(1-q)(k+1)(k+d) omega_k.
inline UniPoly rec_residual(const RadialContext& ctx, const UniPoly& w0, const UniPoly& w1,
                            const UniPoly& w2, unsigned k) {
  const Rational& q = ctx.q;
  Rational shift = ctx.t0 - (2 * q - 1) * Rational(static_cast<long>(k + 1));
  Rational c = q * (1 - q) * Rational(static_cast<long>((k + 1) * (k + ctx.d)));
  return w2 - UniPoly{GaussRational(shift), GaussRational(1)} * w1 - w0 * GaussRational(c);
}

/// The pulled-back residual of the g recurrence, divided by i^k alpha^k / k! and multiplied by
/// -(k+1) q(1-q), as an element of C[t][alpha]. Equals rec_residual exactly.
inline AlphaPoly fg_residual_reduced(const RadialContext& ctx, const UniPoly& w0,
                                     const UniPoly& w1, const UniPoly& w2, unsigned k) {
  AlphaPoly r = fg_residual(ctx, w0, w1, w2, k).divide_by_alpha_power(k);
  GaussRational scale = GaussRational(Rational(factorial(k))) / pow(GaussRational::i(), k) *
                        GaussRational(Rational(-Rational(static_cast<long>(k + 1)) * ctx.q * (1 - ctx.q)));
  return r * scale;
}

/// The g recurrence holds exactly for k = 0..k_max in pulled-back form.
inline bool check_fg_recurrence(const RadialContext& ctx, unsigned k_max) {
  if (!ctx.alpha_defined()) throw InvalidInput("the g recurrence needs q not in {0, 1}");
  auto w = omega_sequence(ctx, k_max + 2);
  for (unsigned k = 0; k <= k_max; ++k)
    if (!fg_residual(ctx, w[k], w[k + 1], w[k + 2], k).is_zero()) return false;
  return true;
}

/// Coefficients of omega_{k+1} = (A_k t + B_k) omega_k - C_k omega_{k-1},
/// recovered from the computed polynomials by exact division.
struct ThreeTerm {
  GaussRational A;
  GaussRational B;
  GaussRational C;
};

inline ThreeTerm extract_three_term(const UniPoly& prev, const UniPoly& cur, const UniPoly& next) {
  ThreeTerm tt;
  tt.A = next.leading() / cur.leading();
  UniPoly r = next - UniPoly::t() * cur * tt.A;
  int k = cur.degree();
  tt.B = r.coeff(static_cast<std::size_t>(k)) / cur.leading();
  r -= cur * tt.B;
  if (prev.is_zero()) {
    tt.C = GaussRational();
  } else {
    tt.C = -(r.coeff(static_cast<std::size_t>(prev.degree())) / prev.leading());
    r += prev * tt.C;
  }
  if (!r.is_zero()) throw InvalidInput("sequence does not satisfy a three-term recurrence");
  return tt;
}

/// A_{k-1} A_k C_k extracted from omega_{k-2}..omega_{k+1}; equals -q(1-q)k(k+d-1).
inline GaussRational nonorthogonality_certificate(const RadialContext& ctx, unsigned k) {
  if (k == 0) throw InvalidInput("certificate needs k >= 1");
  auto w = omega_sequence(ctx, k + 1);
  UniPoly before = k >= 2 ? w[k - 2] : UniPoly();
  ThreeTerm lower = extract_three_term(before, w[k - 1], w[k]);
  ThreeTerm upper = extract_three_term(w[k - 1], w[k], w[k + 1]);
  return lower.A * upper.A * upper.C;
}

/// At q = 1/2, alpha = 2 and lambda = 2i(t + d/2), so
///   g_k(lambda) = (2i)^k / k! * omega_k(-i lambda / 2 - d/2)
/// is an exact polynomial identity over Q(i).
inline UniPoly g_from_omega_symmetric(std::size_t d, unsigned k) {
  RadialContext ctx(d, make_rational(1, 2));
  const GaussRational i = GaussRational::i();
  UniPoly w = omega(ctx, k).compose_affine(-i * GaussRational(make_rational(1, 2)),
                                           GaussRational(make_rational(-static_cast<long>(d), 2)));
  return w * (pow(i * GaussRational(2), k) / GaussRational(Rational(factorial(k))));
}

/// Weight-basis relations on Weyl elements:
///   R eta_k = eta_{k+1}, L eta_k = k(k+d-1) eta_{k-1}, E eta_k = (2k+d) eta_k.
inline bool check_weight_basis_weyl(const RadialContext& ctx, unsigned k) {
  OrderingContext oc = ctx.ordering();
  auto etas = eta_sequence(ctx, k + 1);
  const auto d = static_cast<long>(ctx.d);
  const auto kk = static_cast<long>(k);
  if (!(cal_R(oc, etas[k]) == etas[k + 1])) return false;
  WeylElement lowered = k == 0 ? WeylElement(ctx.d) : etas[k - 1] * GaussRational(kk * (kk + d - 1));
  if (!(cal_L(oc, etas[k]) == lowered)) return false;
  return cal_E(oc, etas[k]) == etas[k] * GaussRational(2 * kk + d);
}

/// The same relations transferred to C[t] through the difference operators.
inline bool check_weight_basis_univariate(const RadialContext& ctx, unsigned k) {
  auto w = omega_sequence(ctx, k + 1);
  const auto d = static_cast<long>(ctx.d);
  const auto kk = static_cast<long>(k);
  DifferenceTriple tr = difference_triple(ctx, w[k]);
  UniPoly lowered = k == 0 ? UniPoly() : w[k - 1] * GaussRational(kk * (kk + d - 1));
  return tr.R == w[k + 1] && tr.L == lowered && tr.E == w[k] * GaussRational(2 * kk + d);
}

/// Pull-through: a_j p(N) = p(N+1) a_j and a_j^+ p(N) = p(N-1) a_j^+.
inline bool check_pull_through(std::size_t d, std::size_t j, const UniPoly& p) {
  const GaussRational one(1);
  WeylElement a = WeylElement::annihilation(d, j), c = WeylElement::creation(d, j);
  return a * poly_of_N(d, p) == poly_of_N(d, p.compose_shift(one)) * a &&
         c * poly_of_N(d, p) == poly_of_N(d, p.compose_shift(-one)) * c;
}

/// Coefficient rows of O_q applied to a basis of the degree-m harmonics.
inline std::vector<SparseVector> ordered_harmonic_rows(const OrderingContext& ctx, unsigned m,
                                                       KeyIndex<NormalMonomial>& columns) {
  std::vector<SparseVector> rows;
  for (const auto& h : harmonic_basis(ctx.d, m)) {
    SparseVector row;
    const WeylElement w = order_q(ctx, h);
    for (const auto& [mono, c] : w.terms()) row[columns(mono)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// span O_{q1}(H^m) == span O_{q2}(H^m), by comparing ranks of the two row
/// sets with the rank of their union.
inline bool weyl_harmonic_spans_equal(std::size_t d, unsigned m, const Rational& q1, const Rational& q2) {
  KeyIndex<NormalMonomial> columns;
  auto a = ordered_harmonic_rows({d, q1}, m, columns);
  auto b = ordered_harmonic_rows({d, q2}, m, columns);
  const std::size_t ra = rank(a), rb = rank(b);
  std::vector<SparseVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return ra == a.size() && rb == b.size() && rank(both) == ra && ra == rb;
}

/// w lies in O_q(H) iff sum_j [a_j, [a_j^+, w]] = 0.
inline bool weyl_harmonics_check(const OrderingContext& ctx, const WeylElement& w) {
  return cal_L(ctx, w).is_zero();
}

/// w = sum_k R_q^k O_q(h_k) with h_k harmonic (h_k is a sum of homogeneous
/// harmonics of several degrees). Computed level by level as
/// harmonic_decompose(unorder_q(w)).
inline std::vector<CPolynomial> decompose_weyl(const OrderingContext& ctx, const WeylElement& w) {
  CPolynomial p = unorder_q(ctx, w);
  std::vector<CPolynomial> h;
  if (p.is_zero()) return h;
  for (unsigned m = 0; m <= static_cast<unsigned>(p.degree()); ++m) {
    CPolynomial level = p.homogeneous_part(m);
    if (level.is_zero()) continue;
    auto parts = harmonic_decompose(level, m);
    if (h.size() < parts.size()) h.resize(parts.size(), CPolynomial(ctx.d));
    for (std::size_t k = 0; k < parts.size(); ++k) h[k] += parts[k];
  }
  return h;
}

inline WeylElement reassemble_weyl(const OrderingContext& ctx, const std::vector<CPolynomial>& h) {
  WeylElement out(ctx.d);
  for (std::size_t k = 0; k < h.size(); ++k) {
    WeylElement term = order_q(ctx, h[k]);
    for (std::size_t s = 0; s < k; ++s) term = cal_R(ctx, term);
    out += term;
  }
  return out;
}

}  // namespace weyl

#endif  // WEYL_RADIAL_HPP
