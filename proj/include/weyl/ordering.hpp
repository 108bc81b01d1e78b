#ifndef WEYL_ORDERING_HPP
#define WEYL_ORDERING_HPP

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "weyl/cpolynomial.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

/// Mode count and exact ordering parameter q. Any rational q is accepted;
/// q = 0, 1/2, 1 are the Wick, symmetric and anti-Wick orderings.
struct OrderingContext {
  std::size_t d;
  Rational q;

  OrderingContext(std::size_t modes, Rational param) : d(modes), q(std::move(param)) {
    if (d == 0) throw InvalidInput("ordering context needs d >= 1");
  }

  GaussRational gq() const { return GaussRational(q); }
  GaussRational one_minus_q() const { return GaussRational(Rational(1 - q)); }
};

namespace detail {
inline void check_context(const OrderingContext& ctx, std::size_t d) {
  if (ctx.d != d)
    throw InvalidInput("mode-count mismatch: context has d=" + std::to_string(ctx.d) +
                       ", element has d=" + std::to_string(d));
}
inline void check_mode(const OrderingContext& ctx, std::size_t j) {
  if (j < 1 || j > ctx.d) throw InvalidInput("mode index " + std::to_string(j) + " out of range");
}
}  // namespace detail

/// M_j w = (1 - q) a_j w + q w a_j.
inline WeylElement apply_M(const OrderingContext& ctx, std::size_t j, const WeylElement& w) {
  detail::check_context(ctx, w.d());
  detail::check_mode(ctx, j);
  WeylElement a = WeylElement::annihilation(ctx.d, j);
  return (a * w) * ctx.one_minus_q() + (w * a) * ctx.gq();
}

/// M_j^+ w = q a_j^+ w + (1 - q) w a_j^+.
inline WeylElement apply_Mplus(const OrderingContext& ctx, std::size_t j, const WeylElement& w) {
  detail::check_context(ctx, w.d());
  detail::check_mode(ctx, j);
  WeylElement c = WeylElement::creation(ctx.d, j);
  return (c * w) * ctx.gq() + (w * c) * ctx.one_minus_q();
}

/// B^j_k(a_l, a_l^+) = sum_s C(k,s) q^{k-s} (1-q)^s a_l^s (a_l^+)^j a_l^{k-s}
/// in normal form; mode l numbered from 1.
inline WeylElement b_element(const OrderingContext& ctx, std::size_t l, unsigned j, unsigned k) {
  detail::check_mode(ctx, l);
  const std::size_t d = ctx.d;
  WeylElement out(d);
  WeylElement creations = WeylElement::monomial(d, unit_index(d, l - 1, j), MultiIndex(d, 0));
  for (unsigned s = 0; s <= k; ++s) {
    Rational weight = Rational(binomial(k, s)) * rational_pow(ctx.q, k - s) * rational_pow(1 - ctx.q, s);
    if (sgn(weight) == 0) continue;
    WeylElement left = WeylElement::monomial(d, MultiIndex(d, 0), unit_index(d, l - 1, s));
    WeylElement right = WeylElement::monomial(d, MultiIndex(d, 0), unit_index(d, l - 1, k - s));
    out += (left * creations * right) * GaussRational(weight);
  }
  return out;
}

/// O_q(z^alpha zbar^beta) = prod_l B^{beta_l}_{alpha_l}(a_l, a_l^+).
inline WeylElement order_monomial(const OrderingContext& ctx, const CMonomial& m) {
  WeylElement out = WeylElement::identity(ctx.d);
  for (std::size_t l = 0; l < ctx.d; ++l) {
    if (m.first[l] == 0 && m.second[l] == 0) continue;
    out = out * b_element(ctx, l + 1, m.second[l], m.first[l]);
  }
  return out;
}

/// The q-ordering map O_q : P -> W, extended linearly.
inline WeylElement order_q(const OrderingContext& ctx, const CPolynomial& p) {
  detail::check_context(ctx, p.d());
  WeylElement out(ctx.d);
  for (const auto& [m, c] : p.terms()) out += order_monomial(ctx, m) * c;
  return out;
}

/// O_q(z^alpha zbar^beta) = M^alpha M^{+beta} I by direct operator application;
/// an independent route to order_monomial.
inline WeylElement order_monomial_via_M(const OrderingContext& ctx, const CMonomial& m) {
  WeylElement w = WeylElement::identity(ctx.d);
  for (std::size_t l = 0; l < ctx.d; ++l)
    for (unsigned s = 0; s < m.second[l]; ++s) w = apply_Mplus(ctx, l + 1, w);
  for (std::size_t l = 0; l < ctx.d; ++l)
    for (unsigned s = 0; s < m.first[l]; ++s) w = apply_M(ctx, l + 1, w);
  return w;
}

/// Inverse of order_q. The top-degree part of O_q(z^alpha zbar^beta) is the
/// single normal monomial (a^+)^beta a^alpha with coefficient 1, so peeling
/// off leading terms degree by degree inverts the map exactly.
inline CPolynomial unorder_q(const OrderingContext& ctx, const WeylElement& w) {
  detail::check_context(ctx, w.d());
  CPolynomial p(ctx.d);
  WeylElement rest = w;
  while (!rest.is_zero()) {
    unsigned top = static_cast<unsigned>(rest.degree());
    WeylElement lead = rest.homogeneous_part(top);
    for (const auto& [mono, c] : lead.terms()) {
      CMonomial cm{annihilation_part(mono), creation_part(mono)};
      p.add_term(cm, c);
      rest -= order_monomial(ctx, cm) * c;
    }
  }
  return p;
}

/// R_q w = (1-q)^2 sum a_j w a_j^+ + q(1-q) sum (w a_j^+ a_j + a_j a_j^+ w)
///         + q^2 sum a_j^+ w a_j.
inline WeylElement cal_R(const OrderingContext& ctx, const WeylElement& w) {
  detail::check_context(ctx, w.d());
  const GaussRational q = ctx.gq(), p = ctx.one_minus_q();
  WeylElement out(ctx.d);
  for (std::size_t j = 1; j <= ctx.d; ++j) {
    WeylElement a = WeylElement::annihilation(ctx.d, j);
    WeylElement c = WeylElement::creation(ctx.d, j);
    out += (a * w * c) * (p * p);
    out += (w * c * a + a * c * w) * (q * p);
    out += (c * w * a) * (q * q);
  }
  return out;
}

/// L_q w = -sum_j ad(a_j) ad(a_j^+) w; independent of q.
inline WeylElement cal_L(const OrderingContext& ctx, const WeylElement& w) {
  detail::check_context(ctx, w.d());
  WeylElement out(ctx.d);
  for (std::size_t j = 1; j <= ctx.d; ++j)
    out -= ad(WeylElement::annihilation(ctx.d, j), ad(WeylElement::creation(ctx.d, j), w));
  return out;
}

/// E_q w = -sum_j { (1-q)(a_j [a_j^+, w] - [a_j, w] a_j^+)
///                 + q([a_j^+, w] a_j - a_j^+ [a_j, w]) } + d w.
inline WeylElement cal_E(const OrderingContext& ctx, const WeylElement& w) {
  detail::check_context(ctx, w.d());
  const GaussRational q = ctx.gq(), p = ctx.one_minus_q();
  WeylElement out = w * GaussRational(static_cast<long>(ctx.d));
  for (std::size_t j = 1; j <= ctx.d; ++j) {
    WeylElement a = WeylElement::annihilation(ctx.d, j);
    WeylElement c = WeylElement::creation(ctx.d, j);
    WeylElement ca = commutator(c, w);
    WeylElement aa = commutator(a, w);
    out -= (a * ca - aa * c) * p;
    out -= (ca * a - c * aa) * q;
  }
  return out;
}

/// Symmetric-ordering forms: R_s w = 1/4 sum {a_j, {a_j^+, w}}.
inline WeylElement cal_R_symmetric(const WeylElement& w) {
  WeylElement out(w.d());
  for (std::size_t j = 1; j <= w.d(); ++j)
    out += anticommutator(WeylElement::annihilation(w.d(), j),
                          anticommutator(WeylElement::creation(w.d(), j), w));
  return out * GaussRational(make_rational(1, 4));
}

/// L_s w = -sum [a_j, [a_j^+, w]].
inline WeylElement cal_L_symmetric(const WeylElement& w) {
  WeylElement out(w.d());
  for (std::size_t j = 1; j <= w.d(); ++j)
    out -= commutator(WeylElement::annihilation(w.d(), j),
                      commutator(WeylElement::creation(w.d(), j), w));
  return out;
}

/// E_s w = sum (a_j w a_j^+ - a_j^+ w a_j).
inline WeylElement cal_E_symmetric(const WeylElement& w) {
  WeylElement out(w.d());
  for (std::size_t j = 1; j <= w.d(); ++j) {
    WeylElement a = WeylElement::annihilation(w.d(), j);
    WeylElement c = WeylElement::creation(w.d(), j);
    out += a * w * c - c * w * a;
  }
  return out;
}

}  // namespace weyl

#endif  // WEYL_ORDERING_HPP
