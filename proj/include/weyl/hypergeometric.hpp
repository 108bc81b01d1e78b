#ifndef WEYL_HYPERGEOMETRIC_HPP
#define WEYL_HYPERGEOMETRIC_HPP

#include <span>
#include <string>
#include <vector>

#include "weyl/unipoly.hpp"

namespace weyl {

/// Shifted factorial (x)_n = x (x+1) ... (x+n-1).
inline GaussRational pochhammer(const GaussRational& x, unsigned n) {
  GaussRational acc(1);
  for (unsigned j = 0; j < n; ++j) acc *= x + GaussRational(static_cast<long>(j));
  return acc;
}

/// Terminating series
///   sum_{j=0}^{n} (-n)_j prod_u (u)_j / (prod_l (l)_j j!) z^j
/// where the upper parameters u may be polynomials in the free variable.
/// Exactly n + 1 terms are summed.
inline UniPoly hypergeometric_terminating(unsigned n, std::span<const UniPoly> upper,
                                          std::span<const GaussRational> lower,
                                          const GaussRational& z) {
  for (const auto& l : lower)
    for (unsigned j = 0; j < n; ++j)
      if ((l + GaussRational(static_cast<long>(j))).is_zero())
        throw InvalidInput("hypergeometric lower parameter " + to_string(l) +
                           " hits a pole within " + std::to_string(n) + " terms");
  UniPoly sum;
  UniPoly term(GaussRational(1));  // j = 0
  for (unsigned j = 0;; ++j) {
    sum += term;
    if (j == n) break;
    // term_{j+1} / term_j = (j - n) prod_u (u + j) / (prod_l (l + j) (j + 1)) z
    GaussRational scalar = GaussRational(static_cast<long>(j) - static_cast<long>(n)) * z /
                           GaussRational(static_cast<long>(j + 1));
    for (const auto& l : lower) scalar /= l + GaussRational(static_cast<long>(j));
    term *= scalar;
    for (const auto& u : upper) term *= u + UniPoly(GaussRational(static_cast<long>(j)));
  }
  return sum;
}

/// t -> 2F1(-t, -k; c; x) as a polynomial of degree <= k in t.
inline UniPoly hyp2F1_terminating_poly(unsigned k, const GaussRational& c, const GaussRational& x) {
  const UniPoly minus_t{GaussRational(0), GaussRational(-1)};
  return hypergeometric_terminating(k, std::span<const UniPoly>(&minus_t, 1),
                                    std::span<const GaussRational>(&c, 1), x);
}

/// Residuals of the two Gauss contiguous relations for F(t) = 2F1(-t, -k; c; x):
///   (2b - c - bx + ax) F(a,b) + (c - b) F(a,b-1) + b(x-1) F(a,b+1)
///   (2a - c - ax + bx) F(a,b) + (c - a) F(a-1,b) + a(x-1) F(a+1,b)
/// with a = -t, b = -k. `f_prev`, `f`, `f_next` are the k-1, k, k+1 members.
struct ContiguousResiduals {
  UniPoly in_b;
  UniPoly in_a;
};

inline ContiguousResiduals contiguous_residuals(const UniPoly& f_prev, const UniPoly& f,
                                                const UniPoly& f_next, unsigned k,
                                                const GaussRational& c, const GaussRational& x) {
  const GaussRational one(1);
  const GaussRational b(-static_cast<long>(k));
  const UniPoly a{GaussRational(0), GaussRational(-1)};  // a = -t
  ContiguousResiduals r;
  UniPoly coef_b = UniPoly(b * GaussRational(2) - c - b * x) + a * x;
  r.in_b = coef_b * f + UniPoly(c - b) * f_next;
  if (k > 0) r.in_b += UniPoly(b * (x - one)) * f_prev;
  // F(a-1) = F at t+1, F(a+1) = F at t-1.
  UniPoly coef_a = a * GaussRational(2) - UniPoly(c) - a * x + UniPoly(b * x);
  r.in_a = coef_a * f + (UniPoly(c) - a) * f.compose_shift(one) +
           a * (x - one) * f.compose_shift(-one);
  return r;
}

/// Both contiguous relations hold exactly for 2F1(-t, -k; c; x).
inline bool gauss_contiguous_check(unsigned k, const GaussRational& c, const GaussRational& x) {
  UniPoly prev = k > 0 ? hyp2F1_terminating_poly(k - 1, c, x) : UniPoly();
  auto r = contiguous_residuals(prev, hyp2F1_terminating_poly(k, c, x),
                                hyp2F1_terminating_poly(k + 1, c, x), k, c, x);
  return r.in_b.is_zero() && r.in_a.is_zero();
}

/// Continuous Hahn polynomial
///   p_k(x; a,b,c,d) = i^k (a+c)_k (a+d)_k / k! 3F2(-k, k+a+b+c+d-1, a+ix; a+c, a+d; 1)
/// as a polynomial in x.
inline UniPoly continuous_hahn_poly(unsigned k, const GaussRational& a, const GaussRational& b,
                                    const GaussRational& c, const GaussRational& d) {
  const GaussRational i = GaussRational::i();
  std::vector<UniPoly> upper{
      UniPoly(GaussRational(static_cast<long>(k)) + a + b + c + d - GaussRational(1)),
      UniPoly{a, i}};
  std::vector<GaussRational> lower{a + c, a + d};
  UniPoly series = hypergeometric_terminating(k, upper, lower, GaussRational(1));
  GaussRational prefactor = pow(i, k) * pochhammer(a + c, k) * pochhammer(a + d, k) /
                            GaussRational(Rational(factorial(k)));
  return series * prefactor;
}

/// Meixner-Pollaczek polynomial at phi = pi/2:
///   P_n^{(a)}(x; pi/2) = i^n 2F1(-n, a + ix; 2a; 2).
inline UniPoly meixner_pollaczek_poly(unsigned n, const GaussRational& a) {
  const GaussRational i = GaussRational::i();
  UniPoly upper{a, i};
  GaussRational lower = a * GaussRational(2);
  return hypergeometric_terminating(n, std::span<const UniPoly>(&upper, 1),
                                    std::span<const GaussRational>(&lower, 1), GaussRational(2)) *
         pow(i, n);
}

/// Both sides of 2F1(-n, 2a+2ix; 4a; 2) = 3F2(-n, n+4a, a+ix; 2a, 2a+1/2; 1) in x.
struct ConnectionSides {
  UniPoly lhs;
  UniPoly rhs;
};

inline ConnectionSides hypergeometric_connection(unsigned n, const GaussRational& a) {
  const GaussRational i = GaussRational::i();
  const GaussRational two(2);
  UniPoly up_l{a * two, i * two};
  GaussRational low_l = a * GaussRational(4);
  ConnectionSides s;
  s.lhs = hypergeometric_terminating(n, std::span<const UniPoly>(&up_l, 1),
                                     std::span<const GaussRational>(&low_l, 1), two);
  std::vector<UniPoly> up_r{UniPoly(GaussRational(static_cast<long>(n)) + a * GaussRational(4)),
                            UniPoly{a, i}};
  std::vector<GaussRational> low_r{a * two, a * two + GaussRational(make_rational(1, 2))};
  s.rhs = hypergeometric_terminating(n, up_r, low_r, GaussRational(1));
  return s;
}

/// (d)_k / ((d/2)_k (d/2 + 1/2)_k) p_k(lambda/4; d/4, d/4 + 1/2, d/4, d/4 + 1/2), in lambda.
inline UniPoly g_continuous_hahn_form(unsigned d, unsigned k) {
  const GaussRational a(make_rational(static_cast<long>(d), 4));
  const GaussRational b = a + GaussRational(make_rational(1, 2));
  const GaussRational half_d(make_rational(static_cast<long>(d), 2));
  GaussRational scale = pochhammer(GaussRational(static_cast<long>(d)), k) /
                        (pochhammer(half_d, k) * pochhammer(half_d + GaussRational(make_rational(1, 2)), k));
  return continuous_hahn_poly(k, a, b, a, b).compose_affine(GaussRational(make_rational(1, 4)), GaussRational()) *
         scale;
}

/// (d)_k / k! P_k^{(d/2)}(lambda/2; pi/2), in lambda.
inline UniPoly g_meixner_pollaczek_form(unsigned d, unsigned k) {
  const GaussRational half_d(make_rational(static_cast<long>(d), 2));
  GaussRational scale =
      pochhammer(GaussRational(static_cast<long>(d)), k) / GaussRational(Rational(factorial(k)));
  return meixner_pollaczek_poly(k, half_d).compose_affine(GaussRational(make_rational(1, 2)), GaussRational()) *
         scale;
}

/// Krawtchouk K_k(t; p, N) = 2F1(-k, -t; -N; 1/p) in t.
inline UniPoly krawtchouk_poly(unsigned k, const GaussRational& p, const GaussRational& big_n) {
  return hyp2F1_terminating_poly(k, -big_n, GaussRational(1) / p);
}

/// Meixner M_k(t; beta, c) = 2F1(-k, -t; beta; 1 - 1/c) in t.
inline UniPoly meixner_poly(unsigned k, const GaussRational& beta, const GaussRational& c) {
  return hyp2F1_terminating_poly(k, beta, GaussRational(1) - GaussRational(1) / c);
}

/// 2F1(-t, -k; d; 1/(1-q)) = K_k(t; 1-q, -d) = M_k(t; d, -(1-q)/q), exactly.
/// Requires q not in {0, 1}.
inline bool krawtchouk_meixner_check(unsigned k, const Rational& q, unsigned d) {
  if (q == 0 || q == 1) throw InvalidInput("Krawtchouk/Meixner identification needs q not in {0,1}");
  const GaussRational gd(static_cast<long>(d));
  const GaussRational one_minus_q{Rational(1 - q)};
  UniPoly f = hyp2F1_terminating_poly(k, gd, GaussRational(1) / one_minus_q);
  UniPoly kr = krawtchouk_poly(k, one_minus_q, -gd);
  UniPoly mx = meixner_poly(k, gd, GaussRational(Rational(-(1 - q) / q)));
  return f == kr && f == mx;
}

}  // namespace weyl

#endif  // WEYL_HYPERGEOMETRIC_HPP
