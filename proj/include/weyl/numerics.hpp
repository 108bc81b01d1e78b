#ifndef WEYL_NUMERICS_HPP
#define WEYL_NUMERICS_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "weyl/radial.hpp"

namespace weyl::numerics {

using cdouble = std::complex<double>;
inline constexpr double pi = boost::math::constants::pi<double>();

/// Principal log Gamma for complex z away from the poles.
///
/// Re z < 1/2 goes through the reflection formula; otherwise z is shifted to
/// Re z >= 15 by the recurrence and the Stirling series
///   (z - 1/2) log z - z + log(2 pi)/2 + sum_n B_{2n} / (2n (2n-1) z^{2n-1})
/// is summed with the Bernoulli numbers B_2..B_20.
inline cdouble complex_lgamma(cdouble z) {
  if (z.real() < 0.5) {
    // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z), up to 2 pi i.
    return std::log(pi) - std::log(std::sin(pi * z)) - complex_lgamma(1.0 - z);
  }
  static constexpr std::array<double, 10> bernoulli{
      1.0 / 6.0,       -1.0 / 30.0,     1.0 / 42.0,       -1.0 / 30.0,        5.0 / 66.0,
      -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,  43867.0 / 798.0,    -174611.0 / 330.0};
  cdouble shift_log = 0.0;
  while (z.real() < 15.0) {
    shift_log += std::log(z);
    z += 1.0;
  }
  cdouble series = 0.0;
  cdouble inv = 1.0 / z;
  cdouble inv_sq = inv * inv;
  cdouble power = inv;
  for (std::size_t n = 1; n <= bernoulli.size(); ++n) {
    series += bernoulli[n - 1] / (2.0 * n * (2.0 * n - 1.0)) * power;
    power *= inv_sq;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series - shift_log;
}

/// rho(lambda) = |Gamma(d/2 + i lambda/2)|^2.
inline double weight_rho(double lambda, unsigned d) {
  if (d == 0) throw InvalidInput("weight needs d >= 1");
  return std::exp(2.0 * complex_lgamma(cdouble(0.5 * d, 0.5 * lambda)).real());
}

enum class QuadratureScheme { gauss_legendre_composite, adaptive_simpson };

struct QuadratureSpec {
  double half_width = 40.0;
  std::size_t panel_count = 200;
  QuadratureScheme scheme = QuadratureScheme::gauss_legendre_composite;

  /// T = max(40, 8 (d + k_max)).
  static QuadratureSpec for_orthogonality(unsigned d, unsigned k_max) {
    QuadratureSpec s;
    s.half_width = std::max(40.0, 8.0 * (d + k_max));
    s.panel_count = static_cast<std::size_t>(std::ceil(s.half_width * 2.0));
    return s;
  }
};

/// Nodes and weights of composite 20-point Gauss-Legendre on [-T, T].
inline void composite_gauss_nodes(double half_width, std::size_t panels, std::vector<double>& nodes,
                                  std::vector<double>& weights) {
  using rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  nodes.clear();
  weights.clear();
  const double h = 2.0 * half_width / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = -half_width + (static_cast<double>(p) + 0.5) * h;
    for (std::size_t k = 0; k < x.size(); ++k) {
      nodes.push_back(mid + 0.5 * h * x[k]);
      weights.push_back(0.5 * h * w[k]);
      nodes.push_back(mid - 0.5 * h * x[k]);
      weights.push_back(0.5 * h * w[k]);
    }
  }
}

/// Adaptive Simpson on [a, b] to absolute tolerance `tol`.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int max_depth = 40) {
  std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
          int depth) {
        double mid = 0.5 * (lo + hi);
        double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
        double flm = f(lm), frm = f(rm);
        double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        double diff = left + right - whole;
        if (depth <= 0 || std::abs(diff) <= 15.0 * eps) return left + right + diff / 15.0;
        return rec(lo, mid, flo, flm, fmid, left, eps / 2.0, depth - 1) +
               rec(mid, hi, fmid, frm, fhi, right, eps / 2.0, depth - 1);
      };
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return rec(a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Gram matrix of g_0..g_{k_max} (q = 1/2) under rho(lambda) d lambda.
struct OrthogonalityReport {
  std::vector<std::vector<double>> gram;
  /// |I_mn| / sqrt(I_mm I_nn) for m != n, zero on the diagonal.
  std::vector<std::vector<double>> normalized;
  double max_normalized_offdiag = 0.0;
  double min_diagonal = 0.0;
  /// Largest relative change of the diagonal and largest absolute change of
  /// the normalized off-diagonal when the panel count is doubled.
  double panel_doubling_change = 0.0;
  /// Largest relative change when the half-width grows by 25%.
  double half_width_change = 0.0;
  /// Estimated integrand mass beyond |lambda| = T relative to the diagonal.
  double tail_estimate = 0.0;
};

namespace detail {

inline std::vector<std::vector<double>> gram_matrix(const std::vector<UniPoly>& g, unsigned d,
                                                    const QuadratureSpec& spec) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
  if (spec.scheme == QuadratureScheme::gauss_legendre_composite) {
    std::vector<double> nodes, weights;
    composite_gauss_nodes(spec.half_width, spec.panel_count, nodes, weights);
    std::vector<double> values(n);
    for (std::size_t p = 0; p < nodes.size(); ++p) {
      const double wr = weights[p] * weight_rho(nodes[p], d);
      for (std::size_t k = 0; k < n; ++k) values[k] = g[k].eval(nodes[p]).real();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) gram[a][b] += wr * values[a] * values[b];
    }
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        auto f = [&](double x) {
          return g[a].eval(x).real() * g[b].eval(x).real() * weight_rho(x, d);
        };
        gram[a][b] = adaptive_simpson(f, -spec.half_width, spec.half_width, 1e-13);
      }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b) gram[a][b] = gram[b][a];
  return gram;
}

inline std::vector<std::vector<double>> normalize_gram(const std::vector<std::vector<double>>& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) out[a][b] = std::abs(gram[a][b]) / std::sqrt(gram[a][a] * gram[b][b]);
  return out;
}

inline double gram_change(const std::vector<std::vector<double>>& x,
                          const std::vector<std::vector<double>>& y) {
  double change = 0.0;
  auto nx = normalize_gram(x), ny = normalize_gram(y);
  for (std::size_t a = 0; a < x.size(); ++a) {
    change = std::max(change, std::abs(x[a][a] - y[a][a]) / std::abs(x[a][a]));
    for (std::size_t b = 0; b < x.size(); ++b) change = std::max(change, std::abs(nx[a][b] - ny[a][b]));
  }
  return change;
}

}  // namespace detail

inline OrthogonalityReport orthogonality_matrix(unsigned d, unsigned k_max, const QuadratureSpec& spec) {
  if (d == 0) throw InvalidInput("orthogonality check needs d >= 1");
  auto g = g_sequence_symmetric(d, k_max);
  OrthogonalityReport r;
  r.gram = detail::gram_matrix(g, d, spec);
  r.normalized = detail::normalize_gram(r.gram);
  r.min_diagonal = r.gram[0][0];
  for (std::size_t a = 0; a < g.size(); ++a) {
    r.min_diagonal = std::min(r.min_diagonal, r.gram[a][a]);
    for (std::size_t b = 0; b < g.size(); ++b)
      r.max_normalized_offdiag = std::max(r.max_normalized_offdiag, r.normalized[a][b]);
  }
  QuadratureSpec doubled = spec;
  doubled.panel_count *= 2;
  r.panel_doubling_change = detail::gram_change(r.gram, detail::gram_matrix(g, d, doubled));
  QuadratureSpec wider = spec;
  wider.half_width *= 1.25;
  wider.panel_count = static_cast<std::size_t>(std::ceil(spec.panel_count * 1.25));
  r.half_width_change = detail::gram_change(r.gram, detail::gram_matrix(g, d, wider));
  // The integrand decays like |lambda|^{2k+d-1} e^{-pi |lambda| / 2}; its tail
  // beyond T is bounded by about f(T) / (pi/2 - (2k+d-1)/T).
  const double t = spec.half_width;
  for (std::size_t a = 0; a < g.size(); ++a) {
    double decay = pi / 2.0 - (2.0 * a + d - 1.0) / t;
    double f_t = std::norm(g[a].eval(t)) * weight_rho(t, d);
    double tail = decay > 0 ? 2.0 * f_t / decay : INFINITY;
    r.tail_estimate = std::max(r.tail_estimate, tail / r.gram[a][a]);
  }
  return r;
}

/// Radius of convergence of the generating function in s: alpha * min(q, 1-q)
/// (the zeros of 1 + 2 s0 s + s^2 are i alpha (1-q) and -i alpha q).
inline double genfun_radius(double q) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidInput("generating function needs 0 < q < 1");
  double alpha = 1.0 / std::sqrt(q * (1.0 - q));
  return alpha * std::min(q, 1.0 - q);
}

/// G(q,d;lambda,s) = exp[(2/alpha)(lambda + d s0) arctan((2/alpha)(s + s0))]
///                   / [(s + s0)^2 + alpha^2/4]^{d/2}
/// with principal branches, s0 = i alpha (q - 1/2), alpha = (q(1-q))^{-1/2}.
/// Points with |s| at or beyond the radius of convergence are rejected since
/// the principal branches are only continuous inside that disc.
inline cdouble genfun_eval(double q, unsigned d, cdouble lambda, cdouble s) {
  const double radius = genfun_radius(q);
  if (std::abs(s) >= radius) throw InvalidInput("s too close to a branch point of G");
  const double alpha = 1.0 / std::sqrt(q * (1.0 - q));
  const cdouble s0(0.0, alpha * (q - 0.5));
  const cdouble expo = (2.0 / alpha) * (lambda + static_cast<double>(d) * s0) *
                       std::atan((2.0 / alpha) * (s + s0));
  const cdouble base = (s + s0) * (s + s0) + alpha * alpha / 4.0;
  return std::exp(expo) / std::pow(base, 0.5 * static_cast<double>(d));
}

/// e^{lambda arctan s} / (sqrt(s^2 + 1))^d, the q = 1/2 case.
inline cdouble genfun_eval_symmetric(unsigned d, cdouble lambda, cdouble s) {
  if (std::abs(s) >= 1.0) throw InvalidInput("s too close to a branch point of G");
  return std::exp(lambda * std::atan(s)) / std::pow(std::sqrt(s * s + 1.0), static_cast<double>(d));
}

/// Taylor coefficients c_0..c_order of f at 0 by the trapezoidal rule on the
/// circle |s| = radius applied to the Cauchy integral.
inline std::vector<cdouble> taylor_coefficients(const std::function<cdouble(cdouble)>& f,
                                                double radius, unsigned order,
                                                std::size_t points = 256) {
  std::vector<cdouble> samples(points);
  for (std::size_t m = 0; m < points; ++m)
    samples[m] = f(std::polar(radius, 2.0 * pi * static_cast<double>(m) / static_cast<double>(points)));
  std::vector<cdouble> c(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    cdouble acc = 0.0;
    for (std::size_t m = 0; m < points; ++m)
      acc += samples[m] *
             std::polar(1.0, -2.0 * pi * static_cast<double>(k * m % points) / static_cast<double>(points));
    c[k] = acc / (static_cast<double>(points) * std::pow(radius, static_cast<double>(k)));
  }
  return c;
}

inline std::vector<cdouble> genfun_coefficients(double q, unsigned d, cdouble lambda, unsigned order) {
  const double r = 0.5 * genfun_radius(q);
  return taylor_coefficients([&](cdouble s) { return genfun_eval(q, d, lambda, s); }, r, order);
}

/// Expected coefficients g_k(lambda) = (i alpha)^k / k! omega_k(t) at
/// lambda = i alpha (t + t0), from the exact omega_k.
inline std::vector<cdouble> genfun_expected(const RadialContext& ctx, double t, unsigned order) {
  const double q = ctx.q.get_d();
  const double alpha = 1.0 / std::sqrt(q * (1.0 - q));
  auto omegas = omega_sequence(ctx, order);
  std::vector<cdouble> out(order + 1);
  cdouble scale = 1.0;
  for (unsigned k = 0; k <= order; ++k) {
    if (k > 0) scale *= cdouble(0.0, alpha) / static_cast<double>(k);
    out[k] = scale * omegas[k].eval(t);
  }
  return out;
}

/// Residual (1 + 2 s0 s + s^2) dG/ds - (lambda - d s) G, with dG/ds from an
/// eighth-order central difference. `sign` = -1 flips the right side to
/// (lambda + d s) G.
inline cdouble genfun_ode_residual(double q, unsigned d, cdouble lambda, cdouble s, int sign = 1) {
  const double radius = genfun_radius(q);
  const double room = radius - std::abs(s);
  if (room <= 0.0) throw InvalidInput("s outside the disc of convergence");
  const double h = std::min(1e-2, 0.1 * room);
  static constexpr std::array<double, 4> stencil{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  cdouble deriv = 0.0;
  for (std::size_t k = 0; k < stencil.size(); ++k) {
    double step = h * static_cast<double>(k + 1);
    deriv += stencil[k] * (genfun_eval(q, d, lambda, s + step) - genfun_eval(q, d, lambda, s - step));
  }
  deriv /= h;
  const double alpha = 1.0 / std::sqrt(q * (1.0 - q));
  const cdouble s0(0.0, alpha * (q - 0.5));
  return (1.0 + 2.0 * s0 * s + s * s) * deriv -
         (lambda - static_cast<double>(sign * static_cast<int>(d)) * s) * genfun_eval(q, d, lambda, s);
}

}  // namespace weyl::numerics

#endif  // WEYL_NUMERICS_HPP
