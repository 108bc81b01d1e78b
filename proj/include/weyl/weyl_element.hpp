#ifndef WEYL_WEYL_ELEMENT_HPP
#define WEYL_WEYL_ELEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/sparse_sum.hpp"

namespace weyl {

/// The normal-ordered monomial (a_1^+)^{b_1}...(a_d^+)^{b_d} a_1^{a_1}...a_d^{a_d}.
/// `first` holds the creation exponents (beta), `second` the annihilation
/// exponents (alpha). Keys sort by (|beta|+|alpha|, beta, alpha).
using NormalMonomial = BiIndex;

inline const MultiIndex& creation_part(const NormalMonomial& m) { return m.first; }
inline const MultiIndex& annihilation_part(const NormalMonomial& m) { return m.second; }

/// Element of the Weyl algebra W_{2d} stored in normal form: creations to the
/// left of annihilations. Since the normal form is canonical, equality of
/// elements is equality of the term maps.
class WeylElement {
 public:
  explicit WeylElement(std::size_t d) : d_(d) {
    if (d == 0) throw InvalidInput("Weyl algebra needs at least one mode");
  }

  static WeylElement scalar(std::size_t d, const GaussRational& c) {
    WeylElement w(d);
    w.add_term({MultiIndex(d, 0), MultiIndex(d, 0)}, c);
    return w;
  }
  static WeylElement identity(std::size_t d) { return scalar(d, GaussRational(1)); }

  /// c * (a^+)^beta a^alpha.
  static WeylElement monomial(std::size_t d, MultiIndex beta, MultiIndex alpha,
                              const GaussRational& c = GaussRational(1)) {
    if (beta.size() != d || alpha.size() != d)
      throw InvalidInput("multi-index length does not match mode count");
    WeylElement w(d);
    w.add_term({std::move(beta), std::move(alpha)}, c);
    return w;
  }

  /// Annihilation generator a_j, modes numbered from 1.
  static WeylElement annihilation(std::size_t d, std::size_t j) {
    check_mode(d, j);
    return monomial(d, MultiIndex(d, 0), unit_index(d, j - 1));
  }
  /// Creation generator a_j^+, modes numbered from 1.
  static WeylElement creation(std::size_t d, std::size_t j) {
    check_mode(d, j);
    return monomial(d, unit_index(d, j - 1), MultiIndex(d, 0));
  }

  std::size_t d() const { return d_; }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }
  const SparseSum<NormalMonomial>::Map& terms() const { return terms_.terms(); }
  GaussRational coeff(const NormalMonomial& m) const { return terms_.coeff(m); }

  /// Largest total degree among the terms; -1 for zero.
  int degree() const {
    return is_zero() ? -1 : static_cast<int>(terms_.terms().rbegin()->first.degree());
  }

  /// Terms of total degree exactly `deg`.
  WeylElement homogeneous_part(unsigned deg) const {
    WeylElement out(d_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == deg) out.terms_.add_term(m, c);
    return out;
  }

  void add_term(const NormalMonomial& m, const GaussRational& c) {
    if (m.first.size() != d_ || m.second.size() != d_)
      throw InvalidInput("monomial length does not match mode count");
    terms_.add_term(m, c);
  }

  WeylElement& operator+=(const WeylElement& o) {
    check_same(o);
    terms_.add_scaled(o.terms_, GaussRational(1));
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    check_same(o);
    terms_.add_scaled(o.terms_, GaussRational(-1));
    return *this;
  }
  WeylElement& operator*=(const GaussRational& c) {
    terms_.scale(c);
    return *this;
  }
  WeylElement operator-() const {
    WeylElement r = *this;
    r.terms_.scale(GaussRational(-1));
    return r;
  }

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const GaussRational& c) { return a *= c; }
  friend WeylElement operator*(const GaussRational& c, WeylElement a) { return a *= c; }
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) { return x.multiply(y); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

  /// Product in W, rewritten to normal form through a_j a_k^+ = a_k^+ a_j + delta_jk I.
  WeylElement multiply(const WeylElement& y) const {
    check_same(y);
    WeylElement out(d_);
    for (const auto& [mx, cx] : terms_)
      for (const auto& [my, cy] : y.terms_) accumulate_monomial_product(mx, my, cx * cy, out);
    return out;
  }

 private:
  static void check_mode(std::size_t d, std::size_t j) {
    if (j < 1 || j > d)
      throw InvalidInput("mode index " + std::to_string(j) + " outside 1.." + std::to_string(d));
  }
  void check_same(const WeylElement& o) const {
    if (o.d_ != d_)
      throw InvalidInput("mode-count mismatch: " + std::to_string(d_) + " vs " +
                         std::to_string(o.d_));
  }

  // (c^b1 a^a1)(c^b2 a^a2) = c^b1 (a^a1 c^b2) a^a2, and per mode
  //   a^m (a^+)^n = sum_k k! C(m,k) C(n,k) (a^+)^{n-k} a^{m-k}.
  // Distinct modes commute, so the reorderings multiply across modes.
  void accumulate_monomial_product(const NormalMonomial& x, const NormalMonomial& y,
                                   const GaussRational& c, WeylElement& out) const {
    const MultiIndex& bx = x.first;
    const MultiIndex& ax = x.second;
    const MultiIndex& by = y.first;
    const MultiIndex& ay = y.second;
    MultiIndex beta(d_), alpha(d_);
    std::function<void(std::size_t, Integer)> rec = [&](std::size_t j, Integer weight) {
      if (j == d_) {
        out.terms_.add_term({beta, alpha}, c * GaussRational(Rational(weight)));
        return;
      }
      unsigned m = ax[j], n = by[j];
      for (unsigned k = 0; k <= std::min(m, n); ++k) {
        beta[j] = bx[j] + n - k;
        alpha[j] = m - k + ay[j];
        rec(j + 1, weight * factorial(k) * binomial(m, k) * binomial(n, k));
      }
    };
    rec(0, Integer(1));
  }

  std::size_t d_;
  SparseSum<NormalMonomial> terms_;
};

inline WeylElement pow(const WeylElement& w, unsigned exp) {
  WeylElement r = WeylElement::identity(w.d());
  for (unsigned k = 0; k < exp; ++k) r = r * w;
  return r;
}

/// [x, y] = xy - yx.
inline WeylElement commutator(const WeylElement& x, const WeylElement& y) { return x * y - y * x; }
/// {x, y} = xy + yx.
inline WeylElement anticommutator(const WeylElement& x, const WeylElement& y) {
  return x * y + y * x;
}
/// ad_x(w) = [x, w].
inline WeylElement ad(const WeylElement& x, const WeylElement& w) { return commutator(x, w); }

/// N = sum_j a_j^+ a_j.
inline WeylElement number_operator(std::size_t d) {
  WeylElement n(d);
  for (std::size_t j = 0; j < d; ++j) n.add_term({unit_index(d, j), unit_index(d, j)}, GaussRational(1));
  return n;
}

}  // namespace weyl

#endif  // WEYL_WEYL_ELEMENT_HPP
