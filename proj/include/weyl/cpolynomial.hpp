#ifndef WEYL_CPOLYNOMIAL_HPP
#define WEYL_CPOLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>

#include "weyl/errors.hpp"
#include "weyl/sparse_sum.hpp"

namespace weyl {

/// z^alpha zbar^beta: `first` holds the z exponents, `second` the zbar exponents.
using CMonomial = BiIndex;

/// Element of the commutative algebra P(R^{2d}) = C[z_1..z_d, zbar_1..zbar_d].
class CPolynomial {
 public:
  explicit CPolynomial(std::size_t d) : d_(d) {
    if (d == 0) throw InvalidInput("polynomial algebra needs d >= 1");
  }

  static CPolynomial constant(std::size_t d, const GaussRational& c) {
    CPolynomial p(d);
    p.add_term({MultiIndex(d, 0), MultiIndex(d, 0)}, c);
    return p;
  }
  static CPolynomial monomial(std::size_t d, MultiIndex alpha, MultiIndex beta,
                              const GaussRational& c = GaussRational(1)) {
    CPolynomial p(d);
    p.add_term({std::move(alpha), std::move(beta)}, c);
    return p;
  }
  /// z_j, modes numbered from 1.
  static CPolynomial z(std::size_t d, std::size_t j) {
    check_mode(d, j);
    return monomial(d, unit_index(d, j - 1), MultiIndex(d, 0));
  }
  /// zbar_j, modes numbered from 1.
  static CPolynomial zbar(std::size_t d, std::size_t j) {
    check_mode(d, j);
    return monomial(d, MultiIndex(d, 0), unit_index(d, j - 1));
  }
  /// r^2 = sum_j z_j zbar_j.
  static CPolynomial r_squared(std::size_t d) {
    CPolynomial p(d);
    for (std::size_t j = 0; j < d; ++j) p.add_term({unit_index(d, j), unit_index(d, j)}, GaussRational(1));
    return p;
  }

  std::size_t d() const { return d_; }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }
  const SparseSum<CMonomial>::Map& terms() const { return terms_.terms(); }
  GaussRational coeff(const CMonomial& m) const { return terms_.coeff(m); }

  int degree() const {
    return is_zero() ? -1 : static_cast<int>(terms_.terms().rbegin()->first.degree());
  }

  bool is_homogeneous() const {
    if (is_zero()) return true;
    unsigned lo = terms_.terms().begin()->first.degree();
    return lo == static_cast<unsigned>(degree());
  }

  CPolynomial homogeneous_part(unsigned deg) const {
    CPolynomial out(d_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == deg) out.terms_.add_term(m, c);
    return out;
  }

  void add_term(const CMonomial& m, const GaussRational& c) {
    if (m.first.size() != d_ || m.second.size() != d_)
      throw InvalidInput("monomial length does not match mode count");
    terms_.add_term(m, c);
  }

  CPolynomial& operator+=(const CPolynomial& o) {
    check_same(o);
    terms_.add_scaled(o.terms_, GaussRational(1));
    return *this;
  }
  CPolynomial& operator-=(const CPolynomial& o) {
    check_same(o);
    terms_.add_scaled(o.terms_, GaussRational(-1));
    return *this;
  }
  CPolynomial& operator*=(const GaussRational& c) {
    terms_.scale(c);
    return *this;
  }
  CPolynomial operator-() const {
    CPolynomial r = *this;
    r.terms_.scale(GaussRational(-1));
    return r;
  }

  friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
  friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
  friend CPolynomial operator*(CPolynomial a, const GaussRational& c) { return a *= c; }
  friend CPolynomial operator*(const GaussRational& c, CPolynomial a) { return a *= c; }
  friend CPolynomial operator*(const CPolynomial& x, const CPolynomial& y) {
    x.check_same(y);
    CPolynomial out(x.d_);
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) {
        CMonomial m{mx.first, mx.second};
        for (std::size_t j = 0; j < x.d_; ++j) {
          m.first[j] += my.first[j];
          m.second[j] += my.second[j];
        }
        out.terms_.add_term(m, cx * cy);
      }
    return out;
  }

  friend bool operator==(const CPolynomial& a, const CPolynomial& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CPolynomial& a, const CPolynomial& b) { return !(a == b); }

 private:
  static void check_mode(std::size_t d, std::size_t j) {
    if (j < 1 || j > d)
      throw InvalidInput("mode index " + std::to_string(j) + " outside 1.." + std::to_string(d));
  }
  void check_same(const CPolynomial& o) const {
    if (o.d_ != d_)
      throw InvalidInput("mode-count mismatch: " + std::to_string(d_) + " vs " +
                         std::to_string(o.d_));
  }

  std::size_t d_;
  SparseSum<CMonomial> terms_;
};

inline CPolynomial pow(const CPolynomial& p, unsigned exp) {
  CPolynomial r = CPolynomial::constant(p.d(), GaussRational(1));
  for (unsigned k = 0; k < exp; ++k) r = r * p;
  return r;
}

/// Partial derivative in z_j (wrt_conjugate = false) or zbar_j (true); j from 1.
inline CPolynomial partial(const CPolynomial& p, std::size_t j, bool wrt_conjugate) {
  if (j < 1 || j > p.d()) throw InvalidInput("derivative mode index out of range");
  CPolynomial out(p.d());
  for (const auto& [m, c] : p.terms()) {
    const MultiIndex& exps = wrt_conjugate ? m.second : m.first;
    unsigned e = exps[j - 1];
    if (e == 0) continue;
    CMonomial dm = m;
    (wrt_conjugate ? dm.second : dm.first)[j - 1] = e - 1;
    out.add_term(dm, c * GaussRational(static_cast<long>(e)));
  }
  return out;
}

}  // namespace weyl

#endif  // WEYL_CPOLYNOMIAL_HPP
