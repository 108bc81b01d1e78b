#ifndef WEYL_UNIPOLY_HPP
#define WEYL_UNIPOLY_HPP

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weyl/gauss_rational.hpp"

namespace weyl {

/// Univariate polynomial over Q(i). Coefficient index = degree; the stored
/// leading coefficient is nonzero, and the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(GaussRational c) {  // NOLINT(google-explicit-constructor)
    coeffs_.push_back(std::move(c));
    trim();
  }
  UniPoly(std::initializer_list<GaussRational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit UniPoly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial c * t^k.
  static UniPoly monomial(unsigned k, GaussRational c = GaussRational(1)) {
    std::vector<GaussRational> v(k + 1);
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }
  /// The identity polynomial t.
  static UniPoly t() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const GaussRational> coefficients() const { return coeffs_; }

  /// Coefficient of t^k (zero past the degree).
  GaussRational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussRational();
  }
  GaussRational leading() const { return is_zero() ? GaussRational() : coeffs_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const GaussRational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const GaussRational& c) { return a *= c; }
  friend UniPoly operator*(const GaussRational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Exact Horner evaluation.
  GaussRational operator()(const GaussRational& x) const {
    GaussRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  /// Floating-point Horner evaluation of the exact coefficients.
  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
  }

  /// t -> p(scale * t + shift).
  UniPoly compose_affine(const GaussRational& scale, const GaussRational& shift) const {
    UniPoly lin{shift, scale};
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= lin;
      acc += UniPoly(*it);
    }
    return acc;
  }

  /// t -> p(t + shift).
  UniPoly compose_shift(const GaussRational& shift) const {
    return compose_affine(GaussRational(1), shift);
  }

  /// Forward difference p(t+1) - p(t).
  UniPoly forward_difference() const { return compose_shift(GaussRational(1)) - *this; }
  /// Backward difference p(t) - p(t-1).
  UniPoly backward_difference() const { return *this - compose_shift(GaussRational(-1)); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GaussRational> coeffs_;
};

/// Rising factorial (base + t)(base + t + 1)...(base + t + k - 1) as a
/// polynomial in t. With base = 0 this is (t)_k.
inline UniPoly rising_factorial_poly(const UniPoly& base, unsigned k) {
  UniPoly acc(GaussRational(1));
  for (unsigned j = 0; j < k; ++j) acc *= base + UniPoly(GaussRational(static_cast<long>(j)));
  return acc;
}

/// Falling factorial t(t-1)...(t-k+1).
inline UniPoly falling_factorial_poly(unsigned k) {
  UniPoly acc(GaussRational(1));
  for (unsigned j = 0; j < k; ++j) acc *= UniPoly{GaussRational(-static_cast<long>(j)), GaussRational(1)};
  return acc;
}

/// Human-readable form in the variable `var`, highest degree first.
inline std::string to_string(const UniPoly& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const GaussRational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    bool negative = !compound && !cs.empty() && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0)
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }

}  // namespace weyl

#endif  // WEYL_UNIPOLY_HPP
