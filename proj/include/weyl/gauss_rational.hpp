#ifndef WEYL_GAUSS_RATIONAL_HPP
#define WEYL_GAUSS_RATIONAL_HPP

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "weyl/errors.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Exact element re + im*i of Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero in Q(i)");
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational n = o.norm2();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussRational pow(const GaussRational& base, unsigned exp) {
  GaussRational result(1);
  for (unsigned k = 0; k < exp; ++k) result *= base;
  return result;
}

/// Text form: "p/q", "r/s*i", "p/q+r/s*i", "p/q-r/s*i"; unit imaginary parts
/// print as "i" / "-i".
inline std::string to_string(const GaussRational& z) {
  auto imag_part = [](const Rational& im) -> std::string {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
  };
  if (z.is_real()) return z.re().get_str();
  if (sgn(z.re()) == 0) return imag_part(z.im());
  std::string s = z.re().get_str();
  if (sgn(z.im()) > 0) s += "+";
  return s + imag_part(z.im());
}

/// Inverse of to_string. Also accepts "1*i" style and a leading '+'.
inline GaussRational parse_gauss_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw InvalidInput("empty Gaussian rational literal");
  if (s.back() != 'i') return GaussRational(parse_rational(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // Split off the imaginary coefficient at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  Rational im;
  if (im_text.empty() || im_text == "+")
    im = 1;
  else if (im_text == "-")
    im = -1;
  else
    im = parse_rational(im_text);
  Rational re = re_text.empty() ? Rational(0) : parse_rational(re_text);
  return {re, im};
}

inline std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  return os << to_string(z);
}

}  // namespace weyl

#endif  // WEYL_GAUSS_RATIONAL_HPP
