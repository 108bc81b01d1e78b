#ifndef WEYL_RANDOM_HPP
#define WEYL_RANDOM_HPP

// Deterministic generators for randomized identity checks. Draws are built
// from raw mt19937_64 output (not std::uniform_int_distribution) so a seed
// reproduces the same elements on every standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "weyl/cpolynomial.hpp"
#include "weyl/unipoly.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  bool coin(unsigned percent) { return uniform(0, 99) < static_cast<long>(percent); }

  /// Small rational n/m with |n| <= 4, 1 <= m <= 3.
  Rational rational() {
    Rational r(uniform(-4, 4), uniform(1, 3));
    r.canonicalize();
    return r;
  }
  GaussRational nonzero_scalar(unsigned complex_percent = 30) {
    for (;;) {
      GaussRational c(rational(), coin(complex_percent) ? rational() : Rational(0));
      if (!c.is_zero()) return c;
    }
  }

  MultiIndex multi_index(std::size_t d, unsigned total) {
    MultiIndex e(d, 0);
    for (unsigned s = 0; s < total; ++s) ++e[static_cast<std::size_t>(uniform(0, static_cast<long>(d) - 1))];
    return e;
  }

  /// Random element with up to `terms` monomials of total degree <= max_degree.
  WeylElement weyl(std::size_t d, unsigned max_degree, unsigned terms = 4) {
    WeylElement w(d);
    for (unsigned n = 0; n < terms; ++n) {
      auto deg = static_cast<unsigned>(uniform(0, max_degree));
      auto split = static_cast<unsigned>(uniform(0, deg));
      w.add_term({multi_index(d, split), multi_index(d, deg - split)}, nonzero_scalar());
    }
    return w;
  }

  /// Random polynomial with up to `terms` monomials of total degree <= max_degree.
  CPolynomial poly(std::size_t d, unsigned max_degree, unsigned terms = 4) {
    CPolynomial p(d);
    for (unsigned n = 0; n < terms; ++n) add_monomial(p, static_cast<unsigned>(uniform(0, max_degree)));
    return p;
  }

  /// Random nonzero homogeneous polynomial of the given degree.
  CPolynomial homogeneous(std::size_t d, unsigned degree, unsigned terms = 4) {
    for (;;) {
      CPolynomial p(d);
      for (unsigned n = 0; n < terms; ++n) add_monomial(p, degree);
      if (!p.is_zero()) return p;
    }
  }

  UniPoly unipoly(unsigned max_degree) {
    std::vector<GaussRational> c;
    auto deg = static_cast<unsigned>(uniform(0, max_degree));
    for (unsigned k = 0; k <= deg; ++k) c.push_back(coin(70) ? nonzero_scalar() : GaussRational());
    return UniPoly(std::move(c));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  void add_monomial(CPolynomial& p, unsigned deg) {
    const std::size_t d = p.d();
    auto split = static_cast<unsigned>(uniform(0, deg));
    p.add_term({multi_index(d, split), multi_index(d, deg - split)}, nonzero_scalar());
  }

  std::mt19937_64 engine_;
};

}  // namespace weyl

#endif  // WEYL_RANDOM_HPP
