#include <gtest/gtest.h>

#include "weyl/gauss_rational.hpp"
#include "weyl/random.hpp"
#include "weyl/unipoly.hpp"

using namespace weyl;

namespace {

GaussRational gr(long a, long b, long c = 0, long e = 1) { return {make_rational(a, b), make_rational(c, e)}; }

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("0/7").get_den(), 1);
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("1.5"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(GaussRational, Arithmetic) {
  EXPECT_EQ(gr(1, 1, 1) * gr(1, 1, -1), GaussRational(2));
  GaussRational x = gr(3, 7, -2, 5);
  EXPECT_EQ(x + GaussRational(), x);
  EXPECT_EQ(gr(1, 2, 1) * gr(2, 3), gr(1, 3, 2, 3));
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_EQ(x / x, GaussRational(1));
  EXPECT_THROW(x / GaussRational(), InvalidInput);
  EXPECT_EQ(x.conj().conj(), x);
  EXPECT_EQ(x.norm2(), make_rational(9, 49) + make_rational(4, 25));
  EXPECT_EQ(pow(GaussRational::i(), 7), -GaussRational::i());
}

TEST(GaussRational, TextRoundTrip) {
  for (const char* s : {"0", "3/2", "-i", "i", "2/3*i", "-1/2+i", "5-7/3*i"}) {
    EXPECT_EQ(to_string(parse_gauss_rational(s)), s);
  }
  EXPECT_EQ(parse_gauss_rational("1+1*i"), gr(1, 1, 1));
}

TEST(GaussRational, FieldAxiomsRandom) {
  RandomSource rng(11);
  for (int n = 0; n < 200; ++n) {
    GaussRational a = rng.nonzero_scalar(60), b = rng.nonzero_scalar(60), c = rng.nonzero_scalar(60);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(UniPoly, ShiftAndEval) {
  const UniPoly t = UniPoly::t();
  EXPECT_EQ((t * t).compose_shift(GaussRational(1)), (UniPoly{1, 2, 1}));
  EXPECT_EQ(UniPoly(gr(5, 3)).compose_shift(gr(7, 2, 1)), UniPoly(gr(5, 3)));
  EXPECT_EQ((t * t * t).compose_shift(GaussRational(-1)), (UniPoly{-1, 3, -3, 1}));
  EXPECT_EQ((UniPoly{1, 0, 1})(GaussRational::i()), GaussRational());
  EXPECT_EQ(UniPoly()(gr(3, 4)), GaussRational());
  EXPECT_EQ((UniPoly{2, 3, 1})(GaussRational(2)), GaussRational(12));
}

TEST(UniPoly, TrimmedRepresentation) {
  UniPoly p{1, 2, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(UniPoly{0}.degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).coefficients().size(), 0u);
}

TEST(UniPoly, RingAxiomsRandom) {
  RandomSource rng(5);
  for (int n = 0; n < 100; ++n) {
    UniPoly a = rng.unipoly(5), b = rng.unipoly(5), c = rng.unipoly(5);
    GaussRational s = rng.nonzero_scalar();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
    EXPECT_EQ(a.compose_shift(s).compose_shift(-s), a);
    EXPECT_EQ(a(s) * b(s), (a * b)(s));
  }
}

TEST(UniPoly, Differences) {
  // Delta t^2 = 2t + 1, nabla t^2 = 2t - 1.
  const UniPoly t2{0, 0, 1};
  EXPECT_EQ(t2.forward_difference(), (UniPoly{1, 2}));
  EXPECT_EQ(t2.backward_difference(), (UniPoly{-1, 2}));
  EXPECT_EQ(falling_factorial_poly(3), (UniPoly{0, 2, -3, 1}));
  EXPECT_EQ(rising_factorial_poly(UniPoly{1, 1}, 2), (UniPoly{2, 3, 1}));
}

TEST(UniPoly, Printing) {
  EXPECT_EQ(to_string(UniPoly{2, 3, 1}), "t^2 + 3*t + 2");
  EXPECT_EQ(to_string(UniPoly{GaussRational(), gr(-1, 2)}, "x"), "-1/2*x");
  EXPECT_EQ(to_string(UniPoly{gr(1, 1, 1)}), "(1+i)");
  EXPECT_EQ(to_string(UniPoly()), "0");
}
