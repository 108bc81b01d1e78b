#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "weyl/expression.hpp"
#include "weyl/harmonic.hpp"
#include "weyl/ordering.hpp"
#include "weyl/random.hpp"

using namespace weyl;

namespace {

const std::vector<Rational> kQs{Rational(0), make_rational(1, 4), make_rational(1, 2), make_rational(3, 4),
                                Rational(1)};

WeylElement power(const WeylElement& x, unsigned n) { return pow(x, n); }

// Wick: normal form of a^alpha (a^+)^beta by plain multiplication.
WeylElement wick_oracle(std::size_t d, const CMonomial& m) {
  WeylElement w = WeylElement::identity(d);
  for (std::size_t l = 1; l <= d; ++l) w = w * power(WeylElement::annihilation(d, l), m.first[l - 1]);
  for (std::size_t l = 1; l <= d; ++l) w = w * power(WeylElement::creation(d, l), m.second[l - 1]);
  return w;
}

// Symmetric ordering: average over all distinct arrangements of the letters
// of each mode.
WeylElement symmetric_oracle(std::size_t d, const CMonomial& m) {
  WeylElement w = WeylElement::identity(d);
  for (std::size_t l = 1; l <= d; ++l) {
    std::vector<int> letters(m.first[l - 1], 0);
    letters.insert(letters.end(), m.second[l - 1], 1);
    std::sort(letters.begin(), letters.end());
    WeylElement sum(d);
    long count = 0;
    do {
      WeylElement word = WeylElement::identity(d);
      for (int x : letters) word = word * (x == 0 ? WeylElement::annihilation(d, l) : WeylElement::creation(d, l));
      sum += word;
      ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    w = w * (sum * GaussRational(make_rational(1, count)));
  }
  return w;
}

bool collinear(const WeylElement& u, const WeylElement& v) {
  if (u.is_zero() || v.is_zero()) return u.is_zero() && v.is_zero();
  const auto& [key, cu] = *u.terms().begin();
  GaussRational cv = v.coeff(key);
  if (cv.is_zero()) return false;
  return u == v * (cu / cv);
}

// sum_{l=0}^{k} a^l (a^+)^j a^{k-l} / (l! (top - l)!), terms with l > top dropped.
WeylElement lb_sum(unsigned j, unsigned k, unsigned top) {
  auto a = WeylElement::annihilation(1, 1), c = WeylElement::creation(1, 1);
  WeylElement out(1);
  for (unsigned l = 0; l <= std::min(k, top); ++l) {
    Rational w(1);
    w /= Rational(factorial(l) * factorial(top - l));
    out += power(a, l) * power(c, j) * power(a, k - l) * GaussRational(w);
  }
  return out;
}

}  // namespace

TEST(OperatorsM, Examples) {
  RandomSource rng(2);
  auto w = rng.weyl(1, 3);
  OrderingContext wick(1, 0);
  EXPECT_EQ(apply_M(wick, 1, w), WeylElement::annihilation(1, 1) * w);
  for (const auto& q : kQs) {
    OrderingContext ctx(1, q);
    EXPECT_EQ(apply_M(ctx, 1, apply_Mplus(ctx, 1, WeylElement::identity(1))),
              number_operator(1) + WeylElement::scalar(1, GaussRational(Rational(1 - q))));
  }
  EXPECT_THROW(apply_M(wick, 2, w), InvalidInput);
}

TEST(OperatorsM, CommutingFamily) {
  RandomSource rng(6);
  for (const auto& q : kQs) {
    OrderingContext ctx(2, q);
    auto w = rng.weyl(2, 4);
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t k = 1; k <= 2; ++k) {
        EXPECT_EQ(apply_M(ctx, j, apply_Mplus(ctx, k, w)), apply_Mplus(ctx, k, apply_M(ctx, j, w)));
        EXPECT_EQ(apply_M(ctx, j, apply_M(ctx, k, w)), apply_M(ctx, k, apply_M(ctx, j, w)));
        EXPECT_EQ(apply_Mplus(ctx, j, apply_Mplus(ctx, k, w)), apply_Mplus(ctx, k, apply_Mplus(ctx, j, w)));
      }
  }
}

TEST(OrderQ, SpecialCasesAllMonomials) {
  for (std::size_t d = 1; d <= 2; ++d)
    for (unsigned deg = 0; deg <= 4; ++deg)
      for (const auto& e : compositions(2 * d, deg)) {
        CMonomial m{MultiIndex(e.begin(), e.begin() + static_cast<long>(d)),
                    MultiIndex(e.begin() + static_cast<long>(d), e.end())};
        EXPECT_EQ(order_monomial({d, 0}, m), wick_oracle(d, m));
        EXPECT_EQ(order_monomial({d, 1}, m), WeylElement::monomial(d, m.second, m.first));
        EXPECT_EQ(order_monomial({d, make_rational(1, 2)}, m), symmetric_oracle(d, m));
      }
}

TEST(OrderQ, SymmetricExample) {
  OrderingContext ctx(1, make_rational(1, 2));
  EXPECT_EQ(order_q(ctx, parse_poly("z1*zb1")), parse_weyl("c1*a1 + 1/2"));
}

TEST(BElement, Examples) {
  OrderingContext wick(1, 0);
  for (unsigned k = 0; k <= 4; ++k)
    EXPECT_EQ(b_element(wick, 1, 0, k), WeylElement::monomial(1, {0}, {k}));
  for (const auto& q : kQs)
    for (unsigned j = 0; j <= 4; ++j)
      EXPECT_EQ(b_element({1, q}, 1, j, 0), WeylElement::monomial(1, {j}, {0}));
  EXPECT_EQ(b_element({1, make_rational(1, 2)}, 1, 1, 1), parse_weyl("c1*a1 + 1/2"));
}

TEST(BElement, FactorizationMatchesOperatorRoute) {
  RandomSource rng(12);
  for (const auto& q : kQs) {
    OrderingContext ctx(2, q);
    for (int n = 0; n < 10; ++n) {
      auto p = rng.poly(2, 5, 3);
      for (const auto& [m, c] : p.terms()) {
        WeylElement product = WeylElement::identity(2);
        for (std::size_t l = 1; l <= 2; ++l) product = product * b_element(ctx, l, m.second[l - 1], m.first[l - 1]);
        EXPECT_EQ(product, order_monomial_via_M(ctx, m));
      }
    }
  }
}

TEST(BElement, FactorsAreNotInterchangeable) {
  // The z exponent enters as the annihilation count and the zbar exponent as
  // the creation count; swapping them gives a different element.
  OrderingContext ctx(1, make_rational(1, 3));
  CMonomial m{{2}, {1}};
  EXPECT_EQ(order_monomial_via_M(ctx, m), b_element(ctx, 1, 1, 2));
  EXPECT_NE(order_monomial_via_M(ctx, m), b_element(ctx, 1, 2, 1));
}

TEST(BElement, LouckBiedenharnProportionality) {
  OrderingContext sym(1, make_rational(1, 2));
  for (unsigned j = 0; j <= 5; ++j)
    for (unsigned k = 0; k <= 5; ++k) {
      // Weights 1/(l!(k-l)!) give a multiple of B^j_k for every (j, k).
      EXPECT_TRUE(collinear(b_element(sym, 1, j, k), lb_sum(j, k, k))) << j << "," << k;
    }
  // With weights 1/(l!(j-l)!) proportionality holds on the diagonal j = k.
  for (unsigned j = 0; j <= 5; ++j) EXPECT_TRUE(collinear(b_element(sym, 1, j, j), lb_sum(j, j, j)));
  EXPECT_FALSE(collinear(b_element(sym, 1, 2, 1), lb_sum(2, 1, 2)));
}

TEST(UnorderQ, Examples) {
  for (const auto& q : kQs) {
    OrderingContext ctx(1, q);
    EXPECT_EQ(unorder_q(ctx, WeylElement::identity(1)), CPolynomial::constant(1, GaussRational(1)));
  }
  EXPECT_EQ(unorder_q({1, 0}, parse_weyl("a1*c1")), parse_poly("z1*zb1"));
}

TEST(UnorderQ, RoundTripRandom) {
  RandomSource rng(14);
  for (const auto& q : kQs) {
    for (int n = 0; n < 8; ++n) {
      std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
      OrderingContext ctx(d, q);
      auto p = rng.poly(d, 5);
      auto w = rng.weyl(d, 5);
      EXPECT_EQ(unorder_q(ctx, order_q(ctx, p)), p);
      EXPECT_EQ(order_q(ctx, unorder_q(ctx, w)), w);
    }
  }
  // Accepted outside [0, 1] as well.
  OrderingContext wide(1, make_rational(-3, 2));
  auto p = rng.poly(1, 4);
  EXPECT_EQ(unorder_q(wide, order_q(wide, p)), p);
}

TEST(TransferredTriple, OnIdentity) {
  for (const auto& q : kQs)
    for (std::size_t d = 1; d <= 3; ++d) {
      OrderingContext ctx(d, q);
      auto id = WeylElement::identity(d);
      EXPECT_EQ(cal_R(ctx, id), number_operator(d) + WeylElement::scalar(d, GaussRational(Rational(Rational(static_cast<long>(d)) * (1 - q)))));
      EXPECT_TRUE(cal_L(ctx, id).is_zero());
      EXPECT_EQ(cal_E(ctx, id), id * GaussRational(static_cast<long>(d)));
    }
}

TEST(TransferredTriple, IntertwiningRandom) {
  RandomSource rng(15);
  for (const auto& q : kQs)
    for (int n = 0; n < 6; ++n) {
      std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
      OrderingContext ctx(d, q);
      auto p = rng.homogeneous(d, static_cast<unsigned>(rng.uniform(0, 4)));
      auto op = order_q(ctx, p);
      EXPECT_EQ(order_q(ctx, op_R(p)), cal_R(ctx, op));
      EXPECT_EQ(order_q(ctx, op_L(p)), cal_L(ctx, op));
      EXPECT_EQ(order_q(ctx, op_E(p)), cal_E(ctx, op));
      for (std::size_t j = 1; j <= d; ++j) {
        EXPECT_EQ(order_q(ctx, partial(p, j, false)), -ad(WeylElement::creation(d, j), op));
        EXPECT_EQ(order_q(ctx, partial(p, j, true)), ad(WeylElement::annihilation(d, j), op));
      }
    }
}

TEST(TransferredTriple, LaplacianIndependentOfQ) {
  RandomSource rng(16);
  auto w = rng.weyl(2, 4);
  auto reference = cal_L({2, 0}, w);
  for (const auto& q : kQs) EXPECT_EQ(cal_L({2, q}, w), reference);
}

TEST(TransferredTriple, SymmetricForms) {
  RandomSource rng(18);
  OrderingContext sym(2, make_rational(1, 2));
  for (int n = 0; n < 10; ++n) {
    auto w = rng.weyl(2, 4);
    EXPECT_EQ(cal_R(sym, w), cal_R_symmetric(w));
    EXPECT_EQ(cal_L(sym, w), cal_L_symmetric(w));
    EXPECT_EQ(cal_E(sym, w), cal_E_symmetric(w));
  }
}

TEST(TransferredTriple, Sl2Random) {
  RandomSource rng(19);
  for (const auto& q : kQs) {
    OrderingContext ctx(2, q);
    for (int n = 0; n < 5; ++n) {
      auto w = rng.weyl(2, 4);
      EXPECT_EQ(cal_R(ctx, cal_L(ctx, w)) - cal_L(ctx, cal_R(ctx, w)), -cal_E(ctx, w));
      EXPECT_EQ(cal_E(ctx, cal_R(ctx, w)) - cal_R(ctx, cal_E(ctx, w)), cal_R(ctx, w) * GaussRational(2));
      EXPECT_EQ(cal_E(ctx, cal_L(ctx, w)) - cal_L(ctx, cal_E(ctx, w)), cal_L(ctx, w) * GaussRational(-2));
    }
  }
}
