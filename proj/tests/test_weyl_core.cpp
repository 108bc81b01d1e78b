#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "weyl/expression.hpp"
#include "weyl/fock.hpp"
#include "weyl/random.hpp"
#include "weyl/weyl_element.hpp"

using namespace weyl;

namespace {

// Independent oracle: products of generator words rewritten one adjacent swap
// at a time with a_j c_k -> c_k a_j + delta_jk.
struct Letter {
  std::size_t mode;
  bool creation;
};
using Word = std::vector<Letter>;

void rewrite(const Word& w, const GaussRational& c, std::size_t d, WeylElement& out) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!w[i].creation && w[i + 1].creation) {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      rewrite(swapped, c, d, out);
      if (w[i].mode == w[i + 1].mode) {
        Word shorter;
        for (std::size_t k = 0; k < w.size(); ++k)
          if (k != i && k != i + 1) shorter.push_back(w[k]);
        rewrite(shorter, c, d, out);
      }
      return;
    }
  }
  MultiIndex beta(d, 0), alpha(d, 0);
  for (const auto& l : w) ++(l.creation ? beta : alpha)[l.mode];
  out.add_term({beta, alpha}, c);
}

Word word_of(const NormalMonomial& m) {
  Word w;
  for (std::size_t j = 0; j < m.first.size(); ++j)
    for (unsigned s = 0; s < m.first[j]; ++s) w.push_back({j, true});
  for (std::size_t j = 0; j < m.second.size(); ++j)
    for (unsigned s = 0; s < m.second[j]; ++s) w.push_back({j, false});
  return w;
}

WeylElement oracle_product(const WeylElement& x, const WeylElement& y) {
  WeylElement out(x.d());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      Word w = word_of(mx);
      Word tail = word_of(my);
      w.insert(w.end(), tail.begin(), tail.end());
      rewrite(w, cx * cy, x.d(), out);
    }
  return out;
}

}  // namespace

TEST(WeylMul, CanonicalCommutationRelation) {
  auto a = WeylElement::annihilation(1, 1), c = WeylElement::creation(1, 1);
  EXPECT_EQ(a * c, c * a + WeylElement::identity(1));
  EXPECT_EQ(commutator(a, c), WeylElement::identity(1));
  EXPECT_EQ(commutator(a, a), WeylElement(1));
  EXPECT_EQ(anticommutator(a, c), c * a * GaussRational(2) + WeylElement::identity(1));
  // Different modes commute.
  auto a2 = WeylElement::creation(2, 2), a1 = WeylElement::annihilation(2, 1);
  EXPECT_TRUE(commutator(a1, a2).is_zero());
}

TEST(WeylMul, NumberOperatorSquare) {
  auto n = number_operator(1);
  auto expected = WeylElement::monomial(1, {2}, {2}) + n;
  EXPECT_EQ(n * n, expected);
  auto fn = fock_represent(n, 6);
  EXPECT_TRUE(fock_represent(n * n, 6).block_equals(fn * fn, 4));
}

TEST(WeylMul, NumberOperatorShape) {
  EXPECT_EQ(number_operator(1), WeylElement::monomial(1, {1}, {1}));
  EXPECT_EQ(number_operator(2), WeylElement::monomial(2, {1, 0}, {1, 0}) + WeylElement::monomial(2, {0, 1}, {0, 1}));
  auto c1 = WeylElement::creation(2, 1);
  EXPECT_EQ(commutator(number_operator(2), c1), c1);
}

TEST(WeylMul, UnitLaw) {
  RandomSource rng(3);
  auto w = rng.weyl(2, 4);
  EXPECT_EQ(WeylElement::identity(2) * w, w);
  EXPECT_EQ(w * WeylElement::identity(2), w);
}

TEST(WeylMul, ModeMismatchThrows) {
  EXPECT_THROW(WeylElement::identity(1) * WeylElement::identity(2), InvalidInput);
  EXPECT_THROW(WeylElement::annihilation(2, 3), InvalidInput);
}

TEST(WeylMul, MatchesWordRewriting) {
  RandomSource rng(21);
  for (int n = 0; n < 60; ++n) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    auto x = rng.weyl(d, 4, 3), y = rng.weyl(d, 4, 3);
    ASSERT_EQ(x * y, oracle_product(x, y)) << to_string(x) << "  *  " << to_string(y);
  }
}

TEST(WeylMul, Associativity) {
  RandomSource rng(7);
  for (int n = 0; n < 40; ++n) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    auto x = rng.weyl(d, 4, 3), y = rng.weyl(d, 4, 3), z = rng.weyl(d, 4, 3);
    ASSERT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(WeylMul, JacobiAndLeibniz) {
  RandomSource rng(8);
  for (int n = 0; n < 30; ++n) {
    auto x = rng.weyl(2, 3, 3), y = rng.weyl(2, 3, 3), z = rng.weyl(2, 3, 3);
    EXPECT_TRUE((commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                 commutator(z, commutator(x, y)))
                    .is_zero());
    EXPECT_EQ(ad(x, y * z), ad(x, y) * z + y * ad(x, z));
  }
}

TEST(WeylMul, AdjointActionsCommute) {
  RandomSource rng(9);
  for (int n = 0; n < 10; ++n) {
    auto w = rng.weyl(2, 4);
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t k = 1; k <= 2; ++k) {
        auto a = WeylElement::annihilation(2, j), c = WeylElement::creation(2, k);
        EXPECT_EQ(ad(a, ad(c, w)), ad(c, ad(a, w)));
      }
  }
}

TEST(Fock, IdentityAndNumberOperator) {
  auto id = fock_represent(WeylElement::identity(2), 5);
  EXPECT_EQ(id, FockMatrix::identity(std::make_shared<const FockBasis>(2, 5)));
  auto n = fock_represent(number_operator(1), 5);
  for (std::size_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(n.entry(k, k), GaussRational(static_cast<long>(k)));
    for (std::size_t l = 0; l <= 5; ++l)
      if (l != k) {
        EXPECT_TRUE(n.entry(k, l).is_zero());
      }
  }
}

TEST(Fock, BasisSize) {
  // Occupation vectors in d modes with |n| <= K: C(K + d, d).
  EXPECT_EQ(FockBasis(1, 7).size(), 8u);
  EXPECT_EQ(FockBasis(2, 4).size(), 15u);
  EXPECT_EQ(FockBasis(3, 3).size(), 20u);
}

TEST(Fock, GuardBandedProducts) {
  RandomSource rng(13);
  const unsigned cutoff = 10;
  for (int n = 0; n < 40; ++n) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
    auto x = rng.weyl(d, 3, 3), y = rng.weyl(d, 3, 3);
    auto basis = std::make_shared<const FockBasis>(d, cutoff);
    unsigned guard = cutoff - static_cast<unsigned>(std::max(0, x.degree())) - static_cast<unsigned>(std::max(0, y.degree()));
    ASSERT_TRUE(fock_represent(x * y, basis).block_equals(fock_represent(x, basis) * fock_represent(y, basis), guard));
  }
}

TEST(Fock, TruncationEdgeIsReal) {
  // Without the guard band the truncated product disagrees near the cutoff.
  auto a = WeylElement::annihilation(1, 1), c = WeylElement::creation(1, 1);
  auto basis = std::make_shared<const FockBasis>(1, 3);
  auto lhs = fock_represent(a * c, basis), rhs = fock_represent(a, basis) * fock_represent(c, basis);
  EXPECT_FALSE(lhs == rhs);
  EXPECT_TRUE(lhs.block_equals(rhs, 1));
}

TEST(Fock, SquareOfSum) {
  auto w = parse_weyl("(a1+c1)^2");
  EXPECT_EQ(w, parse_weyl("c1^2 + 2*c1*a1 + a1^2 + 1"));
  auto basis = std::make_shared<const FockBasis>(1, 8);
  auto s = fock_represent(parse_weyl("a1+c1"), basis);
  EXPECT_TRUE(fock_represent(w, basis).block_equals(s * s, 6));
}
