#include <gtest/gtest.h>

#include "weyl/expression.hpp"
#include "weyl/harmonic.hpp"
#include "weyl/linalg.hpp"
#include "weyl/random.hpp"

using namespace weyl;

namespace {

// Oracle for harmonic_decompose: one exact linear system whose unknowns are
// the coefficients of every h_j, with equations sum_j r^{2j} h_j = p and
// L h_j = 0.
std::vector<CPolynomial> decompose_by_solve(const CPolynomial& p, unsigned m) {
  const std::size_t d = p.d();
  const unsigned top = m / 2;
  std::vector<std::vector<CMonomial>> bases;
  std::vector<std::size_t> offset;
  std::size_t columns = 0;
  for (unsigned j = 0; j <= top; ++j) {
    bases.push_back(monomial_basis(d, m - 2 * j));
    offset.push_back(columns);
    columns += bases.back().size();
  }
  KeyIndex<CMonomial> targets;
  std::vector<SparseVector> rows;
  std::vector<GaussRational> rhs;
  auto put = [&](std::size_t row, std::size_t col, const GaussRational& c) {
    if (row >= rows.size()) {
      rows.resize(row + 1);
      rhs.resize(row + 1);
    }
    rows[row][col] += c;
  };
  // Matching equations.
  for (unsigned j = 0; j <= top; ++j) {
    CPolynomial r2j = CPolynomial::constant(d, GaussRational(1));
    for (unsigned s = 0; s < j; ++s) r2j = op_R(r2j);
    for (std::size_t k = 0; k < bases[j].size(); ++k) {
      CPolynomial image = r2j * CPolynomial::monomial(d, bases[j][k].first, bases[j][k].second);
      for (const auto& [mono, c] : image.terms()) put(targets(mono), offset[j] + k, c);
    }
  }
  for (const auto& [mono, c] : p.terms()) {
    std::size_t row = targets(mono);
    if (row >= rows.size()) {
      rows.resize(row + 1);
      rhs.resize(row + 1);
    }
    rhs[row] = c;
  }
  // Harmonicity equations.
  for (unsigned j = 0; j <= top; ++j) {
    KeyIndex<CMonomial> lap;
    const std::size_t base_row = rows.size();
    for (std::size_t k = 0; k < bases[j].size(); ++k) {
      CPolynomial image = op_L(CPolynomial::monomial(d, bases[j][k].first, bases[j][k].second));
      for (const auto& [mono, c] : image.terms()) put(base_row + lap(mono), offset[j] + k, c);
    }
  }
  for (auto& row : rows)
    std::erase_if(row, [](const auto& entry) { return entry.second.is_zero(); });
  auto x = solve(rows, rhs, columns);
  if (!x) throw std::runtime_error("oracle system inconsistent");
  std::vector<CPolynomial> h(top + 1, CPolynomial(d));
  for (const auto& [col, c] : *x) {
    unsigned j = top;
    while (offset[j] > col) --j;
    const auto& mono = bases[j][col - offset[j]];
    h[j].add_term(mono, c);
  }
  return h;
}

}  // namespace

TEST(CPolynomial, Basics) {
  EXPECT_EQ(CPolynomial::z(1, 1) * CPolynomial::zbar(1, 1), CPolynomial::monomial(1, {1}, {1}));
  EXPECT_EQ(CPolynomial::r_squared(2), parse_poly("z1*zb1 + z2*zb2"));
  EXPECT_EQ(pow(parse_poly("z1+zb1"), 2), parse_poly("z1^2 + 2*z1*zb1 + zb1^2"));
  EXPECT_THROW(CPolynomial::z(1, 1) * CPolynomial::z(2, 1), InvalidInput);
}

TEST(Operators, Examples) {
  EXPECT_EQ(op_L(parse_poly("z1*zb1")), CPolynomial::constant(1, GaussRational(1)));
  EXPECT_EQ(op_E(parse_poly("z1^2")), parse_poly("3*z1^2"));
  // L on a monomial: sum_j alpha_j beta_j z^{alpha-e_j} zbar^{beta-e_j}.
  EXPECT_EQ(op_L(parse_poly("z1^2*zb1^3*z2*zb2", 2)), parse_poly("6*z1*zb1^2*z2*zb2 + z1^2*zb1^3", 2));
}

TEST(Operators, Sl2Random) {
  RandomSource rng(1);
  for (int n = 0; n < 60; ++n) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    auto p = rng.poly(d, 6);
    EXPECT_EQ(op_R(op_L(p)) - op_L(op_R(p)), -op_E(p));
    EXPECT_EQ(op_E(op_R(p)) - op_R(op_E(p)), op_R(p) * GaussRational(2));
    EXPECT_EQ(op_E(op_L(p)) - op_L(op_E(p)), op_L(p) * GaussRational(-2));
  }
}

TEST(HarmonicDecompose, Examples) {
  auto h = parse_poly("z1^3 - 3*z1*zb2^2 + z2*zb1", 2);
  ASSERT_TRUE(is_harmonic(h.homogeneous_part(3)));
  auto parts = harmonic_decompose(h.homogeneous_part(3), 3);
  EXPECT_EQ(parts[0], h.homogeneous_part(3));
  EXPECT_TRUE(parts[1].is_zero());

  auto r2 = harmonic_decompose(CPolynomial::r_squared(1), 2);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_TRUE(r2[0].is_zero());
  EXPECT_EQ(r2[1], CPolynomial::constant(1, GaussRational(1)));

  auto p = parse_poly("z1^2*zb1^2");
  auto fast = harmonic_decompose(p, 4);
  EXPECT_EQ(fast, decompose_by_solve(p, 4));
  EXPECT_EQ(harmonic_decompose_reassemble(fast), p);

  EXPECT_THROW(harmonic_decompose(parse_poly("z1 + z1^2"), 2), InvalidInput);
}

TEST(HarmonicDecompose, MatchesLinearSolveRandom) {
  RandomSource rng(17);
  for (int n = 0; n < 25; ++n) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    auto m = static_cast<unsigned>(rng.uniform(0, d == 3 ? 4 : 6));
    auto p = rng.homogeneous(d, m, 5);
    auto parts = harmonic_decompose(p, m);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      EXPECT_TRUE(is_harmonic(parts[j]));
      EXPECT_TRUE(parts[j].is_zero() || parts[j].degree() == static_cast<int>(m - 2 * j));
    }
    EXPECT_EQ(harmonic_decompose_reassemble(parts), p);
    EXPECT_EQ(parts, decompose_by_solve(p, m)) << to_string(p);
  }
}

TEST(Bidegree, Split) {
  auto s = bidegree_split(parse_poly("z1*zb2", 2));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.begin()->first, std::make_pair(1u, 1u));
  auto t = bidegree_split(parse_poly("z1^2 + zb1^2"));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.count({2, 0}) && t.count({0, 2}));
}

TEST(Bidegree, LaplacianLowersBothDegrees) {
  RandomSource rng(4);
  for (int n = 0; n < 30; ++n) {
    auto p = rng.poly(2, 6, 6);
    for (const auto& [nm, part] : bidegree_split(p)) {
      auto image = op_L(part);
      if (image.is_zero()) continue;
      auto split = bidegree_split(image);
      ASSERT_EQ(split.size(), 1u);
      EXPECT_EQ(split.begin()->first, std::make_pair(nm.first - 1, nm.second - 1));
    }
    // Splitting preserves harmonicity.
    auto h = harmonic_decompose(rng.homogeneous(2, 4), 4)[0];
    for (const auto& [nm, part] : bidegree_split(h)) EXPECT_TRUE(is_harmonic(part));
  }
}

TEST(HarmonicDim, Values) {
  EXPECT_EQ(harmonic_dim(2, 1), 2);
  EXPECT_EQ(harmonic_dim(2, 5), 2);
  EXPECT_EQ(harmonic_dim(4, 1), 4);
  EXPECT_EQ(harmonic_dim(4, 2), 9);
  EXPECT_EQ(laplacian_kernel_dim(2, 2), 9u);
  EXPECT_EQ(harmonic_dim(3, 2), 5);  // classical spherical harmonics: 2k+1
}

TEST(HarmonicDim, KernelRanksAndDirectSum) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (unsigned m = 0; m <= 5; ++m) {
      std::size_t kernel = laplacian_kernel_dim(d, m);
      EXPECT_EQ(Integer(static_cast<unsigned long>(kernel)), harmonic_dim(static_cast<unsigned>(2 * d), m));
      Integer sum = 0;
      for (unsigned j = 0; 2 * j <= m; ++j) sum += harmonic_dim(static_cast<unsigned>(2 * d), m - 2 * j);
      EXPECT_EQ(sum, Integer(static_cast<unsigned long>(monomial_basis(d, m).size())));
    }
}
