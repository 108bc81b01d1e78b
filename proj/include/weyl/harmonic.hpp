#ifndef WEYL_HARMONIC_HPP
#define WEYL_HARMONIC_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "weyl/cpolynomial.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

/// R p = r^2 p.
inline CPolynomial op_R(const CPolynomial& p) { return CPolynomial::r_squared(p.d()) * p; }

/// L p = (1/4) Laplacian p = sum_j d^2 p / dz_j dzbar_j.
inline CPolynomial op_L(const CPolynomial& p) {
  CPolynomial out(p.d());
  const std::size_t d = p.d();
  for (const auto& [m, c] : p.terms())
    for (std::size_t j = 0; j < d; ++j) {
      unsigned a = m.first[j], b = m.second[j];
      if (a == 0 || b == 0) continue;
      CMonomial dm = m;
      --dm.first[j];
      --dm.second[j];
      out.add_term(dm, c * GaussRational(static_cast<long>(a * b)));
    }
  return out;
}

/// Euler operator: sum_j z_j d/dz_j + zbar_j d/dzbar_j.
inline CPolynomial op_Euler(const CPolynomial& p) {
  CPolynomial out(p.d());
  for (const auto& [m, c] : p.terms()) out.add_term(m, c * GaussRational(static_cast<long>(m.degree())));
  return out;
}

/// E = Euler + d.
inline CPolynomial op_E(const CPolynomial& p) {
  return op_Euler(p) + p * GaussRational(static_cast<long>(p.d()));
}

inline bool is_harmonic(const CPolynomial& p) { return op_L(p).is_zero(); }

/// Writes a homogeneous p of degree m as sum_j r^{2j} h_j with h_j harmonic of
/// degree m - 2j. Returns (h_0, ..., h_{floor(m/2)}).
///
/// For h harmonic of degree k the sl2 relations give
///   L R^j h = j (k + d + j - 1) R^{j-1} h,
/// so L^J kills every r^{2j} h_j with j < J and the top component is recovered
/// as h_J = L^J p / prod_{i=1..J} i (m - 2J + d + i - 1). Subtracting R^J h_J
/// and descending in J yields the rest.
inline std::vector<CPolynomial> harmonic_decompose(const CPolynomial& p, unsigned m) {
  if (!p.is_homogeneous() || (!p.is_zero() && static_cast<unsigned>(p.degree()) != m))
    throw InvalidInput("harmonic_decompose needs a homogeneous polynomial of the stated degree");
  const long d = static_cast<long>(p.d());
  const unsigned top = m / 2;
  std::vector<CPolynomial> h(top + 1, CPolynomial(p.d()));
  CPolynomial rest = p;
  for (unsigned J = top + 1; J-- > 0;) {
    CPolynomial lj = rest;
    for (unsigned s = 0; s < J; ++s) lj = op_L(lj);
    Rational norm(1);
    for (unsigned i = 1; i <= J; ++i) norm *= Rational(static_cast<long>(i) * (static_cast<long>(m) - 2 * J + d + i - 1));
    h[J] = lj * GaussRational(Rational(1) / norm);
    CPolynomial lifted = h[J];
    for (unsigned s = 0; s < J; ++s) lifted = op_R(lifted);
    rest -= lifted;
  }
  return h;
}

inline CPolynomial harmonic_decompose_reassemble(const std::vector<CPolynomial>& h) {
  if (h.empty()) throw InvalidInput("empty decomposition");
  CPolynomial out(h.front().d());
  CPolynomial r2k = CPolynomial::constant(out.d(), GaussRational(1));
  for (const auto& hj : h) {
    out += r2k * hj;
    r2k = op_R(r2k);
  }
  return out;
}

/// Components p^{(n,m)} collecting the terms with |alpha| = n, |beta| = m.
inline std::map<std::pair<unsigned, unsigned>, CPolynomial> bidegree_split(const CPolynomial& p) {
  std::map<std::pair<unsigned, unsigned>, CPolynomial> out;
  for (const auto& [mono, c] : p.terms()) {
    auto key = std::make_pair(total_degree(mono.first), total_degree(mono.second));
    out.try_emplace(key, p.d()).first->second.add_term(mono, c);
  }
  return out;
}

/// Dimension of the degree-k harmonic polynomials on R^n:
/// C(n+k-1, k) - C(n+k-3, k-2).
inline Integer harmonic_dim(unsigned n, unsigned k) {
  if (n == 0) throw InvalidInput("harmonic_dim needs n >= 1");
  Integer all = binomial(n + k - 1, k);
  if (k < 2) return all;
  // n + k - 3 >= 0 whenever k >= 2 and n >= 1.
  return all - binomial(n + k - 3, k - 2);
}

/// Monomials z^alpha zbar^beta of total degree m.
inline std::vector<CMonomial> monomial_basis(std::size_t d, unsigned m) {
  std::vector<CMonomial> basis;
  for (const auto& e : compositions(2 * d, m)) {
    CMonomial mono{MultiIndex(e.begin(), e.begin() + static_cast<long>(d)),
                   MultiIndex(e.begin() + static_cast<long>(d), e.end())};
    basis.push_back(std::move(mono));
  }
  return basis;
}

/// Rows of the matrix of L : P^m -> P^{m-2} in the monomial bases; column k
/// corresponds to monomial_basis(d, m)[k].
inline std::vector<SparseVector> laplacian_rows(std::size_t d, unsigned m) {
  auto source = monomial_basis(d, m);
  KeyIndex<CMonomial> targets;
  std::vector<SparseVector> rows;
  for (std::size_t col = 0; col < source.size(); ++col) {
    CPolynomial image = op_L(CPolynomial::monomial(d, source[col].first, source[col].second));
    for (const auto& [mono, c] : image.terms()) {
      std::size_t r = targets(mono);
      if (r >= rows.size()) rows.resize(r + 1);
      rows[r][col] = c;
    }
  }
  return rows;
}

/// dim ker(L restricted to P^m), by exact rank.
inline std::size_t laplacian_kernel_dim(std::size_t d, unsigned m) {
  return monomial_basis(d, m).size() - rank(laplacian_rows(d, m));
}

/// A basis of H^m: the exact nullspace of L on P^m.
inline std::vector<CPolynomial> harmonic_basis(std::size_t d, unsigned m) {
  auto source = monomial_basis(d, m);
  std::vector<CPolynomial> basis;
  for (const auto& v : nullspace(laplacian_rows(d, m), source.size())) {
    CPolynomial h(d);
    for (const auto& [col, c] : v) h.add_term(source[col], c);
    basis.push_back(std::move(h));
  }
  return basis;
}

}  // namespace weyl

#endif  // WEYL_HARMONIC_HPP
