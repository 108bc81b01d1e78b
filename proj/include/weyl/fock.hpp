#ifndef WEYL_FOCK_HPP
#define WEYL_FOCK_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "weyl/weyl_element.hpp"

namespace weyl {

/// Occupation states n with |n| <= cutoff, ordered by total occupation and then
/// lexicographically descending.
class FockBasis {
 public:
  FockBasis(std::size_t d, unsigned cutoff) : d_(d), cutoff_(cutoff) {
    for (unsigned m = 0; m <= cutoff; ++m)
      for_each_composition(d, m, [&](const MultiIndex& n) {
        index_.emplace(n, states_.size());
        states_.push_back(n);
      });
  }

  std::size_t d() const { return d_; }
  unsigned cutoff() const { return cutoff_; }
  std::size_t size() const { return states_.size(); }
  const MultiIndex& state(std::size_t k) const { return states_.at(k); }
  unsigned occupation(std::size_t k) const { return total_degree(states_.at(k)); }

  /// Index of n, or size() when |n| exceeds the cutoff.
  std::size_t index_of(const MultiIndex& n) const {
    auto it = index_.find(n);
    return it == index_.end() ? states_.size() : it->second;
  }

 private:
  std::size_t d_;
  unsigned cutoff_;
  std::vector<MultiIndex> states_;
  std::map<MultiIndex, std::size_t> index_;
};

/// Truncated matrix of a Weyl element on span{e_n : |n| <= K}, where
/// e_n = (a^+)^n |0> is the unnormalized occupation vector. In this basis
/// a_j e_n = n_j e_{n - e_j} and a_j^+ e_n = e_{n + e_j}, so every entry is an
/// exact integer combination of the coefficients. The orthonormal-basis matrix
/// is the conjugate D^{-1} M D with D = diag(sqrt(n!)), so matrix products,
/// the identity and diagonal entries are the same in both bases.
class FockMatrix {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, GaussRational>;

  explicit FockMatrix(std::shared_ptr<const FockBasis> basis) : basis_(std::move(basis)) {}

  static FockMatrix identity(std::shared_ptr<const FockBasis> basis) {
    FockMatrix m(basis);
    for (std::size_t k = 0; k < basis->size(); ++k) m.add(k, k, GaussRational(1));
    return m;
  }

  const FockBasis& basis() const { return *basis_; }
  std::size_t dimension() const { return basis_->size(); }
  const Entries& entries() const { return entries_; }

  GaussRational entry(std::size_t row, std::size_t col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? GaussRational() : it->second;
  }

  void add(std::size_t row, std::size_t col, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({row, col}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  friend FockMatrix operator*(const FockMatrix& x, const FockMatrix& y) {
    if (x.basis_->d() != y.basis_->d() || x.dimension() != y.dimension())
      throw InvalidInput("Fock matrices over different bases");
    std::vector<std::vector<std::pair<std::size_t, const GaussRational*>>> rows_of_y(y.dimension());
    for (const auto& [rc, v] : y.entries_) rows_of_y[rc.first].emplace_back(rc.second, &v);
    FockMatrix out(x.basis_);
    for (const auto& [rc, v] : x.entries_)
      for (const auto& [col, w] : rows_of_y[rc.second]) out.add(rc.first, col, v * *w);
    return out;
  }

  friend bool operator==(const FockMatrix& a, const FockMatrix& b) {
    return a.dimension() == b.dimension() && a.entries_ == b.entries_;
  }

  /// Equality of the blocks between states with total occupation <= limit.
  bool block_equals(const FockMatrix& other, unsigned limit) const {
    auto restrict = [limit](const FockMatrix& m) {
      Entries out;
      for (const auto& [rc, v] : m.entries_)
        if (m.basis_->occupation(rc.first) <= limit && m.basis_->occupation(rc.second) <= limit)
          out.emplace(rc, v);
      return out;
    };
    return restrict(*this) == restrict(other);
  }

 private:
  std::shared_ptr<const FockBasis> basis_;
  Entries entries_;
};

/// Matrix of w on the states |n| <= basis.cutoff(); components leaving the
/// truncated space are dropped.
inline FockMatrix fock_represent(const WeylElement& w, std::shared_ptr<const FockBasis> basis) {
  if (basis->d() != w.d()) throw InvalidInput("Fock basis mode count does not match element");
  FockMatrix m(basis);
  const std::size_t d = w.d();
  for (const auto& [mono, c] : w.terms()) {
    const MultiIndex& beta = creation_part(mono);
    const MultiIndex& alpha = annihilation_part(mono);
    for (std::size_t col = 0; col < basis->size(); ++col) {
      const MultiIndex& n = basis->state(col);
      Integer weight(1);
      MultiIndex target(d);
      bool killed = false;
      for (std::size_t j = 0; j < d && !killed; ++j) {
        if (alpha[j] > n[j]) {
          killed = true;
          break;
        }
        for (unsigned s = 0; s < alpha[j]; ++s) weight *= n[j] - s;
        target[j] = n[j] - alpha[j] + beta[j];
      }
      if (killed) continue;
      std::size_t row = basis->index_of(target);
      if (row == basis->size()) continue;
      m.add(row, col, c * GaussRational(Rational(weight)));
    }
  }
  return m;
}

inline FockMatrix fock_represent(const WeylElement& w, unsigned cutoff) {
  return fock_represent(w, std::make_shared<const FockBasis>(w.d(), cutoff));
}

}  // namespace weyl

#endif  // WEYL_FOCK_HPP
