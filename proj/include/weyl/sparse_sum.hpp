#ifndef WEYL_SPARSE_SUM_HPP
#define WEYL_SPARSE_SUM_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "weyl/gauss_rational.hpp"

namespace weyl {

using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

inline MultiIndex unit_index(std::size_t size, std::size_t position, unsigned power = 1) {
  MultiIndex m(size, 0);
  m.at(position) = power;
  return m;
}

/// Calls visit(m) for every multi-index of the given length with |m| = total,
/// in lexicographically descending order.
inline void for_each_composition(std::size_t length, unsigned total,
                                 const std::function<void(const MultiIndex&)>& visit) {
  if (length == 0) {
    if (total == 0) visit({});
    return;
  }
  MultiIndex m(length, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == length) {
      m[pos] = left;
      visit(m);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      m[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
}

inline std::vector<MultiIndex> compositions(std::size_t length, unsigned total) {
  std::vector<MultiIndex> out;
  for_each_composition(length, total, [&](const MultiIndex& m) { out.push_back(m); });
  return out;
}

/// A pair of multi-indices ordered by (total degree, first, second). The
/// owning algebra decides what the two halves mean.
struct BiIndex {
  MultiIndex first;
  MultiIndex second;

  unsigned degree() const { return total_degree(first) + total_degree(second); }

  friend bool operator==(const BiIndex& a, const BiIndex& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator<(const BiIndex& a, const BiIndex& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

/// Finite linear combination of keys with nonzero Q(i) coefficients.
template <class Key>
class SparseSum {
 public:
  using Map = std::map<Key, GaussRational>;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  typename Map::const_iterator begin() const { return terms_.begin(); }
  typename Map::const_iterator end() const { return terms_.end(); }

  GaussRational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussRational() : it->second;
  }

  void add_term(const Key& k, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const SparseSum& o, const GaussRational& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add_term(k, v * c);
  }

  void scale(const GaussRational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return;
    }
    for (auto& [k, v] : terms_) v *= c;
  }

  friend bool operator==(const SparseSum& a, const SparseSum& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace weyl

#endif  // WEYL_SPARSE_SUM_HPP
