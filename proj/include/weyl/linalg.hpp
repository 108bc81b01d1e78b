#ifndef WEYL_LINALG_HPP
#define WEYL_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/gauss_rational.hpp"

namespace weyl {

/// Sparse vector over Q(i): column index -> nonzero entry.
using SparseVector = std::map<std::size_t, GaussRational>;

/// Assigns consecutive column indices to keys on first sight.
template <class Key>
class KeyIndex {
 public:
  std::size_t operator()(const Key& k) {
    auto [it, inserted] = index_.try_emplace(k, keys_.size());
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  std::optional<std::size_t> find(const Key& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return keys_.size(); }
  const Key& key(std::size_t k) const { return keys_.at(k); }

 private:
  std::map<Key, std::size_t> index_;
  std::vector<Key> keys_;
};

inline void axpy(SparseVector& y, const GaussRational& a, const SparseVector& x) {
  for (const auto& [col, v] : x) {
    auto [it, inserted] = y.try_emplace(col, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

/// Reduced row echelon form: every pivot is 1 and is the only nonzero entry
/// in its column.
struct RowEchelon {
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;  // pivots[k] = leading column of rows[k]

  std::size_t rank() const { return rows.size(); }
};

inline RowEchelon row_reduce(const std::vector<SparseVector>& input) {
  RowEchelon e;
  std::map<std::size_t, std::size_t> pivot_row;  // column -> row in e.rows
  for (SparseVector row : input) {
    // Eliminate existing pivot columns from the incoming row.
    for (auto it = row.begin(); it != row.end();) {
      auto pr = pivot_row.find(it->first);
      if (pr == pivot_row.end()) {
        ++it;
        continue;
      }
      GaussRational factor = -it->second;
      std::size_t col = it->first;
      axpy(row, factor, e.rows[pr->second]);
      it = row.upper_bound(col);
    }
    if (row.empty()) continue;
    auto [lead, lead_value] = *row.begin();
    GaussRational inv = GaussRational(1) / lead_value;
    for (auto& [col, v] : row) v *= inv;
    for (auto& other : e.rows) {
      auto it = other.find(lead);
      if (it == other.end()) continue;
      GaussRational factor = -it->second;
      axpy(other, factor, row);
    }
    pivot_row.emplace(lead, e.rows.size());
    e.rows.push_back(std::move(row));
    e.pivots.push_back(lead);
  }
  return e;
}

inline std::size_t rank(const std::vector<SparseVector>& rows) { return row_reduce(rows).rank(); }

/// Basis of {x : A x = 0} for A given by its rows, with `columns` unknowns.
inline std::vector<SparseVector> nullspace(const std::vector<SparseVector>& rows,
                                           std::size_t columns) {
  RowEchelon e = row_reduce(rows);
  std::map<std::size_t, std::size_t> pivot_row;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) pivot_row.emplace(e.pivots[k], k);
  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (pivot_row.count(free)) continue;
    SparseVector v;
    v.emplace(free, GaussRational(1));
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      auto it = e.rows[k].find(free);
      if (it != e.rows[k].end()) v.emplace(e.pivots[k], -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of A x = b, or nullopt when the system is inconsistent.
/// Free unknowns are set to zero.
inline std::optional<SparseVector> solve(const std::vector<SparseVector>& rows,
                                         const std::vector<GaussRational>& rhs,
                                         std::size_t columns) {
  std::vector<SparseVector> augmented = rows;
  for (std::size_t k = 0; k < augmented.size(); ++k)
    if (k < rhs.size() && !rhs[k].is_zero()) augmented[k][columns] = rhs[k];
  RowEchelon e = row_reduce(augmented);
  SparseVector x;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] == columns) return std::nullopt;
    auto it = e.rows[k].find(columns);
    if (it != e.rows[k].end()) x.emplace(e.pivots[k], it->second);
  }
  return x;
}

}  // namespace weyl

#endif  // WEYL_LINALG_HPP
