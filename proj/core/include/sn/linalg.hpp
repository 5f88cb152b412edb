#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sn/scalar.hpp"

namespace sn {

template <class Key>
using SparseVector = std::map<Key, Scalar>;

/// v += c * w, dropping cancelled entries.
template <class Key>
void axpy(SparseVector<Key>& v, const Scalar& c, const SparseVector<Key>& w) {
  if (c == 0) return;
  for (const auto& [k, q] : w) {
    auto [it, inserted] = v.try_emplace(k, c * q);
    if (!inserted) {
      it->second += c * q;
      if (it->second == 0) v.erase(it);
    }
  }
}

/// Incremental row echelon form over Q. Each row is normalized so its pivot
/// (smallest key) has coefficient 1. Rows optionally remember which inserted
/// vectors they combine, so a dependent insertion yields a null combination.
template <class Key>
class EchelonBasis {
 public:
  using Combination = SparseVector<int>;
  struct Row {
    SparseVector<Key> v;
    Combination combo;
  };

  /// Reduces `v` against the stored rows. Returns true and stores the result if
  /// it is nonzero. When it reduces to zero and `null_combo` is given, the
  /// combination of tagged inputs summing to zero is written there.
  bool insert(SparseVector<Key> v, int tag = -1, Combination* null_combo = nullptr) {
    Combination combo;
    if (tag >= 0) combo.emplace(tag, 1);
    reduce_in_place(v, tag >= 0 ? &combo : nullptr);
    if (v.empty()) {
      if (null_combo) *null_combo = std::move(combo);
      return false;
    }
    const Scalar inv = 1 / v.begin()->second;
    for (auto& [k, q] : v) q *= inv;
    for (auto& [k, q] : combo) q *= inv;
    const Key pivot = v.begin()->first;
    rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
    return true;
  }

  [[nodiscard]] SparseVector<Key> reduce(SparseVector<Key> v) const {
    reduce_in_place(v, nullptr);
    return v;
  }

  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] const std::map<Key, Row>& rows() const { return rows_; }

  /// Fully reduced rows (each pivot appears in exactly one row), by pivot.
  [[nodiscard]] std::map<Key, SparseVector<Key>> reduced_rows() const {
    std::map<Key, SparseVector<Key>> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseVector<Key> v = it->second.v;
      for (auto jt = std::next(v.begin()); jt != v.end();) {
        auto done = out.find(jt->first);
        if (done == out.end()) {
          ++jt;
          continue;
        }
        const Key k = jt->first;
        axpy(v, -Scalar(jt->second), done->second);
        jt = v.upper_bound(k);
      }
      out.emplace(it->first, std::move(v));
    }
    return out;
  }

 private:
  void reduce_in_place(SparseVector<Key>& v, Combination* combo) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key k = it->first;
      const Scalar c = it->second;
      axpy(v, -c, row->second.v);
      if (combo) axpy(*combo, -c, row->second.combo);
      it = v.upper_bound(k);
    }
  }

  std::map<Key, Row> rows_;
};

using DenseMatrix = std::vector<std::vector<Scalar>>;

DenseMatrix identity_matrix(std::size_t size);
/// Gauss-Jordan inverse; nullopt when singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);
Scalar determinant(const DenseMatrix& m);

}  // namespace sn
