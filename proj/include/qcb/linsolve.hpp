#pragma once

// Exact Gaussian elimination over Q on sparse rows.

#include <map>
#include <vector>

#include "qcb/rat.hpp"

namespace qcb {

using SparseRow = std::map<int, Rat>;

class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  // Reduces r against the stored pivots; keeps it when something survives.
  bool insert(SparseRow r) {
    for (auto it = r.begin(); it != r.end();) {
      auto p = piv_.find(it->first);
      if (p == piv_.end()) {
        Rat lead = it->second;
        for (auto& [c, v] : r) v /= lead;
        piv_.emplace(it->first, std::move(r));
        return true;
      }
      Rat f = it->second;
      int col = it->first;
      for (auto& [c, v] : p->second) {
        auto [pos, fresh] = r.try_emplace(c, 0);
        pos->second -= f * v;
        if (pos->second == 0) r.erase(pos);
      }
      it = r.upper_bound(col);
    }
    return false;
  }
  int rank() const { return static_cast<int>(piv_.size()); }
  int ncols() const { return ncols_; }
  int nullity() const { return ncols_ - rank(); }

  // Basis of {x : rows·x = 0}, each vector sparse.
  std::vector<SparseRow> kernel() {
    reduce_fully();
    std::vector<SparseRow> out;
    for (int f = 0; f < ncols_; ++f) {
      if (piv_.count(f)) continue;
      SparseRow x;
      x[f] = 1;
      for (auto& [pc, row] : piv_) {
        auto it = row.find(f);
        if (it != row.end()) x[pc] = -it->second;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int ncols_;
  std::map<int, SparseRow> piv_;

  void reduce_fully() {
    for (auto it = piv_.rbegin(); it != piv_.rend(); ++it) {
      SparseRow& row = it->second;
      for (auto jt = std::next(piv_.find(it->first)); jt != piv_.end(); ++jt) {
        auto e = row.find(jt->first);
        if (e == row.end()) continue;
        Rat f = e->second;
        for (auto& [c, v] : jt->second) {
          auto [pos, fresh] = row.try_emplace(c, 0);
          pos->second -= f * v;
          if (pos->second == 0) row.erase(pos);
        }
      }
    }
  }
};

// Dense helpers for small systems.
using Matrix = std::vector<std::vector<Rat>>;

inline int matrix_rank(Matrix a) {
  int rows = static_cast<int>(a.size());
  if (!rows) return 0;
  int cols = static_cast<int>(a[0].size()), r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline Matrix matrix_inverse(Matrix a) {
  int n = static_cast<int>(a.size());
  Matrix inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw DivisionError("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat d = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Rows of a (m×k, rank k) forming an invertible k×k block, chosen greedily.
inline std::vector<int> independent_rows(const Matrix& a) {
  std::vector<int> pick;
  if (a.empty()) return pick;
  int k = static_cast<int>(a[0].size());
  Echelon e(k);
  for (int i = 0; i < static_cast<int>(a.size()) && e.rank() < k; ++i) {
    SparseRow r;
    for (int j = 0; j < k; ++j)
      if (a[i][j] != 0) r[j] = a[i][j];
    if (e.insert(r)) pick.push_back(i);
  }
  return pick;
}

}  // namespace qcb
