#pragma once

// Singular vectors, q-conformal blocks, qKZ equations and the generic
// dimension of the block space.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcb/linsolve.hpp"
#include "qcb/minimal.hpp"
#include "qcb/tensor.hpp"

namespace qcb {

inline bool is_singular(const TensorVec& v) {
  for (int i = 1; i <= v.N; ++i)
    for (int j = i + 1; j <= v.N; ++j)
      if (!apply_e_gen(v, i, j).is_zero()) return false;
  return true;
}

inline int block_exponent(const Weight& w, int level) { return level - w.d() + 1; }

// e(z)^{level - d + 1} v == 0
inline bool qcb_check(const TensorVec& v, const Weight& w, int level) {
  int m = block_exponent(w, level);
  if (m < 1) throw std::invalid_argument("level below d(lambda)");
  TensorVec x = v;
  for (int r = 0; r < m && !x.is_zero(); ++r) x = apply_e_of_z(x);
  return x.is_zero();
}

inline int natural_level(const Weight& w) { return std::max(w.d(), 1); }

// v(..., z_i + ch*h, ...)
inline TensorVec shift_site(const TensorVec& v, int i, const Rat& ch) {
  return v.map([&](const Poly& p) { return p.shift_z(i, ch); });
}

struct QkzResult {
  int i = 0;
  bool ok = false;
  std::string detail;  // first mismatch, if any
};

inline QkzResult verify_qkz_at(const TensorVec& I, int i) {
  QkzResult r{i, false, {}};
  TensorVec lhs = shift_site(I, i, Rat(-(I.N + 1)));
  TensorVec rhs;
  try {
    rhs = apply_Ki(I, i);
  } catch (const NotPolynomialError& e) {
    r.detail = e.what();
    return r;
  }
  if (lhs == rhs) {
    r.ok = true;
    return r;
  }
  TensorVec d = lhs - rhs;
  auto& [L, p] = *d.coeffs.begin();
  r.detail = "v" + index_string(L) + " differs by " + p.to_string();
  return r;
}

inline std::vector<QkzResult> verify_qkz(const TensorVec& I) {
  std::vector<QkzResult> out;
  for (int i = 1; i <= I.sites(); ++i) out.push_back(verify_qkz_at(I, i));
  return out;
}

// R^{(i,i+1)}(z_i - z_{i+1}) I == -P^{(i,i+1)} I(z_i <-> z_{i+1})
inline bool check_skew_lemma(const TensorVec& I, int i) {
  RatioTensor lhs = apply_R(I, i, i + 1, Poly::z(I.nz, i) - Poly::z(I.nz, i + 1));
  TensorVec rhs = -apply_perm(I.map([i](const Poly& p) { return p.swap_z(i); }), i, i + 1);
  return lhs == RatioTensor(rhs);
}

// K_1 I == (-1)^{n-1} P^{(1,n)} ... P^{(1,2)} I(z_2, ..., z_n, z_1)
inline bool check_pol_lemma(const TensorVec& I) {
  int n = I.sites();
  TensorVec k1 = apply_Ki(I, 1);
  std::vector<int> perm(n + 1);  // z_v -> z_{v+1}, z_n -> z_1; h fixed
  for (int v = 0; v < n; ++v) perm[v] = (v + 1) % n;
  perm[n] = n;
  TensorVec rot = I.map([&](const Poly& p) { return p.rename(perm); });
  for (int j = 2; j <= n; ++j) rot = apply_perm(rot, 1, j);
  if ((n - 1) % 2) rot = -rot;
  return k1 == rot;
}

// ---- generic dimension of the level-1 block space ----

inline TensorVec unit_vector(const Weight& w, const MultiIndex& L, int nz) {
  TensorVec v(w.N(), nz, w.parts);
  v.add(L, Poly::constant(nz, Rat(1)));
  return v;
}

// Basis of the singular subspace of V[λ] (constant vectors).
inline std::vector<std::map<MultiIndex, Rat>> singular_subspace(const Weight& w) {
  auto basis = weight_basis(w);
  std::map<MultiIndex, int> col;
  for (std::size_t c = 0; c < basis.size(); ++c) col[basis[c]] = static_cast<int>(c);
  const int n = w.n();
  Echelon e(static_cast<int>(basis.size()));
  for (int i = 1; i <= w.N(); ++i)
    for (int j = i + 1; j <= w.N(); ++j) {
      if (w.parts[j - 1] == 0) continue;
      // rows indexed by the target basis of V[λ + ε_i - ε_j]
      std::map<MultiIndex, SparseRow> rows;
      for (auto& L : basis)
        for (int a = 0; a < n; ++a)
          if (L[a] == j) {
            MultiIndex M = L;
            M[a] = i;
            rows[M][col[L]] += 1;
          }
      for (auto& [M, r] : rows) e.insert(r);
    }
  std::vector<std::map<MultiIndex, Rat>> out;
  for (auto& x : e.kernel()) {
    std::map<MultiIndex, Rat> v;
    for (auto& [c, a] : x) v[basis[c]] = a;
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<Rat> evaluation_point(const std::vector<Rat>& z, const Rat& h) {
  std::vector<Rat> x = z;
  x.push_back(h);
  return x;
}

// Kernel dimension of {singular} ∩ ker e(z)^{2-d} at a numeric point.
inline int cb_nullity_numeric(const Weight& w, const std::vector<Rat>& z, const Rat& h,
                              const std::vector<std::map<MultiIndex, Rat>>* singular = nullptr) {
  if (w.d() > 1) throw std::invalid_argument("nullity check needs d(lambda) <= 1");
  const int n = w.n();
  if (static_cast<int>(z.size()) != n) throw DimensionError("sample length differs from n");
  std::vector<std::map<MultiIndex, Rat>> local;
  if (!singular) {
    local = singular_subspace(w);
    singular = &local;
  }
  int m = 2 - w.d();
  auto pt = evaluation_point(z, h);
  // image of each kernel vector under e(z)^m, evaluated
  std::map<MultiIndex, int> rowid;
  std::vector<std::map<int, Rat>> cols;
  for (auto& x : *singular) {
    TensorVec v(w.N(), n, w.parts);
    for (auto& [L, a] : x) v.add(L, Poly::constant(n, a));
    for (int r = 0; r < m; ++r) v = apply_e_of_z(v);
    std::map<int, Rat> c;
    for (auto& [L, p] : v.coeffs) {
      Rat val = p.evaluate(pt);
      if (val == 0) continue;
      auto [it, fresh] = rowid.try_emplace(L, static_cast<int>(rowid.size()));
      c[it->second] = val;
    }
    cols.push_back(std::move(c));
  }
  Matrix a(rowid.size(), std::vector<Rat>(cols.size(), Rat(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [i, val] : cols[j]) a[i][j] = val;
  int rank = rowid.empty() ? 0 : matrix_rank(a);
  return static_cast<int>(cols.size()) - rank;
}

// Distinct rational z avoiding z_i - z_j ∈ {0, ±h, ±2h, ±3h}.
inline std::pair<std::vector<Rat>, Rat> generic_sample(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (;;) {
    Rat h(num(rng), den(rng));
    h.canonicalize();
    if (h == 0) continue;
    std::vector<Rat> z;
    for (int i = 0; i < n; ++i) {
      Rat x(num(rng), den(rng));
      x.canonicalize();
      z.push_back(x);
    }
    bool bad = false;
    for (int a = 0; a < n && !bad; ++a)
      for (int b = a + 1; b < n && !bad; ++b)
        for (int c = -3; c <= 3 && !bad; ++c) bad = (z[a] - z[b] == c * h);
    if (!bad) return {z, h};
  }
}

}  // namespace qcb
