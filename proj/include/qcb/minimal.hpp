#pragma once

// The deformed S_n actions and the minimal skew-symmetric vector I_λ.

#include <map>
#include <vector>

#include "qcb/poly.hpp"
#include "qcb/tensor.hpp"

namespace qcb {

// ŝ_i f = f(swap) + h (f(swap) - f)/(z_i - z_{i+1})
inline Poly shat_action(const Poly& f, int i) {
  Poly fs = f.swap_z(i);
  Poly d = Poly::z(f.nz(), i, f.nw()) - Poly::z(f.nz(), i + 1, f.nw());
  auto q = (fs - f).try_div(d);
  if (!q) throw std::logic_error("deformed action: numerator not divisible");
  return fs + Poly::h(f.nz(), f.nw()) * *q;
}

// s_i v = P^{(i,i+1)} v(swap) + h (v(swap) - v)/(z_i - z_{i+1})
inline TensorVec s_action(const TensorVec& v, int i) {
  if (i < 1 || i >= v.nz) throw DimensionError("transposition index out of range");
  TensorVec vs = v.map([i](const Poly& p) { return p.swap_z(i); });
  Poly d = Poly::z(v.nz, i) - Poly::z(v.nz, i + 1);
  Poly h = Poly::h(v.nz);
  TensorVec diff = (vs - v).map([&](const Poly& p) {
    auto q = p.try_div(d);
    if (!q) throw std::logic_error("deformed action: numerator not divisible");
    return h * *q;
  });
  return apply_perm(vs, i, i + 1) + diff;
}

// Block-wise product of (z_a - z_b + h).
inline Poly d0(const Weight& w) {
  int n = w.n();
  Poly p = Poly::constant(n, Rat(1));
  Poly h = Poly::h(n);
  int start = 1;
  for (int part : w.parts) {
    for (int a = start; a < start + part; ++a)
      for (int b = a + 1; b < start + part; ++b) p = p * (Poly::z(n, a) - Poly::z(n, b) + h);
    start += part;
  }
  return p;
}

struct CosetRep {
  std::vector<int> sigma;  // one-line notation, sigma[k-1] = σ(k)
  int sign = 1;
  MultiIndex image;  // σ(L_0)
};

// σ(L)_k = L_{σ^{-1}(k)}
inline MultiIndex act_on_index(const std::vector<int>& sigma, const MultiIndex& L) {
  MultiIndex M(L.size());
  for (std::size_t p = 0; p < L.size(); ++p) M[sigma[p] - 1] = L[p];
  return M;
}

inline int permutation_sign(const std::vector<int>& s) {
  int inv = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) inv += s[a] > s[b];
  return inv % 2 ? -1 : 1;
}

// Minimal representatives, in lex order of σ(L_0).
inline std::vector<CosetRep> coset_reps(const Weight& w) {
  MultiIndex L0 = w.standard_index();
  std::vector<int> block_start(w.N() + 1, 1);
  for (int i = 0; i < w.N(); ++i) block_start[i + 1] = block_start[i] + w.parts[i];
  std::vector<CosetRep> out;
  for (auto& M : weight_basis(w)) {
    std::vector<int> next = block_start;
    std::vector<int> sigma(M.size());
    for (std::size_t k = 0; k < M.size(); ++k) {
      int p = next[M[k] - 1]++;  // σ^{-1}(k+1) = p
      sigma[p - 1] = static_cast<int>(k) + 1;
    }
    out.push_back({sigma, permutation_sign(sigma), M});
  }
  return out;
}

enum class WordChoice { LeftmostDescent, RightmostDescent };

// I_λ = Σ_σ sgn(σ) σ̂(D_0) v_{σ(L_0)}, with σ̂ applied one ŝ_i at a time:
// f_M = -ŝ_i f_{s_i M} for a descent M_i > M_{i+1}.
inline TensorVec build_Ilambda(const Weight& w, WordChoice word = WordChoice::LeftmostDescent) {
  const int n = w.n();
  std::map<MultiIndex, Poly> f;
  MultiIndex L0 = w.standard_index();
  TensorVec I(w.N(), n, w.parts);
  for (auto& M : weight_basis(w)) {
    if (M == L0) {
      f.emplace(M, d0(w));
    } else {
      int i = -1;
      if (word == WordChoice::LeftmostDescent) {
        for (int k = 0; k + 1 < n && i < 0; ++k)
          if (M[k] > M[k + 1]) i = k + 1;
      } else {
        for (int k = n - 2; k >= 0 && i < 0; --k)
          if (M[k] > M[k + 1]) i = k + 1;
      }
      MultiIndex prev = M;
      std::swap(prev[i - 1], prev[i]);
      f.emplace(M, -shat_action(f.at(prev), i));
    }
    I.add(M, f.at(M));
  }
  return I;
}

inline TensorVec specialize_h0(const TensorVec& v) {
  return v.map([](const Poly& p) { return p.set_h_zero(); });
}

// Π_{a<b, l_a = l_b} (z_a - z_b)
inline Poly same_letter_vandermonde(const MultiIndex& L) {
  int n = static_cast<int>(L.size());
  Poly p = Poly::constant(n, Rat(1));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (L[a - 1] == L[b - 1]) p = p * (Poly::z(n, a) - Poly::z(n, b));
  return p;
}

}  // namespace qcb
