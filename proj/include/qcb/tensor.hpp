#pragma once

// Polynomial-valued vectors in (C^N)^{⊗n}: weight spaces, gl_N generators,
// the operator e(z), R-matrices and the qKZ operators K_i.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qcb/poly.hpp"
#include "qcb/ratio.hpp"

namespace qcb {

using MultiIndex = std::vector<int>;  // letters 1..N, sites 1-based in the API

struct Weight {
  std::vector<int> parts;  // length N, zeros allowed

  Weight() = default;
  explicit Weight(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 0) throw std::invalid_argument("negative weight entry");
  }
  int N() const { return static_cast<int>(parts.size()); }
  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool is_partition() const { return std::is_sorted(parts.rbegin(), parts.rend()); }
  int d() const { return parts.empty() ? 0 : parts.front() - parts.back(); }
  int k() const {
    int s = 0;
    for (int x : parts) s += x * (x - 1) / 2;
    return s;
  }
  // The multi-index 1^{λ1} 2^{λ2} ... N^{λN}.
  MultiIndex standard_index() const {
    MultiIndex L;
    for (int i = 0; i < N(); ++i) L.insert(L.end(), parts[i], i + 1);
    return L;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

// Partitions of n with weakly decreasing positive parts, in reverse lex order.
inline std::vector<Weight> partitions_of(int n) {
  std::vector<Weight> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, maxp); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

// Every partition of n padded with zeros to each N from its length up to maxN.
inline std::vector<Weight> padded_partitions_of(int n, int maxN) {
  std::vector<Weight> out;
  for (auto& w : partitions_of(n))
    for (int N = w.N(); N <= maxN; ++N) {
      Weight x = w;
      x.parts.resize(N, 0);
      out.push_back(x);
    }
  return out;
}

inline std::vector<int> content_of(const MultiIndex& L, int N) {
  std::vector<int> c(N, 0);
  for (int l : L) {
    if (l < 1 || l > N) throw DimensionError("letter out of range");
    ++c[l - 1];
  }
  return c;
}

inline std::vector<MultiIndex> weight_basis(const Weight& w) {
  MultiIndex L = w.standard_index();
  std::vector<MultiIndex> out;
  do out.push_back(L);
  while (std::next_permutation(L.begin(), L.end()));
  return out;
}

inline std::string index_string(const MultiIndex& L) {
  std::string s = "[";
  for (std::size_t i = 0; i < L.size(); ++i) s += (i ? "," : "") + std::to_string(L[i]);
  return s + "]";
}

struct TensorVec {
  int N = 0;
  int nz = 0;                // number of z variables in the coefficient ring
  std::vector<int> content;  // letter counts, length N
  std::map<MultiIndex, Poly> coeffs;

  TensorVec() = default;
  TensorVec(int N_, int nz_, std::vector<int> content_) : N(N_), nz(nz_), content(std::move(content_)) {
    if (static_cast<int>(content.size()) != N) throw DimensionError("content length differs from N");
  }
  static TensorVec zero_like(const TensorVec& v) { return TensorVec(v.N, v.nz, v.content); }
  // Builds a vector from explicit terms; all keys must share one content.
  static TensorVec from_terms(int N, int nz, const std::vector<std::pair<MultiIndex, Poly>>& ts) {
    if (ts.empty()) throw DimensionError("cannot infer weight of an empty term list");
    TensorVec v(N, nz, content_of(ts.front().first, N));
    for (auto& [L, p] : ts) v.add(L, p);
    return v;
  }

  int sites() const { return std::accumulate(content.begin(), content.end(), 0); }
  bool is_zero() const { return coeffs.empty(); }
  Poly zero_poly() const { return Poly(nz); }
  Poly get(const MultiIndex& L) const {
    auto it = coeffs.find(L);
    return it == coeffs.end() ? zero_poly() : it->second;
  }
  void add(const MultiIndex& L, const Poly& p) {
    if (content_of(L, N) != content) throw DimensionError("multi-index outside the weight space " + index_string(L));
    if (p.nz() != nz) throw DimensionError("coefficient ring mismatch");
    if (p.is_zero()) return;
    auto [it, fresh] = coeffs.try_emplace(L, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }
  template <class F>
  TensorVec map(F f) const {
    TensorVec r = zero_like(*this);
    for (auto& [L, p] : coeffs) r.add(L, f(p));
    return r;
  }
  bool is_homogeneous(int deg) const {
    for (auto& [L, p] : coeffs)
      if (!p.is_homogeneous() || p.degree() != deg) return false;
    return true;
  }

  friend bool operator==(const TensorVec& a, const TensorVec& b) {
    return a.N == b.N && a.nz == b.nz && a.content == b.content && a.coeffs == b.coeffs;
  }
  friend TensorVec operator+(TensorVec a, const TensorVec& b) {
    a.check(b);
    for (auto& [L, p] : b.coeffs) a.add(L, p);
    return a;
  }
  friend TensorVec operator-(TensorVec a, const TensorVec& b) {
    a.check(b);
    for (auto& [L, p] : b.coeffs) a.add(L, -p);
    return a;
  }
  TensorVec operator-() const {
    return map([](const Poly& p) { return -p; });
  }
  friend TensorVec operator*(const Poly& f, const TensorVec& v) {
    return v.map([&](const Poly& p) { return f * p; });
  }
  friend TensorVec operator*(const Rat& s, const TensorVec& v) {
    return v.map([&](const Poly& p) { return s * p; });
  }

 private:
  void check(const TensorVec& b) const {
    if (N != b.N || nz != b.nz || content != b.content) throw DimensionError("tensor vectors in different weight spaces");
  }
};

// e_{i,j} at one site (1-based) or at all sites when site == 0.
inline TensorVec apply_e_gen(const TensorVec& v, int i, int j, int site = 0) {
  if (i < 1 || j < 1 || i > v.N || j > v.N) throw DimensionError("gl_N index out of range");
  std::vector<int> c = v.content;
  if (i != j) {
    ++c[i - 1];
    --c[j - 1];
  }
  TensorVec r(v.N, v.nz, c);  // content may go negative only for the zero vector
  int n = v.sites();
  for (auto& [L, p] : v.coeffs) {
    for (int a = 1; a <= n; ++a) {
      if (site && a != site) continue;
      if (L[a - 1] != j) continue;
      MultiIndex M = L;
      M[a - 1] = i;
      r.add(M, p);
    }
  }
  return r;
}

// P^{(i,j)}: swap tensor factors.
inline TensorVec apply_perm(const TensorVec& v, int i, int j) {
  TensorVec r = TensorVec::zero_like(v);
  for (auto& [L, p] : v.coeffs) {
    MultiIndex M = L;
    std::swap(M.at(i - 1), M.at(j - 1));
    r.add(M, p);
  }
  return r;
}

// e(z) = Σ_j (z_j - h e_NN^(j) + h Σ_{s>j}(e_11^(s) - e_NN^(s))) e_1N^(j)
//        + h Σ_{j=2}^{N-1} Σ_{r<s} e_jN^(r) e_1j^(s),   r, s running over sites.
inline TensorVec apply_e_of_z(const TensorVec& v) {
  const int N = v.N, n = v.sites(), nz = v.nz;
  if (N < 2) throw DimensionError("e(z) needs N >= 2");
  std::vector<int> c = v.content;
  ++c[0];
  --c[N - 1];
  TensorVec r(N, nz, c);
  Poly h = Poly::h(nz);
  for (auto& [L, p] : v.coeffs) {
    for (int j = 1; j <= n; ++j) {
      if (L[j - 1] != N) continue;
      MultiIndex M = L;
      M[j - 1] = 1;
      Poly diag = Poly::z(nz, j) - Rat(M[j - 1] == N ? 1 : 0) * h;
      int bal = 0;
      for (int s = j + 1; s <= n; ++s) bal += (M[s - 1] == 1) - (M[s - 1] == N);
      diag += Rat(bal) * h;
      r.add(M, diag * p);
    }
    for (int jj = 2; jj <= N - 1; ++jj) {
      for (int s = 1; s <= n; ++s) {
        if (L[s - 1] != jj) continue;
        for (int rr = 1; rr < s; ++rr) {
          if (L[rr - 1] != N) continue;
          MultiIndex M = L;
          M[s - 1] = 1;
          M[rr - 1] = jj;
          r.add(M, h * p);
        }
      }
    }
  }
  return r;
}

// numerators / (common product of linear forms)
struct RatioTensor {
  TensorVec num;
  std::map<LinForm, int> den;

  RatioTensor() = default;
  explicit RatioTensor(TensorVec v) : num(std::move(v)) {}

  void cancel() {
    for (auto it = den.begin(); it != den.end();) {
      Poly g = it->first.to_poly();
      while (it->second > 0) {
        TensorVec q = TensorVec::zero_like(num);
        bool ok = true;
        for (auto& [L, p] : num.coeffs) {
          auto d = p.try_div(g);
          if (!d) {
            ok = false;
            break;
          }
          q.add(L, *d);
        }
        if (!ok) break;
        num = std::move(q);
        --it->second;
      }
      if (it->second == 0) it = den.erase(it);
      else ++it;
    }
  }
  bool is_polynomial() const { return den.empty(); }
  Poly den_poly() const {
    Poly d = Poly::constant(num.nz, Rat(1));
    for (auto& [f, m] : den)
      for (int i = 0; i < m; ++i) d = d * f.to_poly();
    return d;
  }
  // Coefficient at L as a factored quotient.
  FactoredRatio coefficient(const MultiIndex& L) const {
    FactoredRatio r;
    r.extra = num.get(L);
    r.denom = den;
    if (r.extra->is_zero()) r.scalar = 0;
    r.cancel();
    return r;
  }
  // a/Da == b/Db  <=>  a*Db == b*Da
  friend bool operator==(const RatioTensor& a, const RatioTensor& b) {
    return b.den_poly() * a.num == a.den_poly() * b.num;
  }
};

// R^{(i,j)}(u) = (u - h P^{(i,j)}) / (u + h)
inline RatioTensor apply_R(const RatioTensor& v, int i, int j, const Poly& u) {
  if (i == j) throw DimensionError("R-matrix needs two distinct sites");
  const int nz = v.num.nz;
  Poly h = Poly::h(nz);
  RatioTensor r;
  r.den = v.den;
  r.num = u * v.num - h * apply_perm(v.num, i, j);
  LinForm f = poly_to_linform(u + h);
  if (f.is_zero()) throw DivisionError("R-matrix pole: u + h = 0");
  Rat s = f.normalize();
  if (f.is_constant()) {
    r.num = (Rat(1) / f.c) * r.num;
  } else {
    if (s != 1) r.num = s * r.num;
    ++r.den[f];
  }
  r.cancel();
  return r;
}
inline RatioTensor apply_R(const TensorVec& v, int i, int j, const Poly& u) {
  return apply_R(RatioTensor(v), i, j, u);
}

struct NotPolynomialVector : NotPolynomialError {
  using NotPolynomialError::NotPolynomialError;
};

// Returns the R-factors of K_i in the order they act (rightmost first).
inline std::vector<std::pair<int, Poly>> qkz_factors(int n, int nz, int i, int N) {
  std::vector<std::pair<int, Poly>> fs;
  Poly h = Poly::h(nz);
  for (int j = i + 1; j <= n; ++j) fs.push_back({j, Poly::z(nz, i) - Poly::z(nz, j)});
  for (int j = 1; j < i; ++j) fs.push_back({j, Poly::z(nz, i) - Poly::z(nz, j) - Rat(N + 1) * h});
  return fs;
}

inline RatioTensor apply_Ki_ratio(const TensorVec& v, int i) {
  const int n = v.sites();
  if (i < 1 || i > n) throw DimensionError("K_i index out of range");
  RatioTensor r(v);
  for (auto& [j, u] : qkz_factors(n, v.nz, i, v.N)) r = apply_R(r, i, j, u);
  return r;
}

inline TensorVec apply_Ki(const TensorVec& v, int i) {
  RatioTensor r = apply_Ki_ratio(v, i);
  if (!r.is_polynomial()) {
    std::string d;
    for (auto& [f, m] : r.den) d += "(" + f.to_string() + ")";
    throw NotPolynomialVector("K_" + std::to_string(i) + " output keeps denominator " + d);
  }
  return r.num;
}

struct YangBaxterReport {
  int N = 0;
  bool triple = false, unitary = false;
  std::size_t checked = 0;
  std::string counterexample;
  bool ok() const { return triple && unitary; }
};

// Checks both R-matrix identities on every basis vector of (C^N)^{⊗3},
// with u, v taken as the ring variables z1, z2.
inline YangBaxterReport check_yang_baxter(int N) {
  YangBaxterReport rep;
  rep.N = N;
  rep.triple = rep.unitary = true;
  const int nz = 2;
  Poly u = Poly::z(nz, 1), w = Poly::z(nz, 2);
  MultiIndex L(3, 1);
  for (;;) {
    TensorVec b(N, nz, content_of(L, N));
    b.add(L, Poly::constant(nz, Rat(1)));
    RatioTensor lhs = apply_R(apply_R(apply_R(b, 2, 3, w), 1, 3, u), 1, 2, u - w);
    RatioTensor rhs = apply_R(apply_R(apply_R(b, 1, 2, u - w), 1, 3, u), 2, 3, w);
    if (!(lhs == rhs) && rep.triple) {
      rep.triple = false;
      rep.counterexample = "triple product differs on v" + index_string(L);
    }
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
      RatioTensor back = apply_R(apply_R(b, i, j, u), i, j, -u);
      if (!(back == RatioTensor(b)) && rep.unitary) {
        rep.unitary = false;
        rep.counterexample = "R(u)R(-u) != 1 on v" + index_string(L);
      }
    }
    ++rep.checked;
    int pos = 2;
    while (pos >= 0 && L[pos] == N) L[pos--] = 1;
    if (pos < 0) break;
    ++L[pos];
  }
  return rep;
}

}  // namespace qcb
