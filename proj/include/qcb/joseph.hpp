#pragma once

// Extended Joseph polynomials of two-row and two-column shapes, the
// intertwiners to singular vectors, and the identities relating them.

#include <string>
#include <vector>

#include "qcb/combinat.hpp"
#include "qcb/linsolve.hpp"
#include "qcb/minimal.hpp"
#include "qcb/tensor.hpp"

namespace qcb {

struct IdentificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One polynomial per tableau, in enumerate_syt order.
struct JosephFamily {
  Shape shape;
  std::vector<Tableau> tableaux;
  std::vector<Poly> values;
};

// Columns φ(e_α) in enumerate_syt order; constant coefficients.
struct Intertwiner {
  Shape shape;
  std::vector<Tableau> tableaux;
  std::vector<TensorVec> columns;
};

// I_λ with N = max(number of rows, minN).
inline TensorVec minimal_vector(const Shape& shape, int minN = 1) {
  Shape s = strip_zeros(shape);
  if (static_cast<int>(s.size()) < minN) s.resize(minN, 0);
  return build_Ilambda(Weight(s));
}

// Product of the weights of the defining equations.
inline Poly mdeg_complete_intersection(const std::vector<LinForm>& weights, int nz) {
  Poly p = Poly::constant(nz, Rat(1));
  for (auto& f : weights) p = p * f.to_poly();
  return p;
}

// Π_{i<j=α(i)} ((j-i+1)/2 h + z_i - z_j)
inline Poly joseph_twocol(const LinkPattern& lp) {
  const int n = lp.n();
  std::vector<LinForm> ws;
  for (int i = 1; i <= n; ++i) {
    int j = lp.at(i);
    if (j > i) ws.push_back(LinForm::diff(n, 0, i, j, rat_frac(j - i + 1, 2)));
  }
  Poly p = mdeg_complete_intersection(ws, n);
  if (!p.all_integer()) throw std::logic_error("two-column Joseph polynomial with a fractional coefficient");
  return p;
}

// Two-column shape: α is indexed through the link pattern of its conjugate.
inline JosephFamily joseph_twocol_family(const Shape& shape) {
  if (!is_two_column(shape)) throw std::invalid_argument("two-column shape expected");
  JosephFamily f{strip_zeros(shape), enumerate_syt(shape), {}};
  for (auto& t : f.tableaux) f.values.push_back(joseph_twocol(syt_to_linkpattern(t.conjugate())));
  return f;
}

// φ(e_α) = Σ_L (-1)^{⌊(n-p)/2⌋ + #{i even : l_i = 1}} v_L, paired sites carry
// opposite letters and unpaired sites the letter 1.
inline Intertwiner intertwiner_tworow(const Shape& shape) {
  if (!is_two_row(shape)) throw std::invalid_argument("two-row shape expected");
  Shape s = strip_zeros(shape);
  const int n = shape_size(s), p = s.size() > 1 ? s[1] : 0;
  Intertwiner phi{s, enumerate_syt(s), {}};
  std::vector<int> content = {n - p, p};
  for (auto& t : phi.tableaux) {
    LinkPattern lp = syt_to_linkpattern(t);
    std::vector<int> openers;
    for (int i = 1; i <= n; ++i)
      if (lp.at(i) > i) openers.push_back(i);
    TensorVec v(2, n, content);
    for (int mask = 0; mask < (1 << openers.size()); ++mask) {
      MultiIndex L(n, 1);
      for (std::size_t a = 0; a < openers.size(); ++a) {
        int i = openers[a], j = lp.at(i);
        bool flip = (mask >> a) & 1;
        L[i - 1] = flip ? 2 : 1;
        L[j - 1] = flip ? 1 : 2;
      }
      int e = (n - p) / 2;
      for (int i = 2; i <= n; i += 2) e += L[i - 1] == 1;
      v.add(L, Poly::constant(n, Rat(e % 2 ? -1 : 1)));
    }
    phi.columns.push_back(std::move(v));
  }
  return phi;
}

inline TensorVec apply_intertwiner(const Intertwiner& phi, const std::vector<Poly>& values) {
  if (values.size() != phi.columns.size()) throw DimensionError("family size differs from intertwiner size");
  TensorVec r = TensorVec::zero_like(phi.columns.at(0));
  for (std::size_t a = 0; a < values.size(); ++a) r = r + values[a] * phi.columns[a];
  return r;
}

// Solves I_λ = Σ_α J_α φ(e_α) on a maximal independent set of rows, then
// checks every remaining row.
inline JosephFamily joseph_tworow(const Shape& shape) {
  Intertwiner phi = intertwiner_tworow(shape);
  TensorVec I = minimal_vector(phi.shape, 2);
  const int n = I.sites();
  auto basis = weight_basis(Weight(I.content));
  const std::size_t k = phi.columns.size();
  Matrix a(basis.size(), std::vector<Rat>(k, Rat(0)));
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) a[r][c] = phi.columns[c].get(basis[r]).constant_term();
  auto rows = independent_rows(a);
  if (rows.size() != k) throw IdentificationError("intertwiner columns are linearly dependent");
  Matrix sq;
  for (int r : rows) sq.push_back(a[r]);
  Matrix inv = matrix_inverse(sq);
  JosephFamily f{phi.shape, phi.tableaux, {}};
  for (std::size_t c = 0; c < k; ++c) {
    Poly j(n);
    for (std::size_t t = 0; t < k; ++t)
      if (inv[c][t] != 0) j += inv[c][t] * I.get(basis[rows[t]]);
    f.values.push_back(j);
  }
  for (std::size_t r = 0; r < basis.size(); ++r) {
    Poly lhs(n);
    for (std::size_t c = 0; c < k; ++c)
      if (a[r][c] != 0) lhs += a[r][c] * f.values[c];
    if (lhs != I.get(basis[r]))
      throw IdentificationError("I_lambda is not in the span of the intertwiner at v" + index_string(basis[r]));
  }
  for (auto& v : f.values)
    if (!v.all_integer()) throw IdentificationError("Joseph polynomial with a fractional coefficient");
  return f;
}

// φ(e_α) = (-1)^{p(p-1)/2} ε_α Σ_L [z^{L-1}] J_{α'} v_L, L running over
// rearrangements of (1..p, 1..n-p); J_{α'} from the conjugate two-row shape.
inline Intertwiner intertwiner_twocol_literal(const Shape& shape, const JosephFamily& conj_family) {
  if (!is_two_column(shape)) throw std::invalid_argument("two-column shape expected");
  Shape s = strip_zeros(shape);
  const int n = shape_size(s);
  int p = 0;
  for (int x : s) p += x == 2;
  const int N = static_cast<int>(s.size());  // n - p
  Intertwiner phi{s, enumerate_syt(s), {}};
  auto cidx = tableau_index(conj_family.tableaux);
  std::vector<int> content(N, 1);
  for (int l = 0; l < p; ++l) content[l] = 2;
  Weight w(content);
  auto basis = weight_basis(w);
  for (auto& t : phi.tableaux) {
    const Poly& J = conj_family.values.at(cidx.at(t.conjugate().reading_word()));
    Poly J0 = J.set_h_zero();
    int sign = ((p * (p - 1) / 2) % 2 ? -1 : 1) * sign_epsilon(t);
    TensorVec v(N, n, content);
    for (auto& L : basis) {
      std::vector<int> e(n + 1, 0);
      for (int i = 0; i < n; ++i) e[i] = L[i] - 1;
      Rat c = J0.coeff(e);
      if (c != 0) v.add(L, Poly::constant(n, sign * c));
    }
    phi.columns.push_back(std::move(v));
  }
  return phi;
}

// r with Σ_α J_α φ(e_α) = r I_λ at v_{L_0}; the normalization of I_λ makes
// 1/r the factor that turns φ into the intertwiner of the identification.
inline Rat identification_scale(const Intertwiner& phi, const JosephFamily& f) {
  TensorVec x = apply_intertwiner(phi, f.values);
  TensorVec I = minimal_vector(f.shape, phi.columns.at(0).N);
  MultiIndex L0 = Weight(I.content).standard_index();
  Poly a = x.get(L0), b = I.get(L0);
  auto q = a.try_div(b);
  if (!q || !q->is_constant()) throw IdentificationError("L_0 entries are not proportional");
  return q->constant_term();
}

inline Intertwiner normalized(Intertwiner phi, const Rat& anchor) {
  if (anchor == 0) throw IdentificationError("anchor entry vanishes");
  for (auto& c : phi.columns) c = (Rat(1) / anchor) * c;
  return phi;
}

struct ExchangeReport {
  bool exchange = true, dichotomy = true;
  std::size_t checked = 0;
  std::string first_failure;
  bool ok() const { return exchange && dichotomy; }
};

// ŝ_i J_α = Σ_β m_{i;α,β} J_β for all i, α; and when m_{i;α,α} = -1,
// J_α = (h + z_i - z_{i+1}) S with S symmetric in z_i, z_{i+1}.
inline ExchangeReport check_exchange(const JosephFamily& f, const std::vector<IntMatrix>& m) {
  ExchangeReport rep;
  const int n = shape_size(f.shape);
  Poly h = Poly::h(n);
  for (int i = 1; i < n; ++i) {
    const IntMatrix& mi = m.at(i - 1);
    for (std::size_t a = 0; a < f.values.size(); ++a) {
      ++rep.checked;
      Poly rhs(n);
      for (std::size_t b = 0; b < f.values.size(); ++b)
        if (mi[a][b]) rhs += Rat(mi[a][b]) * f.values[b];
      std::string where = "i=" + std::to_string(i) + " alpha=" + f.tableaux[a].to_string();
      if (shat_action(f.values[a], i) != rhs && rep.exchange) {
        rep.exchange = false;
        rep.first_failure = "exchange relation fails at " + where;
      }
      long d = mi[a][a];
      if (d != 1 && d != -1) {
        if (rep.dichotomy) rep.first_failure = "diagonal entry not +-1 at " + where;
        rep.dichotomy = false;
      }
      if (d == -1) {
        auto q = f.values[a].try_div(Poly::z(n, i) - Poly::z(n, i + 1) + h);
        if ((!q || q->swap_z(i) != *q) && rep.dichotomy) {
          rep.dichotomy = false;
          rep.first_failure = "dichotomy fails at " + where;
        }
      }
    }
  }
  return rep;
}

inline std::vector<IntMatrix> m_matrices(const Shape& shape, bool twocol) {
  std::vector<IntMatrix> out;
  int n = shape_size(strip_zeros(shape));
  for (int i = 1; i < n; ++i) out.push_back(twocol ? m_matrix_twocol(shape, i) : m_matrix_tworow(shape, i));
  return out;
}


inline bool check_identification(const Intertwiner& phi, const JosephFamily& f) {
  return apply_intertwiner(phi, f.values) == minimal_vector(f.shape, phi.columns.at(0).N);
}

// J_{ρα}(z) == sign * J_α(z_2, ..., z_n, z_1 + shift*h) for every α.
struct CyclicityReport {
  bool ok = true;
  std::string first_failure;
};

inline CyclicityReport check_cyclicity(const JosephFamily& f, bool twocol, int sign, const Rat& shift) {
  CyclicityReport rep;
  const int n = shape_size(f.shape);
  auto idx = tableau_index(f.tableaux);
  for (std::size_t a = 0; a < f.tableaux.size(); ++a) {
    const Tableau& t = f.tableaux[a];
    LinkPattern lp = syt_to_linkpattern(twocol ? t.conjugate() : t);
    LinkPattern rl = rotate(lp);
    Tableau rt = linkpattern_to_syt(rl);
    if (twocol) rt = rt.conjugate();
    const Poly& lhs = f.values.at(idx.at(rt.reading_word()));
    std::vector<Poly> im(n + 1);
    for (int v = 0; v < n - 1; ++v) im[v] = Poly::z(n, v + 2);
    im[n - 1] = Poly::z(n, 1) + shift * Poly::h(n);
    im[n] = Poly::h(n);
    Poly rhs = Rat(sign) * f.values[a].substitute(im);
    if (lhs != rhs) {
      rep.ok = false;
      rep.first_failure = "alpha=" + t.to_string();
      return rep;
    }
  }
  return rep;
}

}  // namespace qcb
