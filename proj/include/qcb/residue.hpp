#pragma once

// Iterated residues of the N = 2 contour integral for minimal vectors of
// two-row shapes, and their exact evaluation to polynomials.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcb/joseph.hpp"
#include "qcb/parallel.hpp"
#include "qcb/ratio.hpp"

namespace qcb {

struct MultiplicityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inside: residues at w_k = z_i.  Outside: minus residues at w_k = z_i - h.
enum class PoleSide { Inside, Outside };

// Corrected uses (-1)^{p(n-p)}; Literal uses (-1)^{p(n-p+1)}, which is off by (-1)^p.
enum class PrefactorSign { Corrected, Literal };

// Interpolation evaluates the leaves at integer points; CommonDenominator
// clears denominators symbolically and is only practical for small n.
enum class LeafSum { Interpolation, CommonDenominator };

struct Integrand {
  int n = 0, p = 0;
  std::vector<int> a;
  FactoredRatio body;
};

inline int prefactor_sign(int n, int p, PrefactorSign s) {
  int e = s == PrefactorSign::Literal ? p * (n - p + 1) : p * (n - p);
  return e % 2 ? -1 : 1;
}

namespace detail {

inline LinForm wz_form(int n, int p, int k, int i, int hcoef) {
  LinForm f(n, p);
  f.w[k - 1] = 1;
  f.z[i - 1] = -1;
  f.h = hcoef;
  return f;
}

inline LinForm ww_form(int n, int p, int plus, int minus, int hcoef) {
  LinForm f(n, p);
  f.w[plus - 1] = 1;
  f.w[minus - 1] = -1;
  f.h = hcoef;
  return f;
}

}  // namespace detail

inline Integrand build_integrand(const Shape& shape, const std::vector<int>& a,
                                 PrefactorSign sign = PrefactorSign::Corrected) {
  Shape s = strip_zeros(shape);
  if (s.empty() || !is_two_row(s)) throw DimensionError("integrand needs a two-row shape");
  const int n = shape_size(s), p = s.size() > 1 ? s[1] : 0;
  if (static_cast<int>(a.size()) != p) throw DimensionError("index set size differs from the second row");
  for (int k = 0; k < p; ++k) {
    if (a[k] < 1 || a[k] > n) throw DimensionError("index out of range");
    if (k && a[k] <= a[k - 1]) throw DimensionError("index set must be increasing");
  }
  Integrand g{n, p, a, {}};
  FactoredRatio& r = g.body;
  r.scalar = prefactor_sign(n, p, sign);
  LinForm hf(n, p);
  hf.h = 1;
  for (int k = 0; k < p; ++k) r.mul_form(hf);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.mul_form(LinForm::diff(n, p, i, j, 1));
  for (int k = 1; k <= p; ++k)
    for (int l = k + 1; l <= p; ++l) {
      r.mul_form(detail::ww_form(n, p, l, k, 0));
      r.mul_form(detail::ww_form(n, p, k, l, 1));
    }
  for (int k = 1; k <= p; ++k) {
    for (int i = 1; i <= a[k - 1]; ++i) r.div_form(detail::wz_form(n, p, k, i, 0));
    for (int i = a[k - 1]; i <= n; ++i) r.div_form(detail::wz_form(n, p, k, i, 1));
  }
  r.cancel();
  return g;
}

// One term of the fully iterated residue: poles[k-1] = i means w_k was
// evaluated at z_i (inside) or z_i - h (outside).
struct ResidueLeaf {
  std::vector<int> poles;
  FactoredRatio value;
};

// Residue of r at the simple zero of the denominator factor f in w_k.
inline FactoredRatio residue_at(const FactoredRatio& r, const LinForm& f, int k) {
  LinForm root = f.solve_for_w(k);
  FactoredRatio out;
  out.scalar = r.scalar / f.wcoef(k);
  for (auto& [g, m] : r.numer) {
    LinForm s = g.substitute_w(k, root);
    if (s.is_zero()) return FactoredRatio{Rat(0), {}, {}, {}};
    for (int i = 0; i < m; ++i) out.mul_form(s);
  }
  for (auto& [g, m] : r.denom) {
    int left = g == f ? m - 1 : m;
    if (left == 0) continue;
    LinForm s = g.substitute_w(k, root);
    if (s.is_zero()) throw MultiplicityError("pole of higher order at " + root.to_string());
    for (int i = 0; i < left; ++i) out.div_form(s);
  }
  if (r.extra) throw std::logic_error("unfactored numerators are not supported in residues");
  out.cancel();
  return out;
}

inline void require_simple_w_poles(const FactoredRatio& r) {
  for (auto& [f, m] : r.denom)
    if (f.has_w() && m > 1) throw MultiplicityError("repeated factor " + f.to_string());
}

// Iterates w_p, ..., w_1; leaves are returned in lexicographic order of poles.
inline std::vector<ResidueLeaf> residue_leaves(const Integrand& g, PoleSide side) {
  std::vector<ResidueLeaf> cur{{std::vector<int>(g.p, 0), ratio_cancel(g.body)}};
  require_simple_w_poles(cur[0].value);
  for (int k = g.p; k >= 1; --k) {
    std::vector<ResidueLeaf> next;
    for (auto& leaf : cur) {
      for (auto& [f, m] : leaf.value.denom) {
        if (f.wcoef(k) == 0) continue;
        LinForm root = f.solve_for_w(k);
        bool inside = root.h == 0;
        if (inside != (side == PoleSide::Inside)) continue;
        int zi = 0;
        for (int i = 0; i < g.n; ++i)
          if (root.z[i] != 0) zi = i + 1;
        ResidueLeaf r{leaf.poles, residue_at(leaf.value, f, k)};
        r.poles[k - 1] = zi;
        if (side == PoleSide::Outside) r.value.scalar = -r.value.scalar;
        if (r.value.is_zero()) continue;
        require_simple_w_poles(r.value);
        next.push_back(std::move(r));
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [](const ResidueLeaf& x, const ResidueLeaf& y) { return x.poles < y.poles; });
  return cur;
}

namespace detail {

struct IntForm {
  std::vector<long> z;
  long h = 0, c = 0;
  long at(const std::vector<long>& zv, long hv) const {
    long s = c + h * hv;
    for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * zv[i];
    return s;
  }
};

struct CompiledLeaf {
  Rat scalar;
  std::vector<IntForm> numer, denom;
};

inline long as_long(const Rat& x) {
  if (!rat_is_integer(x) || !x.get_num().fits_slong_p()) throw std::logic_error("form coefficient is not a small integer");
  return x.get_num().get_si();
}

inline IntForm compile_form(const LinForm& f) {
  if (f.has_w()) throw std::logic_error("leaf still depends on w");
  IntForm r;
  for (auto& x : f.z) r.z.push_back(as_long(x));
  r.h = as_long(f.h);
  r.c = as_long(f.c);
  return r;
}

inline std::vector<CompiledLeaf> compile_leaves(const std::vector<ResidueLeaf>& leaves) {
  std::vector<CompiledLeaf> out;
  for (auto& l : leaves) {
    CompiledLeaf c{l.value.scalar, {}, {}};
    for (auto& [f, m] : l.value.numer)
      for (int i = 0; i < m; ++i) c.numer.push_back(compile_form(f));
    for (auto& [f, m] : l.value.denom)
      for (int i = 0; i < m; ++i) c.denom.push_back(compile_form(f));
    out.push_back(std::move(c));
  }
  return out;
}

inline Rat leaf_sum_at(const std::vector<CompiledLeaf>& leaves, const std::vector<long>& z, long h) {
  Rat total = 0;
  for (auto& l : leaves) {
    mpz_class num = 1, den = 1;
    for (auto& f : l.numer) num *= f.at(z, h);
    if (num == 0) continue;
    for (auto& f : l.denom) {
      long v = f.at(z, h);
      if (v == 0) throw DivisionError("evaluation point lies on a pole");
      den *= v;
    }
    Rat t(num, den);
    t.canonicalize();
    total += l.scalar * t;
  }
  return total;
}

// Lattice points t in N^n with |t| <= k, in lexicographic order.
inline std::vector<std::vector<int>> simplex_points(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(n, 0);
  std::function<void(int, int)> rec = [&](int d, int left) {
    if (d == n) {
      out.push_back(t);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      t[d] = v;
      rec(d + 1, left - v);
    }
    t[d] = 0;
  };
  rec(0, k);
  return out;
}

}  // namespace detail

// Recovers the polynomial of total degree <= k in z_1..z_n (h = 1) from its
// values at alpha + t, |t| <= k, by Newton forward differences, and returns
// its homogenization of degree k.
inline Poly interpolate_homogeneous(int n, int k, const std::vector<long>& alpha,
                                    const std::vector<std::vector<int>>& points, std::vector<Rat> vals) {
  std::map<std::vector<int>, std::size_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i) idx[points[i]] = i;
  for (int d = 0; d < n; ++d) {
    std::vector<std::vector<std::size_t>> by_level(k + 1);
    for (std::size_t i = 0; i < points.size(); ++i) by_level[points[i][d]].push_back(i);
    for (int r = 1; r <= k; ++r)
      for (int s = k; s >= r; --s)
        for (std::size_t i : by_level[s]) {
          std::vector<int> q = points[i];
          --q[d];
          vals[i] -= vals[idx.at(q)];
        }
  }
  // binom[d][m] = C(z_d - alpha_d, m)
  std::vector<std::vector<Poly>> binom(n);
  for (int d = 0; d < n; ++d) {
    Poly x = Poly::z(n, d + 1) - Poly::constant(n, Rat(alpha[d]));
    binom[d].push_back(Poly::constant(n, 1));
    for (int m = 1; m <= k; ++m)
      binom[d].push_back(binom[d].back() * (x - Poly::constant(n, Rat(m - 1))) * Poly::constant(n, rat_frac(1, m)));
  }
  Poly dehom(n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (vals[i] == 0) continue;
    Poly t = Poly::constant(n, vals[i]);
    for (int d = 0; d < n; ++d)
      if (points[i][d]) t = t * binom[d][points[i][d]];
    dehom += t;
  }
  std::vector<std::pair<std::vector<int>, Rat>> terms;
  for (auto& t : dehom.terms()) {
    std::vector<int> e = dehom.exponents(t.key);
    int deg = 0;
    for (int v = 0; v < n; ++v) deg += e[v];
    e[n] = k - deg;
    terms.push_back({e, t.c});
  }
  return Poly::from_terms(n, 0, terms);
}

// Sums the leaves by exact interpolation; the result is then compared with
// the leaves at random points with h != 1.
inline Poly sum_leaves_interpolated(const std::vector<ResidueLeaf>& leaves, int n, int degree) {
  auto compiled = detail::compile_leaves(leaves);
  std::vector<long> alpha(n);
  for (int i = 0; i < n; ++i) alpha[i] = static_cast<long>(i + 1) * (degree + n + 2);
  auto points = detail::simplex_points(n, degree);
  auto vals = parallel_map(points.size(), [&](std::size_t i) {
    std::vector<long> z(n);
    for (int d = 0; d < n; ++d) z[d] = alpha[d] + points[i][d];
    return detail::leaf_sum_at(compiled, z, 1);
  });
  Poly result = interpolate_homogeneous(n, degree, alpha, points, std::move(vals));
  std::mt19937_64 rng(0x5eed + n * 31 + degree);
  std::uniform_int_distribution<long> zd(-60, 60), hd(2, 9);
  for (int rep = 0, hits = 0; hits < 3 && rep < 100; ++rep) {
    std::vector<long> z(n);
    for (auto& x : z) x = zd(rng);
    long h = hd(rng);
    Rat expect;
    try {
      expect = detail::leaf_sum_at(compiled, z, h);
    } catch (const DivisionError&) {
      continue;
    }
    std::vector<Rat> pt;
    for (long x : z) pt.push_back(Rat(x));
    pt.push_back(Rat(h));
    if (result.evaluate(pt) != expect) throw NotPolynomialError("residue sum is not a polynomial of the expected degree");
    ++hits;
  }
  return result;
}

// Sums the leaves over the least common denominator of their factors.
inline Poly sum_leaves_common_denominator(const std::vector<ResidueLeaf>& leaves, int n) {
  std::map<LinForm, int> lcm;
  for (auto& l : leaves)
    for (auto& [f, m] : l.value.denom) {
      LinForm g = f.without_w();
      lcm[g] = std::max(lcm[g], m);
    }
  Poly numer(n);
  for (auto& l : leaves) {
    FactoredRatio r;
    r.scalar = l.value.scalar;
    for (auto& [f, m] : l.value.numer)
      for (int i = 0; i < m; ++i) r.mul_form(f.without_w());
    std::map<LinForm, int> own;
    for (auto& [f, m] : l.value.denom) own[f.without_w()] = m;
    for (auto& [f, m] : lcm)
      for (int i = own.count(f) ? own[f] : 0; i < m; ++i) r.mul_form(f);
    numer += r.expand(n);
  }
  for (auto& [f, m] : lcm) {
    Poly g = f.to_poly();
    for (int i = 0; i < m; ++i) {
      auto q = numer.try_div(g);
      if (!q) throw NotPolynomialError("residue sum keeps the pole " + f.to_string());
      numer = std::move(*q);
    }
  }
  return numer;
}

inline Poly sum_leaves(const std::vector<ResidueLeaf>& leaves, int n, int degree, LeafSum method) {
  bool polynomial = std::all_of(leaves.begin(), leaves.end(), [](const ResidueLeaf& l) { return l.value.denom.empty(); });
  if (polynomial) {
    Poly s(n);
    for (auto& l : leaves) {
      FactoredRatio r;
      r.scalar = l.value.scalar;
      for (auto& [f, m] : l.value.numer)
        for (int i = 0; i < m; ++i) r.mul_form(f.without_w());
      s += r.expand(n);
    }
    return s;
  }
  if (method == LeafSum::CommonDenominator) return sum_leaves_common_denominator(leaves, n);
  return sum_leaves_interpolated(leaves, n, degree);
}

inline int tworow_degree(int n, int p) { return p * (p - 1) / 2 + (n - p) * (n - p - 1) / 2; }

inline Poly iterated_residue(const Integrand& g, PoleSide side, LeafSum method = LeafSum::Interpolation) {
  return sum_leaves(residue_leaves(g, side), g.n, tworow_degree(g.n, g.p), method);
}

// The multi-index with letter 2 at the positions a and 1 elsewhere.
inline MultiIndex index_of_positions(int n, const std::vector<int>& a) {
  MultiIndex L(n, 1);
  for (int i : a) L.at(i - 1) = 2;
  return L;
}

inline std::vector<std::vector<int>> increasing_subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

struct ResidueReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string first_failure;
  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
};

inline std::string positions_string(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

// Every component under both pole conventions against the minimal vector.
inline ResidueReport residue_component_check(const Shape& shape, LeafSum method = LeafSum::Interpolation) {
  Shape s = strip_zeros(shape);
  const int n = shape_size(s), p = s.size() > 1 ? s[1] : 0;
  TensorVec I = minimal_vector(s, 2);
  ResidueReport rep;
  for (auto& a : increasing_subsets(n, p)) {
    Integrand g = build_integrand(s, a);
    Poly expect = I.get(index_of_positions(n, a));
    for (PoleSide side : {PoleSide::Inside, PoleSide::Outside}) {
      ++rep.checked;
      Poly got = iterated_residue(g, side, method);
      if (got != expect)
        rep.fail("a=" + positions_string(a) + (side == PoleSide::Inside ? " inside" : " outside") + ": got " +
                 got.to_string() + ", expected " + expect.to_string());
    }
  }
  return rep;
}

// The outside evaluation for a = (n-p+1, ..., n) is the single chain
// w_k = z_{k+n-p} - h and equals the product over both blocks.
inline ResidueReport l0_chain_check(int n, int p) {
  ResidueReport rep;
  std::vector<int> a;
  for (int k = 1; k <= p; ++k) a.push_back(n - p + k);
  Integrand g = build_integrand(p ? Shape{n - p, p} : Shape{n}, a);
  auto leaves = residue_leaves(g, PoleSide::Outside);
  ++rep.checked;
  if (leaves.size() != 1 || leaves[0].poles != a) {
    rep.fail("outside evaluation has " + std::to_string(leaves.size()) + " branches");
    return rep;
  }
  Poly expect = Poly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((i <= n - p) == (j <= n - p)) expect = expect * LinForm::diff(n, 0, i, j, 1).to_poly();
  Poly got = sum_leaves(leaves, n, tworow_degree(n, p), LeafSum::Interpolation);
  if (got != expect) rep.fail("chain value " + got.to_string() + " differs from " + expect.to_string());
  return rep;
}

// All components assembled into a vector of (C^2)^{\otimes n}.
inline TensorVec residue_vector(const Shape& shape, PoleSide side = PoleSide::Inside,
                                PrefactorSign sign = PrefactorSign::Corrected) {
  Shape s = strip_zeros(shape);
  const int n = shape_size(s), p = s.size() > 1 ? s[1] : 0;
  TensorVec v(2, n, {n - p, p});
  for (auto& a : increasing_subsets(n, p)) v.add(index_of_positions(n, a), iterated_residue(build_integrand(s, a, sign), side));
  return v;
}

}  // namespace qcb
