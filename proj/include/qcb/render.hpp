#pragma once

// Text rendering of polynomial vectors in the notation used for the
// worked examples: "(z1-z2+h)v[1,1,2] + (z3-z1-2h)v[1,2,1] + ...".

#include <string>
#include <tuple>
#include <vector>

#include "qcb/poly.hpp"
#include "qcb/tensor.hpp"

namespace qcb {

struct LinearFactorization {
  Rat unit = 1;
  std::vector<Poly> factors;  // each z_a - z_b + m h with a < b, or h
};

// Splits f into factors z_a - z_b + m h (|m| <= mmax) and h.  Returns
// nullopt if something of positive degree is left over.
inline std::optional<LinearFactorization> factor_linear(Poly f, int mmax) {
  if (f.is_zero()) return std::nullopt;
  const int n = f.nz(), nw = f.nw();
  LinearFactorization out;
  std::vector<Poly> cands;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int m = -mmax; m <= mmax; ++m)
        cands.push_back(Poly::z(n, a, nw) - Poly::z(n, b, nw) + Rat(m) * Poly::h(n, nw));
  cands.push_back(Poly::h(n, nw));
  for (auto& g : cands) {
    while (f.degree() > 0) {
      auto q = f.try_div(g);
      if (!q) break;
      out.factors.push_back(g);
      f = std::move(*q);
    }
    if (f.degree() == 0) break;
  }
  if (f.degree() != 0) return std::nullopt;
  out.unit = f.constant_term();
  return out;
}

struct RenderedCoefficient {
  std::string body;
  bool negative = false;
};

inline RenderedCoefficient render_coefficient(const Poly& c) {
  RenderedCoefficient r;
  if (c.is_constant()) {
    Rat v = c.constant_term();
    r.negative = v < 0;
    Rat a = abs(v);
    if (a != 1) r.body = rat_is_integer(a) ? a.get_str() : "(" + a.get_str() + ")";
    return r;
  }
  if (c.degree() == 1 && c.is_homogeneous()) {
    r.body = "(" + c.to_string() + ")";
    return r;
  }
  if (c.is_homogeneous()) {
    if (auto fz = factor_linear(c, 2 * c.nz() + 2)) {
      r.negative = fz->unit < 0;
      Rat a = abs(fz->unit);
      if (a != 1) r.body = rat_is_integer(a) ? a.get_str() : "(" + a.get_str() + ")";
      for (auto& g : fz->factors) r.body += "(" + g.to_string() + ")";
      return r;
    }
  }
  r.body = "(" + c.to_string() + ")";
  return r;
}

inline std::string render_tensor(const TensorVec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [L, p] : v.coeffs) {
    auto rc = render_coefficient(p);
    std::string term = rc.body + "v" + index_string(L);
    if (first) s += (rc.negative ? "-" : "") + term;
    else s += (rc.negative ? " - " : " + ") + term;
    first = false;
  }
  return s;
}

}  // namespace qcb
