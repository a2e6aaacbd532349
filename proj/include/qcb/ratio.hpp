#pragma once

// Linear forms in z, w, h and quotients of their products.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcb/poly.hpp"

namespace qcb {

struct LinForm {
  std::vector<Rat> z, w;
  Rat h = 0, c = 0;

  LinForm() = default;
  LinForm(int nz, int nw) : z(nz, Rat(0)), w(nw, Rat(0)) {}

  // z_i - z_j + a*h, 1-based
  static LinForm diff(int nz, int nw, int i, int j, const Rat& a = 0) {
    LinForm f(nz, nw);
    f.z.at(i - 1) += 1;
    f.z.at(j - 1) -= 1;
    f.h = a;
    return f;
  }

  bool is_zero() const { return is_constant() && c == 0; }
  bool is_constant() const {
    for (auto& x : z) if (x != 0) return false;
    for (auto& x : w) if (x != 0) return false;
    return h == 0;
  }
  bool has_w() const {
    for (auto& x : w) if (x != 0) return true;
    return false;
  }
  const Rat& wcoef(int k) const { return w.at(k - 1); }

  // Flips the sign so the first nonzero coefficient (z, w, h, constant) is positive.
  // Returns the factor s with old = s * new.
  Rat normalize() {
    auto first = [&]() -> int {
      for (auto& x : z) if (x != 0) return sgn(x);
      for (auto& x : w) if (x != 0) return sgn(x);
      if (h != 0) return sgn(h);
      return sgn(c);
    }();
    if (first < 0) {
      for (auto& x : z) x = -x;
      for (auto& x : w) x = -x;
      h = -h;
      c = -c;
      return Rat(-1);
    }
    return Rat(1);
  }

  LinForm operator+(const LinForm& o) const {
    LinForm r = *this;
    for (std::size_t i = 0; i < z.size(); ++i) r.z[i] += o.z[i];
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] += o.w[i];
    r.h += o.h;
    r.c += o.c;
    return r;
  }
  LinForm scaled(const Rat& s) const {
    LinForm r = *this;
    for (auto& x : r.z) x *= s;
    for (auto& x : r.w) x *= s;
    r.h *= s;
    r.c *= s;
    return r;
  }
  // Replace w_k by the form v (which must not contain w_k).
  LinForm substitute_w(int k, const LinForm& v) const {
    Rat a = w.at(k - 1);
    LinForm r = *this;
    r.w[k - 1] = 0;
    if (a == 0) return r;
    return r + v.scaled(a);
  }
  // The root of a*w_k + rest = 0, i.e. -rest/a.
  LinForm solve_for_w(int k) const {
    Rat a = w.at(k - 1);
    if (a == 0) throw std::logic_error("form does not involve the variable");
    LinForm rest = *this;
    rest.w[k - 1] = 0;
    return rest.scaled(Rat(-1) / a);
  }

  Poly to_poly() const {
    int nz = static_cast<int>(z.size()), nw = static_cast<int>(w.size());
    Poly p = Poly::constant(nz, c, nw);
    for (int i = 0; i < nz; ++i)
      if (z[i] != 0) p += z[i] * Poly::z(nz, i + 1, nw);
    for (int i = 0; i < nw; ++i)
      if (w[i] != 0) p += w[i] * Poly::w(nz, nw, i + 1);
    if (h != 0) p += h * Poly::h(nz, nw);
    return p;
  }
  // Drops the w slots, which must all be zero.
  LinForm without_w() const {
    if (has_w()) throw std::logic_error("form still involves w");
    LinForm r = *this;
    r.w.clear();
    return r;
  }
  Rat evaluate(const std::vector<Rat>& zv, const Rat& hv) const {
    Rat s = c + h * hv;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (z[i] != 0) s += z[i] * zv[i];
    if (has_w()) throw std::logic_error("evaluating form with free w");
    return s;
  }
  std::string to_string() const { return to_poly().to_string(); }

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.z == b.z && a.w == b.w && a.h == b.h && a.c == b.c;
  }
  friend bool operator<(const LinForm& a, const LinForm& b) {
    if (a.z != b.z) return a.z < b.z;
    if (a.w != b.w) return a.w < b.w;
    if (a.h != b.h) return a.h < b.h;
    return a.c < b.c;
  }
};

inline LinForm poly_to_linform(const Poly& p) {
  if (p.degree() > 1) throw DimensionError("expected a linear polynomial");
  LinForm f(p.nz(), p.nw());
  for (auto& t : p.terms()) {
    if (t.key == 0) {
      f.c = t.c;
      continue;
    }
    for (int v = 0; v < p.nvars(); ++v) {
      if (!mono::exponent(t.key, v)) continue;
      if (v < p.nz()) f.z[v] = t.c;
      else if (v < p.nz() + p.nw()) f.w[v - p.nz()] = t.c;
      else f.h = t.c;
    }
  }
  return f;
}

struct NotPolynomialError : std::domain_error {
  using std::domain_error::domain_error;
};

struct FactoredRatio {
  Rat scalar = 1;
  std::map<LinForm, int> numer, denom;
  std::optional<Poly> extra;  // unfactored numerator part

  bool is_zero() const { return scalar == 0; }

  void mul_form(LinForm f) {
    if (f.is_constant()) {
      scalar *= f.c;
      return;
    }
    scalar *= f.normalize();
    ++numer[f];
  }
  void div_form(LinForm f) {
    if (f.is_zero()) throw DivisionError("division by identically zero form");
    if (f.is_constant()) {
      scalar /= f.c;
      return;
    }
    scalar *= f.normalize();
    ++denom[f];
  }

  // Removes forms common to numerator and denominator, then trial-divides
  // the unfactored part by the remaining denominator forms.
  void cancel() {
    if (scalar == 0) {
      numer.clear();
      denom.clear();
      extra.reset();
      return;
    }
    for (auto it = denom.begin(); it != denom.end();) {
      auto nt = numer.find(it->first);
      if (nt != numer.end()) {
        int m = std::min(nt->second, it->second);
        nt->second -= m;
        it->second -= m;
        if (nt->second == 0) numer.erase(nt);
      }
      if (it->second == 0) it = denom.erase(it);
      else ++it;
    }
    if (!extra) return;
    for (auto it = denom.begin(); it != denom.end();) {
      Poly g = it->first.to_poly();
      while (it->second > 0) {
        if (g.nz() != extra->nz() || g.nw() != extra->nw()) break;
        auto q = extra->try_div(g);
        if (!q) break;
        extra = std::move(*q);
        --it->second;
      }
      if (it->second == 0) it = denom.erase(it);
      else ++it;
    }
  }

  Poly expand(int nz, int nw = 0) const {
    FactoredRatio r = *this;
    r.cancel();
    if (!r.denom.empty()) throw NotPolynomialError("denominator factors remain: " + r.to_string());
    Poly p = Poly::constant(nz, r.scalar, nw);
    for (auto& [f, m] : r.numer) {
      Poly g = f.to_poly();
      for (int i = 0; i < m; ++i) p = p * g;
    }
    if (r.extra) p = p * *r.extra;
    return p;
  }

  std::string to_string() const {
    std::string s = scalar.get_str();
    for (auto& [f, m] : numer)
      s += "*(" + f.to_string() + ")" + (m > 1 ? "^" + std::to_string(m) : "");
    if (extra) s += "*(" + extra->to_string() + ")";
    if (!denom.empty()) {
      s += "/(";
      bool first = true;
      for (auto& [f, m] : denom) {
        if (!first) s += "*";
        s += "(" + f.to_string() + ")" + (m > 1 ? "^" + std::to_string(m) : "");
        first = false;
      }
      s += ")";
    }
    return s;
  }
};

inline FactoredRatio ratio_cancel(FactoredRatio r) {
  r.cancel();
  return r;
}
inline Poly ratio_expand(const FactoredRatio& r, int nz, int nw = 0) { return r.expand(nz, nw); }

}  // namespace qcb
