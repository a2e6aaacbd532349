#pragma once

// Sparse multivariate polynomials over Q in z_1..z_n, optional auxiliary
// w_1..w_m, and h.  Monomials are packed into one 64-bit word so that the
// integer order of the packed word is the term order: total degree first,
// then h, then w_m..w_1, then z_n..z_1.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcb/rat.hpp"

namespace qcb {

namespace mono {
inline constexpr int kBits = 6;
inline constexpr int kMaxVars = 9;  // fields below the degree byte
inline constexpr int kDegShift = 56;
inline constexpr std::uint64_t kField = (1u << kBits) - 1;
inline constexpr int kMaxDegree = 63;

inline int degree(std::uint64_t k) { return static_cast<int>(k >> kDegShift); }
inline int exponent(std::uint64_t k, int v) {
  return static_cast<int>((k >> (kBits * v)) & kField);
}
inline std::uint64_t pack(const std::vector<int>& e) {
  std::uint64_t k = 0;
  int d = 0;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] < 0) throw DimensionError("negative exponent");
    d += e[v];
    k |= static_cast<std::uint64_t>(e[v]) << (kBits * v);
  }
  if (d > kMaxDegree) throw DimensionError("monomial degree exceeds 63");
  return k | (static_cast<std::uint64_t>(d) << kDegShift);
}
inline bool divides(std::uint64_t a, std::uint64_t b, int nvars) {
  if (degree(a) > degree(b)) return false;
  for (int v = 0; v < nvars; ++v)
    if (exponent(a, v) > exponent(b, v)) return false;
  return true;
}
}  // namespace mono

struct Term {
  std::uint64_t key;
  Rat c;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(int nz, int nw = 0) : nz_(nz), nw_(nw) {
    if (nz < 0 || nw < 0 || nz + nw + 1 > mono::kMaxVars)
      throw DimensionError("polynomial ring too large");
  }

  static Poly constant(int nz, const Rat& c, int nw = 0) {
    Poly p(nz, nw);
    if (c != 0) p.t_.push_back({0, c});
    return p;
  }
  static Poly var(int nz, int v, int nw = 0) {
    Poly p(nz, nw);
    std::vector<int> e(p.nvars(), 0);
    e.at(v) = 1;
    p.t_.push_back({mono::pack(e), Rat(1)});
    return p;
  }
  // 1-based z_i.
  static Poly z(int nz, int i, int nw = 0) { return var(nz, i - 1, nw); }
  static Poly w(int nz, int nw, int k) { return var(nz, nz + k - 1, nw); }
  static Poly h(int nz, int nw = 0) { return var(nz, nz + nw, nw); }

  static Poly from_terms(int nz, int nw, const std::vector<std::pair<std::vector<int>, Rat>>& ts) {
    Poly p(nz, nw);
    std::vector<Term> v;
    for (auto& [e, c] : ts) {
      if (static_cast<int>(e.size()) != p.nvars()) throw DimensionError("exponent length mismatch");
      v.push_back({mono::pack(e), c});
    }
    p.t_ = normalize(std::move(v));
    return p;
  }

  int nz() const { return nz_; }
  int nw() const { return nw_; }
  int nvars() const { return nz_ + nw_ + 1; }
  int h_index() const { return nz_ + nw_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].key == 0); }
  Rat constant_term() const { return (!t_.empty() && t_[0].key == 0) ? t_[0].c : Rat(0); }
  int degree() const { return t_.empty() ? -1 : mono::degree(t_.back().key); }
  bool is_homogeneous() const {
    return t_.empty() || mono::degree(t_.front().key) == mono::degree(t_.back().key);
  }
  std::vector<int> exponents(std::uint64_t key) const {
    std::vector<int> e(nvars());
    for (int v = 0; v < nvars(); ++v) e[v] = mono::exponent(key, v);
    return e;
  }
  Rat coeff(const std::vector<int>& e) const {
    auto k = mono::pack(e);
    auto it = std::lower_bound(t_.begin(), t_.end(), k, [](const Term& a, std::uint64_t b) { return a.key < b; });
    return (it != t_.end() && it->key == k) ? it->c : Rat(0);
  }
  bool all_integer() const {
    return std::all_of(t_.begin(), t_.end(), [](const Term& t) { return rat_is_integer(t.c); });
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nz_ != b.nz_ || a.nw_ != b.nw_ || a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].key != b.t_[i].key || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  friend Poly operator*(const Rat& s, const Poly& p) {
    Poly r(p.nz_, p.nw_);
    if (s == 0) return r;
    r.t_.reserve(p.t_.size());
    for (auto& t : p.t_) r.t_.push_back({t.key, s * t.c});
    return r;
  }
  friend Poly operator*(const Poly& p, const Rat& s) { return s * p; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly r(a.nz_, a.nw_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.degree() + b.degree() > mono::kMaxDegree) throw DimensionError("product degree exceeds 63");
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    if (small.size() <= 4) {
      // shifted copies of a sorted list stay sorted
      for (auto& s : small.t_) {
        Poly part(a.nz_, a.nw_);
        part.t_.reserve(big.size());
        for (auto& t : big.t_) part.t_.push_back({t.key + s.key, t.c * s.c});
        r = r + part;
      }
      return r;
    }
    std::vector<Term> v;
    v.reserve(a.size() * b.size());
    for (auto& s : a.t_)
      for (auto& t : b.t_) v.push_back({s.key + t.key, s.c * t.c});
    r.t_ = normalize(std::move(v));
    return r;
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly pow(int e) const {
    Poly r = constant(nz_, Rat(1), nw_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Exact quotient, or nullopt when g does not divide.
  std::optional<Poly> try_div(const Poly& g) const {
    check_ring(g);
    if (g.is_zero()) throw DivisionError("division by zero polynomial");
    Poly q(nz_, nw_);
    if (is_zero()) return q;
    const Term& lg = g.t_.back();
    if (g.size() == 1 && lg.key == 0) return (Rat(1) / lg.c) * *this;
    std::map<std::uint64_t, Rat> rem;
    for (auto& t : t_) rem.emplace_hint(rem.end(), t.key, t.c);
    std::vector<Term> qt;
    while (!rem.empty()) {
      auto it = std::prev(rem.end());
      if (!mono::divides(lg.key, it->first, nvars())) return std::nullopt;
      std::uint64_t qk = it->first - lg.key;
      Rat qc = it->second / lg.c;
      for (auto& gt : g.t_) {
        auto [pos, fresh] = rem.try_emplace(qk + gt.key, 0);
        pos->second -= qc * gt.c;
        if (pos->second == 0) rem.erase(pos);
      }
      qt.push_back({qk, std::move(qc)});
    }
    std::reverse(qt.begin(), qt.end());
    q.t_ = std::move(qt);
    return q;
  }
  Poly div_exact(const Poly& g) const {
    auto q = try_div(g);
    if (!q) throw DivisionError("polynomial not divisible");
    return *q;
  }

  // Variable v goes to variable perm[v] (all variables, h included).
  Poly rename(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars()) throw DimensionError("rename length mismatch");
    Poly r(nz_, nw_);
    std::vector<Term> v;
    v.reserve(t_.size());
    for (auto& t : t_) {
      std::uint64_t k = t.key & (~std::uint64_t(0) << mono::kDegShift);
      for (int x = 0; x < nvars(); ++x)
        k |= static_cast<std::uint64_t>(mono::exponent(t.key, x)) << (mono::kBits * perm[x]);
      v.push_back({k, t.c});
    }
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
    r.t_ = std::move(v);
    return r;
  }
  // z_i <-> z_{i+1}, 1-based.
  Poly swap_z(int i) const {
    if (i < 1 || i >= nz_) throw DimensionError("swap index out of range");
    std::vector<int> perm(nvars());
    for (int v = 0; v < nvars(); ++v) perm[v] = v;
    std::swap(perm[i - 1], perm[i]);
    return rename(perm);
  }

  // General substitution: variable v is replaced by images[v]; all images share a target ring.
  Poly substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars()) throw DimensionError("substitution length mismatch");
    int tz = images[0].nz(), tw = images[0].nw();
    for (auto& im : images)
      if (im.nz() != tz || im.nw() != tw) throw DimensionError("substitution images in different rings");
    std::vector<std::vector<Poly>> powc(nvars());
    auto power = [&](int v, int e) -> const Poly& {
      auto& c = powc[v];
      if (c.empty()) c.push_back(constant(tz, Rat(1), tw));
      while (static_cast<int>(c.size()) <= e) c.push_back(c.back() * images[v]);
      return c[e];
    };
    std::vector<Term> acc;
    for (auto& t : t_) {
      Poly m = constant(tz, t.c, tw);
      for (int v = 0; v < nvars(); ++v) {
        int e = mono::exponent(t.key, v);
        if (e) m = m * power(v, e);
      }
      acc.insert(acc.end(), m.t_.begin(), m.t_.end());
    }
    Poly r(tz, tw);
    r.t_ = normalize(std::move(acc));
    return r;
  }
  // z_i -> z_i + ch*h + d
  Poly shift_z(int i, const Rat& ch, const Rat& d = 0) const {
    auto im = identity_images();
    im.at(i - 1) = im[i - 1] + ch * h(nz_, nw_) + constant(nz_, d, nw_);
    return substitute(im);
  }
  std::vector<Poly> identity_images() const {
    std::vector<Poly> im;
    for (int v = 0; v < nvars(); ++v) im.push_back(var(nz_, v, nw_));
    return im;
  }
  Poly set_h_zero() const {
    Poly r(nz_, nw_);
    for (auto& t : t_)
      if (mono::exponent(t.key, h_index()) == 0) r.t_.push_back(t);
    return r;
  }
  // The part of f of exact degree d in the auxiliary variable set {h}.
  Poly h_coefficient(int e) const {
    Poly r(nz_, nw_);
    std::vector<Term> v;
    for (auto& t : t_)
      if (mono::exponent(t.key, h_index()) == e)
        v.push_back({t.key - (static_cast<std::uint64_t>(e) << (mono::kBits * h_index())) -
                         (static_cast<std::uint64_t>(e) << mono::kDegShift),
                     t.c});
    r.t_ = normalize(std::move(v));
    return r;
  }

  Rat evaluate(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != nvars()) throw DimensionError("evaluation point length mismatch");
    std::vector<std::vector<Rat>> powc(nvars(), std::vector<Rat>{Rat(1)});
    Rat s = 0;
    for (auto& t : t_) {
      Rat m = t.c;
      for (int v = 0; v < nvars(); ++v) {
        int e = mono::exponent(t.key, v);
        if (!e) continue;
        auto& c = powc[v];
        while (static_cast<int>(c.size()) <= e) c.push_back(c.back() * x[v]);
        m *= c[e];
      }
      s += m;
    }
    return s;
  }

  std::string var_name(int v) const {
    if (v < nz_) return "z" + std::to_string(v + 1);
    if (v < nz_ + nw_) return "w" + std::to_string(v - nz_ + 1);
    return "h";
  }

  // Compact text.  Linear forms put positive z's first, then negative z's,
  // then w's, then h and the constant; everything else uses the term order.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Rat, std::string>> parts;
    if (is_homogeneous() && degree() == 1) {
      std::vector<std::pair<Rat, std::string>> pos, neg, rest;
      for (auto& t : t_) {
        int v = 0;
        while (mono::exponent(t.key, v) == 0) ++v;
        auto item = std::make_pair(t.c, var_name(v));
        if (v < nz_) (t.c > 0 ? pos : neg).push_back(item);
        else rest.push_back(item);
      }
      for (auto* g : {&pos, &neg, &rest}) parts.insert(parts.end(), g->begin(), g->end());
    } else {
      for (auto& t : t_) parts.push_back({t.c, monomial_string(t.key)});
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto& [c, m] = parts[i];
      Rat a = abs(c);
      std::string body;
      if (m.empty()) body = rat_is_integer(a) ? a.get_str() : "(" + a.get_str() + ")";
      else if (a == 1) body = m;
      else body = (rat_is_integer(a) ? a.get_str() : "(" + a.get_str() + ")") + m;
      if (c < 0) s += "-";
      else if (i > 0) s += "+";
      s += body;
    }
    return s;
  }
  std::string monomial_string(std::uint64_t key) const {
    std::string m;
    for (int v = 0; v < nvars(); ++v) {
      int e = mono::exponent(key, v);
      if (!e) continue;
      if (!m.empty()) m += "*";
      m += var_name(v);
      if (e > 1) m += "^" + std::to_string(e);
    }
    return m;
  }

  static Poly parse(const std::string& text, int nz, int nw = 0);

 private:
  int nz_ = 0, nw_ = 0;
  std::vector<Term> t_;

  void check_ring(const Poly& o) const {
    if (nz_ != o.nz_ || nw_ != o.nw_) throw DimensionError("polynomials live in different rings");
  }
  static std::vector<Term> normalize(std::vector<Term> v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
    std::vector<Term> out;
    out.reserve(v.size());
    for (auto& t : v) {
      if (!out.empty() && out.back().key == t.key) out.back().c += t.c;
      else {
        if (!out.empty() && out.back().c == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    return out;
  }
  static Poly merge(const Poly& a, const Poly& b, bool sub) {
    a.check_ring(b);
    Poly r(a.nz_, a.nw_);
    r.t_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.t_[i].key < b.t_[j].key)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.size() || b.t_[j].key < a.t_[i].key) {
        r.t_.push_back({b.t_[j].key, sub ? Rat(-b.t_[j].c) : b.t_[j].c});
        ++j;
      } else {
        Rat c = sub ? Rat(a.t_[i].c - b.t_[j].c) : Rat(a.t_[i].c + b.t_[j].c);
        if (c != 0) r.t_.push_back({a.t_[i].key, std::move(c)});
        ++i, ++j;
      }
    }
    return r;
  }
};

namespace detail {
class PolyParser {
 public:
  PolyParser(const std::string& s, int nz, int nw) : s_(s), nz_(nz), nw_(nw) {}
  Poly run() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
  int nz_, nw_;

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("cannot parse polynomial '" + s_ + "' at " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'z' || c == 'w' || c == 'h';
  }
  int integer() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected integer");
    return std::stoi(s_.substr(b, i_ - b));
  }
  Poly expr() {
    Poly acc(nz_, nw_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[i_] == '-';
        ++i_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }
  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++i_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }
  Poly factor() {
    Poly b = primary();
    if (peek('^')) {
      ++i_;
      b = b.pow(integer());
    }
    return b;
  }
  Poly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (!peek(')')) fail("expected )");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string num = s_.substr(b, i_ - b);
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        num += "/" + std::to_string(integer());
      }
      return Poly::constant(nz_, rat_from_string(num), nw_);
    }
    if (c == 'h') {
      ++i_;
      return Poly::h(nz_, nw_);
    }
    if (c == 'z' || c == 'w') {
      ++i_;
      int k = integer();
      if (c == 'z') {
        if (k < 1 || k > nz_) fail("z index out of range");
        return Poly::z(nz_, k, nw_);
      }
      if (k < 1 || k > nw_) fail("w index out of range");
      return Poly::w(nz_, nw_, k);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};
}  // namespace detail

inline Poly Poly::parse(const std::string& text, int nz, int nw) {
  return detail::PolyParser(text, nz, nw).run();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// (tau_i f - f) / (z_i - z_{i+1})
inline Poly divided_difference(const Poly& f, int i) {
  Poly d = Poly::z(f.nz(), i, f.nw()) - Poly::z(f.nz(), i + 1, f.nw());
  auto q = (f.swap_z(i) - f).try_div(d);
  if (!q) throw std::logic_error("divided difference: numerator not divisible");
  return *q;
}

}  // namespace qcb
