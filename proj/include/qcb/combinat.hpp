#pragma once

// Standard Young tableaux, link patterns, the Temperley-Lieb action and the
// exchange matrices of two-row and two-column shapes.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcb {

using Shape = std::vector<int>;
using IntMatrix = std::vector<std::vector<long>>;

inline Shape strip_zeros(Shape s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

inline bool is_partition_shape(const Shape& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0) return false;
    if (i && s[i] > s[i - 1]) return false;
  }
  return true;
}

inline Shape conjugate_shape(const Shape& s) {
  Shape c;
  for (int col = 0; !s.empty() && col < s.front(); ++col) {
    int len = 0;
    for (int r : s) len += r > col;
    c.push_back(len);
  }
  return c;
}

inline int shape_size(const Shape& s) {
  int n = 0;
  for (int x : s) n += x;
  return n;
}

struct Tableau {
  std::vector<std::vector<int>> rows;

  Shape shape() const {
    Shape s;
    for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
  }
  int n() const { return shape_size(shape()); }
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
  }
  // (row, column) of entry k, 0-based
  std::pair<int, int> position(int k) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        if (rows[r][c] == k) return {static_cast<int>(r), static_cast<int>(c)};
    throw std::out_of_range("entry not in tableau");
  }
  Tableau conjugate() const {
    Tableau t;
    Shape c = conjugate_shape(shape());
    t.rows.resize(c.size());
    for (std::size_t col = 0; col < c.size(); ++col)
      for (int r = 0; r < c[col]; ++r) t.rows[col].push_back(rows[r][col]);
    return t;
  }
  bool is_standard() const {
    std::vector<int> w = reading_word();
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != static_cast<int>(i) + 1) return false;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c && rows[r][c] <= rows[r][c - 1]) return false;
        if (r && (c >= rows[r - 1].size() || rows[r][c] <= rows[r - 1][c])) return false;
      }
    return true;
  }
  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r) s += "/";
      for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? "," : "") + std::to_string(rows[r][c]);
    }
    return s;
  }
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// All standard fillings, ordered lexicographically by row-reading word.
inline std::vector<Tableau> enumerate_syt(const Shape& shape_in) {
  Shape shape = strip_zeros(shape_in);
  if (!is_partition_shape(shape)) throw std::invalid_argument("not a partition");
  const int n = shape_size(shape);
  std::vector<Tableau> out;
  Tableau t;
  t.rows.resize(shape.size());
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      int c = static_cast<int>(t.rows[r].size());
      if (c == shape[r]) continue;
      if (r && static_cast<int>(t.rows[r - 1].size()) <= c) continue;
      t.rows[r].push_back(k);
      place(k + 1);
      t.rows[r].pop_back();
    }
  };
  place(1);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

inline long hook_length_count(const Shape& shape_in) {
  Shape s = strip_zeros(shape_in);
  Shape c = conjugate_shape(s);
  long num = 1, den = 1;
  int n = shape_size(s);
  for (int k = 2; k <= n; ++k) num *= k;
  for (std::size_t r = 0; r < s.size(); ++r)
    for (int col = 0; col < s[r]; ++col) den *= (s[r] - col - 1) + (c[col] - static_cast<int>(r) - 1) + 1;
  return num / den;
}

// (-1)^{#{i<j : j strictly south-west of i}}
inline int sign_epsilon(const Tableau& t) {
  const int n = t.n();
  std::vector<std::pair<int, int>> pos(n + 1);
  for (int k = 1; k <= n; ++k) pos[k] = t.position(k);
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      count += pos[j].first > pos[i].first && pos[j].second < pos[i].second;
  return count % 2 ? -1 : 1;
}

// ---- link patterns ----

struct LinkPattern {
  std::vector<int> partner;  // partner[i-1] = α(i), 0 when unpaired

  LinkPattern() = default;
  explicit LinkPattern(int n) : partner(n, 0) {}

  int n() const { return static_cast<int>(partner.size()); }
  int at(int i) const { return partner.at(i - 1); }
  void pair(int i, int j) {
    partner.at(i - 1) = j;
    partner.at(j - 1) = i;
  }
  void unpair(int i) { partner.at(i - 1) = 0; }
  int arches() const {
    int a = 0;
    for (int x : partner) a += x != 0;
    return a / 2;
  }
  // Non-crossing, and no unpaired point below an arch.
  bool valid() const {
    std::vector<int> stack;
    for (int i = 1; i <= n(); ++i) {
      int j = at(i);
      if (j < 0 || j > n() || j == i) return false;
      if (j && at(j) != i) return false;
      if (j == 0) {
        if (!stack.empty()) return false;
      } else if (j > i) {
        stack.push_back(i);
      } else {
        if (stack.empty() || stack.back() != j) return false;
        stack.pop_back();
      }
    }
    return stack.empty();
  }
  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= n(); ++i) {
      int j = at(i);
      if (j > i) s += (s.empty() ? "" : " ") + std::to_string(i) + "-" + std::to_string(j);
      if (j == 0) s += (s.empty() ? "" : " ") + std::to_string(i);
    }
    return s;
  }
  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
  friend bool operator<(const LinkPattern& a, const LinkPattern& b) { return a.partner < b.partner; }
};

// Row 1 holds openings and unpaired points, row 2 closings.
inline LinkPattern syt_to_linkpattern(const Tableau& t) {
  if (t.rows.size() > 2) throw std::invalid_argument("link patterns need at most two rows");
  const int n = t.n();
  LinkPattern lp(n);
  std::vector<int> row(n + 1, 0);
  if (t.rows.size() == 2)
    for (int k : t.rows[1]) row[k] = 1;
  std::vector<int> open;
  for (int k = 1; k <= n; ++k) {
    if (row[k] == 0) {
      open.push_back(k);
    } else {
      if (open.empty()) throw std::invalid_argument("not a standard tableau");
      lp.pair(open.back(), k);
      open.pop_back();
    }
  }
  return lp;
}

inline Tableau linkpattern_to_syt(const LinkPattern& lp) {
  if (!lp.valid()) throw std::invalid_argument("invalid link pattern");
  Tableau t;
  t.rows.resize(lp.arches() ? 2 : 1);
  for (int i = 1; i <= lp.n(); ++i) {
    int j = lp.at(i);
    t.rows[j != 0 && j < i ? 1 : 0].push_back(i);
  }
  return t;
}

inline std::vector<LinkPattern> link_patterns(int n, int p) {
  std::vector<LinkPattern> out;
  for (auto& t : enumerate_syt(Shape{n - p, p})) out.push_back(syt_to_linkpattern(t));
  return out;
}

struct TLTerm {
  long coeff = 0;  // 0 means the image vanishes
  LinkPattern lp;
};

// e_i reconnects i and i+1.
inline TLTerm tl_generator(const LinkPattern& lp, int i) {
  if (i < 1 || i >= lp.n()) throw std::out_of_range("TL generator index");
  int a = lp.at(i), b = lp.at(i + 1);
  if (a == i + 1) return {2, lp};
  if (a == 0 && b == 0) return {0, lp};
  LinkPattern r = lp;
  r.unpair(i);
  r.unpair(i + 1);
  if (a) r.unpair(a);
  if (b) r.unpair(b);
  r.pair(i, i + 1);
  if (a && b) r.pair(std::min(a, b), std::max(a, b));
  return {1, r};
}

// p_α(i,j) = j - i + 1 - #{k : i <= k < α(k) <= j}
inline int p_alpha(const LinkPattern& lp, int i, int j) {
  if (!(1 <= i && i < j && j <= lp.n())) throw std::out_of_range("p_alpha needs 1 <= i < j <= n");
  int c = 0;
  for (int k = i; k <= j; ++k)
    if (lp.at(k) > k && lp.at(k) <= j) ++c;
  return j - i + 1 - c;
}

// Moves vertex k to k+1 (n to 1); needs a perfect matching.
inline LinkPattern rotate(const LinkPattern& lp) {
  const int n = lp.n();
  if (lp.arches() * 2 != n) throw std::invalid_argument("rotation needs a perfect matching");
  LinkPattern r(n);
  for (int i = 1; i <= n; ++i) {
    int j = lp.at(i);
    r.partner[i % n] = j % n + 1;
  }
  return r;
}

// ---- exchange matrices ----
// Basis order is enumerate_syt order. The matrix of ρ^{(i,i+1)} has entry
// [a][b] = coefficient of e_a in ρ e_b, and m_{i;a,b} = -ρ[a][b].

inline bool is_two_row(const Shape& s) { return strip_zeros(s).size() <= 2 && !strip_zeros(s).empty(); }
inline bool is_two_column(const Shape& s) { return !strip_zeros(s).empty() && strip_zeros(s).front() <= 2; }

inline std::map<std::vector<int>, int> tableau_index(const std::vector<Tableau>& ts) {
  std::map<std::vector<int>, int> idx;
  for (std::size_t k = 0; k < ts.size(); ++k) idx[ts[k].reading_word()] = static_cast<int>(k);
  return idx;
}

inline IntMatrix identity_matrix(std::size_t d) {
  IntMatrix m(d, std::vector<long>(d, 0));
  for (std::size_t k = 0; k < d; ++k) m[k][k] = 1;
  return m;
}

// Matrix of e_i on link patterns of a two-row shape.
inline IntMatrix tl_matrix(const Shape& shape, int i) {
  auto ts = enumerate_syt(shape);
  auto idx = tableau_index(ts);
  IntMatrix e(ts.size(), std::vector<long>(ts.size(), 0));
  for (std::size_t b = 0; b < ts.size(); ++b) {
    TLTerm t = tl_generator(syt_to_linkpattern(ts[b]), i);
    if (t.coeff == 0) continue;
    e[idx.at(linkpattern_to_syt(t.lp).reading_word())][b] += t.coeff;
  }
  return e;
}

inline IntMatrix rho_tworow(const Shape& shape, int i) {
  if (!is_two_row(shape)) throw std::invalid_argument("two-row shape expected");
  IntMatrix e = tl_matrix(shape, i);
  IntMatrix r = identity_matrix(e.size());
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b) r[a][b] -= e[a][b];
  return r;
}

inline IntMatrix negated(IntMatrix m) {
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return m;
}

inline IntMatrix m_matrix_tworow(const Shape& shape, int i) { return negated(rho_tworow(shape, i)); }

// m_{i;α,β} = -ε_α ε_β m_{i;β',α'} with m' from the conjugate two-row shape.
inline IntMatrix m_matrix_twocol(const Shape& shape, int i) {
  if (!is_two_column(shape)) throw std::invalid_argument("two-column shape expected");
  Shape conj = conjugate_shape(strip_zeros(shape));
  auto ts = enumerate_syt(shape);
  auto cs = enumerate_syt(conj);
  auto cidx = tableau_index(cs);
  IntMatrix mc = m_matrix_tworow(conj, i);
  std::vector<int> c(ts.size()), eps(ts.size());
  for (std::size_t a = 0; a < ts.size(); ++a) {
    c[a] = cidx.at(ts[a].conjugate().reading_word());
    eps[a] = sign_epsilon(ts[a]);
  }
  IntMatrix m(ts.size(), std::vector<long>(ts.size(), 0));
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = 0; b < ts.size(); ++b) m[a][b] = -eps[a] * eps[b] * mc[c[b]][c[a]];
  return m;
}

inline IntMatrix rho_from_m(const IntMatrix& m) { return negated(m); }

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMatrix out(r, std::vector<long>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

struct RelationReport {
  bool ok = true;
  std::string first_failure;
  void fail(const std::string& s) {
    if (ok) first_failure = s;
    ok = false;
  }
};

// ρ_i² = 1, braid relations, distant generators commute.
inline RelationReport check_symmetric_group_relations(const std::vector<IntMatrix>& rho) {
  RelationReport rep;
  const std::size_t k = rho.size();
  if (k == 0) return rep;
  IntMatrix id = identity_matrix(rho[0].size());
  for (std::size_t i = 0; i < k; ++i) {
    if (matmul(rho[i], rho[i]) != id) rep.fail("rho_" + std::to_string(i + 1) + "^2 != 1");
    if (i + 1 < k) {
      auto& a = rho[i];
      auto& b = rho[i + 1];
      if (matmul(matmul(a, b), a) != matmul(matmul(b, a), b))
        rep.fail("braid relation fails at i=" + std::to_string(i + 1));
    }
    for (std::size_t j = i + 2; j < k; ++j)
      if (matmul(rho[i], rho[j]) != matmul(rho[j], rho[i]))
        rep.fail("rho_" + std::to_string(i + 1) + " and rho_" + std::to_string(j + 1) + " do not commute");
  }
  return rep;
}

// e_i² = 2 e_i, e_i e_{i±1} e_i = e_i, distant generators commute.
inline RelationReport check_tl_relations(const Shape& shape) {
  RelationReport rep;
  int n = shape_size(strip_zeros(shape));
  std::vector<IntMatrix> e;
  for (int i = 1; i < n; ++i) e.push_back(tl_matrix(shape, i));
  for (std::size_t i = 0; i < e.size(); ++i) {
    IntMatrix twice = e[i];
    for (auto& row : twice)
      for (auto& x : row) x *= 2;
    if (matmul(e[i], e[i]) != twice) rep.fail("e_" + std::to_string(i + 1) + "^2 != 2 e");
    if (i + 1 < e.size()) {
      if (matmul(matmul(e[i], e[i + 1]), e[i]) != e[i]) rep.fail("e_i e_{i+1} e_i != e_i at i=" + std::to_string(i + 1));
      if (matmul(matmul(e[i + 1], e[i]), e[i + 1]) != e[i + 1])
        rep.fail("e_{i+1} e_i e_{i+1} != e_{i+1} at i=" + std::to_string(i + 1));
    }
    for (std::size_t j = i + 2; j < e.size(); ++j)
      if (matmul(e[i], e[j]) != matmul(e[j], e[i])) rep.fail("distant TL generators do not commute");
  }
  return rep;
}

// m_{i;α,β} != 0 with α != β forces ε_α != ε_β.
inline bool check_sign_lemma(const Shape& shape, const IntMatrix& m) {
  auto ts = enumerate_syt(shape);
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = 0; b < ts.size(); ++b)
      if (a != b && m[a][b] != 0 && sign_epsilon(ts[a]) == sign_epsilon(ts[b])) return false;
  return true;
}

// dim of an orbital variety from the stabilizer dimension Σ_{i,j} min(λ'_i, λ'_j).
inline int orbital_variety_dimension(const Shape& shape) {
  Shape c = conjugate_shape(strip_zeros(shape));
  int n = shape_size(strip_zeros(shape));
  int stab = 0;
  for (int a : c)
    for (int b : c) stab += std::min(a, b);
  return (n * n - stab) / 2;
}

}  // namespace qcb
