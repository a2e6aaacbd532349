#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "qcb/combinat.hpp"
#include "qcb/tensor.hpp"

using namespace qcb;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau{std::move(rows)}; }

LinkPattern pattern(int n, std::vector<std::pair<int, int>> arches) {
  LinkPattern lp(n);
  for (auto [i, j] : arches) lp.pair(i, j);
  return lp;
}

// Fillings of the shape by permutations of 1..n that are standard.
std::size_t brute_syt_count(const Shape& s) {
  int n = shape_size(s);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::size_t c = 0;
  do {
    Tableau t;
    int k = 0;
    for (int len : s) {
      t.rows.emplace_back(w.begin() + k, w.begin() + k + len);
      k += len;
    }
    c += t.is_standard();
  } while (std::next_permutation(w.begin(), w.end()));
  return c;
}

}  // namespace

TEST_CASE("standard Young tableaux", "[combinat]") {
  REQUIRE(enumerate_syt({2, 1}).size() == 2);
  REQUIRE(enumerate_syt({2, 2}).size() == 2);
  REQUIRE(enumerate_syt({3, 2}).size() == 5);
  REQUIRE(enumerate_syt({3, 2}).size() == brute_syt_count({3, 2}));
  REQUIRE(enumerate_syt({2, 1})[0] == tab({{1, 2}, {3}}));
  REQUIRE(enumerate_syt({2, 1})[1] == tab({{1, 3}, {2}}));
  REQUIRE(enumerate_syt({2, 1, 0}).size() == 2);
  for (int n = 1; n <= 7; ++n)
    for (auto& w : partitions_of(n)) {
      auto ts = enumerate_syt(w.parts);
      REQUIRE(static_cast<long>(ts.size()) == hook_length_count(w.parts));
      if (n <= 6) REQUIRE(ts.size() == brute_syt_count(w.parts));
      for (auto& t : ts) {
        REQUIRE(t.is_standard());
        REQUIRE(t.conjugate().conjugate() == t);
        REQUIRE(t.conjugate().is_standard());
      }
    }
}

TEST_CASE("link patterns and tableaux", "[combinat]") {
  Tableau fig = tab({{1, 2, 4, 7, 8}, {3, 5, 6, 9}});
  LinkPattern lp = syt_to_linkpattern(fig);
  REQUIRE(lp == pattern(9, {{2, 3}, {4, 5}, {1, 6}, {8, 9}}));
  REQUIRE(lp.at(7) == 0);
  REQUIRE(lp.valid());
  REQUIRE(linkpattern_to_syt(lp) == fig);

  REQUIRE(syt_to_linkpattern(tab({{1}, {2}})) == pattern(2, {{1, 2}}));
  for (auto& t : enumerate_syt({3, 2})) REQUIRE(linkpattern_to_syt(syt_to_linkpattern(t)) == t);

  LinkPattern crossing = pattern(4, {{1, 3}, {2, 4}});
  REQUIRE_FALSE(crossing.valid());
  LinkPattern covered(3);
  covered.pair(1, 3);
  REQUIRE_FALSE(covered.valid());

  for (int n = 1; n <= 8; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      auto lps = link_patterns(n, p);
      REQUIRE(static_cast<long>(lps.size()) == hook_length_count({n - p, p}));
      for (auto& x : lps) {
        REQUIRE(x.valid());
        REQUIRE(x.arches() == p);
      }
    }
}

TEST_CASE("Temperley-Lieb generators", "[combinat]") {
  LinkPattern a(4);
  a.pair(3, 4);
  REQUIRE(tl_generator(a, 1).coeff == 0);

  LinkPattern b(4);
  b.pair(2, 3);
  TLTerm tb = tl_generator(b, 1);
  REQUIRE(tb.coeff == 1);
  LinkPattern b_img(4);
  b_img.pair(1, 2);
  REQUIRE(tb.lp == b_img);

  TLTerm tc = tl_generator(pattern(4, {{1, 4}, {2, 3}}), 1);
  REQUIRE(tc.coeff == 1);
  REQUIRE(tc.lp == pattern(4, {{1, 2}, {3, 4}}));

  TLTerm td = tl_generator(pattern(4, {{1, 2}, {3, 4}}), 1);
  REQUIRE(td.coeff == 2);
  REQUIRE(td.lp == pattern(4, {{1, 2}, {3, 4}}));

  for (int n = 2; n <= 8; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      auto rep = check_tl_relations({n - p, p});
      INFO(rep.first_failure);
      REQUIRE(rep.ok);
    }
}

TEST_CASE("exchange matrices of two-row shapes", "[combinat]") {
  REQUIRE(rho_tworow({1, 1}, 1) == IntMatrix{{-1}});
  REQUIRE(rho_tworow({2, 1}, 1) == IntMatrix{{1, 0}, {-1, -1}});
  REQUIRE(rho_tworow({2, 1}, 2) == IntMatrix{{-1, -1}, {0, 1}});
  REQUIRE(rho_tworow({2, 2}, 1) == IntMatrix{{1, 0}, {-1, -1}});
  REQUIRE(rho_tworow({2, 2}, 3) == IntMatrix{{1, 0}, {-1, -1}});
  REQUIRE(rho_tworow({2, 2}, 2) == IntMatrix{{-1, -1}, {0, 1}});
  REQUIRE(m_matrix_tworow({2, 1}, 1) == IntMatrix{{-1, 0}, {1, 1}});
}

TEST_CASE("signs and the dual action", "[combinat]") {
  REQUIRE(sign_epsilon(tab({{1}, {2}})) == 1);
  REQUIRE(sign_epsilon(tab({{1, 2}, {3, 4}})) == -1);
  REQUIRE(sign_epsilon(tab({{1, 3}, {2, 4}})) == 1);
  REQUIRE(sign_epsilon(tab({{1, 2}, {3}})) != sign_epsilon(tab({{1, 3}, {2}})));

  REQUIRE(m_matrix_twocol({1, 1}, 1) == IntMatrix{{1}});
  REQUIRE(m_matrix_twocol({2}, 1) == IntMatrix{{-1}});

  SECTION("negate the diagonal and transpose") {
    for (int n = 2; n <= 8; ++n)
      for (auto& w : partitions_of(n)) {
        if (!is_two_column(w.parts)) continue;
        Shape conj = conjugate_shape(w.parts);
        auto ts = enumerate_syt(w.parts);
        auto cidx = tableau_index(enumerate_syt(conj));
        for (int i = 1; i < n; ++i) {
          IntMatrix m = m_matrix_twocol(w.parts, i), mc = m_matrix_tworow(conj, i);
          for (std::size_t a = 0; a < ts.size(); ++a)
            for (std::size_t b = 0; b < ts.size(); ++b) {
              long expect = mc[cidx.at(ts[b].conjugate().reading_word())][cidx.at(ts[a].conjugate().reading_word())];
              REQUIRE(m[a][b] == (a == b ? -expect : expect));
            }
          REQUIRE(check_sign_lemma(conj, mc));
        }
      }
  }
}

TEST_CASE("Hotta relations", "[combinat]") {
  for (int n = 2; n <= 8; ++n)
    for (auto& w : partitions_of(n)) {
      for (bool twocol : {false, true}) {
        if (twocol ? !is_two_column(w.parts) : !is_two_row(w.parts)) continue;
        std::vector<IntMatrix> rho;
        for (int i = 1; i < n; ++i) rho.push_back(rho_from_m(twocol ? m_matrix_twocol(w.parts, i) : m_matrix_tworow(w.parts, i)));
        auto rep = check_symmetric_group_relations(rho);
        INFO(rep.first_failure);
        REQUIRE(rep.ok);
      }
    }
}

TEST_CASE("arch statistic and rotation", "[combinat]") {
  REQUIRE(p_alpha(pattern(2, {{1, 2}}), 1, 2) == 1);
  LinkPattern nested = pattern(6, {{1, 6}, {2, 3}, {4, 5}});
  REQUIRE(p_alpha(nested, 1, 6) == 3);
  for (int n = 2; n <= 8; ++n)
    for (int p = 0; 2 * p <= n; ++p)
      for (auto& lp : link_patterns(n, p)) {
        REQUIRE(p_alpha(lp, 1, n) == n - p);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            int v = p_alpha(lp, i, j);
            REQUIRE(2 * v >= j - i + 1);
            if (lp.at(i) == j) REQUIRE(2 * v == j - i + 1);
            if (j < n) REQUIRE(p_alpha(lp, i, j + 1) >= v);
            if (i > 1) REQUIRE(p_alpha(lp, i - 1, j) >= v);
          }
      }

  REQUIRE(rotate(pattern(4, {{1, 2}, {3, 4}})) == pattern(4, {{2, 3}, {1, 4}}));
  REQUIRE(rotate(pattern(4, {{1, 4}, {2, 3}})) == pattern(4, {{1, 2}, {3, 4}}));
  for (int n : {2, 4, 6, 8})
    for (auto& lp : link_patterns(n, n / 2)) {
      LinkPattern r = lp;
      for (int k = 0; k < n; ++k) {
        r = rotate(r);
        REQUIRE(r.valid());
      }
      REQUIRE(r == lp);
    }
}

TEST_CASE("orbital variety dimensions", "[combinat]") {
  for (int n = 1; n <= 8; ++n)
    for (auto& w : partitions_of(n)) REQUIRE(w.k() == n * (n - 1) / 2 - orbital_variety_dimension(w.parts));
  REQUIRE(orbital_variety_dimension({2, 2}) == 4);
}
