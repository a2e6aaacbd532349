#include <catch_amalgamated.hpp>

#include "qcb/joseph.hpp"

using namespace qcb;

namespace {

Poly P(const char* s, int n) { return Poly::parse(s, n); }

TensorVec vec(int n, std::vector<std::pair<MultiIndex, int>> ts) {
  std::vector<std::pair<MultiIndex, Poly>> pts;
  for (auto& [L, c] : ts) pts.push_back({L, Poly::constant(n, Rat(c))});
  return TensorVec::from_terms(2, n, pts);
}

LinkPattern pattern(int n, std::vector<std::pair<int, int>> arches) {
  LinkPattern lp(n);
  for (auto [i, j] : arches) lp.pair(i, j);
  return lp;
}

std::vector<Shape> two_row_shapes(int n) {
  std::vector<Shape> out;
  for (int p = 0; 2 * p <= n; ++p) out.push_back(p ? Shape{n - p, p} : Shape{n});
  return out;
}

std::vector<Shape> two_column_shapes(int n) {
  std::vector<Shape> out;
  for (int p = 0; 2 * p <= n; ++p) {
    Shape s(p, 2);
    s.resize(n - p, 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("multidegrees of complete intersections", "[joseph]") {
  REQUIRE(mdeg_complete_intersection({}, 3) == Poly::constant(3, 1));
  REQUIRE(mdeg_complete_intersection({LinForm::diff(3, 0, 1, 2, 1)}, 3) == P("h+z1-z2", 3));
  REQUIRE(mdeg_complete_intersection({LinForm::diff(4, 0, 2, 3, 1), LinForm::diff(4, 0, 1, 4, 2)}, 4) ==
          P("(h+z2-z3)(2h+z1-z4)", 4));
}

TEST_CASE("two-column product formula", "[joseph]") {
  REQUIRE(joseph_twocol(pattern(2, {{1, 2}})) == P("h+z1-z2", 2));
  REQUIRE(joseph_twocol(pattern(4, {{2, 3}, {1, 4}})) == P("(h+z2-z3)(2h+z1-z4)", 4));
  REQUIRE(joseph_twocol(pattern(4, {{1, 2}, {3, 4}})) == P("(h+z1-z2)(h+z3-z4)", 4));
}

TEST_CASE("two-row intertwiner", "[joseph]") {
  auto phi11 = intertwiner_tworow({1, 1});
  REQUIRE(phi11.columns[0] == vec(2, {{{1, 2}, 1}, {{2, 1}, -1}}));

  auto phi21 = intertwiner_tworow({2, 1});
  REQUIRE(phi21.columns[0] == vec(3, {{{1, 1, 2}, 1}, {{1, 2, 1}, -1}}));
  REQUIRE(phi21.columns[1] == vec(3, {{{2, 1, 1}, 1}, {{1, 2, 1}, -1}}));

  auto phi22 = intertwiner_tworow({2, 2});
  REQUIRE(phi22.columns[0] == vec(4, {{{1, 1, 2, 2}, 1}, {{2, 2, 1, 1}, 1}, {{1, 2, 1, 2}, -1}, {{2, 1, 2, 1}, -1}}));
  REQUIRE(phi22.columns[1] == vec(4, {{{1, 2, 2, 1}, 1}, {{2, 1, 1, 2}, 1}, {{1, 2, 1, 2}, -1}, {{2, 1, 2, 1}, -1}}));
}

TEST_CASE("two-row Joseph polynomials", "[joseph]") {
  REQUIRE(joseph_tworow({1, 1}).values == std::vector<Poly>{Poly::constant(2, 1)});
  REQUIRE(joseph_tworow({2, 1}).values == std::vector<Poly>{P("h+z1-z2", 3), P("h+z2-z3", 3)});
  REQUIRE(joseph_tworow({2, 2}).values == std::vector<Poly>{P("(h+z1-z2)(h+z3-z4)", 4), P("(h+z2-z3)(2h+z1-z4)", 4)});
  REQUIRE(joseph_tworow({3}).values == std::vector<Poly>{P("(h+z1-z2)(h+z1-z3)(h+z2-z3)", 3)});

  for (int n = 2; n <= 6; ++n)
    for (auto& s : two_row_shapes(n)) {
      JosephFamily f = joseph_tworow(s);
      Weight w(s);
      for (auto& j : f.values) {
        REQUIRE(j.is_homogeneous());
        REQUIRE(j.degree() == w.k());
        REQUIRE(j.all_integer());
      }
      REQUIRE(check_identification(intertwiner_tworow(s), f));
      auto rep = check_exchange(f, m_matrices(s, false));
      INFO(rep.first_failure);
      REQUIRE(rep.ok());
    }
}

TEST_CASE("two-column families", "[joseph]") {
  for (int n = 2; n <= 6; ++n)
    for (auto& s : two_column_shapes(n)) {
      JosephFamily f = joseph_twocol_family(s);
      auto rep = check_exchange(f, m_matrices(s, true));
      INFO(rep.first_failure);
      REQUIRE(rep.ok());

      Shape conj = conjugate_shape(s);
      Intertwiner lit = intertwiner_twocol_literal(s, joseph_tworow(conj));
      Rat scale = identification_scale(lit, f);
      REQUIRE((scale == 1 || scale == -1));
      REQUIRE(check_identification(normalized(lit, scale), f));
    }
  SECTION("literal sign for the smallest shapes") {
    Intertwiner lit = intertwiner_twocol_literal({1, 1}, joseph_tworow({2}));
    REQUIRE(lit.columns[0] == vec(2, {{{1, 2}, -1}, {{2, 1}, 1}}));
    REQUIRE(identification_scale(lit, joseph_twocol_family({1, 1})) == -1);
  }
  SECTION("self-conjugate shapes agree across families") {
    for (Shape s : {Shape{2, 1}, Shape{2, 2}}) REQUIRE(joseph_twocol_family(s).values == joseph_tworow(s).values);
  }
}

TEST_CASE("cyclicity", "[joseph]") {
  for (int p : {1, 2, 3}) {
    JosephFamily f = joseph_tworow({p, p});
    int sign = (p - 1) % 2 ? -1 : 1;
    auto fixed = check_cyclicity(f, false, sign, Rat(3));
    INFO(fixed.first_failure);
    REQUIRE(fixed.ok);
  }
  for (int N : {1, 2}) {
    JosephFamily f = joseph_twocol_family(Shape(N, 2));
    REQUIRE(check_cyclicity(f, true, -1, Rat(N + 1)).ok);
  }
  SECTION("the relation with z_1 - 3h fails already at n = 4") {
    REQUIRE_FALSE(check_cyclicity(joseph_tworow({2, 2}), false, -1, Rat(-3)).ok);
    REQUIRE_FALSE(check_cyclicity(joseph_twocol_family({2}), true, -1, Rat(-2)).ok);
  }
}
