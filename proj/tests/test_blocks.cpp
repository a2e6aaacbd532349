#include <catch_amalgamated.hpp>

#include <random>

#include "qcb/blocks.hpp"

using namespace qcb;

namespace {

TensorVec vec(int N, int nz, std::vector<std::pair<MultiIndex, const char*>> ts) {
  std::vector<std::pair<MultiIndex, Poly>> pts;
  for (auto& [L, s] : ts) pts.push_back({L, Poly::parse(s, nz)});
  return TensorVec::from_terms(N, nz, pts);
}

}  // namespace

TEST_CASE("singular vectors", "[blocks]") {
  REQUIRE(is_singular(build_Ilambda(Weight({1, 1}))));
  REQUIRE_FALSE(is_singular(vec(2, 2, {{{1, 2}, "1"}, {{2, 1}, "1"}})));
  REQUIRE(apply_e_gen(vec(2, 2, {{{1, 2}, "1"}, {{2, 1}, "1"}}), 1, 2) == vec(2, 2, {{{1, 1}, "2"}}));
  REQUIRE_THROWS_AS(vec(2, 2, {{{1, 1}, "1"}, {{1, 2}, "1"}}), DimensionError);
}

TEST_CASE("q-conformal blocks", "[blocks]") {
  Weight w21({2, 1}), w22({2, 2});
  TensorVec I21 = build_Ilambda(w21);
  REQUIRE(apply_e_of_z(I21).is_zero());
  REQUIRE(qcb_check(I21, w21, 1));
  REQUIRE(qcb_check(build_Ilambda(w22), w22, 1));
  REQUIRE_FALSE(apply_e_of_z(build_Ilambda(w22)).is_zero());

  Weight w11({1, 1});
  TensorVec v12 = vec(2, 2, {{{1, 2}, "1"}});
  REQUIRE(apply_e_of_z(v12) == vec(2, 2, {{{1, 1}, "z2"}}));
  REQUIRE_FALSE(qcb_check(v12, w11, 0));

  SECTION("all partitions with n <= 5, including zero-padded weights") {
    for (int n = 2; n <= 5; ++n)
      for (auto& w : padded_partitions_of(n, n)) {
        if (w.N() < 2) continue;
        TensorVec I = build_Ilambda(w);
        REQUIRE(is_singular(I));
        REQUIRE(qcb_check(I, w, natural_level(w)));
        if (w.d() > 0) {
          // the weight space of e(z) I is nonzero, yet e(z) I vanishes
          REQUIRE(w.parts.back() >= 0);
          REQUIRE(apply_e_of_z(I).is_zero());
        }
      }
  }
}

TEST_CASE("qKZ equations", "[blocks]") {
  for (auto w : {Weight({1, 1}), Weight({2, 1}), Weight({2, 2}), Weight({2, 1, 1}), Weight({1, 1, 1})}) {
    TensorVec I = build_Ilambda(w);
    for (auto& r : verify_qkz(I)) {
      INFO("i = " << r.i << " " << r.detail);
      REQUIRE(r.ok);
    }
    for (int i = 1; i < w.n(); ++i) REQUIRE(check_skew_lemma(I, i));
    REQUIRE(check_pol_lemma(I));
  }
  SECTION("failure is reported for a vector that is not a solution") {
    TensorVec I = build_Ilambda(Weight({2, 1}));
    TensorVec bad = I.map([](const Poly& p) { return p.shift_z(2, 1); });
    bool any_fail = false;
    for (auto& r : verify_qkz(bad)) any_fail |= !r.ok;
    REQUIRE(any_fail);
  }
}

TEST_CASE("generic dimension of the block space", "[blocks]") {
  REQUIRE(cb_nullity_numeric(Weight({1, 1}), {Rat(0), Rat(1)}, Rat(1, 3)) == 1);
  std::mt19937_64 rng(41);
  for (auto w : {Weight({2, 2}), Weight({2, 1}), Weight({1, 1, 1}), Weight({2, 1, 1})}) {
    auto sing = singular_subspace(w);
    for (int rep = 0; rep < 3; ++rep) {
      auto [z, h] = generic_sample(w.n(), rng);
      REQUIRE(cb_nullity_numeric(w, z, h, &sing) == 1);
    }
  }
  REQUIRE_THROWS_AS(cb_nullity_numeric(Weight({3, 1}), {Rat(0), Rat(1), Rat(2), Rat(3)}, Rat(1)),
                    std::invalid_argument);
}
