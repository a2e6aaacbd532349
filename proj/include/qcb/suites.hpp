#pragma once

// Verification suites over all weights up to a given size, shared by the
// command-line tool and the acceptance runner.

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcb/blocks.hpp"
#include "qcb/minimal.hpp"
#include "qcb/parallel.hpp"

namespace qcb {

struct Finding {
  std::string identity;
  std::vector<int> lambda;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::optional<Finding> first_failure;
  double seconds = 0;
  bool ok() const { return !first_failure; }
};

// Per-weight outcome: number of identities checked and the first failure.
struct WeightOutcome {
  std::size_t checked = 0;
  std::optional<Finding> failure;
  void expect(bool cond, const std::string& identity, const Weight& w, const std::string& detail = "") {
    ++checked;
    if (!cond && !failure) failure = Finding{identity, w.parts, detail};
  }
};

using WeightCheck = std::function<void(const Weight&, const TensorVec&, WeightOutcome&)>;

// Runs check on I_w for each weight in parallel; failures are reported in weight order.
inline SuiteReport run_weight_suite(const std::string& name, const std::vector<Weight>& weights, const WeightCheck& check) {
  auto start = std::chrono::steady_clock::now();
  auto outcomes = parallel_map(weights.size(), [&](std::size_t k) {
    WeightOutcome o;
    try {
      check(weights[k], build_Ilambda(weights[k]), o);
    } catch (const std::exception& e) {
      o.failure = Finding{name + " raised an exception", weights[k].parts, e.what()};
    }
    return o;
  });
  SuiteReport rep{name, 0, std::nullopt, 0};
  for (auto& o : outcomes) {
    rep.checked += o.checked;
    if (o.failure && !rep.first_failure) rep.first_failure = o.failure;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Partitions of 2..nmax padded with zeros up to n parts.
inline std::vector<Weight> weights_up_to(int nmax, int minN = 2) {
  std::vector<Weight> out;
  for (int n = 2; n <= nmax; ++n)
    for (auto& w : padded_partitions_of(n, n))
      if (w.N() >= minN) out.push_back(w);
  return out;
}

inline SuiteReport skew_suite(int nmax) {
  return run_weight_suite("skew", weights_up_to(nmax), [](const Weight& w, const TensorVec& I, WeightOutcome& o) {
    for (int i = 1; i < w.n(); ++i) {
      o.expect(s_action(I, i) == -I, "s_" + std::to_string(i) + " I = -I", w);
      o.expect(check_skew_lemma(I, i), "skew lemma at i = " + std::to_string(i), w);
    }
  });
}

inline SuiteReport degree_suite(int nmax) {
  return run_weight_suite("degree", weights_up_to(nmax), [](const Weight& w, const TensorVec& I, WeightOutcome& o) {
    o.expect(I.is_homogeneous(w.k()), "I homogeneous of degree k(lambda)", w);
    Poly lead = I.get(w.standard_index());
    o.expect(lead == d0(w), "standard coefficient equals D_0", w, lead.to_string());
  });
}

inline SuiteReport singular_suite(int nmax) {
  return run_weight_suite("singular", weights_up_to(nmax), [](const Weight& w, const TensorVec& I, WeightOutcome& o) {
    o.expect(is_singular(I), "I is singular", w);
  });
}

inline SuiteReport qcb_suite(int nmax) {
  return run_weight_suite("qcb", weights_up_to(nmax), [](const Weight& w, const TensorVec& I, WeightOutcome& o) {
    int level = natural_level(w);
    o.expect(qcb_check(I, w, level), "e(z)^" + std::to_string(block_exponent(w, level)) + " I = 0", w);
  });
}

inline SuiteReport qkz_suite(int nmax) {
  std::vector<Weight> ws;
  for (auto& w : weights_up_to(nmax))
    if (w.d() <= 1) ws.push_back(w);
  return run_weight_suite("qkz", ws, [](const Weight& w, const TensorVec& I, WeightOutcome& o) {
    for (auto& r : verify_qkz(I))
      o.expect(r.ok, "I(z_" + std::to_string(r.i) + " - (N+1)h) = K_" + std::to_string(r.i) + " I", w, r.detail);
    o.expect(check_pol_lemma(I), "K_1 I is a rotated copy of I", w);
  });
}

inline SuiteReport h0_suite(int nmax) {
  return run_weight_suite("h0", weights_up_to(nmax), [](const Weight& w, const TensorVec& I, WeightOutcome& o) {
    TensorVec v = specialize_h0(I);
    for (auto& L : weight_basis(w)) {
      Poly p = v.get(L), s = same_letter_vandermonde(L);
      o.expect(p == s || p == -s, "h = 0 coefficient is a same-letter Vandermonde", w, "v" + index_string(L));
    }
  });
}

// Nullity of the block conditions at random rational points for d(lambda) <= 1.
inline SuiteReport nullity_suite(int nmax, int samples, std::uint64_t seed = 47) {
  std::vector<Weight> ws;
  for (auto& w : weights_up_to(nmax))
    if (w.d() <= 1) ws.push_back(w);
  auto start = std::chrono::steady_clock::now();
  auto outcomes = parallel_map(ws.size(), [&](std::size_t k) {
    WeightOutcome o;
    std::mt19937_64 rng(seed + k);
    auto sing = singular_subspace(ws[k]);
    for (int s = 0; s < samples; ++s) {
      auto [z, h] = generic_sample(ws[k].n(), rng);
      int nul = cb_nullity_numeric(ws[k], z, h, &sing);
      o.expect(nul == 1, "block space has dimension 1", ws[k], "nullity " + std::to_string(nul));
    }
    return o;
  });
  SuiteReport rep{"nullity", 0, std::nullopt, 0};
  for (auto& o : outcomes) {
    rep.checked += o.checked;
    if (o.failure && !rep.first_failure) rep.first_failure = o.failure;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::optional<SuiteReport> suite_by_name(const std::string& name, int nmax) {
  if (name == "skew") return skew_suite(nmax);
  if (name == "degree") return degree_suite(nmax);
  if (name == "singular") return singular_suite(nmax);
  if (name == "qcb") return qcb_suite(nmax);
  if (name == "qkz") return qkz_suite(nmax);
  if (name == "h0") return h0_suite(nmax);
  return std::nullopt;
}

}  // namespace qcb
