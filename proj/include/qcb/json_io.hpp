#pragma once

// JSON encoding of polynomials, vectors, matrices and reports.

#include <json.hpp>

#include "qcb/combinat.hpp"
#include "qcb/suites.hpp"
#include "qcb/tensor.hpp"

namespace qcb {

using Json = nlohmann::ordered_json;

// {"n": nz, "terms": [[[e_1, ..., e_n, e_h], "num/den"], ...]} in term order.
inline Json poly_to_json(const Poly& p) {
  if (p.nw() != 0) throw DimensionError("JSON encoding covers z and h only");
  Json terms = Json::array();
  for (auto& t : p.terms()) terms.push_back(Json::array({p.exponents(t.key), rat_to_string(t.c)}));
  return Json{{"n", p.nz()}, {"terms", terms}};
}

inline Poly poly_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<std::vector<int>, Rat>> ts;
    for (auto& t : j.at("terms")) ts.push_back({t.at(0).get<std::vector<int>>(), rat_from_string(t.at(1).get<std::string>())});
    return Poly::from_terms(n, 0, ts);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

// {"lambda": content, "N": N, "coeffs": [{"L": [...], "poly": ...}]}, nonzero
// coefficients in weight-basis order.
inline Json tensor_to_json(const TensorVec& v) {
  Json coeffs = Json::array();
  for (auto& L : weight_basis(Weight(v.content))) {
    auto it = v.coeffs.find(L);
    if (it == v.coeffs.end()) continue;
    coeffs.push_back(Json{{"L", L}, {"poly", poly_to_json(it->second)}});
  }
  return Json{{"lambda", v.content}, {"N", v.N}, {"coeffs", coeffs}};
}

inline TensorVec tensor_from_json(const Json& j) {
  try {
    int N = j.at("N").get<int>();
    auto content = j.at("lambda").get<std::vector<int>>();
    int n = 0;
    for (int c : content) n += c;
    TensorVec v(N, n, content);
    for (auto& c : j.at("coeffs")) {
      MultiIndex L = c.at("L").get<MultiIndex>();
      if (content_of(L, N) != content) throw ParseError("index content differs from lambda");
      v.add(L, poly_from_json(c.at("poly")));
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed vector JSON: ") + e.what());
  }
}

inline Json rat_matrix_to_json(const std::vector<std::vector<Rat>>& m) {
  Json out = Json::array();
  for (auto& row : m) {
    Json r = Json::array();
    for (auto& x : row) r.push_back(rat_to_string(x));
    out.push_back(r);
  }
  return out;
}

inline Json finding_to_json(const Finding& f) {
  Json j{{"identity", f.identity}, {"lambda", f.lambda}};
  if (!f.detail.empty()) j["detail"] = f.detail;
  return j;
}

inline Json suite_to_json(const SuiteReport& r) {
  Json j{{"suite", r.suite}, {"checked", r.checked}, {"ok", r.ok()}};
  if (r.first_failure) j["first_failure"] = finding_to_json(*r.first_failure);
  return j;
}

inline std::string word_key(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

}  // namespace qcb
