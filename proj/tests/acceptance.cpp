// Acceptance runner: one PASS/FAIL line per criterion 1-11.
// With --known-failures a,b,... the exit status is 0 exactly when the set of
// failing criteria equals the given set; otherwise 0 exactly when all pass.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcb/json_io.hpp"
#include "qcb/render.hpp"
#include "qcb/residue.hpp"
#include "qcb/selberg.hpp"
#include "qcb/suites.hpp"

using namespace qcb;

namespace {

// Tolerances and time budgets.
constexpr double kBarnesRelTol = 1e-8;
constexpr double kConstantRelTol = 1e-6;
constexpr double kBudgetGolden = 1, kBudgetMinimality = 60, kBudgetBlocks = 120, kBudgetQkz = 300,
                 kBudgetNullity = 60, kBudgetIdentification = 120, kBudgetCyclicity = 60, kBudgetResidue = 180,
                 kBudgetYangBaxter = 60, kBudgetSelberg = 60, kBudgetH0 = 60;
constexpr int kNullitySamples = 10;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // informational lines, not part of the verdict
};

struct Criterion {
  int id;
  std::string title;
  double budget;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string suite_detail(const SuiteReport& r) {
  if (r.ok()) return r.suite + ": " + std::to_string(r.checked) + " identities";
  auto& f = *r.first_failure;
  std::string lam;
  for (int x : f.lambda) lam += (lam.empty() ? "" : ",") + std::to_string(x);
  return r.suite + ": " + f.identity + " fails for lambda=(" + lam + ") " + f.detail;
}

void absorb(Outcome& o, const SuiteReport& r) {
  o.pass = o.pass && r.ok();
  o.detail += (o.detail.empty() ? "" : "; ") + suite_detail(r);
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

TensorVec constant_vec(int n, std::vector<std::pair<MultiIndex, int>> ts) {
  std::vector<std::pair<MultiIndex, Poly>> pts;
  for (auto& [L, c] : ts) pts.push_back({L, Poly::constant(n, Rat(c))});
  return TensorVec::from_terms(2, n, pts);
}

Outcome golden() {
  Outcome o;
  int checked = 0;
  auto expect = [&](bool c, const std::string& what) {
    ++checked;
    if (!c && o.pass) {
      o.pass = false;
      o.detail = what;
    }
  };
  expect(render_tensor(build_Ilambda(Weight({1, 1}))) == "v[1,2] - v[2,1]", "I_(1,1) rendering");
  expect(render_tensor(build_Ilambda(Weight({2, 1}))) ==
             "(z1-z2+h)v[1,1,2] + (z3-z1-2h)v[1,2,1] + (z2-z3+h)v[2,1,1]",
         "I_(2,1) rendering");
  TensorVec I22 = build_Ilambda(Weight({2, 2}));
  auto P4 = [](const char* s) { return Poly::parse(s, 4); };
  Poly a = P4("(z1-z2+h)(z3-z4+h)"), b = P4("(z1-z4+2h)(z2-z3+h)"), c = P4("-(z1-z2+h)(z3-z4+h)-(z1-z4+2h)(z2-z3+h)");
  std::vector<std::pair<MultiIndex, Poly>> display = {{{1, 1, 2, 2}, a}, {{2, 2, 1, 1}, a}, {{1, 2, 2, 1}, b},
                                                      {{2, 1, 1, 2}, b}, {{1, 2, 1, 2}, c}, {{2, 1, 2, 1}, c}};
  expect(I22 == TensorVec::from_terms(2, 4, display), "I_(2,2) coefficients");
  expect(!factor_linear(c, 10).has_value(), "I_(2,2) last coefficient does not factor");
  expect(render_tensor(I22) ==
             "(z1-z2+h)(z3-z4+h)v[1,1,2,2]"
             " + (-z1*z2+z2*z3+z1*z4-z3*z4-2z1*h-z2*h+z3*h+2z4*h-3h^2)v[1,2,1,2]"
             " + (z1-z4+2h)(z2-z3+h)v[1,2,2,1] + (z1-z4+2h)(z2-z3+h)v[2,1,1,2]"
             " + (-z1*z2+z2*z3+z1*z4-z3*z4-2z1*h-z2*h+z3*h+2z4*h-3h^2)v[2,1,2,1]"
             " + (z1-z2+h)(z3-z4+h)v[2,2,1,1]",
         "I_(2,2) rendering");

  expect(joseph_tworow({1, 1}).values == std::vector<Poly>{Poly::constant(2, 1)}, "J for (1,1)");
  expect(joseph_tworow({2, 1}).values == std::vector<Poly>{Poly::parse("h+z1-z2", 3), Poly::parse("h+z2-z3", 3)},
         "J for (2,1)");
  expect(joseph_tworow({2, 2}).values == std::vector<Poly>{a, b}, "J for (2,2)");

  auto phi11 = intertwiner_tworow({1, 1});
  auto phi21 = intertwiner_tworow({2, 1});
  auto phi22 = intertwiner_tworow({2, 2});
  expect(phi11.columns[0] == constant_vec(2, {{{1, 2}, 1}, {{2, 1}, -1}}), "phi for (1,1)");
  expect(phi21.columns[0] == constant_vec(3, {{{1, 1, 2}, 1}, {{1, 2, 1}, -1}}), "phi(e) for (1,2/3)");
  expect(phi21.columns[1] == constant_vec(3, {{{2, 1, 1}, 1}, {{1, 2, 1}, -1}}), "phi(e) for (1,3/2)");
  expect(phi22.columns[0] ==
             constant_vec(4, {{{1, 1, 2, 2}, 1}, {{2, 2, 1, 1}, 1}, {{1, 2, 1, 2}, -1}, {{2, 1, 2, 1}, -1}}),
         "phi(e) for (1,2/3,4)");
  expect(phi22.columns[1] ==
             constant_vec(4, {{{1, 2, 2, 1}, 1}, {{2, 1, 1, 2}, 1}, {{1, 2, 1, 2}, -1}, {{2, 1, 2, 1}, -1}}),
         "phi(e) for (1,3/2,4)");
  if (o.pass) o.detail = std::to_string(checked) + " exact comparisons";
  return o;
}

Outcome minimality() {
  Outcome o;
  absorb(o, run_weight_suite("minimality", weights_up_to(6), [](const Weight& w, const TensorVec& I, WeightOutcome& r) {
           for (int i = 1; i < w.n(); ++i) r.expect(s_action(I, i) == -I, "s_" + std::to_string(i) + " I = -I", w);
           r.expect(I.is_homogeneous(w.k()), "homogeneous of degree k(lambda)", w);
           r.expect(I.get(w.standard_index()) == d0(w), "standard coefficient equals D_0", w);
         }));
  o.detail += " over all padded partitions with n <= 6";
  return o;
}

Outcome blocks() {
  Outcome o;
  absorb(o, singular_suite(6));
  absorb(o, qcb_suite(6));
  return o;
}

Outcome qkz() {
  Outcome o;
  absorb(o, qkz_suite(5));
  std::vector<Weight> ws;
  for (auto& w : weights_up_to(5))
    if (w.d() <= 1) ws.push_back(w);
  absorb(o, run_weight_suite("skew lemma", ws, [](const Weight& w, const TensorVec& I, WeightOutcome& r) {
           for (int i = 1; i < w.n(); ++i) r.expect(check_skew_lemma(I, i), "skew lemma at i = " + std::to_string(i), w);
         }));
  return o;
}

Outcome nullity() {
  Outcome o;
  absorb(o, nullity_suite(6, kNullitySamples));
  return o;
}

Outcome identification() {
  Outcome o;
  std::size_t checked = 0;
  std::string signs;
  auto fail = [&](const std::string& what) {
    if (o.pass) o.detail = what;
    o.pass = false;
  };
  for (int n = 2; n <= 6; ++n) {
    for (auto& s : two_row_shapes(n)) {
      JosephFamily f = joseph_tworow(s);
      ++checked;
      if (!check_identification(intertwiner_tworow(s), f)) fail("two-row identification for n=" + std::to_string(n));
      auto ex = check_exchange(f, m_matrices(s, false));
      if (!ex.ok()) fail("two-row exchange: " + ex.first_failure);
      std::vector<IntMatrix> rho;
      for (int i = 1; i < n; ++i) rho.push_back(rho_from_m(m_matrix_tworow(s, i)));
      auto rel = check_symmetric_group_relations(rho);
      if (!rel.ok) fail("two-row Hotta relations: " + rel.first_failure);
    }
    for (auto& s : two_column_shapes(n)) {
      JosephFamily f = joseph_twocol_family(s);
      ++checked;
      for (std::size_t a = 0; a < f.tableaux.size(); ++a)
        if (f.values[a] != joseph_twocol(syt_to_linkpattern(f.tableaux[a].conjugate())))
          fail("two-column product formula at " + f.tableaux[a].to_string());
      auto ex = check_exchange(f, m_matrices(s, true));
      if (!ex.ok()) fail("two-column exchange: " + ex.first_failure);
      std::vector<IntMatrix> rho;
      for (int i = 1; i < n; ++i) rho.push_back(rho_from_m(m_matrix_twocol(s, i)));
      auto rel = check_symmetric_group_relations(rho);
      if (!rel.ok) fail("two-column Hotta relations: " + rel.first_failure);
      Intertwiner lit = intertwiner_twocol_literal(s, joseph_tworow(conjugate_shape(s)));
      Rat scale = identification_scale(lit, f);
      int singles = n - 2 * static_cast<int>(std::count(s.begin(), s.end(), 2));
      int predicted = (singles * (singles - 1) / 2) % 2 ? -1 : 1;
      if (scale != predicted) fail("two-column intertwiner scale " + scale.get_str() + " for n=" + std::to_string(n));
      if (!check_identification(normalized(lit, scale), f)) fail("two-column identification for n=" + std::to_string(n));
      signs += (signs.empty() ? "" : " ") + std::string("(2^") + std::to_string(n - static_cast<int>(s.size())) + ",1^" +
               std::to_string(singles) + "):" + (scale == 1 ? "+" : "-");
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " shapes: phi(J) = I, exchange, dichotomy, product form, Hotta relations";
  o.notes.push_back("two-column intertwiner as printed equals the normalized one times (-1)^{m(m-1)/2}, m = number of "
                    "single boxes: " + signs);
  return o;
}

Outcome cyclicity() {
  Outcome o;
  std::vector<std::string> literal_fail, fixed_fail;
  for (int p : {1, 2, 3}) {
    JosephFamily f = joseph_tworow({p, p});
    int sign = (p - 1) % 2 ? -1 : 1;
    if (!check_cyclicity(f, false, sign, Rat(-3)).ok) literal_fail.push_back("two-row n=" + std::to_string(2 * p));
    if (!check_cyclicity(f, false, sign, Rat(3)).ok) fixed_fail.push_back("two-row n=" + std::to_string(2 * p));
  }
  for (int N : {1, 2}) {
    JosephFamily f = joseph_twocol_family(Shape(N, 2));
    if (!check_cyclicity(f, true, -1, Rat(-(N + 1))).ok) literal_fail.push_back("two-column n=" + std::to_string(2 * N));
    if (!check_cyclicity(f, true, -1, Rat(N + 1)).ok) fixed_fail.push_back("two-column n=" + std::to_string(2 * N));
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? std::string("none") : s;
  };
  o.pass = literal_fail.empty();
  o.detail = "relation with z_1 - 3h (two rows) and z_1 - (N+1)h (two columns) fails for: " + join(literal_fail);
  o.notes.push_back("with z_1 + 3h and z_1 + (N+1)h instead, failures: " + join(fixed_fail));
  return o;
}

Outcome residues() {
  Outcome o;
  std::size_t comps = 0;
  for (int n = 2; n <= 6 && o.pass; ++n)
    for (int p = 0; 2 * p <= n && o.pass; ++p) {
      Shape s = p ? Shape{n - p, p} : Shape{n};
      auto rep = residue_component_check(s);
      comps += rep.checked;
      if (!rep.ok) {
        o.pass = false;
        o.detail = "shape (" + std::to_string(n - p) + "," + std::to_string(p) + "): " + rep.first_failure;
      }
      auto chain = l0_chain_check(n, p);
      if (!chain.ok && o.pass) {
        o.pass = false;
        o.detail = "normalization chain: " + chain.first_failure;
      }
    }
  if (o.pass)
    o.detail = std::to_string(comps) + " component evaluations (inside and outside) and all normalization chains match, "
               "prefactor (-1)^{p(n-p)}";
  std::size_t flipped = 0, total = 0;
  for (Shape s : {Shape{1, 1}, Shape{2, 1}, Shape{3, 1}, Shape{3, 3}}) {
    TensorVec lit = residue_vector(s, PoleSide::Inside, PrefactorSign::Literal);
    TensorVec I = minimal_vector(s, 2);
    for (auto& [L, poly] : I.coeffs) {
      ++total;
      flipped += lit.get(L) == -poly;
    }
  }
  o.notes.push_back("printed prefactor (-1)^{p(n-p+1)} gives -I for odd p: " + std::to_string(flipped) + " of " +
                    std::to_string(total) + " components of (1,1), (2,1), (3,1), (3,3) flipped");
  return o;
}

Outcome yang_baxter() {
  Outcome o;
  for (int N : {2, 3}) {
    auto r = check_yang_baxter(N);
    if (!r.ok()) {
      o.pass = false;
      o.detail = "N=" + std::to_string(N) + ": " + r.counterexample;
      return o;
    }
  }
  o.detail = "triple product and unitarity on every basis vector for N = 2, 3";
  return o;
}

Outcome selberg() {
  Outcome o;
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> re(0.2, 2), im(-1, 1);
  double worst = 0;
  for (int rep = 0; rep < 20; ++rep) {
    Complex a(re(rng), im(rng)), b(re(rng), im(rng)), c(re(rng), im(rng)), d(re(rng), im(rng));
    Complex closed = barnes_closed_form(a, b, c, d);
    worst = std::max(worst, std::abs(barnes_integral(a, b, c, d).value - closed) / std::abs(closed));
  }
  std::vector<std::array<Complex, 2>> samples = {
      {Complex(0.05, 1.02), Complex(-0.03, 1.97)}, {Complex(0.1, 1.0), Complex(0.05, 2.0)}, {Complex(-0.1, 0.9), Complex(0.12, 2.1)}};
  ConstantReport shifted = check_c_constant(samples, contour_around_shifted_points(2));
  ConstantReport printed = check_c_constant(samples, contour_as_printed(2));
  bool barnes_ok = worst <= kBarnesRelTol;
  bool c2_ok = shifted.ok(kConstantRelTol) || printed.ok(kConstantRelTol);
  o.pass = barnes_ok && c2_ok;
  o.detail = "Barnes max rel error " + fmt(worst) + " (tol " + fmt(kBarnesRelTol) + "); Psi/I vs c_2: rel error " +
             fmt(shifted.max_rel_error) + " with circles around z_j - 1, " + fmt(printed.max_rel_error) +
             " with circles at -1 + j i, j > n (tol " + fmt(kConstantRelTol) + ")";
  o.notes.push_back("circles around z_j - 1: Psi/I agrees with -c_2 to " + fmt(shifted.max_rel_error_negated) +
                    ", components proportional to " + fmt(shifted.max_spread) + "; the v21 component alone equals c_2");
  o.notes.push_back("circles at -1 + j i for j > n enclose no poles; ratio spread between components " +
                    fmt(printed.max_spread));
  std::vector<std::array<Complex, 3>> s3 = {{Complex(0.05, 1.02), Complex(-0.03, 1.97), Complex(0.1, 3.05)},
                                            {Complex(0.1, 1.0), Complex(0.05, 2.0), Complex(-0.1, 2.9)}};
  ConstantReport c3 = check_c3_constant(s3, contour_around_shifted_points(3));
  o.notes.push_back("n = 3 with circles around z_j - 1: Psi/I vs c_3 = -c_2/3 rel error " + fmt(c3.max_rel_error));
  return o;
}

Outcome quasiclassical() {
  Outcome o;
  absorb(o, h0_suite(6));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> known;
  std::vector<int> only;
  app.add_option("--known-failures", known, "Criteria expected to fail")->delimiter(',');
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria = {
      {1, "golden examples", kBudgetGolden, golden},
      {2, "minimality", kBudgetMinimality, minimality},
      {3, "conformal blocks", kBudgetBlocks, blocks},
      {4, "qKZ equations", kBudgetQkz, qkz},
      {5, "dimension of the block space", kBudgetNullity, nullity},
      {6, "identification with Joseph polynomials", kBudgetIdentification, identification},
      {7, "cyclicity", kBudgetCyclicity, cyclicity},
      {8, "residue formula", kBudgetResidue, residues},
      {9, "Yang-Baxter equation", kBudgetYangBaxter, yang_baxter},
      {10, "Barnes integral and c_2", kBudgetSelberg, selberg},
      {11, "h = 0 structure", kBudgetH0, quasiclassical},
  };

  std::set<int> failed;
  for (auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.budget;
    bool pass = o.pass && in_time;
    if (!pass) failed.insert(c.id);
    std::printf("%s %2d %s: %s [%.2f s, budget %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                secs, c.budget, in_time ? "" : ", exceeded");
    for (auto& n : o.notes) std::printf("     note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::set<int> expected;
  for (int k : known)
    if (only.empty() || std::find(only.begin(), only.end(), k) != only.end()) expected.insert(k);
  std::printf("%zu failing criteria", failed.size());
  if (!known.empty()) std::printf(", %s the known set", failed == expected ? "matching" : "NOT matching");
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
