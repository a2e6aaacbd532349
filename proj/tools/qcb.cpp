// Command-line front end: computes minimal vectors, Joseph polynomials and
// residues, and runs the verification suites.  Exit status: 0 when every
// requested check passes, 1 on a failed check, 2 on a usage error.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qcb/json_io.hpp"
#include "qcb/render.hpp"
#include "qcb/residue.hpp"
#include "qcb/selberg.hpp"

using namespace qcb;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Shape checked_partition(std::vector<int> parts, const char* what) {
  for (int x : parts)
    if (x < 0) throw UsageError(std::string(what) + " has a negative entry");
  Shape s = strip_zeros(parts);
  if (s.empty()) throw UsageError(std::string(what) + " is empty");
  if (!is_partition_shape(s)) throw UsageError(std::string(what) + " must be weakly decreasing");
  if (shape_size(s) > 9) throw UsageError(std::string(what) + " is larger than 9 boxes");
  return s;
}

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

int emit(const Json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_ila(const std::vector<int>& lambda, bool h0, const std::string& format) {
  Shape s = checked_partition(lambda, "--lambda");
  TensorVec I = build_Ilambda(Weight(s));
  if (h0) I = specialize_h0(I);
  if (format == "text") {
    std::cout << render_tensor(I) << "\n";
    return 0;
  }
  return emit(tensor_to_json(I), true);
}

int run_verify(const std::string& suite, int nmax_opt) {
  std::vector<std::string> names = suite == "all" ? std::vector<std::string>{"skew", "degree", "singular", "qcb", "qkz"}
                                                  : std::vector<std::string>{suite};
  Json reports = Json::array();
  std::optional<Json> first;
  for (auto& name : names) {
    int nmax = nmax_opt > 0 ? nmax_opt : (name == "qkz" ? 5 : 6);
    SuiteReport r = *suite_by_name(name, nmax);
    Json j = suite_to_json(r);
    j["nmax"] = nmax;
    reports.push_back(j);
    if (!r.ok() && !first) {
      first = finding_to_json(*r.first_failure);
      (*first)["suite"] = name;
    }
  }
  Json out{{"ok", !first}, {"suites", reports}};
  if (first) out["first_failure"] = *first;
  return emit(out, !first);
}

int run_joseph(const std::vector<int>& shape_in, const std::string& family, const std::string& format) {
  Shape s = checked_partition(shape_in, "--shape");
  bool twocol = family == "twocol";
  if (twocol ? !is_two_column(s) : !is_two_row(s))
    throw UsageError("--shape must have at most two " + std::string(twocol ? "columns" : "rows"));
  JosephFamily f = twocol ? joseph_twocol_family(s) : joseph_tworow(s);
  ExchangeReport ex = check_exchange(f, m_matrices(s, twocol));
  Intertwiner phi;
  Rat scale = 1;
  if (twocol) {
    phi = intertwiner_twocol_literal(s, joseph_tworow(conjugate_shape(s)));
    scale = identification_scale(phi, f);
    phi = normalized(phi, scale);
  } else {
    phi = intertwiner_tworow(s);
  }
  bool ident = check_identification(phi, f);
  bool ok = ex.ok() && ident;
  if (format == "text") {
    for (std::size_t a = 0; a < f.values.size(); ++a)
      std::cout << "J[" << f.tableaux[a].to_string() << "] = " << render_coefficient(f.values[a]).body << "\n";
    if (!ok) std::cerr << "check failed: " << (ex.ok() ? "identification" : ex.first_failure) << "\n";
    return ok ? 0 : 1;
  }
  Json values = Json::object();
  for (std::size_t a = 0; a < f.values.size(); ++a) values[word_key(f.tableaux[a].reading_word())] = poly_to_json(f.values[a]);
  Json out{{"shape", s}, {"family", family}, {"J", values},
           {"checks", {{"exchange", ex.exchange}, {"dichotomy", ex.dichotomy}, {"identification", ident}}}};
  if (twocol) out["intertwiner_scale"] = rat_to_string(scale);
  out["ok"] = ok;
  if (!ok)
    out["first_failure"] = Json{{"identity", ex.ok() ? "phi(J) = I" : "exchange relation"},
                                {"detail", ex.ok() ? "" : ex.first_failure}};
  return emit(out, ok);
}

int run_residue(const std::vector<int>& shape_in, const std::vector<int>& a_opt, bool have_a, const std::string& prefactor) {
  Shape s = checked_partition(shape_in, "--shape");
  if (!is_two_row(s)) throw UsageError("--shape must have at most two rows");
  const int n = shape_size(s), p = s.size() > 1 ? s[1] : 0;
  if (n > 7) throw UsageError("--shape is limited to 7 boxes");
  std::vector<std::vector<int>> sets = have_a ? std::vector<std::vector<int>>{a_opt} : increasing_subsets(n, p);
  PrefactorSign sign = prefactor == "literal" ? PrefactorSign::Literal : PrefactorSign::Corrected;
  std::vector<Integrand> integrands;
  for (auto& a : sets) {
    try {
      integrands.push_back(build_integrand(s, a, sign));
    } catch (const DimensionError& e) {
      throw UsageError(std::string("--a: ") + e.what());
    }
  }
  TensorVec I = minimal_vector(s, 2);
  Json comps = Json::array();
  std::optional<Json> first;
  for (auto& g : integrands) {
    Poly in = iterated_residue(g, PoleSide::Inside), out = iterated_residue(g, PoleSide::Outside);
    MultiIndex L = index_of_positions(n, g.a);
    Poly expect = I.get(L);
    bool ok = in == expect && out == expect;
    comps.push_back(Json{{"a", g.a}, {"L", L}, {"inside", poly_to_json(in)}, {"outside", poly_to_json(out)},
                         {"I_coefficient", poly_to_json(expect)}, {"ok", ok}});
    if (!ok && !first)
      first = Json{{"identity", "iterated residue equals the I coefficient"}, {"a", g.a},
                   {"inside", in.to_string()}, {"outside", out.to_string()}, {"expected", expect.to_string()}};
  }
  Json res{{"shape", s}, {"prefactor", prefactor}, {"components", comps}, {"ok", !first}};
  if (first) res["first_failure"] = *first;
  return emit(res, !first);
}

const std::vector<std::array<Complex, 2>> kTwoSiteSamples = {
    {Complex(0.05, 1.02), Complex(-0.03, 1.97)}, {Complex(0.1, 1.0), Complex(0.05, 2.0)}, {Complex(-0.1, 0.9), Complex(0.12, 2.1)}};
const std::vector<std::array<Complex, 3>> kThreeSiteSamples = {
    {Complex(0.05, 1.02), Complex(-0.03, 1.97), Complex(0.1, 3.05)}, {Complex(0.1, 1.0), Complex(0.05, 2.0), Complex(-0.1, 2.9)}};

Json constant_json(const ConstantReport& r, double tol) {
  Json ratios = Json::array();
  for (Complex c : r.ratios) ratios.push_back(complex_json(c));
  return Json{{"reference", complex_json(r.reference)}, {"ratios", ratios}, {"max_rel_error", r.max_rel_error},
              {"max_spread", r.max_spread},
              {"max_rel_error_to_negated_reference", r.max_rel_error_negated}, {"tolerance", tol}, {"ok", r.ok(tol)}};
}

int run_selberg(const std::string& check, const std::string& contour) {
  if (check == "barnes") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> re(0.2, 2), im(-1, 1);
    double worst = 0;
    for (int rep = 0; rep < 20; ++rep) {
      Complex a(re(rng), im(rng)), b(re(rng), im(rng)), c(re(rng), im(rng)), d(re(rng), im(rng));
      Complex closed = barnes_closed_form(a, b, c, d);
      worst = std::max(worst, std::abs(barnes_integral(a, b, c, d).value - closed) / std::abs(closed));
    }
    bool ok = worst <= 1e-8;
    Json out{{"check", "barnes"}, {"points", 20}, {"max_rel_error", worst}, {"tolerance", 1e-8}, {"ok", ok}};
    if (!ok) out["first_failure"] = Json{{"identity", "Barnes integral closed form"}};
    return emit(out, ok);
  }
  int n = check == "c2" ? 2 : 3;
  ContourSpec circles = contour == "printed" ? contour_as_printed(n) : contour_around_shifted_points(n);
  ConstantReport r = n == 2 ? check_c_constant(kTwoSiteSamples, circles) : check_c3_constant(kThreeSiteSamples, circles);
  Json out = constant_json(r, 1e-6);
  out["check"] = check;
  out["contour"] = contour;
  if (!r.ok(1e-6))
    out["first_failure"] = Json{{"identity", n == 2 ? "Psi_(1,1) = c_2 I_(1,1)" : "Psi_(2,1) = c_3 I_(2,1)"},
                                {"detail", "ratio differs from the closed-form constant"}};
  return emit(out, r.ok(1e-6));
}

int run_yangbaxter(int N) {
  YangBaxterReport r = check_yang_baxter(N);
  Json out{{"N", N}, {"triple_product", r.triple}, {"unitarity", r.unitary}, {"checked", r.checked}, {"ok", r.ok()}};
  if (!r.ok())
    out["first_failure"] = Json{{"identity", r.triple ? "R(u)R(-u) = 1" : "Yang-Baxter triple product"},
                                {"detail", r.counterexample}};
  return emit(out, r.ok());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal skew-symmetric polynomial sections, extended Joseph polynomials and their checks"};
  app.require_subcommand(1);

  std::vector<int> lambda;
  bool h0 = false;
  std::string format = "json";
  auto* ila = app.add_subcommand("ila", "Print the minimal vector I_lambda");
  ila->add_option("--lambda", lambda, "Partition, comma separated")->delimiter(',')->required();
  ila->add_flag("--h0", h0, "Specialize to h = 0");
  ila->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string suite;
  int nmax = 0;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"skew", "degree", "singular", "qcb", "qkz", "all"}));
  verify->add_option("--nmax", nmax, "Largest n (default 6, 5 for qkz)")->check(CLI::Range(2, 7));

  std::vector<int> shape;
  std::string family = "tworow";
  std::string jformat = "json";
  auto* joseph = app.add_subcommand("joseph", "Print the extended Joseph polynomials of a shape");
  joseph->add_option("--shape", shape, "Shape, comma separated")->delimiter(',')->required();
  joseph->add_option("--family", family, "Shape family")->check(CLI::IsMember({"tworow", "twocol"}));
  joseph->add_option("--format", jformat, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::vector<int> rshape, positions;
  std::string prefactor = "corrected";
  auto* residue = app.add_subcommand("residue", "Evaluate the contour integral components by residues");
  residue->add_option("--shape", rshape, "Two-row shape n-p,p")->delimiter(',')->required();
  auto* aopt = residue->add_option("--a", positions, "Positions of the second letter")->delimiter(',');
  residue->add_option("--prefactor", prefactor, "Sign of the prefactor")->check(CLI::IsMember({"corrected", "literal"}));

  std::string check, contour = "shifted";
  auto* selberg = app.add_subcommand("selberg", "Numeric Barnes and hypergeometric integral checks");
  selberg->add_option("--check", check, "Check name")->required()->check(CLI::IsMember({"barnes", "c2", "c3"}));
  selberg->add_option("--contour", contour, "Circle placement")->check(CLI::IsMember({"shifted", "printed"}));

  int N = 2;
  auto* yb = app.add_subcommand("yangbaxter", "Check the Yang-Baxter equation and unitarity");
  yb->add_option("--N", N, "Dimension")->required()->check(CLI::IsMember({2, 3}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*ila) return run_ila(lambda, h0, format);
    if (*verify) return run_verify(suite, nmax);
    if (*joseph) return run_joseph(shape, family, jformat);
    if (*residue) return run_residue(rshape, positions, aopt->count() > 0, prefactor);
    if (*selberg) return run_selberg(check, contour);
    if (*yb) return run_yangbaxter(N);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << Json{{"ok", false}, {"first_failure", {{"identity", "computation completed"}, {"detail", e.what()}}}}.dump(2)
              << "\n";
    return 1;
  }
  return 2;
}
