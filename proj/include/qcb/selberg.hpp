#pragma once

// Numeric checks at h = 1: the Barnes integral and the level-one
// hypergeometric integral for n = 2 (and n = 3 with one integration variable).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcb/parallel.hpp"

namespace qcb {

using Complex = std::complex<double>;

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct AccuracyError : std::runtime_error {
  double achieved;
  AccuracyError(const std::string& what, double est) : std::runtime_error(what), achieved(est) {}
};

inline Complex checked(Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw std::domain_error("non-finite complex value");
  return v;
}

// log Gamma up to multiples of 2*pi*i; Lanczos (g = 7, 9 terms) with reflection.
inline Complex lgamma_complex(Complex z) {
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> c = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                              771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                              -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = std::numbers::pi;
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
    throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
  if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_complex(1.0 - z);
  z -= 1.0;
  Complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  Complex t = z + g + 0.5;
  return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline Complex gamma_complex(Complex z) { return std::exp(lgamma_complex(z)); }

// Sum in a fixed binary tree so the result does not depend on thread timing.
inline Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Complex s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}
inline Complex pairwise_sum(const std::vector<Complex>& v) { return pairwise_sum(v, 0, v.size()); }

struct QuadResult {
  Complex value;
  double error = 0;       // estimated absolute error
  std::size_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
inline constexpr std::array<double, 8> kXk = {0.991455371120812639, 0.949107912342758525, 0.864864423359769073,
                                              0.741531185599394440, 0.586087235467691130, 0.405845151377397167,
                                              0.207784955007898468, 0.000000000000000000};
inline constexpr std::array<double, 8> kWk = {0.022935322010529225, 0.063092092629978553, 0.104790010322250184,
                                              0.140653259715525919, 0.169004726639267903, 0.190350578064785410,
                                              0.204432940075298892, 0.209482141084727828};
inline constexpr std::array<double, 4> kWg = {0.129484966168869693, 0.279705391489276668, 0.381830050505118945,
                                              0.417959183673469388};

template <class F>
QuadResult gk15(F& f, double a, double b) {
  double c = 0.5 * (a + b), hl = 0.5 * (b - a);
  Complex fc = f(c), k = fc * kWk[7], g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double dx = hl * kXk[j];
    Complex f1 = f(c - dx), f2 = f(c + dx);
    k += (f1 + f2) * kWk[j];
    if (j % 2 == 1) g += (f1 + f2) * kWg[j / 2];
  }
  return {k * hl, std::abs((k - g) * hl), 15};
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a, b] for a complex-valued f of a real variable.
template <class F>
QuadResult integrate_adaptive(F f, double a, double b, double abs_tol, double rel_tol, std::size_t max_intervals = 4000) {
  struct Piece {
    double a, b;
    QuadResult r;
  };
  std::vector<Piece> pieces;
  const int initial = 16;
  for (int i = 0; i < initial; ++i) {
    double lo = a + (b - a) * i / initial, hi = a + (b - a) * (i + 1) / initial;
    pieces.push_back({lo, hi, detail::gk15(f, lo, hi)});
  }
  std::size_t evals = 15 * initial;
  auto totals = [&] {
    std::vector<Complex> vals;
    double err = 0;
    for (auto& p : pieces) {
      vals.push_back(p.r.value);
      err += p.r.error;
    }
    return QuadResult{pairwise_sum(vals), err, evals};
  };
  for (;;) {
    QuadResult t = totals();
    if (t.error <= std::max(abs_tol, rel_tol * std::abs(t.value))) return t;
    if (pieces.size() >= max_intervals)
      throw AccuracyError("quadrature budget exhausted, estimated error " + std::to_string(t.error), t.error);
    auto worst = std::max_element(pieces.begin(), pieces.end(),
                                  [](const Piece& x, const Piece& y) { return x.r.error < y.r.error; });
    double lo = worst->a, hi = worst->b, mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi))
      throw AccuracyError("interval too small to bisect, estimated error " + std::to_string(t.error), t.error);
    *worst = {lo, mid, detail::gk15(f, lo, mid)};
    pieces.push_back({mid, hi, detail::gk15(f, mid, hi)});
    evals += 30;
  }
}

// Integral of Gamma(a+s)Gamma(b+s)Gamma(c-s)Gamma(d-s) over s in i[-T, T].
inline QuadResult barnes_integral(Complex a, Complex b, Complex c, Complex d, double T = 40, double rel_tol = 1e-12) {
  for (Complex x : {a, b, c, d})
    if (!(x.real() > 0)) throw std::domain_error("Barnes parameters need positive real parts");
  auto f = [&](double y) {
    Complex s(0, y);
    return std::exp(lgamma_complex(a + s) + lgamma_complex(b + s) + lgamma_complex(c - s) + lgamma_complex(d - s)) *
           Complex(0, 1);
  };
  return integrate_adaptive(f, -T, T, 1e-300, rel_tol);
}

inline Complex barnes_closed_form(Complex a, Complex b, Complex c, Complex d) {
  return Complex(0, 2 * std::numbers::pi) * std::exp(lgamma_complex(a + c) + lgamma_complex(a + d) +
                                                     lgamma_complex(b + c) + lgamma_complex(b + d) -
                                                     lgamma_complex(a + b + c + d));
}

inline Complex sin_pi3(Complex x) { return std::sin(std::numbers::pi * x / 3.0); }

// Phi(t, z) for l = t.size() integration variables and n = z.size() sites.
inline Complex master_function(const std::vector<Complex>& t, const std::vector<Complex>& z) {
  Complex lg = 0;
  const std::size_t n = z.size(), l = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      lg += lgamma_complex((z[j] - z[i] + 1.0) / 3.0) - lgamma_complex((z[j] - z[i] - 1.0) / 3.0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      lg += lgamma_complex((t[j] - t[i] + 1.0) / 3.0) - lgamma_complex((t[j] - t[i] - 1.0) / 3.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < l; ++j)
      lg += lgamma_complex((z[i] - t[j] - 1.0) / 3.0) - lgamma_complex((z[i] - t[j]) / 3.0);
  return checked(std::exp(lg));
}

// w_L for the increasing positions `pos` (1-based) of the second letter.
inline Complex weight_w(const std::vector<int>& pos, const std::vector<Complex>& t, const std::vector<Complex>& z) {
  const std::size_t l = t.size();
  if (pos.size() != l) throw std::invalid_argument("positions and variables differ in number");
  std::vector<std::size_t> sigma(l);
  for (std::size_t i = 0; i < l; ++i) sigma[i] = i;
  Complex total = 0;
  do {
    Complex term = 1;
    for (std::size_t j = 0; j < l; ++j) {
      Complex tj = t[sigma[j]];
      term /= tj - z[pos[j] - 1];
      for (int m = 1; m < pos[j]; ++m) term *= (tj - z[m - 1] + 1.0) / (tj - z[m - 1]);
    }
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j)
        if (sigma[i] > sigma[j]) {
          Complex d = t[sigma[i]] - t[sigma[j]];
          term *= (d + 1.0) / (d - 1.0);
        }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// Trigonometric weight W(t, z); needs 2l <= n.
inline Complex trig_W(const std::vector<Complex>& t, const std::vector<Complex>& z) {
  const std::size_t l = t.size();
  if (2 * l > z.size()) throw std::invalid_argument("trigonometric weight needs 2l <= n");
  Complex r = 1;
  for (std::size_t j = 1; j <= l; ++j) {
    Complex tj = t[j - 1], a = z[2 * j - 2], b = z[2 * j - 1];
    r *= std::numbers::pi * sin_pi3(b - a + 1.0) / (sin_pi3(tj - a) * sin_pi3(tj - b));
    for (std::size_t m = 1; m + 2 <= 2 * j; ++m) r *= sin_pi3(tj - z[m - 1] + 1.0) / sin_pi3(tj - z[m - 1]);
  }
  return checked(r);
}

// Vertical line plus circles of radius 1/4; orientation +1 counterclockwise.
struct ContourSpec {
  double line_re = -0.5;
  double T = 40;
  double radius = 0.25;
  std::vector<Complex> centers;
  std::vector<int> orientation;
};

// Circles at j*i (counterclockwise) and -1 + j*i (clockwise) for j = n+1..2n.
inline ContourSpec contour_as_printed(int n) {
  ContourSpec c;
  for (int j = 1; j <= 2 * n; ++j) {
    c.centers.push_back(j <= n ? Complex(0, j) : Complex(-1, j));
    c.orientation.push_back(j <= n ? 1 : -1);
  }
  return c;
}

// The clockwise circles surround the poles z_j - 1, i.e. sit at -1 + j*i for j = 1..n.
inline ContourSpec contour_around_shifted_points(int n) {
  ContourSpec c;
  for (int j = 1; j <= 2 * n; ++j) {
    c.centers.push_back(j <= n ? Complex(0, j) : Complex(-1, j - n));
    c.orientation.push_back(j <= n ? 1 : -1);
  }
  return c;
}

struct ContourIntegral {
  Complex line, circles;
  double line_error = 0, circle_change = 0;
  Complex total() const { return line + circles; }
};

// Trapezoid rule with node doubling until two successive values agree.
template <class F>
Complex circle_integral(F f, Complex center, double radius, int orientation, double tol, double* change) {
  auto rule = [&](std::size_t m) {
    auto vals = parallel_map(m, [&](std::size_t k) {
      double th = 2 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
      Complex e(std::cos(th), std::sin(th));
      return f(center + radius * e) * Complex(0, radius) * e;
    });
    return pairwise_sum(vals) * (2 * std::numbers::pi / static_cast<double>(m)) * static_cast<double>(orientation);
  };
  std::size_t m = 256;
  Complex prev = rule(m);
  for (; m <= (1u << 16); m *= 2) {
    Complex next = rule(2 * m);
    double d = std::abs(next - prev);
    if (d <= tol * std::max(1.0, std::abs(next))) {
      if (change) *change = std::max(*change, d);
      return next;
    }
    prev = next;
  }
  throw AccuracyError("circle quadrature did not stabilize", std::abs(prev));
}

template <class F>
ContourIntegral integrate_over(const ContourSpec& c, F f, double tol) {
  ContourIntegral out;
  auto line = [&](double y) { return f(Complex(c.line_re, y)) * Complex(0, 1); };
  QuadResult r = integrate_adaptive(line, -c.T, c.T, tol * 1e-3, tol);
  out.line = r.value;
  out.line_error = r.error;
  for (std::size_t j = 0; j < c.centers.size(); ++j)
    out.circles += circle_integral(f, c.centers[j], c.radius, c.orientation[j], tol, &out.circle_change);
  return out;
}

inline void require_sample_domain(const std::vector<Complex>& z) {
  for (std::size_t j = 0; j < z.size(); ++j)
    if (!(std::abs(z[j] - Complex(0, static_cast<double>(j + 1))) < 0.25))
      throw std::domain_error("sample point z_" + std::to_string(j + 1) + " is outside the disc of radius 1/4");
}

// Integrand Phi * w_L * W for one integration variable.
inline Complex single_variable_integrand(Complex t, const std::vector<Complex>& z, int position) {
  std::vector<Complex> tv{t};
  return master_function(tv, z) * weight_w({position}, tv, z) * trig_W(tv, z);
}

// Components of Psi for a one-variable weight: entry i is the coefficient of
// the basis vector with the second letter at position i + 1.
inline std::vector<ContourIntegral> psi_one_variable(const std::vector<Complex>& z, const ContourSpec& c, double tol = 1e-11) {
  require_sample_domain(z);
  std::vector<ContourIntegral> out;
  for (int pos = 1; pos <= static_cast<int>(z.size()); ++pos)
    out.push_back(integrate_over(c, [&](Complex t) { return single_variable_integrand(t, z, pos); }, tol));
  return out;
}

// Returns (coefficient of v12, coefficient of v21).
inline std::array<ContourIntegral, 2> psi_n2(Complex z1, Complex z2, const ContourSpec& c) {
  auto v = psi_one_variable({z1, z2}, c);
  return {v[1], v[0]};
}

inline Complex c2_constant() {
  return Complex(0, 2 * std::numbers::pi) *
         std::exp(lgamma_complex(2.0 / 3.0) + lgamma_complex(-1.0 / 3.0) - lgamma_complex(1.0 / 3.0));
}

struct ConstantReport {
  std::vector<Complex> ratios;  // Psi component over the polynomial component, per sample and component
  Complex reference;
  double max_rel_error = 0;     // against the reference
  double max_spread = 0;        // between ratios of one sample
  double max_rel_error_negated = 0;  // against minus the reference
  bool ok(double tol) const { return max_rel_error <= tol; }
};

// Psi_{(1,1)} / I_{(1,1)} at h = 1 with I = v12 - v21.
inline ConstantReport check_c_constant(const std::vector<std::array<Complex, 2>>& samples, const ContourSpec& c) {
  ConstantReport rep;
  rep.reference = c2_constant();
  for (auto& s : samples) {
    auto psi = psi_n2(s[0], s[1], c);
    Complex r12 = psi[0].total(), r21 = -psi[1].total();
    rep.ratios.push_back(r12);
    rep.ratios.push_back(r21);
    rep.max_spread = std::max(rep.max_spread, std::abs(r12 - r21) / std::abs(r12));
    for (Complex r : {r12, r21}) {
      rep.max_rel_error = std::max(rep.max_rel_error, std::abs(r - rep.reference) / std::abs(rep.reference));
      rep.max_rel_error_negated = std::max(rep.max_rel_error_negated, std::abs(r + rep.reference) / std::abs(rep.reference));
    }
  }
  return rep;
}

// Psi_{(2,1)} / I_{(2,1)} at h = 1 against c_3 = -c_2 / 3.
inline ConstantReport check_c3_constant(const std::vector<std::array<Complex, 3>>& samples, const ContourSpec& c) {
  ConstantReport rep;
  rep.reference = -c2_constant() / 3.0;
  for (auto& s : samples) {
    std::vector<Complex> z(s.begin(), s.end());
    auto psi = psi_one_variable(z, c);
    // I_{(2,1)} at h = 1, indexed by the position of the second letter.
    std::array<Complex, 3> I = {z[1] - z[2] + 1.0, z[2] - z[0] - 2.0, z[0] - z[1] + 1.0};  // v211, v121, v112
    Complex first;
    for (int i = 0; i < 3; ++i) {
      Complex r = psi[i].total() / I[i];
      if (i == 0) first = r;
      rep.ratios.push_back(r);
      rep.max_spread = std::max(rep.max_spread, std::abs(r - first) / std::abs(first));
      rep.max_rel_error = std::max(rep.max_rel_error, std::abs(r - rep.reference) / std::abs(rep.reference));
      rep.max_rel_error_negated = std::max(rep.max_rel_error_negated, std::abs(r + rep.reference) / std::abs(rep.reference));
    }
  }
  return rep;
}

}  // namespace qcb
