#include "parafock/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "parafock/algebra.hpp"
#include "parafock/coherent.hpp"
#include "parafock/fockspace.hpp"
#include "parafock/resolution.hpp"
#include "parafock/specfun.hpp"
#include "parafock/zeromodes.hpp"

namespace parafock {

namespace {

const std::vector<double> kFiveP = {1.3, 2.0, 2.5, 3.0, 4.7};

std::vector<double> p_grid(const SuiteOptions& opt) {
  auto g = kFiveP;
  if (opt.extra_p && std::find(g.begin(), g.end(), *opt.extra_p) == g.end())
    g.push_back(*opt.extra_p);
  return g;
}

double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// Tracks the worst value of a gated quantity and where it occurred.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (!(v <= value)) {  // NaN propagates as a failure
      value = v;
      where = at;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(3);
  o << std::scientific << v;
  return o.str();
}

template <class... Args>
std::string at(Args&&... args) {
  std::ostringstream o;
  ((o << args), ...);
  return o.str();
}

CriterionResult finish(int id, std::string name, const Worst& w, double threshold,
                       std::string extra = {}, bool extra_ok = true) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.measured = w.value;
  r.threshold = threshold;
  r.passed = extra_ok && w.value <= threshold;
  r.detail = "worst " + fmt(w.value) + (w.where.empty() ? "" : " at " + w.where);
  if (!extra.empty()) r.detail += "; " + extra;
  return r;
}

Complex polar_alpha(double r, double phase) { return std::polar(r, phase); }

}  // namespace

CriterionResult check_triple_relations(const SuiteOptions& opt) {
  Worst w;
  std::size_t checked = 0;
  for (double p : p_grid(opt)) {
    const FockBasis basis(p, opt.cutoff);
    const auto report = verify_triple_relations(basis, 1e-12);
    for (const auto& rel : report.relations) {
      w.update(rel.max_deviation, at("p=", p, " ", rel.label()));
      ++checked;
    }
  }
  return finish(1, "triple relations", w, 1e-12, at(checked, " relations checked"));
}

CriterionResult check_unitarity(const SuiteOptions& opt) {
  Worst w;
  for (double p : p_grid(opt)) {
    const FockBasis basis(p, opt.cutoff);
    const auto interior = basis.interior(2);
    for (int mode = 1; mode <= 2; ++mode) {
      const auto bp = build_generator(odd_generator(mode, 1), basis);
      const auto bm = build_generator(odd_generator(mode, -1), basis);
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < basis.size(); ++c)
        if (!bp.is_boundary(c)) cols.push_back(c);
      w.update((adjoint(bp) - bm).max_abs_on_columns(cols), at("p=", p, " adjoint(b", mode, "+)"));
      const auto h = build_generator(mode == 1 ? Generator::H1 : Generator::H2, basis);
      const auto anti = bracket(bm, bp, BracketKind::Anti) - h.scaled(2.0);
      w.update(anti.max_abs_on_columns(interior), at("p=", p, " {b", mode, "-,b", mode, "+}"));
    }
  }
  return finish(2, "unitarity structure", w, 1e-12);
}

CriterionResult check_zero_modes(const SuiteOptions& opt) {
  Worst w;
  int dim_failures = 0;
  std::string dim_where;
  for (double p : p_grid(opt)) {
    const FockBasis basis(p, 20);
    const auto b1m = build_generator(Generator::B1Minus, basis);
    for (int k = 0; k <= 10; ++k) {
      for (int j = 0; j <= 10; ++j) {
        const auto ko = kernel_oracle(basis, j, k);
        const int expected = j <= k ? 1 : 0;
        if (ko.dimension != expected) {
          ++dim_failures;
          dim_where = at("p=", p, " j=", j, " k=", k, " dim=", ko.dimension);
        }
        if (j > k) continue;
        const auto c = zero_mode_coeffs(j, k, p);
        double s = 0.0;
        for (double ci : c) s += ci * ci;
        w.update(std::abs(s - 1.0), at("p=", p, " j=", j, " k=", k, " (normalization)"));
        const auto z = zero_mode_vector(basis, j, k);
        w.update(b1m.apply(z).norm(), at("p=", p, " j=", j, " k=", k, " (annihilation)"));
        if (ko.dimension == 1) {
          double overlap = 0.0;
          for (std::size_t i = 0; i < ko.block.size(); ++i)
            overlap += ko.vectors[0][i] * z[ko.block[i]].real();
          w.update(1.0 - std::abs(overlap), at("p=", p, " j=", j, " k=", k, " (oracle alignment)"));
        }
      }
    }
  }
  return finish(3, "zero modes", w, 1e-12,
                dim_failures == 0 ? "kernel dimensions all as expected"
                                  : at(dim_failures, " kernel dimension mismatches, e.g. ", dim_where),
                dim_failures == 0);
}

CriterionResult check_coherent_norms(const SuiteOptions&) {
  Worst w;
  for (double p : kFiveP)
    for (int j = 0; j <= 4; ++j)
      for (double r : {0.3, 1.0, 2.0, 4.0})
        for (double phase : {0.0, 0.7, 2.1}) {
          const Complex a = polar_alpha(r, phase);
          const double bessel = coherent_norm(p, j, a);
          const double series = coherent_norm_series(p, j, a);
          const auto s = build_coherent(p, j, j, a);
          const double coeffs = s.norm_squared();
          const auto where = at("p=", p, " j=", j, " |alpha|=", r, " arg=", phase);
          w.update(rel_diff(bessel, series), where + " (Bessel vs 0F1)");
          w.update(rel_diff(bessel, coeffs), where + " (Bessel vs coefficients)");
          w.update(rel_diff(series, coeffs), where + " (0F1 vs coefficients)");
        }
  return finish(4, "coherent norms", w, 1e-10);
}

CriterionResult check_eigen_residuals(const SuiteOptions&) {
  Worst w;
  int states = 0;
  // Ladder-basis residuals over the full norm grid, with the default and
  // with deliberately short truncations.
  for (double p : kFiveP)
    for (int j = 0; j <= 4; ++j)
      for (double r : {0.3, 1.0, 2.0, 4.0})
        for (double phase : {0.0, 0.7, 2.1})
          for (int nmax : {0, 20, 40}) {
            const Complex a = polar_alpha(r, phase);
            if (nmax > 0 && r >= std::sqrt(nmax + 1.0)) continue;
            const auto s = nmax > 0 ? build_coherent(p, j, j, a, nmax) : build_coherent(p, j, j, a);
            const double expect = std::abs(a) * std::abs(s.coeffs.back());
            const double scale = std::sqrt(s.norm_squared());
            w.update(std::abs(eigen_residual(s) - expect) / scale,
                     at("p=", p, " j=", j, " |alpha|=", r, " nmax=", s.nmax()));
            ++states;
          }
  // The same states assembled on the Gelfand-Zetlin basis.
  for (double p : {1.3, 2.5, 4.7}) {
    const FockBasis basis(p, 30);
    for (int j = 0; j <= 2; ++j)
      for (int k = j; k <= j + 2; ++k)
        for (Complex a : {Complex(0.3, 0.0), Complex(0.6, 0.8), Complex(-1.5, 0.5)})
          for (int nmax : {8, 14}) {
            if (j + k + nmax > basis.cutoff()) continue;
            const auto s = build_coherent(p, j, k, a, nmax);
            const double expect = std::abs(a) * std::abs(s.coeffs.back());
            const double scale = std::sqrt(s.norm_squared());
            w.update(std::abs(eigen_residual_matrix(s, basis) - expect) / scale,
                     at("p=", p, " j=", j, " k=", k, " alpha=", a, " nmax=", nmax, " (matrix)"));
            ++states;
          }
  }
  return finish(5, "eigen-residual sharpness", w, 1e-14,
                at(states, " states; relative to ||psi||"));
}

CriterionResult check_b2_elements(const SuiteOptions&) {
  Worst w;
  int cases = 0;
  const int nmax = 30;
  const std::vector<Complex> alphas = {Complex(0.3, 0.0), Complex(0.0, 0.7), Complex(1.0, 0.5)};
  auto compare = [&](const FockBasis& basis, int jp, Complex ap, int j, int k, Complex a) {
    const Complex closed = b2_element(basis.p(), jp, ap, j, k, a);
    const auto oracle = b2_element_oracle(basis, jp, ap, j, k, a, nmax);
    const double dev = std::max(0.0, std::abs(closed - oracle.value) - oracle.error_budget);
    w.update(dev, at("p=", basis.p(), " jp=", jp, " j=", j, " k=", k, " alpha=", a,
                     " alpha'=", ap));
    ++cases;
  };
  for (double p : {2.5, 3.0}) {
    const FockBasis basis(p, 3 + 4 + nmax);
    for (int j = 0; j <= 2; ++j)
      for (int k = std::max(j, 1); k <= 4; ++k)
        for (int jp = j - 2; jp <= j + 2; ++jp) {
          if (jp < 0 || jp > k - 1) continue;
          for (Complex a : alphas)
            for (Complex ap : alphas) compare(basis, jp, ap, j, k, a);
        }
  }
  // p = 2: the j' = j element vanishes for j >= 1; at j = 0 it does not.
  {
    const FockBasis basis(2.0, 3 + 4 + nmax);
    for (int j = 0; j <= 2; ++j)
      for (int k = std::max(j, 1); k <= 4; ++k)
        for (int jp = j - 1; jp <= j + 1; ++jp) {
          if (jp < 0 || jp > k - 1) continue;
          for (Complex a : alphas)
            for (Complex ap : alphas) {
              if (jp == j && j >= 1 && b2_element(2.0, jp, ap, j, k, a) != Complex{}) {
                w.update(1.0, at("p=2 j=", j, " closed form not zero"));
              }
              compare(basis, jp, ap, j, k, a);
            }
        }
  }
  return finish(6, "b2 matrix elements", w, 1e-8, at(cases, " elements"));
}

CriterionResult check_bicoherent(const SuiteOptions&) {
  Worst shift, bic;
  // Zero-mode shifts against the matrix engine.
  for (double p : kFiveP) {
    const FockBasis basis(p, 20);
    const auto b2m = build_generator(Generator::B2Minus, basis);
    const auto b2p = build_generator(Generator::B2Plus, basis);
    for (int j = 0; j <= 3; ++j)
      for (int k = j; k + j + 2 <= 16; ++k) {
        const auto z = zero_mode_vector(basis, j, k);
        if (k - 2 >= j) {
          auto d = b2m.apply(b2m.apply(z));
          d -= b2sq_shift(j, k, p, ShiftDirection::Lower) * zero_mode_vector(basis, j, k - 2);
          shift.update(d.norm(), at("p=", p, " j=", j, " k=", k, " lower"));
        }
        auto u = b2p.apply(b2p.apply(z));
        u -= b2sq_shift(j, k, p, ShiftDirection::Raise) * zero_mode_vector(basis, j, k + 2);
        shift.update(u.norm(), at("p=", p, " j=", j, " k=", k, " raise"));
      }
    // On coherent states the same scalars apply.
    for (int j = 0; j <= 1; ++j)
      for (int k = j + 2; k <= j + 3; ++k) {
        const auto s = build_coherent(p, j, k, Complex(0.8, -0.4), 12);
        auto t = s;
        t.k = k - 2;
        auto d = b2m.apply(b2m.apply(s.to_fock_vector(basis)));
        d -= b2sq_on_coherent(p, j, k, ShiftDirection::Lower) * t.to_fock_vector(basis);
        shift.update(d.norm() / std::sqrt(s.norm_squared()),
                     at("p=", p, " j=", j, " k=", k, " coherent lower"));
      }
  }

  // Bicoherent residuals at kmax = 12 against the dropped-component bounds.
  const int kmax = 12, nmax = 16;
  const double allowance = 1e-13;
  for (double p : {1.3, 2.5, 4.7}) {
    const FockBasis basis(p, 1 + 2 * kmax + 2 + nmax);
    for (int j = 0; j <= 1; ++j)
      for (int l = j; l <= j + 1; ++l)
        for (Complex a : {Complex(1.5, 0.0), Complex(0.0, 0.8), Complex(-0.9, 1.2)})
          for (Complex b : {Complex(1.5, 0.0), Complex(-1.2, 0.6), Complex(0.4, -0.3)}) {
            const auto s = bicoherent(p, j, l, a, b, kmax, nmax);
            const auto m = bicoherent_matrix_residuals(s, basis);
            const auto where = at("p=", p, " j=", j, " l=", l, " alpha=", a, " beta=", b);
            // Excess over the bound, zero when the bound holds.
            bic.update(std::max(0.0, s.b1_residual - s.b1_bound * (1 + 1e-10) - allowance),
                       where + " b1 ladder");
            bic.update(std::max(0.0, s.b2sq_residual - s.b2sq_bound * (1 + 1e-10) - allowance),
                       where + " b2^2 ladder");
            bic.update(std::max(0.0, m.b1 - s.b1_bound * (1 + 1e-10) - allowance), where + " b1 matrix");
            bic.update(std::max(0.0, m.b2sq - s.b2sq_bound * (1 + 1e-10) - allowance),
                       where + " b2^2 matrix");
          }
  }
  auto r = finish(7, "b2 shifts and bicoherent states", shift, 1e-12,
                  "bicoherent bound excess " + fmt(bic.value) +
                      (bic.where.empty() ? "" : " at " + bic.where),
                  bic.value == 0.0);
  return r;
}

CriterionResult check_special_functions(const SuiteOptions&) {
  Worst w;
  const std::vector<double> nus = {0.0,  5e-6,    0.25, 0.5,  0.65, 1.0 - 1e-5, 1.0 - 5e-6,
                                   1.0,  1 + 5e-6, 1.0 + 1e-5, 1.5, 2.0, 2.25, 3.35, 4.0, 5.5};
  const std::vector<double> xs = {0.1, 0.5, 1.0, 1.5, 2.0, 5.0, 10.0, 20.0};
  for (double nu : nus)
    for (double x : xs) {
      const double oracle = bessel_k_oracle(nu, 0.5 * x);
      const auto where = at("nu=", nu, " x=", x);
      w.update(rel_diff(bessel_k(nu, x).value, oracle), where + " (dispatch)");
      // Series forms are compared on x <= 2, the range where the dispatcher uses them.
      if (x <= 2.0) {
        const double off = std::abs(nu - std::round(nu));
        if (off > 1e-6) w.update(rel_diff(bessel_k_reflection(nu, x).value, oracle), where + " (reflection)");
        if (off == 0.0)
          w.update(rel_diff(bessel_k_integer(static_cast<int>(nu), x).value, oracle), where + " (integer)");
      }
      if (x >= 2.0)
        w.update(rel_diff(bessel_k_continued_fraction(nu, x).value, oracle), where + " (continued fraction)");
    }
  Worst half;
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    half.update(rel_diff(bessel_i(0.5, x).value, std::sqrt(2.0 / (std::numbers::pi * x)) * std::sinh(x)),
                at("I_1/2 x=", x));
    half.update(rel_diff(bessel_k(0.5, x).value, std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x)),
                at("K_1/2 x=", x));
  }
  return finish(8, "special functions", w, 1e-8,
                "half-order closed forms worst " + fmt(half.value) + " at " + half.where + " (gate 1e-12)",
                half.value <= 1e-12);
}

CriterionResult check_moments(const SuiteOptions&) {
  const auto start = std::chrono::steady_clock::now();
  Worst w;
  double min_measure = std::numeric_limits<double>::infinity();
  auto ps = kFiveP;
  ps.push_back(2.0 - 1e-5);
  ps.push_back(2.0 + 1e-5);
  for (double p : ps)
    for (int j = 0; j <= 3; ++j)
      for (int n = 0; n <= 5; ++n)
        for (auto kind : {MeasureKind::I, MeasureKind::II}) {
          const auto m = stieltjes_moment_check(kind, p, j, n);
          min_measure = std::min(min_measure, m.min_measure);
          w.update(m.rel_err, at("p=", p, " j=", j, " n=", n, kind == MeasureKind::I ? " I" : " II"));
        }
  // Integer-order measures at even p against the general form.
  Worst integer;
  for (int m : {1, 2})
    for (int j = 0; j <= 3; ++j)
      for (double rho : {0.05, 0.3, 0.8, 1.2, 1.9, 3.0})
        for (auto kind : {MeasureKind::I, MeasureKind::II})
          integer.update(rel_diff(measure_integer_form(kind, m, j, rho), measure(kind, 2.0 * m, j, rho)),
                         at("p=", 2 * m, " j=", j, " rho=", rho));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = integer.value <= 1e-8 && min_measure > 0.0 && secs < 30.0;
  return finish(9, "Stieltjes moments", w, 1e-8,
                "even-p integer forms worst " + fmt(integer.value) + "; min measure " +
                    fmt(min_measure) + "; " + fmt(secs) + " s (limit 30)",
                ok);
}

CriterionResult check_resolution(const SuiteOptions&) {
  Worst w, modes, reduction;
  double min_measure = std::numeric_limits<double>::infinity();
  for (double p : {1.3, 2.0, 2.5})
    for (int j = 0; j <= 2; ++j) {
      const auto off = resolution_identity_check(p, j, 10, ResolutionMode::OffDiagonal);
      const auto cat = resolution_identity_check(p, j, 10, ResolutionMode::Cat);
      const auto where = at("p=", p, " j=", j);
      w.update(off.max_abs_deviation, where + " offdiag");
      w.update(cat.max_abs_deviation, where + " cat");
      min_measure = std::min({min_measure, off.min_measure, cat.min_measure});
      for (std::size_t m = 0; m < off.entries.size(); ++m)
        for (std::size_t n = 0; n < off.entries.size(); ++n)
          modes.update(std::abs(off.entries[m][n] - cat.entries[m][n]), where);
      for (int n = 0; n <= 10; ++n)
        reduction.update(std::abs(off.entries[n][n] - diagonal_via_moment(p, j, n)),
                         at(where, " n=", n));
    }
  const bool ok = modes.value <= 1e-10 && reduction.value <= 1e-10 && min_measure > 0.0;
  return finish(10, "resolution of identity", w, 1e-6,
                "mode agreement " + fmt(modes.value) + " (gate 1e-10); moment reduction " +
                    fmt(reduction.value) + "; min measure " + fmt(min_measure),
                ok);
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt) {
  using Check = CriterionResult (*)(const SuiteOptions&);
  const std::pair<const char*, Check> checks[] = {
      {"triple relations", check_triple_relations},
      {"unitarity structure", check_unitarity},
      {"zero modes", check_zero_modes},
      {"coherent norms", check_coherent_norms},
      {"eigen-residual sharpness", check_eigen_residuals},
      {"b2 matrix elements", check_b2_elements},
      {"b2 shifts and bicoherent states", check_bicoherent},
      {"special functions", check_special_functions},
      {"Stieltjes moments", check_moments},
      {"resolution of identity", check_resolution},
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (const auto& [name, fn] : checks) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn(opt);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = name;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.id == 1 && r.seconds >= 5.0) {
      r.passed = false;
      r.detail += "; exceeded 5 s";
    }
    out.push_back(std::move(r));
    ++id;
  }
  return out;
}

}  // namespace parafock
