#include <mcj/acceptance.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <mcj/coeffs.hpp>
#include <mcj/jack.hpp>
#include <mcj/mcj.hpp>
#include <mcj/orthog.hpp>
#include <mcj/rng.hpp>

namespace mcj {

namespace {

using std::numbers::pi;
const Complex I(0.0, 1.0);

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome one_variable_orthogonality(const AcceptanceOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  double worst_off = 0.0, worst_diag = 0.0;
  bool ok = true;
  for (double alpha : {1.0, 2.0, 3.5}) {
    for (double nu : {0.0, 0.7}) {
      ParamSet p(1, Rational(2), alpha, nu);
      auto rep = verify_orthogonality(p, 6, build_rule(default_points(1), RuleKind::gauss_gegenbauer, p),
                                      1e-9, 1e-9, opt.threads);
      worst_off = std::max(worst_off, rep.off_diag_residual);
      worst_diag = std::max(worst_diag, rep.diag_residual);
      ok = ok && rep.pass;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 10.0;
  return {ok, fmt("off=%.2e diag=%.2e (tol 1e-9) time=%.2fs (limit 10s)", worst_off, worst_diag, secs)};
}

Outcome multivariate_orthogonality(const AcceptanceOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ParamSet p(2, Rational(2), 3.0, 0.5);
  auto rep = verify_orthogonality(p, 3, build_rule(default_points(2), RuleKind::gauss_gegenbauer, p),
                                  1e-6, 1e-6, opt.threads);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = rep.pass && secs < 300.0;
  return {ok, fmt("off=%.2e diag=%.2e (tol 1e-6) points=%d^2 time=%.1fs", rep.off_diag_residual,
                  rep.diag_residual, rep.points_per_axis, secs)};
}

Outcome degeneration(const AcceptanceOptions& opt) {
  double worst_diag = 0.0, worst_coef = 0.0;
  for (int di : {1, 2, 3}) {
    ParamSet base(2, Rational(di));
    ParamSet p(2, Rational(di), base.n_over_r().get_d(), 0.0);
    double gamma_nr = std::exp(gamma_omega_log(Complex(p.alpha), p).real());
    auto parts = enumerate_partitions(3, 2);
    auto g = gram_matrix(parts, p, build_rule(default_points(2), RuleKind::gauss_gegenbauer, p), opt.threads);
    for (std::size_t i = 0; i < parts.size(); i++) {
      double target = dim_dm(parts[i], p).get_d() / gamma_nr;
      worst_diag = std::max(worst_diag, std::abs(g(i, i) - target) / target);
      CSymPoly diff = mcj_build(parts[i], p).body - promote(spherical(parts[i], p) * dim_dm(parts[i], p));
      for (const auto& [k, c] : diff.terms()) worst_coef = std::max(worst_coef, std::abs(c));
    }
  }
  bool ok = worst_diag <= 1e-8 && worst_coef <= 1e-12;
  return {ok, fmt("diag rel=%.2e (tol 1e-8) coef=%.2e (tol 1e-12)", worst_diag, worst_coef)};
}

Outcome conjecture(const AcceptanceOptions& opt) {
  int pts = default_points(2);
  auto sweep = conjecture_sweep({Rational(5, 2)}, {3.0}, {0.0, 0.3}, 2, 2, pts, RuleKind::gauss_gegenbauer,
                                1e-4, 1e-4, opt.threads);
  auto controls = conjecture_sweep({Rational(1), Rational(2), Rational(3)}, {3.0}, {0.0, 0.3}, 2, 2, pts,
                                   RuleKind::gauss_gegenbauer, 1e-6, 1e-6, opt.threads);
  double diag = 0.0, off = 0.0, delta = 0.0;
  bool diagnostics = true, matched = true;
  for (const auto& rep : sweep.reports) {
    diag = std::max(diag, rep.diag_residual);
    off = std::max(off, rep.off_diag_residual);
    delta = std::max(delta, rep.resolution_delta);
    diagnostics = diagnostics && rep.diagnostic_pass;
    matched = matched && rep.diag_residual <= 1e-4;
  }
  double cdiag = 0.0, coff = 0.0;
  bool controls_ok = true;
  for (const auto& rep : controls.reports) {
    cdiag = std::max(cdiag, rep.diag_residual);
    coff = std::max(coff, rep.off_diag_residual);
    controls_ok = controls_ok && rep.pass;
  }
  bool ok = matched && diagnostics && controls_ok;
  return {ok, fmt("d=5/2 diag=%.2e off=%.2e resolution=%.2e (tol 1e-4); controls diag=%.2e off=%.2e (tol 1e-6)",
                  diag, off, delta, cdiag, coff)};
}

Outcome determinants(const AcceptanceOptions& opt) {
  CounterRng rng(opt.seed + 5);
  double worst = 0.0;
  for (int r = 2; r <= 3; r++) {
    ParamSet p(r, Rational(2), 3.5, -0.6);
    for (const auto& m : enumerate_partitions(4, r)) {
      auto f = mcj_build(m, p);
      auto psi = psi_build(m, p);
      for (int trial = 0; trial < 20; trial++) {
        std::vector<Complex> sig(r);
        std::vector<double> t(r);
        for (auto& s : sig) s = std::exp(I * rng.uniform(0.0, 2.0 * pi));
        for (auto& x : t) x = rng.uniform(-2.0, 2.0);
        Complex v = f(sig);
        Complex w = psi(t);
        worst = std::max(worst, std::abs(det_eval_phi(m, p, sig) - v) / std::abs(v));
        worst = std::max(worst, std::abs(det_eval_psi(m, p, t) - w) / std::abs(w));
      }
    }
  }
  return {worst <= 1e-9, fmt("max rel=%.2e (tol 1e-9) seed=%llu", worst,
                             static_cast<unsigned long long>(opt.seed + 5))};
}

Outcome generating_functions(const AcceptanceOptions&) {
  double rank1 = 0.0, rank2 = 0.0;
  for (double a : {0.0, 1.3, 2.9}) {
    Complex z = 0.25 * std::exp(I * a);
    rank1 = std::max(rank1, genfun_residual_phi(ParamSet(1, Rational(2), 2.0, 0.5), {z}, {std::exp(0.9 * I)}, 30));
    rank1 = std::max(rank1, genfun_residual_psi(ParamSet(1, Rational(2), 1.5, -0.3), {z}, {0.8}, 30));
  }
  ParamSet p(2, Rational(2), 3.0, 0.2);
  rank2 = std::max(rank2, genfun_residual_phi(p, {0.15, -0.05}, {std::exp(0.4 * I), std::exp(2.1 * I)}, 10));
  rank2 = std::max(rank2, genfun_residual_phi(p, {Complex(0.1, 0.1), 0.05}, {std::exp(-1.0 * I), std::exp(2.5 * I)}, 10));
  rank2 = std::max(rank2, genfun_residual_psi(p, {0.1, -0.12}, {0.9, -0.4}, 10));
  bool ok = rank1 < 1e-10 && rank2 < 1e-6;
  return {ok, fmt("r=1 N=30 res=%.2e (tol 1e-10); r=2 N=10 res=%.2e (tol 1e-6)", rank1, rank2)};
}

Outcome operators(const AcceptanceOptions&) {
  double ode = 0.0, lag = 0.0, psi = 0.0;
  for (double a : {1.3, 2.0, 3.5}) {
    for (double nu : {0.0, 0.7, -0.7}) {
      for (int m = 0; m <= 10; m++) ode = std::max(ode, ode_residual_onevar(m, a, nu));
      for (int m = 0; m <= 8; m++) {
        auto res = rank1_operator_residuals(m, a, nu);
        lag = std::max(lag, res.laguerre);
        psi = std::max(psi, res.psi);
      }
    }
  }
  int euler_bad = 0;
  for (Rational d : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
    for (int r = 1; r <= 3; r++) {
      ParamSet base(r, d);
      ParamSet p(r, d, base.n_over_r().get_d() + 1.5, 0.0);
      for (const auto& m : enumerate_partitions(5, r)) {
        if (euler_residual(m, p) != 0) euler_bad++;
      }
    }
  }
  bool ok = ode < 1e-12 && lag < 1e-11 && psi < 1e-11 && euler_bad == 0;
  return {ok, fmt("ode=%.2e D1=%.2e D2=%.2e euler nonzero=%d", ode, lag, psi, euler_bad)};
}

Outcome combinatorics(const AcceptanceOptions&) {
  int failures = 0;
  int checked = 0;
  for (int r = 1; r <= 3; r++) {
    for (const auto& m : enumerate_partitions(5, r)) {
      checked++;
      if (jack_mono(m, r, Rational(2)) != schur(m, r)) failures++;
    }
  }
  for (Rational d : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
    for (int r = 1; r <= 3; r++) {
      ParamSet p(r, d);
      auto all = enumerate_partitions(5, r);
      for (const auto& m : all) {
        checked++;
        if (value_at_ones(spherical(m, r, d)) != 1) failures++;
        if (jack_at_ones_exact(m, p) != value_at_ones(jack_mono(m, r, d))) failures++;
        Rational sum = 0;
        for (const auto& k : all) {
          Rational b = gen_binom(m, k, p);
          sum += b;
          if (!contains(m, k) && b != 0) failures++;
          if (k.weight() <= m.weight() && gamma_k_partition(k, m, p) < 0) failures++;
        }
        if (sum != Rational(1 << m.weight())) failures++;
      }
    }
  }
  return {failures == 0, fmt("%d partitions checked, %d exact mismatches", checked, failures)};
}

Outcome meixner_pollaczek(const AcceptanceOptions& opt) {
  CounterRng rng(opt.seed + 9);
  double worst = 0.0;
  for (int trial = 0; trial < 10; trial++) {
    double t = rng.uniform(0.0, 2.0 * pi);
    double a = rng.uniform(0.5, 4.0);
    double nu = rng.uniform(-1.0, 1.0);
    for (int m = 0; m <= 6; m++) {
      Complex lhs = cj1_eval(m, a, nu, std::exp(I * t));
      Complex rhs = std::exp(I * (m * t / 2)) * mp1_eval(m, a / 2, Complex(nu, -0.5), -t / 2);
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
  }
  return {worst <= 1e-12, fmt("max rel=%.2e (tol 1e-12) seed=%llu", worst,
                              static_cast<unsigned long long>(opt.seed + 9))};
}

Outcome taylor(const AcceptanceOptions&) {
  double shifted = 0.0, expo = 0.0;
  for (int r = 1; r <= 2; r++) {
    std::vector<std::vector<Complex>> points;
    if (r == 1) {
      points = {{0.3}, {0.3 * std::exp(2.0 * I)}, {-0.3}};
    } else {
      points = {{0.3, -0.3}, {0.3 * I, 0.2}, {0.3 * std::exp(0.8 * I), 0.3 * std::exp(-1.1 * I)}};
    }
    for (Rational d : {Rational(1), Rational(2)}) {
      ParamSet base(r, d);
      for (double extra : {0.0, 1.0}) {
        ParamSet p(r, d, base.n_over_r().get_d() + extra, 0.0);
        for (const auto& k : enumerate_partitions(2, r)) {
          for (const auto& w : points) {
            shifted = std::max(shifted, spherical_taylor_residual(k, p, w, 14, TaylorKind::shifted));
            expo = std::max(expo, spherical_taylor_residual(k, p, w, 14, TaylorKind::exponential));
          }
        }
      }
    }
  }
  bool ok = shifted <= 1e-8 && expo <= 1e-8;
  return {ok, fmt("N=14 |w|<=0.3: exponential=%.2e shifted=%.2e (tol 1e-8)", expo, shifted)};
}

struct Entry {
  int id;
  const char* name;
  Outcome (*fn)(const AcceptanceOptions&);
  bool heavy;
};

const Entry kEntries[] = {
    {1, "one-variable orthogonality", one_variable_orthogonality, false},
    {2, "multivariate orthogonality r=2 d=2", multivariate_orthogonality, true},
    {3, "degeneration alpha=n/r", degeneration, false},
    {4, "conjecture evidence d=5/2", conjecture, true},
    {5, "determinant formulas", determinants, false},
    {6, "generating functions", generating_functions, false},
    {7, "operator residuals", operators, false},
    {8, "exact combinatorial layer", combinatorics, false},
    {9, "Meixner-Pollaczek relation", meixner_pollaczek, false},
    {10, "spherical Taylor expansions", taylor, false},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& e : kEntries) {
    if (opt.quick && e.heavy) continue;
    CriterionResult res;
    res.id = e.id;
    res.name = e.name;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = e.fn(opt);
      res.pass = o.pass;
      res.detail = o.detail;
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(res);
    out.push_back(std::move(res));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  return fmt("[%s] %2d %-36s %s (%.1fs)", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
             r.seconds);
}

}  // namespace mcj
