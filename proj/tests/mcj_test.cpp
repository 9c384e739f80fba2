#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <mcj/jack.hpp>
#include <mcj/mcj.hpp>

namespace {

using mcj::Complex;
using mcj::ParamSet;
using mcj::Partition;
using mcj::Rational;

constexpr double pi = std::numbers::pi;
const Complex I(0.0, 1.0);

std::vector<Complex> torus_point(std::mt19937_64& rng, int r) {
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  std::vector<Complex> out(r);
  for (auto& s : out) s = std::exp(I * u(rng));
  return out;
}

double coeff_distance(const mcj::CSymPoly& a, const mcj::CSymPoly& b) {
  double out = 0;
  auto diff = a - b;
  for (const auto& [m, c] : diff.terms()) out = std::max(out, std::abs(c));
  return out;
}

}  // namespace

TEST(mcj_build, trivial_cases) {
  auto p = mcj::mcj_build({}, ParamSet(2, 2, 3.0, 0.4));
  EXPECT_LT(coeff_distance(p.body, mcj::CSymPoly::constant(2, 1.0)), 1e-15);
  for (int m = 0; m <= 6; m++) {
    auto f = mcj::mcj_build({m}, ParamSet(1, 2, 1.0, 0.0));
    EXPECT_LT(coeff_distance(f.body, mcj::CSymPoly::monomial(Partition{m}, 1, 1.0)), 1e-12);
  }
}

TEST(mcj_build, degeneration_to_spherical) {
  for (Rational d : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
    for (int r = 1; r <= 3; r++) {
      ParamSet base(r, d);
      Rational nr = base.n_over_r();
      ParamSet p(r, d, nr.get_d(), 0.0);
      for (const auto& m : mcj::enumerate_partitions(r == 3 ? 4 : 5, r)) {
        mcj::SymPoly expected = mcj::spherical(m, p) * mcj::dim_dm(m, p);
        EXPECT_EQ(mcj::mcj_build_exact(m, r, d, nr), expected) << m.to_string();
        EXPECT_LT(coeff_distance(mcj::mcj_build(m, p).body, mcj::promote(expected)), 1e-12);
      }
    }
  }
}

TEST(mcj_build, conjugation_symmetry) {
  for (const auto& m : mcj::enumerate_partitions(4, 2)) {
    auto a = mcj::mcj_build(m, ParamSet(2, Rational(5, 2), 3.0, 0.3));
    auto b = mcj::mcj_build(m, ParamSet(2, Rational(5, 2), 3.0, -0.3));
    for (const auto& [k, c] : a.body.terms()) EXPECT_LT(std::abs(std::conj(c) - b.body.coeff(k)), 1e-13);
    EXPECT_EQ(a.body.terms().size(), b.body.terms().size());
  }
}

TEST(mcj_build, zero_divisor) {
  EXPECT_THROW(mcj::mcj_build({2}, ParamSet(1, 2, -1.0, 0.0)), mcj::parameter_error);
}

TEST(cj1, examples) {
  EXPECT_EQ(mcj::cj1_eval(0, 2.3, 0.1, Complex(0.3, 0.2)), Complex(1.0));
  EXPECT_LT(std::abs(mcj::cj1_eval(4, 2.5, 0.3, 1.0) - std::tgamma(6.5) / std::tgamma(2.5) / 24.0), 1e-12);
  Complex s = std::exp(I * pi / 3.0);
  EXPECT_LT(std::abs(mcj::cj1_eval(1, 2.0, 0.0, s) - (2.0 - 1.5 * (1.0 - s))), 1e-14);
  std::mt19937_64 rng(3);
  for (int m = 0; m <= 8; m++) {
    ParamSet p(1, 2, 1.7, -0.4);
    auto sig = torus_point(rng, 1);
    EXPECT_LT(std::abs(mcj::mcj_build({m}, p)(sig) - mcj::cj1_eval(m, 1.7, -0.4, sig[0])), 1e-12);
  }
}

TEST(cj1, generating_function_one_variable) {
  // sum_m phi_m z^m = (1-z)^{-(alpha-1)/2 + i nu} (1 - sigma z)^{-(alpha+1)/2 - i nu}
  double a = 2.0, nu = 0.5;
  Complex z = 0.2, sig = std::exp(0.9 * I);
  Complex lhs = 0;
  for (int m = 0; m <= 40; m++) lhs += mcj::cj1_eval(m, a, nu, sig) * std::pow(z, m);
  Complex beta(0.5 * (a + 1), nu);
  Complex rhs = std::pow(1.0 - z, beta - a) * std::pow(1.0 - sig * z, -beta);
  EXPECT_LT(std::abs(lhs - rhs), 1e-12);
}

TEST(laguerre, classical) {
  auto l1 = mcj::laguerre_build({1}, ParamSet(1, 2, 2.5, 0.0));
  auto l2 = mcj::laguerre_build({2}, ParamSet(1, 2, 1.0, 0.0));
  for (double u : {0.0, 0.4, 1.7}) {
    EXPECT_LT(std::abs(l1({u}) - (2.5 - u)), 1e-13);
    EXPECT_LT(std::abs(l2({u}) - (1 - 2 * u + u * u / 2)), 1e-13);
  }
  EXPECT_LT(coeff_distance(mcj::laguerre_build({}, ParamSet(2, 1, 2.0)).body,
                           mcj::CSymPoly::constant(2, 1.0)), 1e-15);
}

TEST(psi, examples) {
  double t = 0.7;
  Complex w = Complex(1.0, -t);
  ParamSet p(1, 2, 2.4, 0.3);
  Complex beta(1.7, 0.3);
  EXPECT_LT(std::abs(mcj::psi_eval({}, p, {t}) - std::exp(-beta * std::log(w))), 1e-14);
  Complex v = mcj::psi_eval({1}, ParamSet(1, 2, 1.0, 0.0), {t});
  EXPECT_LT(std::abs(v - (-(1.0 + I * t) / (w * w))), 1e-14);
}

TEST(psi, cayley_consistency) {
  std::mt19937_64 rng(11);
  for (int r = 1; r <= 2; r++) {
    ParamSet p(r, r == 1 ? Rational(2) : Rational(3, 2), 3.0, 0.35);
    for (const auto& m : mcj::enumerate_partitions(3, r)) {
      auto f = mcj::mcj_build(m, p);
      auto psi = mcj::psi_build(m, p);
      for (int trial = 0; trial < 10; trial++) {
        auto sig = torus_point(rng, r);
        std::vector<double> t(r);
        Complex pre = 1.0;
        for (int j = 0; j < r; j++) {
          t[j] = std::real(I * (1.0 + sig[j]) / (1.0 - sig[j]));
          pre *= std::exp(-psi.beta * std::log((1.0 - sig[j]) / 2.0));
        }
        Complex direct = f(sig);
        EXPECT_LT(std::abs(pre * psi(t) - direct), 1e-11 * (1 + std::abs(direct)));
        EXPECT_LT(std::abs(psi.reduced(t) - direct), 1e-11 * (1 + std::abs(direct)));
      }
    }
  }
}

TEST(det_formulas, examples) {
  ParamSet p1(1, 2, 2.2, 0.1);
  Complex s = std::exp(0.4 * I);
  EXPECT_LT(std::abs(mcj::det_eval_phi({3}, p1, {s}) - mcj::cj1_eval(3, 2.2, 0.1, s)), 1e-14);
  EXPECT_LT(std::abs(mcj::det_eval_psi({2}, p1, {0.3}) - mcj::psi_eval({2}, p1, {0.3})), 1e-14);
  ParamSet p2(2, 2, 3.0, 0.4);
  std::vector<Complex> sig{std::exp(0.3 * I), std::exp(2.1 * I)};
  EXPECT_LT(std::abs(mcj::det_eval_phi({}, p2, sig) - 1.0), 1e-13);
  Complex direct = mcj::mcj_build({2, 1}, p2)(sig);
  EXPECT_LT(std::abs(mcj::det_eval_phi({2, 1}, p2, sig) - direct), 1e-10 * std::abs(direct));
  ParamSet p3(2, 2, 3.0, 0.0);
  EXPECT_LT(std::abs(mcj::det_eval_psi({}, p3, {0.2, -1.1}) - mcj::psi_eval({}, p3, {0.2, -1.1})), 1e-10);
  ParamSet p4(2, 2, 2.5, 0.3);
  Complex d4 = mcj::psi_eval({1, 0}, p4, {0.4, -0.7});
  EXPECT_LT(std::abs(mcj::det_eval_psi({1, 0}, p4, {0.4, -0.7}) - d4), 1e-10 * std::abs(d4));
  EXPECT_THROW(mcj::det_eval_phi({1}, p2, {s, s}), std::domain_error);
  EXPECT_THROW(mcj::det_eval_phi({1}, ParamSet(2, 1, 3.0), sig), mcj::parameter_error);
}

TEST(det_formulas, random_equivalence) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ut(-2.0, 2.0);
  for (int r = 2; r <= 3; r++) {
    ParamSet p(r, 2, 3.5, -0.6);
    for (const auto& m : mcj::enumerate_partitions(4, r)) {
      auto f = mcj::mcj_build(m, p);
      auto psi = mcj::psi_build(m, p);
      for (int trial = 0; trial < 5; trial++) {
        auto sig = torus_point(rng, r);
        Complex v = f(sig);
        EXPECT_LT(std::abs(mcj::det_eval_phi(m, p, sig) - v), 1e-9 * (1 + std::abs(v)));
        std::vector<double> t(r);
        for (auto& x : t) x = ut(rng);
        Complex w = psi(t);
        EXPECT_LT(std::abs(mcj::det_eval_psi(m, p, t) - w), 1e-9 * (1 + std::abs(w)));
      }
    }
  }
}

TEST(cauchy_kernel, examples) {
  Complex beta(2.3, 0.4);
  EXPECT_LT(std::abs(mcj::cauchy_kernel_det({0.3}, {-0.5}, beta) - std::pow(1.0 + 0.15, -beta)), 1e-14);
  EXPECT_LT(std::abs(mcj::cauchy_kernel_det({0.3, 0.1}, {0.0, 0.0}, beta) - 1.0), 1e-14);
  // series in the spherical basis: sum d_m (beta)_m/(n/r)_m Phi_m(w) Phi_m(z)
  std::vector<Complex> w{0.3, 0.1}, z{0.2, -0.25};
  ParamSet p(2, 2);
  Complex series = 0;
  for (const auto& m : mcj::enumerate_partitions(20, 2)) {
    auto phi = mcj::spherical(m, p);
    series += mcj::dim_dm(m, p).get_d() * mcj::gen_pochhammer(Complex(3.0), m, p) /
              mcj::gen_pochhammer(p.n_over_r(), m, p.d).get_d() * mcj::evaluate(phi, w) *
              mcj::evaluate(phi, z);
  }
  EXPECT_LT(std::abs(mcj::cauchy_kernel_det(w, z, 3.0) - series), 1e-9);
}

TEST(genfun, phi) {
  EXPECT_LT(mcj::genfun_residual_phi(ParamSet(2, 2, 3.0, 0.2), {0.0, 0.0},
                                     {std::exp(0.5 * I), std::exp(2.0 * I)}, 3), 1e-14);
  EXPECT_LT(mcj::genfun_residual_phi(ParamSet(1, 2, 2.0, 0.5), {0.2}, {std::exp(0.9 * I)}, 30), 1e-10);
  EXPECT_LT(mcj::genfun_residual_phi(ParamSet(2, 2, 3.0, 0.2), {0.15, 0.05},
                                     {std::exp(0.7 * I), std::exp(-2.2 * I)}, 10), 1e-6);
  EXPECT_THROW(mcj::genfun_residual_phi(ParamSet(1, 2, 2.0), {0.4}, {1.0}, 5), mcj::parameter_error);
  EXPECT_THROW(mcj::genfun_residual_phi(ParamSet(2, 1, 2.0), {0.1, 0.0}, {1.0, I}, 5), mcj::parameter_error);
}

TEST(genfun, psi) {
  EXPECT_LT(mcj::genfun_residual_psi(ParamSet(1, 2, 2.0, 0.1), {0.0}, {0.4}, 2), 1e-14);
  EXPECT_LT(mcj::genfun_residual_psi(ParamSet(1, 2, 1.5, 0.0), {0.25}, {0.8}, 30), 1e-10);
  EXPECT_LT(mcj::genfun_residual_psi(ParamSet(2, 2, 3.0, 0.0), {0.1, 0.05}, {0.3, -0.2}, 10), 1e-6);
  EXPECT_LT(mcj::genfun_residual_psi(ParamSet(2, 2, 3.0, 0.45), {0.1, -0.12}, {0.9, -0.4}, 10), 1e-6);
}

TEST(genfun, laguerre) {
  EXPECT_LT(mcj::genfun_residual_laguerre(ParamSet(1, 2, 2.5, 0.0), {0.25}, {0.7}, 20), 1e-8);
  EXPECT_LT(mcj::genfun_residual_laguerre(ParamSet(1, 2, 1.2, 0.0), {-0.25}, {1.9}, 20), 1e-8);
  EXPECT_LT(mcj::genfun_residual_laguerre(ParamSet(2, 2, 3.0, 0.0), {0.2, -0.1}, {0.5, 1.3}, 20), 1e-8);
}

TEST(operators, ode) {
  EXPECT_EQ(mcj::ode_residual_onevar(0, 2.0, 0.3), 0.0);
  EXPECT_LT(mcj::ode_residual_onevar(1, 2.0, 0.7), 1e-13);
  EXPECT_LT(mcj::ode_residual_onevar(6, 1.3, -0.4), 1e-12);
  for (int m = 0; m <= 10; m++) {
    for (double a : {1.3, 2.0, 3.5}) {
      for (double nu : {0.0, 0.7, -0.7}) EXPECT_LT(mcj::ode_residual_onevar(m, a, nu), 1e-12);
    }
  }
}

TEST(operators, rank1) {
  auto r0 = mcj::rank1_operator_residuals(0, 2.0, 0.3);
  EXPECT_EQ(r0.laguerre, 0.0);
  EXPECT_LT(r0.psi, 1e-12);
  auto r4 = mcj::rank1_operator_residuals(4, 1.5, 0.0);
  EXPECT_LT(r4.laguerre, 1e-11);
  EXPECT_LT(r4.psi, 1e-11);
  for (int m = 0; m <= 8; m++) {
    for (double a : {1.3, 2.0, 3.5}) {
      for (double nu : {0.0, 0.7, -0.7}) {
        auto res = mcj::rank1_operator_residuals(m, a, nu);
        EXPECT_LT(res.laguerre, 1e-11);
        EXPECT_LT(res.psi, 1e-11);
      }
    }
  }
}

TEST(operators, euler) {
  EXPECT_EQ(mcj::euler_residual({}, ParamSet(2, 2)), 0);
  EXPECT_EQ(mcj::euler_residual({2, 1}, ParamSet(2, 2)), 0);
  EXPECT_EQ(mcj::euler_residual({3, 1, 1}, ParamSet(3, Rational(1, 2))), 0);
}

TEST(meixner_pollaczek, examples_and_relation) {
  EXPECT_EQ(mcj::mp1_eval(0, 1.3, Complex(0.2, 0.1), 0.7), Complex(1.0));
  EXPECT_LT(std::abs(mcj::mp1_eval(1, 1.0, 0.0, pi / 2)), 1e-15);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, 2 * pi), al(0.5, 4.0), nu(-1.0, 1.0);
  for (int trial = 0; trial < 10; trial++) {
    double t = th(rng), a = al(rng), n = nu(rng);
    for (int m = 0; m <= 6; m++) {
      Complex lhs = mcj::cj1_eval(m, a, n, std::exp(I * t));
      Complex rhs = std::exp(I * (m * t / 2)) * mcj::mp1_eval(m, a / 2, Complex(n, -0.5), -t / 2);
      EXPECT_LT(std::abs(lhs - rhs), 1e-12 * (1 + std::abs(lhs)));
    }
  }
}
