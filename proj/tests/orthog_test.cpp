#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <mcj/coeffs.hpp>
#include <mcj/orthog.hpp>

using namespace mcj;
using std::numbers::pi;

TEST(quadrature, axis_rule_integrates_constant) {
  ParamSet p(1, Rational(2), 1.0, 0.0);
  auto rule = build_rule(20, RuleKind::gauss_gegenbauer, p);
  double sum = 0.0;
  for (auto [t, w] : rule.axis_nodes()) sum += w;
  EXPECT_NEAR(sum, 2.0 * pi, 1e-13);
}

TEST(quadrature, folded_sine_moment) {
  // int_0^{2pi} (2 sin(theta/2)) dtheta = 8
  ParamSet p(1, Rational(2), 2.0, 0.0);
  auto g = gram_matrix({Partition({0})}, p, build_rule(20, RuleKind::gauss_gegenbauer, p));
  EXPECT_NEAR(g(0, 0).real() * 2.0 * pi, 8.0, 1e-12);
  EXPECT_NEAR(g(0, 0).real(), 4.0 / pi, 1e-13);
  EXPECT_NEAR(g(0, 0).real(), expected_norm(Partition({0}), p), 1e-13);
}

TEST(quadrature, tanh_sinh_agrees) {
  ParamSet p(1, Rational(2), 1.7, 0.3);
  auto gg = gram_matrix({Partition({2})}, p, build_rule(40, RuleKind::gauss_gegenbauer, p));
  auto ts = gram_matrix({Partition({2})}, p, build_rule(200, RuleKind::tanh_sinh, p));
  EXPECT_NEAR(std::abs(gg(0, 0) - ts(0, 0)) / gg(0, 0).real(), 0.0, 1e-7);
}

TEST(weight, rejects_endpoints) {
  ParamSet p(2, Rational(2), 3.0, 0.0);
  EXPECT_THROW(weight_eval({0.0, 1.0}, p), std::domain_error);
  EXPECT_THROW(weight_eval({1.0, 2.0 * pi}, p), std::domain_error);
  EXPECT_THROW(weight_eval({1.0}, p), std::invalid_argument);
  // |e^{i0.5}-e^{i1.5}|^2 (2 sin .25)^1 (2 sin .75)^1
  double expect = std::pow(2.0 * std::sin(0.5), 2) * 2.0 * std::sin(0.25) * 2.0 * std::sin(0.75);
  EXPECT_NEAR(weight_eval({0.5, 1.5}, p), expect, 1e-14);
}

TEST(orthog, rank_one_orthonormal_at_alpha_one) {
  ParamSet p(1, Rational(2), 1.0, 0.0);
  auto rep = verify_orthogonality(p, 6, build_rule(40, RuleKind::gauss_gegenbauer, p), 1e-10, 1e-10);
  EXPECT_TRUE(rep.pass) << rep.off_diag_residual << " " << rep.diag_residual;
  for (double e : rep.expected) EXPECT_NEAR(e, 1.0, 1e-13);
}

TEST(orthog, rank_two_even_d) {
  ParamSet p(2, Rational(2), 2.5, 0.4);
  auto rep = verify_orthogonality(p, 3, build_rule(40, RuleKind::gauss_gegenbauer, p), 1e-10, 1e-10, 2);
  EXPECT_TRUE(rep.pass) << rep.off_diag_residual << " " << rep.diag_residual;
  EXPECT_LT(rep.hermitian_defect, 1e-12);
  EXPECT_TRUE(rep.diagnostic_pass);
}

TEST(orthog, rank_two_odd_d_subdivided) {
  ParamSet p(2, Rational(1), 1.8, -0.2);
  auto rule = build_rule(60, RuleKind::gauss_gegenbauer, p);
  EXPECT_TRUE(rule.subdivide);
  auto rep = verify_orthogonality(p, 2, rule, 1e-9, 1e-9, 2);
  EXPECT_TRUE(rep.pass) << rep.off_diag_residual << " " << rep.diag_residual;
}

TEST(orthog, critical_alpha) {
  ParamSet p(2, Rational(2), 2.0, 0.0);
  EXPECT_NEAR(expected_norm(Partition({0, 0}), p), 1.0 / (2.0 * pi), 1e-14);
  auto rep = verify_orthogonality(p, 3, build_rule(40, RuleKind::gauss_gegenbauer, p), 1e-10, 1e-10);
  EXPECT_TRUE(rep.pass);
}

TEST(orthog, nu_reflection) {
  // theta -> 2pi - theta conjugates phi and flips nu, so diagonal norms agree.
  ParamSet a(2, Rational(2), 2.3, 0.5), b(2, Rational(2), 2.3, -0.5);
  auto parts = enumerate_partitions(2, 2);
  auto ga = gram_matrix(parts, a, build_rule(40, RuleKind::gauss_gegenbauer, a));
  auto gb = gram_matrix(parts, b, build_rule(40, RuleKind::gauss_gegenbauer, b));
  for (int i = 0; i < ga.rows(); i++) EXPECT_NEAR(ga(i, i).real(), gb(i, i).real(), 1e-11);
}

TEST(orthog, deterministic_across_thread_counts) {
  ParamSet p(2, Rational(1), 1.6, 0.1);
  auto parts = enumerate_partitions(2, 2);
  auto rule = build_rule(30, RuleKind::gauss_gegenbauer, p);
  auto g1 = gram_matrix(parts, p, rule, 1);
  auto g4 = gram_matrix(parts, p, rule, 4);
  EXPECT_EQ((g1 - g4).cwiseAbs().maxCoeff(), 0.0);
}

TEST(orthog, rank_three) {
  ParamSet p(3, Rational(2), 3.5, 0.0);
  auto rep = verify_orthogonality(p, 2, build_rule(24, RuleKind::gauss_gegenbauer, p), 1e-9, 1e-9);
  EXPECT_TRUE(rep.pass) << rep.off_diag_residual << " " << rep.diag_residual;
}

TEST(orthog, jack_norm_on_torus) {
  // alpha = n/r, nu = 0 reduces the weight to |Vandermonde|^d; Jack polynomials are orthogonal there.
  ParamSet p(2, Rational(2), 2.0, 0.0);
  auto rule = build_rule(30, RuleKind::gauss_gegenbauer, p);
  double sum = 0.0;
  auto nodes = rule.axis_nodes();
  for (auto [t1, w1] : nodes) {
    for (auto [t2, w2] : nodes) {
      Complex z1 = std::polar(1.0, t1), z2 = std::polar(1.0, t2);
      double v = std::norm(z1 + z2) * std::norm(z1 - z2);
      sum += w1 * w2 * v;
    }
  }
  sum /= 4.0 * pi * pi * 2.0;  // normalized Haar, divided by r!
  double base = 0.0;
  for (auto [t1, w1] : nodes) {
    for (auto [t2, w2] : nodes) base += w1 * w2 * std::norm(std::polar(1.0, t1) - std::polar(1.0, t2));
  }
  base /= 4.0 * pi * pi * 2.0;
  EXPECT_NEAR(sum / base, jack_norm_torus(Partition({1, 0}), p), 1e-12);
}

TEST(orthog, classification) {
  EXPECT_TRUE(theorem_covered(ParamSet(1, Rational(7, 3), 2.0, 0.3)));
  EXPECT_TRUE(theorem_covered(ParamSet(2, Rational(3), 5.0, 0.3)));
  EXPECT_FALSE(theorem_covered(ParamSet(2, Rational(1, 2), 2.0, 0.3)));
  EXPECT_TRUE(theorem_covered(ParamSet(2, Rational(1, 2), 1.25, 0.0)));
  EXPECT_TRUE(theorem_covered(ParamSet(3, Rational(8), 20.0, 1.0)));
  EXPECT_FALSE(theorem_covered(ParamSet(3, Rational(3), 8.0, 1.0)));
}

TEST(orthog, rejects_rank_four) {
  ParamSet p(4, Rational(2), 5.0, 0.0);
  EXPECT_THROW(verify_orthogonality(p, 1, build_rule(8, RuleKind::gauss_gegenbauer, p), 1e-8, 1e-8),
               parameter_error);
}
