#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include <mcj/params.hpp>
#include <mcj/partition.hpp>
#include <mcj/quadrature.hpp>

namespace mcj {

// prod_j (2 sin(theta_j/2))^{alpha-n/r} e^{-nu(theta_j - pi)} prod_{p<q} |e^{i theta_p} - e^{i theta_q}|^d
double weight_eval(const std::vector<double>& theta, const ParamSet& p);

// Gram matrix G_ij = (c0/(2pi)^n) int phi_i conj(phi_j) w over the torus. threads = 0: hardware.
Eigen::MatrixXcd gram_matrix(const std::vector<Partition>& parts, const ParamSet& p,
                             const QuadratureRule& rule, int threads = 0);

Complex inner_product(const Partition& m, const Partition& n, const ParamSet& p,
                      const QuadratureRule& rule);

struct OrthReport {
  ParamSet params;
  int max_weight = 0;
  std::vector<Partition> partitions;
  Eigen::MatrixXcd gram;
  std::vector<double> expected;
  double off_diag_residual = 0.0;  // max |G_mn| / sqrt(N_m N_n)
  double diag_residual = 0.0;      // max |G_mm - N_m| / N_m
  double hermitian_defect = 0.0;
  double tol_off = 0.0;
  double tol_diag = 0.0;
  bool pass = false;

  RuleKind kind = RuleKind::gauss_gegenbauer;
  int points_per_axis = 0;
  double axis_exponent = 0.0;
  double pair_exponent = 0.0;
  bool subdivided = false;

  // Second resolution used for the convergence diagnostic.
  int coarse_points = 0;
  double resolution_delta = 0.0;  // max |G - G_coarse| / scale
  double residual_ratio = 0.0;    // fine residual / coarse residual
  bool diagnostic_pass = false;

  std::string classification;  // "oracle", "evidence" or empty
  double wall_seconds = 0.0;   // not serialized
};

OrthReport verify_orthogonality(const ParamSet& p, int max_weight, const QuadratureRule& rule,
                                double tol_off, double tol_diag, int threads = 0);

// Points where orthogonality is proven: r = 1, d in {1,2,4}, integer d at r = 2, d = 8 at r = 3,
// or alpha = n/r with nu = 0.
bool theorem_covered(const ParamSet& p);

struct SweepResult {
  std::vector<OrthReport> reports;
  std::vector<std::string> skipped;
};

SweepResult conjecture_sweep(const std::vector<Rational>& d_values,
                             const std::vector<double>& alpha_values,
                             const std::vector<double>& nu_values, int r, int max_weight,
                             int points_per_axis, RuleKind kind, double tol_off, double tol_diag,
                             int threads = 0);

int default_points(int r);

}  // namespace mcj
