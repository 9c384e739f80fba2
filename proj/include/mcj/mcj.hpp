#pragma once

#include <utility>
#include <vector>

#include <mcj/coeffs.hpp>
#include <mcj/params.hpp>
#include <mcj/sympoly.hpp>

namespace mcj {

struct MCJPolynomial {
  Partition m;
  ParamSet params;
  CSymPoly body;

  Complex operator()(const std::vector<Complex>& sigma) const { return evaluate(body, sigma); }
};

struct LaguerrePolynomial {
  Partition m;
  ParamSet params;
  CSymPoly body;  // L_m^{(alpha - n/r)}(u)

  Complex operator()(const std::vector<Complex>& u) const { return evaluate(body, u); }
  // psi_m(u) = exp(-tr u) L_m(2u)
  Complex psi(const std::vector<double>& u) const;
};

// Psi_m(t) = prod_j (1 - i t_j)^{-beta} * sum_k c_k Phi_k(2/(1 - i t)).
struct PsiFunction {
  Partition m;
  ParamSet params;
  Complex beta;
  std::vector<std::pair<Partition, Complex>> terms;

  Complex reduced(const std::vector<double>& t) const;
  Complex operator()(const std::vector<double>& t) const;
};

// c_k = d_m (alpha)_m/(n/r)_m (-1)^{|k|} binom(m,k) (beta)_k/(alpha)_k, k ⊂ m.
// With include_beta = false the (beta)_k factor is dropped (Laguerre).
std::vector<std::pair<Partition, Complex>> expansion_coefficients(const Partition& m,
                                                                   const ParamSet& p,
                                                                   bool include_beta = true);

MCJPolynomial mcj_build(const Partition& m, const ParamSet& p);

// nu = 0, rational alpha.
SymPoly mcj_build_exact(const Partition& m, int r, const Rational& d, const Rational& alpha);

Complex cj1_eval(int m, double alpha, double nu, Complex sigma);

LaguerrePolynomial laguerre_build(const Partition& m, const ParamSet& p);

PsiFunction psi_build(const Partition& m, const ParamSet& p);
Complex psi_eval(const Partition& m, const ParamSet& p, const std::vector<double>& t);

// s_m(1,...,1) = prod_{p<q} (m_p - m_q + q - p)/(q - p).
Rational schur_at_ones(const Partition& m, int r);

Complex det_eval_phi(const Partition& m, const ParamSet& p, const std::vector<Complex>& sigma);
Complex det_eval_psi(const Partition& m, const ParamSet& p, const std::vector<double>& t);

// d = 2 Cauchy kernel; falls back to the truncated series when a Vandermonde vanishes.
Complex cauchy_kernel_det(const std::vector<Complex>& w, const std::vector<Complex>& z,
                          Complex beta, int fallback_terms = 40);
Complex cauchy_kernel_series(const std::vector<Complex>& w, const std::vector<Complex>& z,
                             Complex beta, int max_weight);

// delta! det(exp(x_p y_q)) / (V(x) V(y)), d = 2.
Complex exp_kernel_det(const std::vector<Complex>& x, const std::vector<Complex>& y,
                       int fallback_terms = 40);

// Schur polynomial value via Jacobi-Trudi on complete homogeneous values.
Complex schur_value(const Partition& m, const std::vector<Complex>& x);

double genfun_residual_phi(const ParamSet& p, const std::vector<Complex>& z,
                           const std::vector<Complex>& sigma, int N);
double genfun_residual_psi(const ParamSet& p, const std::vector<Complex>& z,
                           const std::vector<double>& t, int N);
double genfun_residual_laguerre(const ParamSet& p, const std::vector<Complex>& z,
                                const std::vector<double>& u, int N);

double ode_residual_onevar(int m, double alpha, double nu);

struct Rank1Residuals {
  double laguerre = 0.0;  // D^(1) psi_m - 2m psi_m
  double psi = 0.0;       // D^(2) Psi_m - 2m Psi_m
};
Rank1Residuals rank1_operator_residuals(int m, double alpha, double nu);

Rational euler_residual(const Partition& m, const ParamSet& p);

Complex mp1_eval(int m, double lambda, Complex s, double phi_angle);

}  // namespace mcj
