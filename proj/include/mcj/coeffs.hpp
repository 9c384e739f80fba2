#pragma once

#include <map>
#include <vector>

#include <mcj/params.hpp>
#include <mcj/partition.hpp>
#include <mcj/sympoly.hpp>

namespace mcj {

// (s)_m = prod_j (s_j - (d/2)(j-1))_{m_j}; scalar s is broadcast.
Complex gen_pochhammer(const std::vector<Complex>& s, const Partition& m, const ParamSet& p);
Complex gen_pochhammer(Complex s, const Partition& m, const ParamSet& p);
Rational gen_pochhammer(const Rational& s, const Partition& m, const Rational& d);

// log Gamma_Omega(s) = ((n-r)/2) log 2pi + sum_j log Gamma(s_j - (d/2)(j-1)).
Complex gamma_omega_log(const std::vector<Complex>& s, const ParamSet& p);
Complex gamma_omega_log(Complex s, const ParamSet& p);

Rational dim_dm(const Partition& m, const ParamSet& p);

struct GammaPowerProduct {
  double gamma_product = 1.0;  // prod_j Gamma(d/2+1)/Gamma((d/2)j+1)
  Rational two_pi_power = 0;   // exponent of 2 pi
  double value() const;
};

GammaPowerProduct c0_tilde(const ParamSet& p);

// Coefficient of Phi_k in Phi_m(1 + x). Cached per (r, d, m).
Rational gen_binom(const Partition& m, const Partition& k, const ParamSet& p);
const std::map<Partition, Rational, GradedRevLex>& gen_binom_row(const Partition& m,
                                                                  const ParamSet& p);

// Expansion of a symmetric polynomial in the spherical basis.
std::map<Partition, Rational, GradedRevLex> to_spherical_basis(const SymPoly& q, const Rational& d);

// gamma_k(x - rho) = binom(x, k) (n/r)_k / d_k.
Rational gamma_k_partition(const Partition& k, const Partition& x, const ParamSet& p);

// Gamma-product form, evaluated in floating point.
double jack_at_ones(const Partition& m, const ParamSet& p);
// Same product reduced to rising factorials.
Rational jack_at_ones_exact(const Partition& m, const ParamSet& p);

double jack_norm_torus(const Partition& m, const ParamSet& p);

// d_m Gamma_Omega(alpha+m) / (n/r)_m / |Gamma_Omega(beta)|^2.
double expected_norm(const Partition& m, const ParamSet& p);

// |LHS - sum_{|x| <= N} d_x c_x / (n/r)_x gamma_k(x - rho) Phi_x(w)| for the two spherical Taylor
// expansions: c_x = (alpha)_x with LHS (alpha)_k prod (1-w_j)^{-alpha} Phi_k(w/(1-w)), or
// c_x = 1 with LHS e^{sum w} Phi_k(w). Uses p.alpha (ignores nu).
enum class TaylorKind { shifted, exponential };
double spherical_taylor_residual(const Partition& k, const ParamSet& p, const std::vector<Complex>& w,
                                 int truncation, TaylorKind kind);

// Test hook: flips the sign of binomials with odd |m|-|k|.
enum class Fault { none, binom_sign };
void set_fault(Fault f);
Fault current_fault();
void clear_coeff_cache();

}  // namespace mcj
