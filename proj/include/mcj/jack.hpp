#pragma once

#include <mcj/params.hpp>
#include <mcj/sympoly.hpp>

namespace mcj {

// Stanley's operator (a/2) sum x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i, exact.
SymPoly laplace_beltrami(const SymPoly& p, const Rational& a);

// Monic Jack polynomial P_m^{(2/d)} in r variables (cached).
SymPoly jack_mono(const Partition& m, int r, const Rational& d);

// Jacobi-Trudi determinant over complete homogeneous polynomials.
SymPoly schur(const Partition& m, int r);

// Phi_m = P_m / P_m(1,...,1) (cached).
SymPoly spherical(const Partition& m, int r, const Rational& d);
inline SymPoly spherical(const Partition& m, const ParamSet& p) { return spherical(m, p.r, p.d); }

// sum_j x_j d_j p - weight * p, computed on plain monomials.
SymPoly euler_defect(const SymPoly& p, int weight);

void clear_jack_cache();

}  // namespace mcj
