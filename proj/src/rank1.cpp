#include <algorithm>
#include <cmath>
#include <map>

#include <mcj/gaussian.hpp>
#include <mcj/jack.hpp>
#include <mcj/mcj.hpp>

namespace mcj {

namespace {

using Poly = std::vector<GaussQ>;  // coefficients in ascending degree

Poly derivative(const Poly& p) {
  Poly out(p.size() > 1 ? p.size() - 1 : 1, GaussQ());
  for (std::size_t j = 1; j < p.size(); j++) out[j - 1] = p[j] * GaussQ(static_cast<int>(j));
  return out;
}

void add_shifted(Poly& acc, const Poly& p, const GaussQ& c, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t j = 0; j < p.size(); j++) acc[j + shift] += c * p[j];
}

double max_abs(const Poly& p) {
  double out = 0.0;
  for (const auto& c : p) out = std::max(out, c.abs());
  return out;
}

// phi_m^{(alpha,nu)} coefficients in sigma.
Poly cj1_coefficients(int m, const GaussQ& alpha, const GaussQ& beta) {
  Poly out(m + 1);
  GaussQ lead = rising(alpha, m);
  for (int j = 2; j <= m; j++) lead /= GaussQ(j);
  for (int k = 0; k <= m; k++) {
    GaussQ c = lead * GaussQ(binomial(m, k)) * rising(beta, k) / rising(alpha, k);
    if (k % 2 == 1) c = -c;
    // (1 - sigma)^k
    for (int j = 0; j <= k; j++) {
      GaussQ t = c * GaussQ(binomial(k, j));
      out[j] += j % 2 == 0 ? t : -t;
    }
  }
  return out;
}

}  // namespace

double ode_residual_onevar(int m, double alpha, double nu) {
  GaussQ a{Rational(alpha)};
  GaussQ inu{0, Rational(nu)};
  GaussQ beta = (a + GaussQ(1)) / GaussQ(2) + inu;
  Poly phi = cj1_coefficients(m, a, beta);
  Poly d1 = derivative(phi);
  Poly d2 = derivative(d1);
  Poly out;
  // sigma (1 - sigma) phi''
  add_shifted(out, d2, GaussQ(1), 1);
  add_shifted(out, d2, GaussQ(-1), 2);
  // {(-m + 3/2 + i nu)(1 - sigma) - (alpha/2)(1 + sigma)} phi'
  GaussQ c1 = GaussQ(Rational(-m) + Rational(3, 2)) + inu;
  GaussQ half_a = a / GaussQ(2);
  add_shifted(out, d1, c1 - half_a, 0);
  add_shifted(out, d1, -c1 - half_a, 1);
  // m beta phi
  add_shifted(out, phi, GaussQ(m) * beta, 0);
  return max_abs(out);
}

namespace {

// Finite span sum_j c_j (1 - i t)^{-(base + j)}.
struct PowerSpan {
  GaussQ base;
  std::map<int, GaussQ> c;

  GaussQ gamma(int j) const { return base + GaussQ(j); }

  void add(int j, const GaussQ& v) {
    c[j] += v;
    if (c[j].is_zero()) c.erase(j);
  }
  PowerSpan& operator+=(const PowerSpan& o) {
    for (const auto& [j, v] : o.c) add(j, v);
    return *this;
  }
  PowerSpan scaled(const GaussQ& s) const {
    PowerSpan out{base, {}};
    for (const auto& [j, v] : c) out.add(j, v * s);
    return out;
  }
  // d/dt (1 - i t)^{-g} = i g (1 - i t)^{-g-1}
  PowerSpan dt() const {
    PowerSpan out{base, {}};
    for (const auto& [j, v] : c) out.add(j + 1, v * GaussQ::i() * gamma(j));
    return out;
  }
  // antiderivative (1 - i t)^{-g} -> (1 - i t)^{-g+1} / (i (g - 1))
  PowerSpan dt_inverse() const {
    PowerSpan out{base, {}};
    for (const auto& [j, v] : c) {
      GaussQ den = GaussQ::i() * (gamma(j) - GaussQ(1));
      if (den.is_zero()) throw std::domain_error("antiderivative exponent gamma = 1");
      out.add(j - 1, v / den);
    }
    return out;
  }
  // t = i((1 - i t) - 1)
  PowerSpan times_t() const {
    PowerSpan out{base, {}};
    for (const auto& [j, v] : c) {
      out.add(j - 1, v * GaussQ::i());
      out.add(j, -(v * GaussQ::i()));
    }
    return out;
  }
  // 1 + t^2 = (1 - i t)(1 + i t) = 2(1 - i t) - (1 - i t)^2
  PowerSpan times_one_plus_t2() const {
    PowerSpan out{base, {}};
    for (const auto& [j, v] : c) {
      out.add(j - 1, v * GaussQ(2));
      out.add(j - 2, -v);
    }
    return out;
  }
  double max_abs() const {
    double out = 0.0;
    for (const auto& [j, v] : c) out = std::max(out, v.abs());
    return out;
  }
};

// e^{-u} p(u) with p a real-rational polynomial; D^(1) = -u d^2 - alpha d + u - alpha.
double laguerre_residual(int m, const Rational& alpha) {
  // p(u) = L_m^{(alpha-1)}(2u) = (alpha)_m/m! sum_k (-1)^k C(m,k) (2u)^k/(alpha)_k
  Poly p(m + 1);
  Rational lead = rising(alpha, m);
  for (int j = 2; j <= m; j++) lead /= j;
  for (int k = 0; k <= m; k++) {
    Rational c = lead * binomial(m, k) / rising(alpha, k);
    for (int i = 0; i < k; i++) c *= 2;
    p[k] = GaussQ(k % 2 == 0 ? c : Rational(-c));
  }
  // derivative on the module: (e^{-u} q)' = e^{-u}(q' - q)
  auto module_dt = [](const Poly& q) {
    Poly out = derivative(q);
    out.resize(std::max(out.size(), q.size()));
    for (std::size_t j = 0; j < q.size(); j++) out[j] -= q[j];
    return out;
  };
  Poly f1 = module_dt(p);
  Poly f2 = module_dt(f1);
  GaussQ a(alpha);
  Poly out;
  add_shifted(out, f2, GaussQ(-1), 1);
  add_shifted(out, f1, -a, 0);
  add_shifted(out, p, GaussQ(1), 1);
  add_shifted(out, p, -a - GaussQ(2 * m), 0);
  return max_abs(out);
}

}  // namespace

Rank1Residuals rank1_operator_residuals(int m, double alpha, double nu) {
  Rational a(alpha);
  Rank1Residuals out;
  out.laguerre = laguerre_residual(m, a);

  GaussQ ga(a);
  GaussQ inu{0, Rational(nu)};
  GaussQ beta = (ga + GaussQ(1)) / GaussQ(2) + inu;
  // Psi_m = (alpha)_m/m! sum_k (-1)^k C(m,k) (beta)_k/(alpha)_k 2^k (1 - i t)^{-beta-k}
  PowerSpan psi{beta, {}};
  GaussQ lead = rising(ga, m);
  for (int j = 2; j <= m; j++) lead /= GaussQ(j);
  for (int k = 0; k <= m; k++) {
    GaussQ c = lead * GaussQ(binomial(m, k)) * rising(beta, k) / rising(ga, k);
    for (int i = 0; i < k; i++) c *= GaussQ(2);
    psi.add(k, k % 2 == 0 ? c : -c);
  }
  // D^(2) = -i(1+t^2) d_t + (2 nu - i) t - alpha + i((alpha-1)^2/4 + nu^2) d_t^{-1}
  GaussQ i = GaussQ::i();
  GaussQ am1 = ga - GaussQ(1);
  GaussQ k2 = am1 * am1 / GaussQ(4) + GaussQ(Rational(nu) * Rational(nu));
  PowerSpan res = psi.dt().times_one_plus_t2().scaled(-i);
  res += psi.times_t().scaled(GaussQ(2 * Rational(nu)) - i);
  res += psi.scaled(-ga - GaussQ(2 * m));
  res += psi.dt_inverse().scaled(i * k2);
  out.psi = res.max_abs();
  return out;
}

Rational euler_residual(const Partition& m, const ParamSet& p) {
  SymPoly defect = euler_defect(spherical(m, p), m.weight());
  Rational out = 0;
  for (const auto& [k, c] : defect.terms()) out = std::max<Rational>(out, abs(c));
  return out;
}

Complex mp1_eval(int m, double lambda, Complex s, double phi_angle) {
  Complex two_l(2.0 * lambda, 0.0);
  Complex ls = lambda + Complex(0.0, 1.0) * s;
  Complex w = 1.0 - std::exp(Complex(0.0, -2.0 * phi_angle));
  Complex sum = 0.0;
  Complex wk = 1.0;
  for (int k = 0; k <= m; k++) {
    Complex term = binomial(m, k).get_d() * rising(ls, k) / rising(two_l, k) * wk;
    sum += k % 2 == 0 ? term : -term;
    wk *= w;
  }
  Complex lead = rising(two_l, m);
  for (int j = 2; j <= m; j++) lead /= static_cast<double>(j);
  return std::exp(Complex(0.0, m * phi_angle)) * lead * sum;
}

}  // namespace mcj
