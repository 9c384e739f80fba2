#include <mcj/mcj.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include <mcj/jack.hpp>

namespace mcj {

namespace {

bool is_two(const Rational& d) { return d == 2; }

void require_d2(const ParamSet& p, const char* who) {
  if (!is_two(p.d)) throw parameter_error(std::string(who) + " requires d = 2");
}

template <class T>
T vandermonde(const std::vector<T>& x) {
  T v = T(1.0);
  for (std::size_t a = 0; a < x.size(); a++) {
    for (std::size_t b = a + 1; b < x.size(); b++) v *= x[a] - x[b];
  }
  return v;
}

template <class T>
bool has_coincidence(const std::vector<T>& x) {
  double scale = 1.0;
  for (const auto& v : x) scale = std::max(scale, std::abs(v));
  for (std::size_t a = 0; a < x.size(); a++) {
    for (std::size_t b = a + 1; b < x.size(); b++) {
      if (std::abs(x[a] - x[b]) <= 1e-13 * scale) return true;
    }
  }
  return false;
}

Complex complex_det(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0) return 1.0;
  return a.determinant();
}

Rational delta_factorial(int r) {
  Rational out = 1;
  for (int j = 1; j < r; j++) {
    for (int i = 2; i <= j; i++) out *= i;
  }
  return out;
}

void check_bound(const std::vector<Complex>& z) {
  for (const auto& v : z) {
    if (!(std::abs(v) < 1.0 / 3.0)) {
      throw parameter_error("generating functions require max |z_j| < 1/3");
    }
  }
}

Complex pow_principal(Complex base, Complex exponent) { return std::exp(exponent * std::log(base)); }

}  // namespace

std::vector<std::pair<Partition, Complex>> expansion_coefficients(const Partition& m,
                                                                   const ParamSet& p,
                                                                   bool include_beta) {
  Partition mp = m.padded(p.r);
  Complex alpha(p.alpha, 0.0);
  Complex beta = p.beta();
  Complex lead = dim_dm(mp, p).get_d() * gen_pochhammer(alpha, mp, p) /
                 gen_pochhammer(p.n_over_r(), mp, p.d).get_d();
  std::vector<std::pair<Partition, Complex>> out;
  for (const auto& [k, b] : gen_binom_row(mp, p)) {
    Complex ak = gen_pochhammer(alpha, k, p);
    if (ak == Complex(0.0)) {
      throw parameter_error("(alpha)_k vanishes for k = " + k.to_string());
    }
    Complex c = lead * b.get_d() / ak;
    if (include_beta) c *= gen_pochhammer(beta, k, p);
    if (k.weight() % 2 == 1) c = -c;
    out.emplace_back(k, c);
  }
  return out;
}

MCJPolynomial mcj_build(const Partition& m, const ParamSet& p) {
  CSymPoly body(p.r);
  for (const auto& [k, c] : expansion_coefficients(m, p)) {
    SymPoly shifted = affine_substitute(spherical(k, p), Rational(1), Rational(-1));
    body += promote(shifted) * c;
  }
  return {m.padded(p.r), p, std::move(body)};
}

SymPoly mcj_build_exact(const Partition& m, int r, const Rational& d, const Rational& alpha) {
  ParamSet p(r, d, alpha.get_d(), 0.0);
  Partition mp = m.padded(r);
  Rational nr = p.n_over_r();
  Rational beta = (alpha + nr) / 2;
  Rational lead = dim_dm(mp, p) * gen_pochhammer(alpha, mp, d) / gen_pochhammer(nr, mp, d);
  SymPoly body(r);
  for (const auto& [k, b] : gen_binom_row(mp, p)) {
    Rational ak = gen_pochhammer(alpha, k, d);
    if (sgn(ak) == 0) throw parameter_error("(alpha)_k vanishes for k = " + k.to_string());
    Rational c = lead * b * gen_pochhammer(beta, k, d) / ak;
    if (k.weight() % 2 == 1) c = -c;
    body += affine_substitute(spherical(k, r, d), Rational(1), Rational(-1)) * c;
  }
  return body;
}

Complex cj1_eval(int m, double alpha, double nu, Complex sigma) {
  if (m < 0) throw std::invalid_argument("cj1_eval: m must be nonnegative");
  Complex beta(0.5 * (alpha + 1.0), nu);
  Complex w = 1.0 - sigma;
  Complex sum = 0.0;
  Complex wk = 1.0;
  for (int k = 0; k <= m; k++) {
    double ak = std::real(rising(Complex(alpha), k));
    if (ak == 0.0) throw parameter_error("cj1_eval: (alpha)_k vanishes");
    Complex term = binomial(m, k).get_d() * rising(beta, k) / ak * wk;
    sum += k % 2 == 0 ? term : -term;
    wk *= w;
  }
  double lead = std::real(rising(Complex(alpha), m));
  for (int j = 2; j <= m; j++) lead /= j;
  return lead * sum;
}

Complex LaguerrePolynomial::psi(const std::vector<double>& u) const {
  std::vector<Complex> u2(u.size());
  double tr = 0.0;
  for (std::size_t j = 0; j < u.size(); j++) {
    u2[j] = 2.0 * u[j];
    tr += u[j];
  }
  return std::exp(-tr) * evaluate(body, u2);
}

LaguerrePolynomial laguerre_build(const Partition& m, const ParamSet& p) {
  CSymPoly body(p.r);
  for (const auto& [k, c] : expansion_coefficients(m, p, false)) {
    body += promote(spherical(k, p)) * c;
  }
  return {m.padded(p.r), p, std::move(body)};
}

Complex PsiFunction::reduced(const std::vector<double>& t) const {
  if (static_cast<int>(t.size()) != params.r) throw std::invalid_argument("t must have length r");
  std::vector<Complex> w(t.size());
  for (std::size_t j = 0; j < t.size(); j++) w[j] = 2.0 / Complex(1.0, -t[j]);
  Complex sum = 0.0;
  for (const auto& [k, c] : terms) sum += c * evaluate(spherical(k, params), w);
  return sum;
}

Complex PsiFunction::operator()(const std::vector<double>& t) const {
  Complex pre = 1.0;
  for (double tj : t) pre *= pow_principal(Complex(1.0, -tj), -beta);
  return pre * reduced(t);
}

PsiFunction psi_build(const Partition& m, const ParamSet& p) {
  return {m.padded(p.r), p, p.beta(), expansion_coefficients(m, p)};
}

Complex psi_eval(const Partition& m, const ParamSet& p, const std::vector<double>& t) {
  return psi_build(m, p)(t);
}

Rational schur_at_ones(const Partition& m, int r) {
  Partition mp = m.padded(r);
  Rational out = 1;
  for (int a = 0; a < r; a++) {
    for (int b = a + 1; b < r; b++) out *= Rational(mp[a] - mp[b] + b - a, b - a);
  }
  return out;
}

namespace {

// s_m(1) delta! prod_j 1/(beta')_{j-1}, beta' = (alpha - r)/2 + i nu + 1.
Complex det_prefactor(const Partition& mp, const ParamSet& p) {
  Complex beta1(0.5 * (p.alpha - p.r) + 1.0, p.nu);
  Complex pre = schur_at_ones(mp, p.r).get_d() * delta_factorial(p.r).get_d();
  for (int j = 1; j <= p.r; j++) pre /= rising(beta1, j - 1);
  return pre;
}

}  // namespace

Complex det_eval_phi(const Partition& m, const ParamSet& p, const std::vector<Complex>& sigma) {
  require_d2(p, "det_eval_phi");
  int r = p.r;
  if (static_cast<int>(sigma.size()) != r) throw std::invalid_argument("sigma must have length r");
  if (has_coincidence(sigma)) throw std::domain_error("det_eval_phi: Vandermonde vanishes");
  Partition mp = m.padded(r);
  double a1 = p.alpha - r + 1;
  Eigen::MatrixXcd a(r, r);
  for (int i = 0; i < r; i++) {
    for (int j = 0; j < r; j++) a(i, j) = cj1_eval(mp[i] + r - 1 - i, a1, p.nu, sigma[j]);
  }
  return det_prefactor(mp, p) * complex_det(a) / vandermonde(sigma);
}

Complex det_eval_psi(const Partition& m, const ParamSet& p, const std::vector<double>& t) {
  require_d2(p, "det_eval_psi");
  int r = p.r;
  if (static_cast<int>(t.size()) != r) throw std::invalid_argument("t must have length r");
  if (has_coincidence(t)) throw std::domain_error("det_eval_psi: Vandermonde vanishes");
  Partition mp = m.padded(r);
  ParamSet one(1, 2, p.alpha - r + 1, p.nu);
  Eigen::MatrixXcd a(r, r);
  for (int i = 0; i < r; i++) {
    PsiFunction f = psi_build(Partition{mp[i] + r - 1 - i}, one);
    for (int j = 0; j < r; j++) a(i, j) = f({t[j]});
  }
  Complex pre = det_prefactor(mp, p) / std::pow(Complex(0.0, -2.0), r * (r - 1) / 2);
  return pre * complex_det(a) / vandermonde(t);
}

Complex schur_value(const Partition& m, const std::vector<Complex>& x) {
  int r = static_cast<int>(x.size());
  Partition mp = m.padded(r);
  int l = mp.length();
  if (l == 0) return 1.0;
  int top = mp[0] + l;
  std::vector<Complex> h(top + 1, 0.0);
  h[0] = 1.0;
  for (const auto& xj : x) {
    for (int k = 1; k <= top; k++) h[k] += xj * h[k - 1];
  }
  Eigen::MatrixXcd a(l, l);
  for (int i = 0; i < l; i++) {
    for (int j = 0; j < l; j++) {
      int k = mp[i] - i + j;
      a(i, j) = k < 0 ? Complex(0.0) : h[k];
    }
  }
  return complex_det(a);
}

Complex cauchy_kernel_series(const std::vector<Complex>& w, const std::vector<Complex>& z,
                             Complex beta, int max_weight) {
  int r = static_cast<int>(w.size());
  ParamSet p(r, 2);
  Complex sum = 0.0;
  for (const auto& m : enumerate_partitions(max_weight, r)) {
    Complex c = gen_pochhammer(beta, m, p) / gen_pochhammer(Rational(r), m, 2).get_d();
    sum += c * schur_value(m, w) * schur_value(m, z);
  }
  return sum;
}

Complex cauchy_kernel_det(const std::vector<Complex>& w, const std::vector<Complex>& z,
                          Complex beta, int fallback_terms) {
  if (w.size() != z.size() || w.empty()) throw std::invalid_argument("cauchy kernel: shape");
  int r = static_cast<int>(w.size());
  if (has_coincidence(w) || has_coincidence(z)) {
    return cauchy_kernel_series(w, z, beta, fallback_terms);
  }
  Complex b1 = beta - static_cast<double>(r - 1);
  Eigen::MatrixXcd a(r, r);
  for (int i = 0; i < r; i++) {
    for (int j = 0; j < r; j++) {
      Complex base = 1.0 - w[i] * z[j];
      if (base == Complex(0.0)) throw std::domain_error("cauchy kernel: branch pole");
      a(i, j) = pow_principal(base, -b1);
    }
  }
  Complex pre = delta_factorial(r).get_d();
  for (int j = 1; j <= r; j++) pre /= rising(b1, j - 1);
  return pre * complex_det(a) / (vandermonde(w) * vandermonde(z));
}

Complex exp_kernel_det(const std::vector<Complex>& x, const std::vector<Complex>& y,
                       int fallback_terms) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("exp kernel: shape");
  int r = static_cast<int>(x.size());
  if (has_coincidence(x) || has_coincidence(y)) {
    Complex sum = 0.0;
    for (const auto& m : enumerate_partitions(fallback_terms, r)) {
      sum += schur_value(m, x) * schur_value(m, y) /
             gen_pochhammer(Rational(r), m, 2).get_d();
    }
    return sum;
  }
  Eigen::MatrixXcd a(r, r);
  for (int i = 0; i < r; i++) {
    for (int j = 0; j < r; j++) a(i, j) = std::exp(x[i] * y[j]);
  }
  return delta_factorial(r).get_d() * complex_det(a) / (vandermonde(x) * vandermonde(y));
}

double genfun_residual_phi(const ParamSet& p, const std::vector<Complex>& z,
                           const std::vector<Complex>& sigma, int N) {
  if (static_cast<int>(z.size()) != p.r || static_cast<int>(sigma.size()) != p.r) {
    throw std::invalid_argument("genfun: z and sigma must have length r");
  }
  if (p.r != 1 && !is_two(p.d)) throw parameter_error("genfun: needs r = 1 or d = 2");
  check_bound(z);
  Complex lhs = 0.0;
  for (const auto& m : enumerate_partitions(N, p.r)) {
    lhs += mcj_build(m, p)(sigma) * evaluate(spherical(m, p), z);
  }
  Complex beta = p.beta();
  Complex rhs;
  if (p.r == 1) {
    rhs = pow_principal(1.0 - z[0], beta - p.alpha) * pow_principal(1.0 - sigma[0] * z[0], -beta);
  } else {
    std::vector<Complex> w(p.r), zz(p.r);
    rhs = 1.0;
    for (int j = 0; j < p.r; j++) {
      w[j] = 1.0 - sigma[j];
      zz[j] = -z[j] / (1.0 - z[j]);
      rhs *= pow_principal(1.0 - z[j], -p.alpha);
    }
    rhs *= cauchy_kernel_det(w, zz, beta);
  }
  return std::abs(lhs - rhs);
}

double genfun_residual_psi(const ParamSet& p, const std::vector<Complex>& z,
                           const std::vector<double>& t, int N) {
  if (static_cast<int>(z.size()) != p.r || static_cast<int>(t.size()) != p.r) {
    throw std::invalid_argument("genfun: z and t must have length r");
  }
  if (p.r != 1 && !is_two(p.d)) throw parameter_error("genfun: needs r = 1 or d = 2");
  check_bound(z);
  Complex lhs = 0.0;
  for (const auto& m : enumerate_partitions(N, p.r)) {
    lhs += psi_eval(m, p, t) * evaluate(spherical(m, p), z);
  }
  Complex beta = p.beta();
  Complex rhs;
  if (p.r == 1) {
    Complex base = (1.0 + z[0]) / (1.0 - z[0]) - Complex(0.0, t[0]);
    rhs = pow_principal(1.0 - z[0], -p.alpha) * pow_principal(base, -beta);
  } else {
    std::vector<Complex> w(p.r), it(p.r);
    rhs = 1.0;
    for (int j = 0; j < p.r; j++) {
      w[j] = (1.0 - z[j]) / (1.0 + z[j]);
      it[j] = Complex(0.0, t[j]);
      rhs *= pow_principal(1.0 - z[j], -p.alpha) * pow_principal(w[j], beta);
    }
    rhs *= cauchy_kernel_det(w, it, beta);
  }
  return std::abs(lhs - rhs);
}

double genfun_residual_laguerre(const ParamSet& p, const std::vector<Complex>& z,
                                const std::vector<double>& u, int N) {
  if (static_cast<int>(z.size()) != p.r || static_cast<int>(u.size()) != p.r) {
    throw std::invalid_argument("genfun: z and u must have length r");
  }
  if (p.r != 1 && !is_two(p.d)) throw parameter_error("genfun: needs r = 1 or d = 2");
  std::vector<Complex> uc(u.begin(), u.end());
  Complex lhs = 0.0;
  for (const auto& m : enumerate_partitions(N, p.r)) {
    lhs += laguerre_build(m, p)(uc) * evaluate(spherical(m, p), z);
  }
  Complex rhs = 1.0;
  std::vector<Complex> y(p.r);
  for (int j = 0; j < p.r; j++) {
    rhs *= pow_principal(1.0 - z[j], -p.alpha);
    y[j] = -z[j] / (1.0 - z[j]);
  }
  if (p.r == 1) {
    rhs *= std::exp(uc[0] * y[0]);
  } else {
    rhs *= exp_kernel_det(uc, y);
  }
  return std::abs(lhs - rhs);
}

}  // namespace mcj
