#include <mcj/coeffs.hpp>

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>

#include <mcj/jack.hpp>
#include <mcj/special.hpp>

namespace mcj {

namespace {

std::atomic<Fault> active_fault{Fault::none};

void check_length(const Partition& m, int r) {
  if (m.length() > r) throw std::invalid_argument("partition longer than r");
}

}  // namespace

Complex gen_pochhammer(const std::vector<Complex>& s, const Partition& m, const ParamSet& p) {
  check_length(m, p.r);
  if (static_cast<int>(s.size()) != p.r) throw std::invalid_argument("s must have length r");
  double hd = p.half_d().get_d();
  Complex out = 1.0;
  for (int j = 0; j < p.r; j++) out *= rising(s[j] - hd * j, m[j]);
  return out;
}

Complex gen_pochhammer(Complex s, const Partition& m, const ParamSet& p) {
  return gen_pochhammer(std::vector<Complex>(p.r, s), m, p);
}

Rational gen_pochhammer(const Rational& s, const Partition& m, const Rational& d) {
  Rational out = 1;
  Rational hd = d / 2;
  for (int j = 0; j < m.size(); j++) out *= rising(Rational(s - hd * j), m[j]);
  return out;
}

Complex gamma_omega_log(const std::vector<Complex>& s, const ParamSet& p) {
  if (static_cast<int>(s.size()) != p.r) throw std::invalid_argument("s must have length r");
  double hd = p.half_d().get_d();
  double e = Rational((p.n() - p.r) / 2).get_d();
  Complex out = e * std::log(2.0 * std::numbers::pi);
  for (int j = 0; j < p.r; j++) out += log_gamma(s[j] - hd * j);
  return out;
}

Complex gamma_omega_log(Complex s, const ParamSet& p) {
  return gamma_omega_log(std::vector<Complex>(p.r, s), p);
}

Rational dim_dm(const Partition& m, const ParamSet& p) {
  check_length(m, p.r);
  // The j-product prefactor normalizes d_0 = 1, so each (p,q) factor reduces to
  // (x+c)/c * (c+d/2)_x / (c-d/2+1)_x with x = m_p - m_q, c = (d/2)(q-p).
  Rational hd = p.half_d();
  Rational out = 1;
  for (int a = 0; a < p.r; a++) {
    for (int b = a + 1; b < p.r; b++) {
      int x = m[a] - m[b];
      Rational c = hd * (b - a);
      out *= (x + c) / c;
      out *= rising(Rational(c + hd), x) / rising(Rational(c - hd + 1), x);
    }
  }
  return out;
}

double GammaPowerProduct::value() const {
  return gamma_product * std::pow(2.0 * std::numbers::pi, two_pi_power.get_d());
}

GammaPowerProduct c0_tilde(const ParamSet& p) {
  double hd = p.half_d().get_d();
  double lg = 0.0;
  for (int j = 1; j <= p.r; j++) lg += log_gamma(hd + 1.0) - log_gamma(hd * j + 1.0);
  return {std::exp(lg), (p.n() - p.r) / 2};
}

namespace {

using Row = std::map<Partition, Rational, GradedRevLex>;

std::mutex binom_mutex;
std::map<std::tuple<int, std::string, std::string>, Row> binom_cache;

}  // namespace

std::map<Partition, Rational, GradedRevLex> to_spherical_basis(const SymPoly& q,
                                                               const Rational& d) {
  int r = q.arity();
  SymPoly rest = q;
  Row out;
  while (!rest.is_zero()) {
    // Lex-largest term of the top weight; Phi_k has no support above it.
    int w = rest.terms().rbegin()->first.weight();
    auto it = rest.terms().begin();
    while (it->first.weight() < w) ++it;
    Partition k = it->first;
    SymPoly phi = spherical(k, r, d);
    Rational coef = it->second / phi.coeff(k);
    out[k] = coef;
    rest -= phi * coef;
  }
  return out;
}

const std::map<Partition, Rational, GradedRevLex>& gen_binom_row(const Partition& m,
                                                                  const ParamSet& p) {
  check_length(m, p.r);
  auto key = std::make_tuple(p.r, p.d.get_str(), m.padded(p.r).to_string());
  {
    std::lock_guard lock(binom_mutex);
    auto it = binom_cache.find(key);
    if (it != binom_cache.end()) return it->second;
  }
  SymPoly shifted = affine_substitute(spherical(m, p), Rational(1), Rational(1));
  Row row = to_spherical_basis(shifted, p.d);
  if (active_fault.load() == Fault::binom_sign) {
    for (auto& [k, c] : row) {
      if ((m.weight() - k.weight()) % 2 == 1) c = -c;
    }
  }
  std::lock_guard lock(binom_mutex);
  return binom_cache.try_emplace(key, std::move(row)).first->second;
}

Rational gen_binom(const Partition& m, const Partition& k, const ParamSet& p) {
  check_length(k, p.r);
  if (k.weight() > m.weight()) return 0;
  const auto& row = gen_binom_row(m, p);
  auto it = row.find(k.padded(p.r));
  return it == row.end() ? Rational(0) : it->second;
}

Rational gamma_k_partition(const Partition& k, const Partition& x, const ParamSet& p) {
  return gen_binom(x, k, p) * gen_pochhammer(p.n_over_r(), k.padded(p.r), p.d) / dim_dm(k, p);
}

double jack_at_ones(const Partition& m, const ParamSet& p) {
  check_length(m, p.r);
  double hd = p.half_d().get_d();
  double lg = 0.0;
  for (int j = 1; j <= p.r; j++) lg += log_gamma(hd) - log_gamma(hd * j);
  for (int a = 0; a < p.r; a++) {
    for (int b = a + 1; b < p.r; b++) {
      double x = m[a] - m[b];
      int gap = b - a;
      lg += log_gamma(x + hd * (gap + 1)) - log_gamma(x + hd * gap);
    }
  }
  return std::exp(lg);
}

Rational jack_at_ones_exact(const Partition& m, const ParamSet& p) {
  check_length(m, p.r);
  Rational hd = p.half_d();
  Rational out = 1;
  for (int a = 0; a < p.r; a++) {
    for (int b = a + 1; b < p.r; b++) {
      int x = m[a] - m[b];
      Rational c = hd * (b - a);
      out *= rising(Rational(c + hd), x) / rising(c, x);
    }
  }
  return out;
}

double jack_norm_torus(const Partition& m, const ParamSet& p) {
  check_length(m, p.r);
  double hd = p.half_d().get_d();
  Rational hdq = p.half_d();
  double lg = 0.0;
  Rational ratio = 1;
  for (int a = 0; a < p.r; a++) {
    for (int b = a + 1; b < p.r; b++) {
      int x = m[a] - m[b];
      double c = hd * (b - a);
      lg += log_gamma(c + hd) + log_gamma(c - hd + 1.0) - log_gamma(c) - log_gamma(c + 1.0);
      Rational cq = hdq * (b - a);
      ratio *= rising(Rational(cq + hdq), x) * rising(Rational(cq - hdq + 1), x) /
               (rising(cq, x) * rising(Rational(cq + 1), x));
    }
  }
  return std::exp(lg) * ratio.get_d();
}

double expected_norm(const Partition& m, const ParamSet& p) {
  p.require_alpha_range();
  check_length(m, p.r);
  Partition mp = m.padded(p.r);
  std::vector<Complex> shifted(p.r);
  for (int j = 0; j < p.r; j++) shifted[j] = p.alpha + mp[j];
  double log_num = gamma_omega_log(shifted, p).real();
  double log_den = 2.0 * gamma_omega_log(p.beta(), p).real();
  double ratio = dim_dm(mp, p).get_d() / gen_pochhammer(p.n_over_r(), mp, p.d).get_d();
  return ratio * std::exp(log_num - log_den);
}

double spherical_taylor_residual(const Partition& k, const ParamSet& p, const std::vector<Complex>& w,
                                 int truncation, TaylorKind kind) {
  check_length(k, p.r);
  if (static_cast<int>(w.size()) != p.r) throw std::invalid_argument("w must have length r");
  Partition kp = k.padded(p.r);
  SymPoly phik = spherical(kp, p.r, p.d);
  Complex lhs;
  if (kind == TaylorKind::shifted) {
    std::vector<Complex> u(p.r);
    Complex pre = gen_pochhammer(Complex(p.alpha), kp, p);
    for (int j = 0; j < p.r; j++) {
      u[j] = w[j] / (1.0 - w[j]);
      pre *= std::pow(1.0 - w[j], -p.alpha);
    }
    lhs = pre * evaluate(phik, u);
  } else {
    Complex s = 0.0;
    for (auto v : w) s += v;
    lhs = std::exp(s) * evaluate(phik, w);
  }
  Complex rhs = 0.0;
  for (const auto& x : enumerate_partitions(truncation, p.r)) {
    if (!contains(x, kp)) continue;
    double c = Rational(dim_dm(x, p) * gamma_k_partition(kp, x, p) /
                        gen_pochhammer(p.n_over_r(), x, p.d))
                   .get_d();
    Complex term = c * evaluate(spherical(x, p.r, p.d), w);
    if (kind == TaylorKind::shifted) term *= gen_pochhammer(Complex(p.alpha), x, p);
    rhs += term;
  }
  return std::abs(lhs - rhs);
}

void set_fault(Fault f) {
  active_fault.store(f);
  clear_coeff_cache();
}

Fault current_fault() { return active_fault.load(); }

void clear_coeff_cache() {
  std::lock_guard lock(binom_mutex);
  binom_cache.clear();
}

}  // namespace mcj
