#include <mcj/params.hpp>

#include <cstdio>

namespace mcj {

ParamSet::ParamSet(int r_, Rational d_, double alpha_, double nu_)
    : r(r_), d(std::move(d_)), alpha(alpha_), nu(nu_) {
  if (r < 1) throw parameter_error("r must be >= 1");
  if (sgn(d) <= 0) throw parameter_error("d must be positive");
}

Rational ParamSet::n() const { return Rational(r) + half_d() * r * (r - 1); }

Rational ParamSet::n_over_r() const { return 1 + half_d() * (r - 1); }

std::vector<double> ParamSet::rho() const {
  std::vector<double> out(r);
  for (int j = 1; j <= r; j++) {
    Rational v = d / 4 * (2 * j - r - 1);
    out[j - 1] = v.get_d();
  }
  return out;
}

std::vector<int> ParamSet::delta() const {
  std::vector<int> out(r);
  for (int j = 0; j < r; j++) out[j] = r - 1 - j;
  return out;
}

Complex ParamSet::beta() const { return {0.5 * (alpha + n_over_r().get_d()), nu}; }

bool ParamSet::d_is_even_integer() const {
  return d.get_den() == 1 && mpz_even_p(d.get_num().get_mpz_t());
}

void ParamSet::require_alpha_range() const {
  double bound = Rational(half_d() * (r - 1)).get_d();
  if (!(alpha > bound)) {
    throw parameter_error("alpha must exceed (d/2)(r-1) = " + std::to_string(bound));
  }
}

std::string ParamSet::describe() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "r=%d d=%s alpha=%.17g nu=%.17g", r, d.get_str().c_str(), alpha,
                nu);
  return buf;
}

}  // namespace mcj
