#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <mcj/rational.hpp>

namespace mcj {

class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (r, d, alpha, nu) with the derived cone constants.
struct ParamSet {
  int r = 1;
  Rational d = 2;
  double alpha = 1.0;
  double nu = 0.0;

  ParamSet() = default;
  ParamSet(int r, Rational d, double alpha = 1.0, double nu = 0.0);

  Rational half_d() const { return d / 2; }
  Rational n() const;         // r + (d/2) r (r-1)
  Rational n_over_r() const;  // 1 + (d/2)(r-1)
  std::vector<double> rho() const;
  std::vector<int> delta() const;  // (r-1, ..., 1, 0)
  Complex beta() const;            // (alpha + n/r)/2 + i nu

  bool d_is_even_integer() const;

  // alpha > (d/2)(r-1)
  void require_alpha_range() const;

  std::string describe() const;
};

}  // namespace mcj
