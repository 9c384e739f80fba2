#pragma once

#include <stdexcept>

#include <mcj/rational.hpp>

namespace mcj {

class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// log Gamma on C minus the poles (Lanczos, g = 7). Imaginary part is not
// guaranteed to be the continuous branch; only exp() and Re are meaningful.
Complex log_gamma(Complex z);

double log_gamma(double x);

}  // namespace mcj
