#include <mcj/special.hpp>

#include <array>
#include <cmath>
#include <numbers>

namespace mcj {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool at_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

Complex log_gamma(Complex z) {
  using std::numbers::pi;
  if (at_pole(z)) throw pole_error("Gamma pole at nonpositive integer");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); i++) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw pole_error("Gamma pole at nonpositive integer");
  return std::lgamma(x);
}

}  // namespace mcj
