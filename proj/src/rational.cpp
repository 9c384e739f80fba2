#include <mcj/rational.hpp>

#include <stdexcept>

namespace mcj {

Rational parse_rational(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw std::invalid_argument("empty rational");
  auto slash = str.find('/');
  try {
    if (slash != std::string::npos) {
      Rational q(mpz_class(str.substr(0, slash)), mpz_class(str.substr(slash + 1)));
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      return q;
    }
    auto dot = str.find('.');
    if (dot == std::string::npos) return Rational(mpz_class(str));
    std::string digits = str.substr(0, dot) + str.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad decimal");
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < str.size(); i++) den *= 10;
    Rational q(mpz_class(digits), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + str + "'");
  }
}

Rational rising(const Rational& a, int k) {
  Rational out = 1;
  for (int i = 0; i < k; i++) out *= a + i;
  return out;
}

Complex rising(const Complex& a, int k) {
  Complex out = 1.0;
  for (int i = 0; i < k; i++) out *= a + static_cast<double>(i);
  return out;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace mcj
