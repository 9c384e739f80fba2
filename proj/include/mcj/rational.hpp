#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace mcj {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Accepts "p/q", integers and plain decimals ("2.5" -> 5/2).
Rational parse_rational(std::string_view s);

// Rising factorial (a)_k.
Rational rising(const Rational& a, int k);
Complex rising(const Complex& a, int k);

Rational binomial(int n, int k);

inline double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q);

}  // namespace mcj
