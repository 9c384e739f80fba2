#pragma once

#include <cmath>
#include <stdexcept>

#include <mcj/rational.hpp>

namespace mcj {

// Exact complex rational a + b i.
struct GaussQ {
  Rational re = 0;
  Rational im = 0;

  GaussQ() = default;
  GaussQ(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussQ(int r) : re(r) {}

  static GaussQ i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  double abs() const { return std::hypot(re.get_d(), im.get_d()); }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussQ& operator+=(const GaussQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussQ& operator-=(const GaussQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussQ& operator*=(const GaussQ& o) {
    Rational a = re * o.re - im * o.im;
    Rational b = re * o.im + im * o.re;
    re = std::move(a);
    im = std::move(b);
    return *this;
  }
  GaussQ& operator/=(const GaussQ& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    Rational a = (re * o.re + im * o.im) / n;
    Rational b = (im * o.re - re * o.im) / n;
    re = std::move(a);
    im = std::move(b);
    return *this;
  }
  GaussQ operator-() const { return {-re, -im}; }

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

inline GaussQ rising(const GaussQ& a, int k) {
  GaussQ out = 1;
  for (int j = 0; j < k; j++) out *= a + GaussQ(j);
  return out;
}

}  // namespace mcj
