#include <mcj/sympoly.hpp>

#include <algorithm>
#include <cstdio>

namespace mcj {

namespace detail {

std::vector<Exponent> orbit(const Partition& p, int r) {
  Exponent e(p.padded(r).parts());
  std::sort(e.begin(), e.end());
  std::vector<Exponent> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

bool is_nonincreasing(const Exponent& e) {
  for (std::size_t i = 0; i + 1 < e.size(); i++) {
    if (e[i] < e[i + 1]) return false;
  }
  return true;
}

}  // namespace detail

CSymPoly promote(const SymPoly& p) {
  CSymPoly out(p.arity());
  for (const auto& [m, c] : p.terms()) out.add_term(m, detail::to_complex(c));
  return out;
}

Complex monomial_value(const Partition& m, const std::vector<Complex>& x) {
  int r = static_cast<int>(x.size());
  Complex sum = 0.0;
  for (const auto& e : detail::orbit(m, r)) {
    Complex term = 1.0;
    for (int j = 0; j < r; j++) {
      for (int k = 0; k < e[j]; k++) term *= x[j];
    }
    sum += term;
  }
  return sum;
}

Rational value_at_ones(const SymPoly& p) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    sum += c * static_cast<long>(detail::orbit(m, p.arity()).size());
  }
  return sum;
}

namespace {

std::string label(const Partition& m) {
  std::string s = "m[";
  bool first = true;
  for (int v : m.parts()) {
    if (v == 0) break;
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "]";
}

template <class Coef, class Fmt>
std::string render_terms(const BasicSymPoly<Coef>& p, Fmt fmt) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += fmt(c) + " * " + label(m);
  }
  return s;
}

}  // namespace

std::string render(const SymPoly& p) {
  return render_terms(p, [](const Rational& c) { return c.get_str(); });
}

std::string render(const CSymPoly& p) {
  return render_terms(p, [](const Complex& c) { return "(" + format_complex(c) + ")"; });
}

std::string format_complex(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace mcj
