#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <mcj/partition.hpp>
#include <mcj/rational.hpp>

namespace mcj {

using Exponent = std::vector<int>;

namespace detail {

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const Complex& c) { return c == Complex(0.0); }

inline Complex to_complex(const Rational& c) { return {c.get_d(), 0.0}; }
inline Complex to_complex(const Complex& c) { return c; }

template <class Coef>
Coef from_rational(const Rational& q) {
  if constexpr (std::is_same_v<Coef, Rational>) {
    return q;
  } else {
    return Coef(q.get_d());
  }
}

// Distinct permutations of the parts, in lexicographic order.
std::vector<Exponent> orbit(const Partition& p, int r);

bool is_nonincreasing(const Exponent& e);

}  // namespace detail

// Symmetric polynomial sum_l c_l m_l in r variables, keyed by partitions padded to r.
template <class Coef>
class BasicSymPoly {
 public:
  using Terms = std::map<Partition, Coef, GradedRevLex>;

  explicit BasicSymPoly(int r) : r_(r) {
    if (r < 1) throw std::invalid_argument("arity must be >= 1");
  }

  static BasicSymPoly constant(int r, const Coef& c) {
    BasicSymPoly p(r);
    p.add_term(Partition(), c);
    return p;
  }

  static BasicSymPoly monomial(const Partition& m, int r, const Coef& c = Coef(1)) {
    BasicSymPoly p(r);
    p.add_term(m, c);
    return p;
  }

  int arity() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

  Coef coeff(const Partition& m) const {
    auto it = terms_.find(m.padded(r_));
    return it == terms_.end() ? Coef(0) : it->second;
  }

  void add_term(const Partition& m, const Coef& c) {
    if (detail::is_zero(c)) return;
    auto key = m.padded(r_);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicSymPoly& operator+=(const BasicSymPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  BasicSymPoly& operator-=(const BasicSymPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  BasicSymPoly& operator*=(const Coef& s) {
    if (detail::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend BasicSymPoly operator+(BasicSymPoly a, const BasicSymPoly& b) { return a += b; }
  friend BasicSymPoly operator-(BasicSymPoly a, const BasicSymPoly& b) { return a -= b; }
  friend BasicSymPoly operator*(BasicSymPoly a, const Coef& s) { return a *= s; }
  friend BasicSymPoly operator*(const Coef& s, BasicSymPoly a) { return a *= s; }

  bool operator==(const BasicSymPoly& o) const { return r_ == o.r_ && terms_ == o.terms_; }

  void check_arity(const BasicSymPoly& o) const {
    if (o.r_ != r_) throw std::invalid_argument("symmetric polynomial arity mismatch");
  }

 private:
  int r_;
  Terms terms_;
};

using SymPoly = BasicSymPoly<Rational>;
using CSymPoly = BasicSymPoly<Complex>;

CSymPoly promote(const SymPoly& p);

// Plain (non-symmetrized) polynomial: exponent vector -> coefficient.
template <class Coef>
using PlainPoly = std::map<Exponent, Coef>;

template <class Coef>
PlainPoly<Coef> to_plain(const BasicSymPoly<Coef>& p) {
  PlainPoly<Coef> out;
  for (const auto& [m, c] : p.terms()) {
    for (auto& e : detail::orbit(m, p.arity())) out[e] += c;
  }
  return out;
}

// Reads off m_l coefficients from the nonincreasing exponents; throws if the input
// is visibly not symmetric (a permuted exponent with a different coefficient).
template <class Coef>
BasicSymPoly<Coef> from_plain(const PlainPoly<Coef>& plain, int r, bool check = true) {
  BasicSymPoly<Coef> out(r);
  for (const auto& [e, c] : plain) {
    if (detail::is_zero(c)) continue;
    if (detail::is_nonincreasing(e)) {
      out.add_term(Partition(e), c);
    } else if (check) {
      Exponent s = e;
      std::sort(s.rbegin(), s.rend());
      auto it = plain.find(s);
      if (it == plain.end() || !(it->second == c)) {
        throw std::logic_error("plain polynomial is not symmetric");
      }
    }
  }
  return out;
}

template <class Coef>
BasicSymPoly<Coef> multiply(const BasicSymPoly<Coef>& a, const BasicSymPoly<Coef>& b) {
  a.check_arity(b);
  int r = a.arity();
  PlainPoly<Coef> acc;
  for (const auto& [ma, ca] : a.terms()) {
    auto oa = detail::orbit(ma, r);
    for (const auto& [mb, cb] : b.terms()) {
      auto ob = detail::orbit(mb, r);
      Coef cab = ca * cb;
      for (const auto& s : oa) {
        for (const auto& t : ob) {
          Exponent e(r);
          for (int j = 0; j < r; j++) e[j] = s[j] + t[j];
          if (detail::is_nonincreasing(e)) acc[e] += cab;
        }
      }
    }
  }
  return from_plain(acc, r, false);
}

template <class Coef>
BasicSymPoly<Coef> operator*(const BasicSymPoly<Coef>& a, const BasicSymPoly<Coef>& b) {
  return multiply(a, b);
}

namespace detail {

template <class Coef>
void expand_affine(const Exponent& s, int j, const std::vector<std::vector<Coef>>& row_terms,
                   Exponent& e, const Coef& c, PlainPoly<Coef>& acc) {
  int r = static_cast<int>(s.size());
  if (j == r) {
    acc[e] += c;
    return;
  }
  int cap = j == 0 ? s[j] : std::min(s[j], e[j - 1]);
  for (int k = 0; k <= cap; k++) {
    const Coef& f = row_terms[s[j]][k];
    if (is_zero(f)) continue;
    e[j] = k;
    expand_affine(s, j + 1, row_terms, e, Coef(c * f), acc);
  }
  e[j] = 0;
}

}  // namespace detail

// q(x) = p(a + b x) componentwise.
template <class Coef>
BasicSymPoly<Coef> affine_substitute(const BasicSymPoly<Coef>& p, const Coef& a, const Coef& b) {
  int r = p.arity();
  int top = 0;
  for (const auto& [m, c] : p.terms()) top = std::max(top, m[0]);
  // row_terms[n][k] = C(n,k) a^{n-k} b^k
  std::vector<std::vector<Coef>> row_terms(top + 1);
  for (int n = 0; n <= top; n++) {
    row_terms[n].resize(n + 1);
    for (int k = 0; k <= n; k++) {
      Coef v = detail::from_rational<Coef>(binomial(n, k));
      for (int i = 0; i < n - k; i++) v *= a;
      for (int i = 0; i < k; i++) v *= b;
      row_terms[n][k] = v;
    }
  }
  PlainPoly<Coef> acc;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& s : detail::orbit(m, r)) {
      Exponent e(r, 0);
      detail::expand_affine(s, 0, row_terms, e, c, acc);
    }
  }
  return from_plain(acc, r, false);
}

// Value of m_l at x (orbit in lexicographic order).
Complex monomial_value(const Partition& m, const std::vector<Complex>& x);

template <class Coef>
Complex evaluate(const BasicSymPoly<Coef>& p, const std::vector<Complex>& x) {
  if (static_cast<int>(x.size()) != p.arity()) {
    throw std::invalid_argument("evaluation point length does not match arity");
  }
  Complex sum = 0.0;
  for (const auto& [m, c] : p.terms()) sum += detail::to_complex(c) * monomial_value(m, x);
  return sum;
}

// Exact value at (1,...,1).
Rational value_at_ones(const SymPoly& p);

std::string render(const SymPoly& p);
std::string render(const CSymPoly& p);

// Complex number as "re+im i" with 17 significant digits.
std::string format_complex(const Complex& z);

}  // namespace mcj
