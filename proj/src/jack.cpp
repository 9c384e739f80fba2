#include <mcj/jack.hpp>

#include <algorithm>
#include <mutex>
#include <tuple>

namespace mcj {

namespace {

using Plain = PlainPoly<Rational>;

// Divides an antisymmetric-in-(i,j) remainder by (x_i - x_j).
void divide_by_difference(const Plain& g, int i, int j, Plain& out) {
  // Group by the remaining exponents and the total degree in (x_i, x_j).
  std::map<std::pair<Exponent, int>, std::map<int, Rational>> groups;
  for (const auto& [e, c] : g) {
    if (sgn(c) == 0) continue;
    Exponent rest = e;
    rest[i] = 0;
    rest[j] = 0;
    groups[{rest, e[i] + e[j]}][e[i]] += c;
  }
  for (const auto& [key, coeffs] : groups) {
    const auto& [rest, total] = key;
    // (x_i - x_j) sum_k q_k x_i^k x_j^{total-1-k} = sum_k n_k x_i^k x_j^{total-k}
    Rational q = 0;
    for (int k = total; k >= 1; k--) {
      auto it = coeffs.find(k);
      if (it != coeffs.end()) q += it->second;
      if (sgn(q) != 0) {
        Exponent e = rest;
        e[i] = k - 1;
        e[j] = total - k;
        out[e] += q;
      }
    }
    auto it0 = coeffs.find(0);
    Rational n0 = it0 == coeffs.end() ? Rational(0) : it0->second;
    if (sgn(n0 + q) != 0) throw std::logic_error("laplace_beltrami: inexact division");
  }
}

}  // namespace

SymPoly laplace_beltrami(const SymPoly& p, const Rational& a) {
  int r = p.arity();
  Plain f = to_plain(p);
  Plain out;
  Rational half_a = a / 2;
  for (const auto& [e, c] : f) {
    long s = 0;
    for (int v : e) s += static_cast<long>(v) * (v - 1);
    if (s != 0) out[e] += half_a * c * s;
  }
  for (int i = 0; i < r; i++) {
    for (int j = i + 1; j < r; j++) {
      Plain g;
      for (const auto& [e, c] : f) {
        if (e[i] > 0) {
          Exponent x = e;
          x[i] += 1;
          g[x] += c * e[i];
        }
        if (e[j] > 0) {
          Exponent x = e;
          x[j] += 1;
          g[x] -= c * e[j];
        }
      }
      divide_by_difference(g, i, j, out);
    }
  }
  return from_plain(out, r, false);
}

namespace {

using CacheKey = std::tuple<int, std::string, std::string>;

std::mutex cache_mutex;
std::map<CacheKey, SymPoly> jack_cache;
std::map<CacheKey, SymPoly> spherical_cache;

CacheKey key_of(const Partition& m, int r, const Rational& d) {
  return {r, d.get_str(), m.padded(r).to_string()};
}

// All monic Jacks of one weight class, dominance-triangular solve.
std::vector<SymPoly> jack_weight_class(int w, int r, const Rational& d) {
  Rational a = 2 / d;
  auto parts = partitions_of(w, r);
  std::size_t n = parts.size();
  std::vector<std::vector<Rational>> C(n, std::vector<Rational>(n));
  for (std::size_t s = 0; s < n; s++) {
    auto img = laplace_beltrami(SymPoly::monomial(parts[s], r), a);
    for (std::size_t t = 0; t < n; t++) C[s][t] = img.coeff(parts[t]);
  }
  std::vector<SymPoly> out;
  for (std::size_t l = 0; l < n; l++) {
    std::vector<Rational> u(n);
    u[l] = 1;
    const Rational& eig = C[l][l];
    for (std::size_t t = l + 1; t < n; t++) {
      Rational rhs = 0;
      for (std::size_t k = l; k < t; k++) {
        if (sgn(u[k]) != 0) rhs += u[k] * C[k][t];
      }
      Rational gap = eig - C[t][t];
      if (sgn(gap) == 0) {
        if (sgn(rhs) != 0) throw std::logic_error("jack: degenerate eigenvalue");
        continue;
      }
      u[t] = rhs / gap;
    }
    SymPoly p(r);
    for (std::size_t t = l; t < n; t++) {
      if (sgn(u[t]) == 0) continue;
      if (!dominance_leq(parts[t], parts[l])) throw std::logic_error("jack: support not dominated");
      p.add_term(parts[t], u[t]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

SymPoly jack_mono(const Partition& m, int r, const Rational& d) {
  if (sgn(d) <= 0) throw parameter_error("jack_mono: d must be positive");
  auto key = key_of(m, r, d);
  {
    std::lock_guard lock(cache_mutex);
    auto it = jack_cache.find(key);
    if (it != jack_cache.end()) return it->second;
  }
  int w = m.weight();
  auto parts = partitions_of(w, r);
  auto polys = jack_weight_class(w, r, d);
  std::lock_guard lock(cache_mutex);
  for (std::size_t i = 0; i < parts.size(); i++) {
    jack_cache.try_emplace(key_of(parts[i], r, d), polys[i]);
  }
  return jack_cache.at(key);
}

SymPoly spherical(const Partition& m, int r, const Rational& d) {
  auto key = key_of(m, r, d);
  {
    std::lock_guard lock(cache_mutex);
    auto it = spherical_cache.find(key);
    if (it != spherical_cache.end()) return it->second;
  }
  SymPoly p = jack_mono(m, r, d);
  Rational at_ones = value_at_ones(p);
  p *= Rational(1 / at_ones);
  std::lock_guard lock(cache_mutex);
  return spherical_cache.try_emplace(key, p).first->second;
}

void clear_jack_cache() {
  std::lock_guard lock(cache_mutex);
  jack_cache.clear();
  spherical_cache.clear();
}

namespace {

SymPoly complete_homogeneous(int k, int r) {
  if (k < 0) return SymPoly(r);
  SymPoly h(r);
  for (const auto& mu : partitions_of(k, r)) h.add_term(mu, 1);
  return h;
}

}  // namespace

SymPoly schur(const Partition& m, int r) {
  Partition mp = m.padded(r);
  int l = mp.length();
  if (l == 0) return SymPoly::constant(r, 1);
  std::vector<int> perm(l);
  for (int i = 0; i < l; i++) perm[i] = i;
  SymPoly out(r);
  do {
    int inversions = 0;
    for (int i = 0; i < l; i++) {
      for (int j = i + 1; j < l; j++) inversions += perm[i] > perm[j];
    }
    SymPoly term = SymPoly::constant(r, inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < l && !term.is_zero(); i++) {
      term = term * complete_homogeneous(mp[i] - i + perm[i], r);
    }
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SymPoly euler_defect(const SymPoly& p, int weight) {
  Plain f = to_plain(p);
  Plain out;
  for (const auto& [e, c] : f) {
    long deg = 0;
    for (int v : e) deg += v;  // sum_j x_j d_j x^e = |e| x^e
    out[e] += c * (deg - weight);
  }
  return from_plain(out, p.arity());
}

}  // namespace mcj
