#include <mcj/orthog.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include <mcj/coeffs.hpp>
#include <mcj/mcj.hpp>

namespace mcj {

namespace {

using std::numbers::pi;

constexpr int kMaxRank = 3;

struct KahanComplex {
  Complex sum = 0.0;
  Complex c = 0.0;
  void add(Complex v) {
    Complex y = v - c;
    Complex t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

double log_two_sin_half(double dist) { return std::log(2.0 * std::sin(0.5 * dist)); }

// A point on one axis together with how its subinterval was formed.
struct AxisPoint {
  double theta;
  double d_left;    // distance to the left end of its interval
  double d_right;   // distance to the right end
  int left_owner;   // axis whose angle is the left end, -1 for 0
  int right_owner;  // axis whose angle is the right end, -1 for 2 pi
  double weight;    // rule weight times half-length
  double log_fold;  // log of the folded Jacobi factor at this node
};

// Polynomials evaluated through a shared monomial basis.
struct Evaluator {
  int r;
  int top;
  std::vector<Partition> basis;
  std::vector<std::vector<Exponent>> orbits;
  std::vector<std::vector<Complex>> coeffs;  // per polynomial, per basis element

  Evaluator(const std::vector<Partition>& parts, const ParamSet& p) : r(p.r), top(0) {
    std::map<Partition, int, GradedRevLex> index;
    std::vector<CSymPoly> bodies;
    for (const auto& m : parts) {
      bodies.push_back(mcj_build(m, p).body);
      top = std::max(top, m.weight());
    }
    for (const auto& body : bodies) {
      for (const auto& [k, c] : body.terms()) index.try_emplace(k, 0);
    }
    for (auto& [k, i] : index) {
      i = static_cast<int>(basis.size());
      basis.push_back(k);
      orbits.push_back(detail::orbit(k, r));
    }
    for (const auto& body : bodies) {
      std::vector<Complex> row(basis.size(), 0.0);
      for (const auto& [k, c] : body.terms()) row[index.at(k)] = c;
      coeffs.push_back(std::move(row));
    }
  }

  void values(const double* theta, std::vector<Complex>& out,
              std::vector<std::vector<Complex>>& powers, std::vector<Complex>& mono) const {
    for (int j = 0; j < r; j++) {
      Complex s = std::polar(1.0, theta[j]);
      powers[j][0] = 1.0;
      for (int k = 1; k <= top; k++) powers[j][k] = powers[j][k - 1] * s;
    }
    for (std::size_t b = 0; b < basis.size(); b++) {
      Complex v = 0.0;
      for (const auto& e : orbits[b]) {
        Complex t = 1.0;
        for (int j = 0; j < r; j++) t *= powers[j][e[j]];
        v += t;
      }
      mono[b] = v;
    }
    for (std::size_t i = 0; i < coeffs.size(); i++) {
      Complex v = 0.0;
      for (std::size_t b = 0; b < basis.size(); b++) v += coeffs[i][b] * mono[b];
      out[i] = v;
    }
  }
};

class GramAssembler {
 public:
  GramAssembler(const std::vector<Partition>& parts, const ParamSet& p, const QuadratureRule& rule)
      : p_(p), rule_(rule), eval_(parts, p), np_(static_cast<int>(parts.size())) {
    s2_ = rule.axis_exponent;
    d_ = p.d.get_d();
  }

  Eigen::MatrixXcd run(int threads) {
    std::vector<AxisPoint> outer = axis_points(0, {});
    std::vector<std::vector<KahanComplex>> partial(outer.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      std::vector<Complex> vals(np_);
      std::vector<std::vector<Complex>> powers(p_.r, std::vector<Complex>(eval_.top + 1));
      std::vector<Complex> mono(eval_.basis.size());
      std::vector<AxisPoint> chain;
      for (std::size_t i = next++; i < outer.size(); i = next++) {
        std::vector<KahanComplex> acc(static_cast<std::size_t>(np_) * np_);
        chain.assign(1, outer[i]);
        descend(chain, acc, vals, powers, mono);
        partial[i] = std::move(acc);
      }
    };
    unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                             : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(outer.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; t++) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<KahanComplex> total(static_cast<std::size_t>(np_) * np_);
    for (const auto& acc : partial) {
      for (std::size_t k = 0; k < acc.size(); k++) total[k].add(acc[k].sum);
    }
    double log_pre = std::log(c0_tilde(p_).value()) - p_.n().get_d() * std::log(2.0 * pi);
    double pre = std::exp(log_pre);
    Eigen::MatrixXcd g(np_, np_);
    for (int a = 0; a < np_; a++) {
      for (int b = 0; b < np_; b++) g(a, b) = pre * total[a * np_ + b].sum;
    }
    return g;
  }

 private:
  // Points on axis k given the already chosen outer angles.
  std::vector<AxisPoint> axis_points(int k, const std::vector<AxisPoint>& chosen) const {
    struct End {
      double pos;
      int owner;
    };
    std::vector<End> ends{{0.0, -1}};
    if (rule_.subdivide) {
      for (int o = 0; o < k; o++) ends.push_back({chosen[o].theta, o});
      std::sort(ends.begin() + 1, ends.end(), [](const End& a, const End& b) { return a.pos < b.pos; });
    }
    ends.push_back({2.0 * pi, -1});
    std::vector<AxisPoint> out;
    for (std::size_t e = 0; e + 1 < ends.size(); e++) {
      const End& lo = ends[e];
      const End& hi = ends[e + 1];
      bool left_axis = lo.owner < 0;
      bool right_axis = hi.owner < 0;
      const BaseRule& base = left_axis && right_axis ? rule_.axis_axis
                             : left_axis             ? rule_.axis_break
                             : right_axis            ? rule_.break_axis
                                                     : rule_.break_break;
      double half = 0.5 * (hi.pos - lo.pos);
      for (const auto& nd : base.nodes) {
        AxisPoint ap;
        ap.d_left = half * nd.one_plus;
        ap.d_right = half * nd.one_minus;
        ap.theta = lo.pos + ap.d_left;
        ap.left_owner = lo.owner;
        ap.right_owner = hi.owner;
        ap.weight = nd.w * half;
        ap.log_fold = 0.0;
        if (base.a != 0.0) ap.log_fold += base.a * std::log(nd.one_minus);
        if (base.b != 0.0) ap.log_fold += base.b * std::log(nd.one_plus);
        out.push_back(ap);
      }
    }
    return out;
  }

  // log of the full weight at a node, with singular distances taken from the interval ends.
  double log_weight(const std::vector<AxisPoint>& c) const {
    double lw = 0.0;
    for (int j = 0; j < p_.r; j++) {
      const AxisPoint& a = c[j];
      if (s2_ != 0.0) {
        double dist0 = a.left_owner < 0 ? a.d_left : a.theta;
        double dist2 = a.right_owner < 0 ? a.d_right : 2.0 * pi - a.theta;
        double dist = std::min(dist0, dist2);
        lw += s2_ * log_two_sin_half(dist);
      }
      lw -= p_.nu * (a.theta - pi);
      for (int q = 0; q < j; q++) {
        double dist;
        if (a.left_owner == q) {
          dist = a.d_left;
        } else if (a.right_owner == q) {
          dist = a.d_right;
        } else {
          dist = std::abs(a.theta - c[q].theta);
        }
        lw += d_ * std::log(std::abs(2.0 * std::sin(0.5 * dist)));
      }
    }
    return lw;
  }

  void descend(std::vector<AxisPoint>& chain, std::vector<KahanComplex>& acc,
               std::vector<Complex>& vals, std::vector<std::vector<Complex>>& powers,
               std::vector<Complex>& mono) const {
    int k = static_cast<int>(chain.size());
    if (k == p_.r) {
      double w = 1.0;
      double fold = 0.0;
      double theta[kMaxRank];
      for (int j = 0; j < p_.r; j++) {
        w *= chain[j].weight;
        fold += chain[j].log_fold;
        theta[j] = chain[j].theta;
      }
      w *= std::exp(log_weight(chain) - fold);
      eval_.values(theta, vals, powers, mono);
      for (int a = 0; a < np_; a++) {
        Complex wa = w * vals[a];
        for (int b = 0; b < np_; b++) acc[a * np_ + b].add(wa * std::conj(vals[b]));
      }
      return;
    }
    for (const auto& ap : axis_points(k, chain)) {
      chain.push_back(ap);
      descend(chain, acc, vals, powers, mono);
      chain.pop_back();
    }
  }

  const ParamSet& p_;
  const QuadratureRule& rule_;
  Evaluator eval_;
  int np_;
  double s2_;
  double d_;
};

struct Residuals {
  double off = 0.0;
  double diag = 0.0;
};

Residuals residuals(const Eigen::MatrixXcd& g, const std::vector<double>& expected) {
  Residuals out;
  int n = static_cast<int>(expected.size());
  for (int a = 0; a < n; a++) {
    out.diag = std::max(out.diag, std::abs(g(a, a) - expected[a]) / expected[a]);
    for (int b = 0; b < n; b++) {
      if (a != b) out.off = std::max(out.off, std::abs(g(a, b)) / std::sqrt(expected[a] * expected[b]));
    }
  }
  return out;
}

}  // namespace

double weight_eval(const std::vector<double>& theta, const ParamSet& p) {
  if (static_cast<int>(theta.size()) != p.r) throw std::invalid_argument("theta must have length r");
  double s2 = p.alpha - p.n_over_r().get_d();
  double d = p.d.get_d();
  double lw = 0.0;
  for (int j = 0; j < p.r; j++) {
    if (!(theta[j] > 0.0 && theta[j] < 2.0 * pi)) {
      throw std::domain_error("weight_eval: theta must lie strictly inside (0, 2 pi)");
    }
    lw += s2 * log_two_sin_half(theta[j]) - p.nu * (theta[j] - pi);
    for (int q = 0; q < j; q++) lw += d * std::log(std::abs(2.0 * std::sin(0.5 * (theta[j] - theta[q]))));
  }
  return std::exp(lw);
}

Eigen::MatrixXcd gram_matrix(const std::vector<Partition>& parts, const ParamSet& p,
                             const QuadratureRule& rule, int threads) {
  if (p.r > kMaxRank) throw parameter_error("quadrature supports r <= 3 only");
  GramAssembler assembler(parts, p, rule);
  return assembler.run(threads);
}

Complex inner_product(const Partition& m, const Partition& n, const ParamSet& p,
                      const QuadratureRule& rule) {
  auto g = gram_matrix({m.padded(p.r), n.padded(p.r)}, p, rule, 1);
  return g(0, 1);
}

OrthReport verify_orthogonality(const ParamSet& p, int max_weight, const QuadratureRule& rule,
                                double tol_off, double tol_diag, int threads) {
  p.require_alpha_range();
  if (p.r > kMaxRank) throw parameter_error("quadrature supports r <= 3 only");
  auto start = std::chrono::steady_clock::now();
  OrthReport rep;
  rep.params = p;
  rep.max_weight = max_weight;
  rep.partitions = enumerate_partitions(max_weight, p.r);
  rep.tol_off = tol_off;
  rep.tol_diag = tol_diag;
  rep.kind = rule.kind;
  rep.points_per_axis = rule.points_per_axis;
  rep.axis_exponent = rule.axis_exponent;
  rep.pair_exponent = rule.pair_exponent;
  rep.subdivided = rule.subdivide;
  for (const auto& m : rep.partitions) rep.expected.push_back(expected_norm(m, p));

  rep.gram = gram_matrix(rep.partitions, p, rule, threads);
  auto fine = residuals(rep.gram, rep.expected);
  rep.off_diag_residual = fine.off;
  rep.diag_residual = fine.diag;
  rep.hermitian_defect = (rep.gram - rep.gram.adjoint()).cwiseAbs().maxCoeff();

  rep.coarse_points = std::max(4, rule.points_per_axis / 2);
  QuadratureRule coarse = build_rule(rep.coarse_points, rule.kind, p);
  Eigen::MatrixXcd gc = gram_matrix(rep.partitions, p, coarse, threads);
  auto crs = residuals(gc, rep.expected);
  int n = static_cast<int>(rep.partitions.size());
  for (int a = 0; a < n; a++) {
    for (int b = 0; b < n; b++) {
      double scale = std::sqrt(rep.expected[a] * rep.expected[b]);
      rep.resolution_delta = std::max(rep.resolution_delta, std::abs(rep.gram(a, b) - gc(a, b)) / scale);
    }
  }
  double fine_res = std::max(fine.off, fine.diag);
  double coarse_res = std::max(crs.off, crs.diag);
  rep.residual_ratio = coarse_res > 0.0 ? fine_res / coarse_res : 0.0;
  rep.diagnostic_pass = rep.resolution_delta <= std::min(tol_off, tol_diag);
  rep.pass = fine.off <= tol_off && fine.diag <= tol_diag;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool theorem_covered(const ParamSet& p) {
  if (p.r == 1) return true;
  if (p.d == 1 || p.d == 2 || p.d == 4) return true;
  if (p.r == 2 && p.d.get_den() == 1) return true;
  if (p.r == 3 && p.d == 8) return true;
  return p.nu == 0.0 && p.alpha == p.n_over_r().get_d();
}

SweepResult conjecture_sweep(const std::vector<Rational>& d_values,
                             const std::vector<double>& alpha_values,
                             const std::vector<double>& nu_values, int r, int max_weight,
                             int points_per_axis, RuleKind kind, double tol_off, double tol_diag,
                             int threads) {
  SweepResult out;
  for (const auto& d : d_values) {
    for (double alpha : alpha_values) {
      for (double nu : nu_values) {
        ParamSet p(r, d, alpha, nu);
        try {
          p.require_alpha_range();
        } catch (const parameter_error& e) {
          out.skipped.push_back(p.describe() + ": " + e.what());
          continue;
        }
        auto rule = build_rule(points_per_axis, kind, p);
        auto rep = verify_orthogonality(p, max_weight, rule, tol_off, tol_diag, threads);
        rep.classification = theorem_covered(p) ? "oracle" : "evidence";
        out.reports.push_back(std::move(rep));
      }
    }
  }
  return out;
}

int default_points(int r) {
  switch (r) {
    case 1:
      return 80;
    case 2:
      return 120;
    default:
      return 40;
  }
}

}  // namespace mcj
