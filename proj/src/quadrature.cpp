#include <mcj/quadrature.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace mcj {

std::string to_string(RuleKind k) {
  return k == RuleKind::tanh_sinh ? "tanh_sinh" : "gauss_gegenbauer";
}

RuleKind parse_rule_kind(const std::string& s) {
  if (s == "tanh_sinh" || s == "tanh-sinh") return RuleKind::tanh_sinh;
  if (s == "gauss_gegenbauer" || s == "gauss-gegenbauer" || s == "gauss") {
    return RuleKind::gauss_gegenbauer;
  }
  throw parameter_error("unknown rule kind '" + s + "'");
}

namespace {

std::mutex rule_mutex;
std::map<std::tuple<int, double, double>, BaseRule> gauss_cache;

BaseRule compute_gauss_jacobi(int n, double a, double b) {
  // Golub-Welsch on the monic Jacobi recurrence.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  double ab = a + b;
  for (int k = 0; k < n; k++) {
    double s = 2.0 * k + ab;
    diag(k) = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; k++) {
    double s = 2.0 * k + ab;
    double beta = k == 1 ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
                         : 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }
  double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                   std::lgamma(ab + 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  BaseRule rule{a, b, {}};
  rule.nodes.reserve(n);
  double mu0 = std::exp(log_mu0);
  for (int i = 0; i < n; i++) {
    double x = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    rule.nodes.push_back({x, 1.0 - x, 1.0 + x, mu0 * v * v});
  }
  return rule;
}

}  // namespace

BaseRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw parameter_error("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw parameter_error("gauss_jacobi: exponents must exceed -1");
  auto key = std::make_tuple(n, a, b);
  {
    std::lock_guard lock(rule_mutex);
    auto it = gauss_cache.find(key);
    if (it != gauss_cache.end()) return it->second;
  }
  BaseRule rule = compute_gauss_jacobi(n, a, b);
  std::lock_guard lock(rule_mutex);
  return gauss_cache.try_emplace(key, std::move(rule)).first->second;
}

BaseRule tanh_sinh_rule(int n) {
  using std::numbers::pi;
  int k_max = std::max(1, (n - 1) / 2);
  double t_max = 3.2;
  double h = t_max / k_max;
  BaseRule rule{0.0, 0.0, {}};
  for (int k = -k_max; k <= k_max; k++) {
    double t = k * h;
    double u = 0.5 * pi * std::sinh(t);
    double c = std::cosh(u);
    double w = h * 0.5 * pi * std::cosh(t) / (c * c);
    // 1 - tanh(u) = 2 / (1 + e^{2u}), accurate for large u
    double one_minus = 2.0 / (1.0 + std::exp(2.0 * u));
    double one_plus = 2.0 / (1.0 + std::exp(-2.0 * u));
    rule.nodes.push_back({std::tanh(u), one_minus, one_plus, w});
  }
  return rule;
}

std::vector<std::pair<double, double>> QuadratureRule::axis_nodes() const {
  using std::numbers::pi;
  std::vector<std::pair<double, double>> out;
  for (const auto& nd : axis_axis.nodes) out.emplace_back(pi * nd.one_plus, pi * nd.w);
  return out;
}

QuadratureRule build_rule(int points_per_axis, RuleKind kind, const ParamSet& p) {
  if (points_per_axis < 4) throw parameter_error("points_per_axis must be >= 4");
  QuadratureRule rule;
  rule.kind = kind;
  rule.points_per_axis = points_per_axis;
  rule.axis_exponent = p.alpha - p.n_over_r().get_d();
  rule.pair_exponent = p.d.get_d();
  rule.subdivide = p.r > 1 && !p.d_is_even_integer();
  if (kind == RuleKind::tanh_sinh) {
    BaseRule ts = tanh_sinh_rule(points_per_axis);
    rule.axis_axis = rule.axis_break = rule.break_axis = rule.break_break = ts;
    return rule;
  }
  double s = rule.axis_exponent;
  double d = rule.pair_exponent;
  if (!(s > -1.0)) throw parameter_error("gauss_gegenbauer: alpha - n/r must exceed -1");
  // (1-x)^a sits at the right end, (1+x)^b at the left end.
  rule.axis_axis = gauss_jacobi(points_per_axis, s, s);
  if (rule.subdivide) {
    rule.axis_break = gauss_jacobi(points_per_axis, d, s);
    rule.break_axis = gauss_jacobi(points_per_axis, s, d);
    rule.break_break = gauss_jacobi(points_per_axis, d, d);
  }
  return rule;
}

}  // namespace mcj
