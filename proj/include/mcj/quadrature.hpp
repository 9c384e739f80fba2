#pragma once

#include <string>
#include <vector>

#include <mcj/params.hpp>

namespace mcj {

enum class RuleKind { tanh_sinh, gauss_gegenbauer };

std::string to_string(RuleKind k);
RuleKind parse_rule_kind(const std::string& s);

// Node on (-1, 1) with complements 1 -+ x stored separately for accuracy near the ends.
struct Node1D {
  double x;
  double one_minus;
  double one_plus;
  double w;
};

// Rule for int f(x) (1-x)^a (1+x)^b dx over (-1, 1).
struct BaseRule {
  double a = 0.0;
  double b = 0.0;
  std::vector<Node1D> nodes;
};

BaseRule gauss_jacobi(int n, double a, double b);
BaseRule tanh_sinh_rule(int n);

struct QuadratureRule {
  RuleKind kind = RuleKind::gauss_gegenbauer;
  int points_per_axis = 0;
  double axis_exponent = 0.0;  // alpha - n/r, folded at 0 and 2 pi
  double pair_exponent = 0.0;  // d, folded at outer-angle breakpoints
  bool subdivide = false;      // non-even d

  // Rules keyed by (exponent at the left end, exponent at the right end) kind.
  BaseRule axis_axis;    // [0, 2pi]
  BaseRule axis_break;   // [0, theta_o]
  BaseRule break_axis;   // [theta_o, 2pi]
  BaseRule break_break;  // [theta_o, theta_o']

  // Unsubdivided per-axis nodes and weights on (0, 2pi), folded weight excluded.
  std::vector<std::pair<double, double>> axis_nodes() const;
};

QuadratureRule build_rule(int points_per_axis, RuleKind kind, const ParamSet& p);

}  // namespace mcj
