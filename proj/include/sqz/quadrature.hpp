#pragma once
#include <cstddef>
#include <vector>

namespace sqz {

enum class RuleKind { trapezoid_on_interval, gauss_hermite };

// Fixed 1-D rule: the integral estimate is sum_i weights[i] * f(nodes[i]).
// Gauss-Hermite weights carry the exp(x_i^2) factor already, so the rule is
// applied to the raw integrand (which must decay at least like a Gaussian).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind = RuleKind::trapezoid_on_interval;

  std::size_t size() const { return nodes.size(); }

  // n equally spaced nodes on [a, b], end weights halved. Requires b > a, n >= 2.
  static QuadratureRule trapezoid(double a, double b, int n);

  // n-point Gauss-Hermite rule; nodes are the zeros of phi_n found by Newton
  // iteration, weights are 1 / (n phi_{n-1}(x_i)^2). Requires 1 <= n <= hermite_cap.
  static QuadratureRule gauss_hermite(int n);
};

// Upper bound r^{kmax+1} / (1 - r) on the dropped tail sum_{k > kmax} r^k.
// Requires 0 <= r < 1 and kmax >= 0.
double geometric_tail_bound(double r, long long kmax);

}  // namespace sqz
