#include "sqz/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sqz/hermite.hpp"

namespace sqz {

QuadratureRule QuadratureRule::trapezoid(double a, double b, int n) {
  if (!(std::isfinite(a) && std::isfinite(b) && b > a)) {
    throw std::invalid_argument("trapezoid: interval must be finite with b > a");
  }
  if (n < 2) throw std::invalid_argument("trapezoid: need at least 2 nodes");
  QuadratureRule rule;
  rule.kind = RuleKind::trapezoid_on_interval;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  const double h = (b - a) / (n - 1);
  if (!(h > 0.0)) throw std::invalid_argument("trapezoid: interval too small for this n");
  for (int i = 0; i < n; ++i) rule.nodes[i] = a + i * h;
  rule.nodes[n - 1] = b;
  for (int i = 0; i < n; ++i) rule.weights[i] = h;
  rule.weights[0] = 0.5 * h;
  rule.weights[n - 1] = 0.5 * h;
  return rule;
}

namespace {

// phi_n and phi_{n-1} in one recurrence pass (no allocation).
struct PhiPair {
  double next_to_last;
  double last;
};

PhiPair phi_top_pair(int n, double x) {
  double prev = 0.0;
  double cur = 0.75112554446494248286 * std::exp(-0.5 * x * x);  // phi_0
  for (int j = 0; j < n; ++j) {
    const double next =
        x * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(double(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

}  // namespace

QuadratureRule QuadratureRule::gauss_hermite(int n) {
  if (n < 1 || n > hermite_cap) {
    throw std::invalid_argument("gauss_hermite: order must lie in [1, " +
                                std::to_string(hermite_cap) + "]");
  }
  QuadratureRule rule;
  rule.kind = RuleKind::gauss_hermite;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  const double dn = double(n);
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses work down from the largest zero (classic asymptotics).
    if (i == 0) {
      z = std::sqrt(2.0 * dn + 1.0) - 1.85575 * std::pow(2.0 * dn + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(dn, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[n - 1];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[n - 2];
    } else {
      z = 2.0 * z - rule.nodes[n + 1 - i];
    }

    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      const PhiPair p = phi_top_pair(n, z);
      const double deriv = std::sqrt(2.0 * dn) * p.next_to_last - z * p.last;
      const double dz = p.last / deriv;
      z -= dz;
      if (std::fabs(dz) <= 1e-14 * std::fmax(1.0, std::fabs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_hermite: Newton iteration stalled");

    const int hi = n - 1 - i;
    if (hi == i) z = 0.0;  // middle zero of an odd-order rule is exact
    const PhiPair p = phi_top_pair(n, z);
    const double w = 1.0 / (dn * p.next_to_last * p.next_to_last);
    rule.nodes[hi] = z;
    rule.nodes[i] = -z;
    rule.weights[hi] = w;
    rule.weights[i] = w;
  }
  return rule;
}

double geometric_tail_bound(double r, long long kmax) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("geometric_tail_bound: ratio must lie in [0, 1)");
  }
  if (kmax < 0) throw std::domain_error("geometric_tail_bound: kmax must be nonnegative");
  return std::pow(r, double(kmax) + 1.0) / (1.0 - r);
}

}  // namespace sqz
