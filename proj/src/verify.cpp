#include "sqz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "sqz/entropy.hpp"
#include "sqz/hermite.hpp"
#include "sqz/kernels.hpp"
#include "sqz/lorentz.hpp"
#include "sqz/oscillator.hpp"
#include "sqz/parton.hpp"
#include "sqz/quadrature.hpp"

namespace sqz::verify {

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) xs[i] = a + i * h;
  xs[n - 1] = b;
  return xs;
}

struct Suite {
  bool strict;
  std::vector<Check> checks;

  // pass when measured <= bound (or strictly below, for monotonicity checks)
  void add(std::string name, double measured, double bound, bool strict_less = false) {
    const bool ok = std::isfinite(measured) &&
                    (strict_less ? measured < bound : measured <= bound);
    checks.push_back({std::move(name), measured, bound, ok});
  }
};

// ---------------------------------------------------------------- numerics

void check_hermite(Suite& s) {
  // Gram matrix of phi_0..phi_kmax under a wide trapezoid rule.
  {
    const int kmax = s.strict ? 30 : 12;
    const QuadratureRule rule = QuadratureRule::trapezoid(-12.0, 12.0, 200);
    const std::size_t n = rule.size(), m = static_cast<std::size_t>(kmax) + 1;
    std::vector<std::vector<double>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = hermite_phi_row(kmax, rule.nodes[i]);
    double worst = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = j; k < m; ++k) {
        double g = 0.0;
        for (std::size_t i = 0; i < n; ++i) g += rule.weights[i] * rows[i][j] * rows[i][k];
        worst = std::fmax(worst, std::fabs(g - (j == k ? 1.0 : 0.0)));
      }
    }
    s.add("hermite/orthonormality-trapezoid", worst, 1e-9);
  }

  // Same Gram under Gauss-Hermite, where the rule is exact by construction.
  {
    const int n = s.strict ? 64 : 40;
    const QuadratureRule rule = QuadratureRule::gauss_hermite(n);
    std::vector<std::vector<double>> rows(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
      rows[i] = hermite_phi_row(n - 1, rule.nodes[i]);
    }
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        double g = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
          g += rule.weights[i] * rows[i][j] * rows[i][k];
        }
        worst = std::fmax(worst, std::fabs(g - (j == k ? 1.0 : 0.0)));
      }
    }
    s.add("hermite/orthonormality-gauss-exact", worst, 1e-12);
  }

  // Double recurrence against an 80-bit long double replay.
  {
    const int kmax = s.strict ? 100 : 40;
    const auto xs = linspace(-10.0, 10.0, s.strict ? 41 : 21);
    double worst = 0.0;
    for (double x : xs) {
      long double prev = 0.0L;
      long double cur = 0.75112554446494248286L * std::exp(-0.5L * (long double)x * x);
      const std::vector<double> row = hermite_phi_row(kmax, x);
      worst = std::fmax(worst, std::fabs(row[0] - (double)cur));
      for (int j = 0; j < kmax; ++j) {
        const long double next = (long double)x * std::sqrt(2.0L / (j + 1)) * cur -
                                 std::sqrt((long double)j / (j + 1)) * prev;
        prev = cur;
        cur = next;
        worst = std::fmax(worst, std::fabs(row[j + 1] - (double)cur));
      }
    }
    s.add("hermite/recurrence-vs-long-double", worst, 1e-10);
  }
}

void check_quadrature(Suite& s) {
  {
    double worst = 0.0;
    const double cases[][3] = {{-1.0, 1.0, 17}, {-12.0, 12.0, 200}, {0.25, 9.75, 53}};
    for (const auto& c : cases) {
      const QuadratureRule r = QuadratureRule::trapezoid(c[0], c[1], (int)c[2]);
      double sum = 0.0;
      for (double w : r.weights) sum += w;
      worst = std::fmax(worst, std::fabs(sum - (c[1] - c[0])));
    }
    s.add("quadrature/trapezoid-measure", worst, 1e-12);
  }

  // The geometric tail bound must dominate any brute-force partial tail.
  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> rdist(0.0, 0.999);
    std::uniform_int_distribution<int> kdist(0, 300);
    double worst = -1.0;
    for (int trial = 0; trial < 200; ++trial) {
      const double r = rdist(rng);
      const int kmax = kdist(rng);
      const double bound = geometric_tail_bound(r, kmax);
      double tail = 0.0;
      double term = std::pow(r, double(kmax) + 1.0);
      for (int k = 0; k < 4000 && term > 0.0; ++k) {
        tail += term;
        term *= r;
      }
      worst = std::fmax(worst, (tail - bound) / std::fmax(bound, 1e-300));
    }
    s.add("quadrature/tail-bound-dominates", worst, 1e-11);
  }

  // 2-D tensor rule on the unit Gaussian: mass, odd moment, second moment.
  {
    const QuadratureRule r = QuadratureRule::trapezoid(-8.0, 8.0, 257);
    const double inv_pi = 0.31830988618379067154;
    const double mass = integrate_2d(
        [inv_pi](double x, double y) { return inv_pi * std::exp(-x * x - y * y); }, r);
    const double odd = integrate_2d(
        [](double x, double y) { return x * std::exp(-x * x - y * y); }, r);
    const double second = integrate_2d(
        [inv_pi](double x, double y) { return inv_pi * x * x * std::exp(-x * x - y * y); },
        r);
    s.add("quadrature/gaussian-mass", std::fabs(mass - 1.0), 1e-10);
    s.add("quadrature/gaussian-odd-moment", std::fabs(odd), 1e-12);
    s.add("quadrature/gaussian-second-moment", std::fabs(second - 0.5), 1e-10);
  }
}

// ---------------------------------------------------------------- oscillator

void check_oscillator(Suite& s) {
  // eta from the closed form vs a numerical 2x2 diagonalization.
  {
    double worst = 0.0;
    for (double spring : {0.5, 1.0, 2.0, 5.0}) {
      for (double frac : {-0.99, -0.5, 0.1, 0.5, 0.9, 0.99}) {
        const OscillatorSystem sys{1.0, spring, frac * spring};
        const double eta = eta_from_coupling(sys).eta;
        const double tr = 2.0 * spring;
        const double det = spring * spring - sys.coupling * sys.coupling;
        const double disc = std::sqrt(tr * tr - 4.0 * det);
        const double hi = 0.5 * (tr + disc), lo = 0.5 * (tr - disc);
        const double eta_diag = 0.5 * std::log(hi / lo) * (sys.coupling < 0 ? -1.0 : 1.0);
        worst = std::fmax(worst, std::fabs(eta - eta_diag) / std::fmax(1.0, std::fabs(eta)));
      }
    }
    s.add("oscillator/eta-vs-diagonalization", worst, 1e-12);
  }

  // Rotation preserves lengths and round-trips.
  {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const double x1 = dist(rng), x2 = dist(rng);
      const NormalCoordinates y = to_normal(x1, x2);
      const double len = std::fabs(y.y1 * y.y1 + y.y2 * y.y2 - (x1 * x1 + x2 * x2));
      const auto [b1, b2] = from_normal(y);
      const double rt = std::fmax(std::fabs(b1 - x1), std::fabs(b2 - x2));
      worst = std::fmax(worst, std::fmax(len, rt) / std::fmax(1.0, x1 * x1 + x2 * x2));
    }
    s.add("oscillator/normal-coordinate-isometry", worst, 1e-12);
  }

  // Exchange symmetry and the coupling-sign flip are exact.
  {
    const auto xs = linspace(-3.0, 3.0, 21);
    double worst_ex = 0.0, worst_flip = 0.0;
    for (double eta : {0.7, 1.9}) {
      const GroundState psi = ground_state_for_eta(eta);
      const GroundState psi_neg = ground_state_for_eta(-eta);
      for (double a : xs) {
        for (double b : xs) {
          worst_ex = std::fmax(worst_ex, std::fabs(psi(a, b) - psi(b, a)));
          // flipping the coupling sign swaps the normal modes: psi_{-eta}(a, b)
          // coincides with psi_eta(a, -b)
          worst_flip = std::fmax(worst_flip, std::fabs(psi_neg(a, b) - psi(a, -b)));
        }
      }
    }
    s.add("oscillator/exchange-symmetry", worst_ex, 1e-15);
    s.add("oscillator/coupling-sign-flip", worst_flip, 1e-15);
  }

  // Unit norm over a mass/spring/coupling sweep (mass must drop out).
  {
    double worst = 0.0;
    const auto fracs = s.strict ? std::vector<double>{0.0, 0.5, 0.9, 0.99}
                                : std::vector<double>{0.0, 0.9};
    for (double mass : {0.5, 2.0}) {
      for (double spring : {0.5, 5.0}) {
        for (double frac : fracs) {
          const OscillatorSystem sys{mass, spring, frac * spring};
          const GroundState psi = ground_state(sys);
          const QuadratureRule rule = squeeze_rule(0.5 * psi.eta());
          const double norm = integrate_2d(
              [&psi](double a, double b) {
                const double v = psi(a, b);
                return v * v;
              },
              rule);
          worst = std::fmax(worst, std::fabs(norm - 1.0));
        }
      }
    }
    s.add("oscillator/ground-state-normalization", worst, 1e-9);
  }
}

// ---------------------------------------------------------------- entropy

void check_entropy(Suite& s) {
  // Spectrum mass: retained eigenvalues plus the exact dropped tail give 1.
  {
    double worst = 0.0;
    for (double eta : linspace(0.0, 8.0, s.strict ? 33 : 9)) {
      const SchmidtSpectrum spec = schmidt_spectrum(eta, 1e-12);
      double sum = 0.0;
      for (double lam : spec.lambdas) sum += lam;
      worst = std::fmax(worst, std::fabs(sum + spec.truncation_error - 1.0));
    }
    s.add("entropy/spectrum-trace", worst, 1e-12);
  }

  // Geometric ratio between consecutive eigenvalues.
  {
    double worst = 0.0;
    for (double eta : {0.5, 2.0, 5.0}) {
      const SchmidtSpectrum spec = schmidt_spectrum(eta, 1e-10);
      const double th = std::tanh(0.5 * eta);
      const double r = th * th;
      for (std::size_t k = 0; k + 1 < spec.lambdas.size(); ++k) {
        worst = std::fmax(worst, std::fabs(spec.lambdas[k + 1] / spec.lambdas[k] / r - 1.0));
      }
    }
    s.add("entropy/spectrum-geometric-ratio", worst, 1e-15);
  }

  const auto etas6 = linspace(0.0, 6.0, s.strict ? 100 : 25);

  // Purity: truncated series vs 1/cosh.
  {
    double worst = 0.0;
    for (double eta : etas6) {
      worst = std::fmax(worst, std::fabs(purity_series(eta, 1e-13) - purity(eta)));
    }
    s.add("entropy/purity-series-vs-closed", worst, 1e-12);
  }

  // Entropy: spectrum route vs closed form; exact zero at eta = 0.
  {
    double worst = 0.0;
    for (double eta : etas6) {
      const double via_spec = entropy_from_spectrum(schmidt_spectrum(eta, 1e-14));
      worst = std::fmax(worst, std::fabs(via_spec - entropy(eta)));
    }
    s.add("entropy/spectrum-vs-closed", worst, 1e-9);
    s.add("entropy/zero-at-zero-coupling", std::fabs(entropy(0.0)), 0.0);
  }

  // Monotonicity along the grid (strictly).
  {
    double worst_p = -1.0, worst_e = -1.0;
    for (std::size_t i = 0; i + 1 < etas6.size(); ++i) {
      worst_p = std::fmax(worst_p, purity(etas6[i + 1]) - purity(etas6[i]));
      worst_e = std::fmax(worst_e, entropy(etas6[i]) - entropy(etas6[i + 1]));
    }
    s.add("entropy/purity-strictly-decreasing", worst_p, 0.0, true);
    s.add("entropy/entropy-strictly-increasing", worst_e, 0.0, true);
  }

  // Second moment of the spectrum vs cosh(eta)/2.
  {
    double worst = 0.0;
    for (double eta : linspace(0.0, 6.0, s.strict ? 25 : 13)) {
      const double moment = spectrum_second_moment(schmidt_spectrum(eta, 1e-14));
      worst = std::fmax(worst, std::fabs(moment - 0.5 * std::cosh(eta)));
    }
    s.add("entropy/second-moment", worst, 1e-8);
  }

  // Thermal map: Boltzmann factor round-trip, zero only at zero squeeze.
  {
    double worst = 0.0, min_t = 1e300;
    for (double omega : {1.0, 2.5}) {
      for (double eta : linspace(0.1, 6.0, 25)) {
        const ThermalMap map = effective_temperature(eta, omega);
        min_t = std::fmin(min_t, map.temperature);
        worst = std::fmax(
            worst, std::fabs(std::tanh(0.5 * eta) - std::exp(-map.omega / map.temperature)));
      }
    }
    s.add("entropy/boltzmann-roundtrip", worst, 1e-12);
    s.add("entropy/temperature-zero-at-rest", std::fabs(effective_temperature(0.0, 1.0).temperature), 0.0);
    s.add("entropy/temperature-positive", -min_t, 0.0, true);
  }

  // Partial-trace quadrature oracle vs the geometric law.
  {
    const auto etas = s.strict ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{1.0};
    const int kmax = s.strict ? 10 : 4;
    double worst = 0.0;
    for (double eta : etas) {
      const OscillatorSystem sys{1.0, 1.0, std::tanh(eta)};
      const double eta_used = eta_from_coupling(sys).eta;
      const double th = std::tanh(0.5 * eta_used);
      const double r = th * th;
      const ReducedDensityMatrix rho(sys, QuadratureRule::trapezoid(-12.0, 12.0, 200));
      double lam = 1.0 - r;
      for (int k = 0; k <= kmax; ++k) {
        worst = std::fmax(worst, std::fabs(rho.eigenvalue(k) - lam));
        lam *= r;
      }
    }
    s.add("entropy/partial-trace-oracle", worst, 1e-6);
  }

  // Truncated eigenfunction expansion rebuilds the two-mode amplitude.
  {
    const auto etas = s.strict ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{1.0};
    const auto xs = linspace(-4.0, 4.0, s.strict ? 41 : 21);
    double worst = 0.0;
    for (double eta : etas) {
      const GroundState psi = ground_state_for_eta(eta);
      for (double a : xs) {
        for (double b : xs) {
          worst = std::fmax(worst, std::fabs(schmidt_reconstruct(eta, 1e-12, a, b) - psi(a, b)));
        }
      }
    }
    s.add("entropy/schmidt-reconstruction", worst, 1e-6);
  }
}

// ---------------------------------------------------------------- lorentz

void check_lorentz(Suite& s) {
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> rap(-2.0, 2.0);

  // Matrix route vs light-cone scaling, additivity, uv invariance.
  {
    double worst_route = 0.0, worst_add = 0.0, worst_uv = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const SpacetimePoint p = SpacetimePoint::from_zt(coord(rng), coord(rng));
      const double a = rap(rng), b = rap(rng);
      const SpacetimePoint m = boost(p, a);
      const SpacetimePoint l = boost_lightcone(p, a);
      worst_route = std::fmax(worst_route,
                              std::fmax(std::fmax(std::fabs(m.z - l.z), std::fabs(m.t - l.t)),
                                        std::fmax(std::fabs(m.u - l.u), std::fabs(m.v - l.v))));
      const SpacetimePoint two = boost(boost(p, a), b);
      const SpacetimePoint one = boost(p, a + b);
      worst_add = std::fmax(worst_add,
                            std::fmax(std::fabs(two.z - one.z), std::fabs(two.t - one.t)));
      worst_uv = std::fmax(worst_uv, std::fabs(m.u * m.v - p.u * p.v) /
                                         std::fmax(1.0, std::fabs(p.u * p.v)));
    }
    s.add("lorentz/boost-route-agreement", worst_route, 1e-12);
    s.add("lorentz/boost-additivity", worst_add, 1e-12);
    s.add("lorentz/uv-product-invariant", worst_uv, 1e-12);
  }

  // Discrete symmetries of the amplitude are exact.
  {
    const auto xs = linspace(-2.5, 2.5, 15);
    double worst = 0.0;
    for (double eta : {0.6, 1.4}) {
      const BoostedOscillatorState st{eta};
      const BoostedOscillatorState neg{-eta};
      for (double z : xs) {
        for (double t : xs) {
          worst = std::fmax(worst, std::fabs(st.spatial(z, t) - st.spatial(t, z)));
          worst = std::fmax(worst, std::fabs(st.spatial(z, -t) - neg.spatial(z, t)));
        }
      }
    }
    s.add("lorentz/amplitude-symmetries", worst, 1e-15);
  }

  // The boosted amplitude is the coupled ground state at twice the rapidity.
  {
    const auto xs = linspace(-2.5, 2.5, 15);
    double worst = 0.0;
    for (double eta : {0.45, 1.1}) {
      const BoostedOscillatorState st{eta};
      const GroundState psi = ground_state_for_eta(2.0 * eta);
      for (double z : xs) {
        for (double t : xs) {
          worst = std::fmax(worst, std::fabs(st.spatial(z, t) - psi(z, t)));
        }
      }
    }
    s.add("lorentz/coupled-oscillator-correspondence", worst, 1e-15);
  }

  const auto etas = s.strict ? std::vector<double>{0.0, 0.5, 1.0, 2.0}
                             : std::vector<double>{0.0, 1.0};

  // Both representations stay normalized.
  {
    double worst = 0.0;
    for (double eta : etas) {
      const BoostedOscillatorState st{eta};
      const QuadratureRule rule = squeeze_rule(eta);
      const double nspace = integrate_2d(
          [&st](double z, double t) {
            const double a = st.spatial(z, t);
            return a * a;
          },
          rule);
      const double nmom = integrate_2d(
          [&st](double qz, double q0) {
            const double a = st.momentum(qz, q0);
            return a * a;
          },
          rule);
      worst = std::fmax(worst, std::fmax(std::fabs(nspace - 1.0), std::fabs(nmom - 1.0)));
    }
    s.add("lorentz/normalization", worst, 1e-9);
  }

  // Light-cone variances scale as e^{±2 eta}/2 and preserve their product.
  {
    double worst_uv = 0.0, worst_area = 0.0;
    for (double eta : etas) {
      const BoostedOscillatorState st{eta};
      const QuadratureRule rule = squeeze_rule(eta);
      const double var_u = integrate_2d(
          [&st](double z, double t) {
            const SpacetimePoint p = SpacetimePoint::from_zt(z, t);
            const double a = st.spatial(z, t);
            return a * a * p.u * p.u;
          },
          rule);
      const double var_v = integrate_2d(
          [&st](double z, double t) {
            const SpacetimePoint p = SpacetimePoint::from_zt(z, t);
            const double a = st.spatial(z, t);
            return a * a * p.v * p.v;
          },
          rule);
      const double cu = 0.5 * std::exp(2.0 * eta);
      const double cv = 0.5 * std::exp(-2.0 * eta);
      worst_uv = std::fmax(worst_uv, std::fabs(var_u - cu) / std::fmax(1.0, cu));
      worst_uv = std::fmax(worst_uv, std::fabs(var_v - cv) / std::fmax(1.0, cv));
      worst_area = std::fmax(worst_area, std::fabs(var_u * var_v - 0.25));
    }
    s.add("lorentz/lightcone-variances", worst_uv, 1e-8);
    s.add("lorentz/uncertainty-area", worst_area, 1e-8);
  }

  // Marginal widths: quadrature vs cosh(2 eta)/2, in both representations.
  {
    double worst = 0.0;
    for (double eta : etas) {
      const BoostedOscillatorState st{eta};
      const double closed = marginal_width_closed(eta);
      worst = std::fmax(worst, std::fabs(marginal_width(st, MarginalAxis::space_z) - closed));
      worst = std::fmax(worst, std::fabs(marginal_width(st, MarginalAxis::momentum_qz) - closed));
    }
    s.add("lorentz/marginal-width-agreement", worst, 1e-8);
  }

  // Invariant wave equation: residual small and shrinking like h^2.
  {
    const auto res_etas = s.strict ? std::vector<double>{0.0, 0.5, 1.0}
                                   : std::vector<double>{1.0};
    const double h = s.strict ? 1e-3 : 2e-3;
    const double bound = s.strict ? 1e-5 : 4e-5;
    double worst = 0.0, worst_ratio = 0.0;
    for (double eta : res_etas) {
      const BoostedOscillatorState st{eta};
      const double fine = invariant_equation_residual(st, {2.0, h});
      const double coarse = invariant_equation_residual(st, {2.0, 2.0 * h});
      worst = std::fmax(worst, fine);
      worst_ratio = std::fmax(worst_ratio, std::fabs(coarse / fine - 4.0));
    }
    s.add("lorentz/invariant-equation-residual", worst, bound);
    s.add("lorentz/residual-second-order", worst_ratio, 0.8);
  }

  // Quadrature Fourier transform vs the closed momentum amplitude.
  {
    const auto f_etas = s.strict ? std::vector<double>{0.0, 0.75, 1.5}
                                 : std::vector<double>{0.75};
    double worst = 0.0;
    for (double eta : f_etas) {
      const BoostedOscillatorState st{eta};
      const double su = std::exp(eta), sv = std::exp(-eta);
      for (double fu : {-2.5, -1.0, 0.0, 1.2, 2.5}) {
        for (double fv : {-2.5, -1.0, 0.0, 1.2, 2.5}) {
          const double qu = fu * su, qv = fv * sv;
          const double qz = (qv - qu) * 0.70710678118654752440;
          const double q0 = (qu + qv) * 0.70710678118654752440;
          const double closed = st.momentum(qz, q0);
          const double quad = fourier_momentum_amplitude(st, qz, q0);
          worst = std::fmax(worst, std::fabs(quad - closed) / std::fabs(closed));
        }
      }
    }
    s.add("lorentz/fourier-vs-closed", worst, 1e-6);
  }
}

// ---------------------------------------------------------------- parton

void check_parton(Suite& s) {
  // Log form vs asinh route for the rapidity.
  {
    double worst = 0.0;
    for (double energy : {0.938, 1.0, 2.0, 30.0, 900.0, 5000.0}) {
      const double eta = rapidity_from_beam(energy, 0.938);
      const double p = std::sqrt((energy - 0.938) * (energy + 0.938));
      const double via_asinh = std::asinh(p / 0.938);
      worst = std::fmax(worst, std::fabs(eta - via_asinh) / std::fmax(1.0, via_asinh));
    }
    s.add("parton/rapidity-vs-asinh", worst, 1e-12);
  }

  // Report internal consistency: dilation^2 * ratio = 1, entropy/widths match.
  {
    double worst = 0.0;
    for (double energy : {1.0, 10.0, 900.0}) {
      const PartonReport r =
          parton_report(PartonKinematics::from_beam(energy, 0.938), 1.0);
      worst = std::fmax(worst, std::fabs(r.period_dilation * r.period_dilation *
                                             r.interaction_ratio - 1.0));
      worst = std::fmax(worst, std::fabs(r.entropy - entropy(r.rapidity)));
      worst = std::fmax(worst,
                        std::fabs(r.var_z - marginal_width_closed(r.rapidity)) /
                            std::fmax(1.0, r.var_z));
      worst = std::fmax(worst, std::fabs(r.var_qz - r.var_z));
    }
    s.add("parton/report-consistency", worst, 1e-12);
  }

  // Monotone trends along a beam-energy ladder.
  {
    const double energies[] = {1.0, 2.0, 10.0, 100.0, 900.0, 1800.0, 5000.0};
    double worst_ratio = -1.0, worst_entropy = -1.0;
    double prev_ratio = 2.0, prev_entropy = -1.0;
    for (double energy : energies) {
      const PartonReport r =
          parton_report(PartonKinematics::from_beam(energy, 0.938), 1.0);
      worst_ratio = std::fmax(worst_ratio, r.interaction_ratio - prev_ratio);
      worst_entropy = std::fmax(worst_entropy, prev_entropy - r.entropy);
      prev_ratio = r.interaction_ratio;
      prev_entropy = r.entropy;
    }
    s.add("parton/ratio-strictly-decreasing", worst_ratio, 0.0, true);
    s.add("parton/entropy-strictly-increasing", worst_entropy, 0.0, true);
  }

  // Rest limit: rapidity, ratio and entropy approach their at-rest values.
  // (The effective temperature vanishes too, but only logarithmically.)
  {
    const double eps = 1e-12;
    const PartonReport r =
        parton_report(PartonKinematics::from_beam(0.938 * (1.0 + eps), 0.938), 1.0);
    const double worst = std::fmax(std::fabs(r.interaction_ratio - 1.0),
                                   std::fmax(std::fabs(r.entropy), r.rapidity));
    s.add("parton/rest-limit", worst, 1e-5);
  }

  // Published interaction-ratio window for the 900 GeV benchmark.
  {
    const PartonReport r = parton_report(PartonKinematics::from_beam(900.0, 0.938), 1.0);
    s.add("parton/benchmark-ratio-upper", r.interaction_ratio, reference_interaction_ratio);
    s.add("parton/benchmark-ratio-above-floor", 1e-7 - r.interaction_ratio, 0.0);
  }
}

}  // namespace

std::vector<Check> run_all(Profile profile) {
  Suite s{profile == Profile::strict, {}};
  check_hermite(s);
  check_quadrature(s);
  check_oscillator(s);
  check_entropy(s);
  check_lorentz(s);
  check_parton(s);
  return std::move(s.checks);
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace sqz::verify
