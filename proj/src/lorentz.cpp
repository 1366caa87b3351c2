#include "sqz/lorentz.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sqz {

namespace {
constexpr double inv_sqrt2 = 0.70710678118654752440;
constexpr double sqrt_pi_inv = 0.56418958354775628695;  // pi^{-1/2}
constexpr double two_pi = 6.28318530717958647693;
}  // namespace

SpacetimePoint SpacetimePoint::from_zt(double z, double t) {
  SpacetimePoint p;
  p.z = z;
  p.t = t;
  p.u = (z + t) * inv_sqrt2;
  p.v = (z - t) * inv_sqrt2;
  return p;
}

SpacetimePoint SpacetimePoint::from_lightcone(double u, double v) {
  SpacetimePoint p;
  p.u = u;
  p.v = v;
  p.z = (u + v) * inv_sqrt2;
  p.t = (u - v) * inv_sqrt2;
  return p;
}

MomentumPoint MomentumPoint::from_qzq0(double qz, double q0) {
  MomentumPoint p;
  p.qz = qz;
  p.q0 = q0;
  p.qu = (q0 - qz) * inv_sqrt2;
  p.qv = (q0 + qz) * inv_sqrt2;
  return p;
}

SpacetimePoint boost(const SpacetimePoint& p, double eta) {
  if (!std::isfinite(eta)) throw std::domain_error("boost: eta must be finite");
  const double ch = std::cosh(eta);
  const double sh = std::sinh(eta);
  return SpacetimePoint::from_zt(p.z * ch + p.t * sh, p.z * sh + p.t * ch);
}

SpacetimePoint boost_lightcone(const SpacetimePoint& p, double eta) {
  if (!std::isfinite(eta)) throw std::domain_error("boost_lightcone: eta must be finite");
  return SpacetimePoint::from_lightcone(p.u * std::exp(eta), p.v * std::exp(-eta));
}

double BoostedOscillatorState::spatial(double z, double t) const {
  const SpacetimePoint p = SpacetimePoint::from_zt(z, t);
  return sqrt_pi_inv * std::exp(-0.5 * (std::exp(-2.0 * eta) * p.u * p.u +
                                        std::exp(2.0 * eta) * p.v * p.v));
}

double BoostedOscillatorState::momentum(double qz, double q0) const {
  const MomentumPoint p = MomentumPoint::from_qzq0(qz, q0);
  return sqrt_pi_inv * std::exp(-0.5 * (std::exp(-2.0 * eta) * p.qu * p.qu +
                                        std::exp(2.0 * eta) * p.qv * p.qv));
}

QuadratureRule squeeze_rule(double eta, double sigmas, double points_per_sigma) {
  if (!std::isfinite(eta)) throw std::domain_error("squeeze_rule: eta must be finite");
  if (!(sigmas > 0.0) || !(points_per_sigma > 0.0)) {
    throw std::domain_error("squeeze_rule: coverage parameters must be positive");
  }
  // Amplitude-level footprint: widest direction sqrt(cosh 2 eta) along z,
  // narrowest e^{-|eta|} along the squeezed light-cone axis.
  const double extent = sigmas * std::sqrt(std::cosh(2.0 * eta));
  const double spacing = std::exp(-std::fabs(eta)) / points_per_sigma;
  const double count = std::ceil(2.0 * extent / spacing) + 1.0;
  if (!(count <= 32769.0)) {
    throw std::domain_error(
        "squeeze_rule: grid too large at this rapidity; use the closed forms instead");
  }
  return QuadratureRule::trapezoid(-extent, extent, static_cast<int>(count));
}

double marginal_width(const BoostedOscillatorState& state, MarginalAxis axis, Exec exec) {
  const QuadratureRule rule = squeeze_rule(state.eta);
  if (axis == MarginalAxis::space_z) {
    return tensor_quad(
        [&state](double z, double t) {
          const double a = state.spatial(z, t);
          return a * a * z * z;
        },
        rule, rule, exec);
  }
  return tensor_quad(
      [&state](double qz, double q0) {
        const double a = state.momentum(qz, q0);
        return a * a * qz * qz;
      },
      rule, rule, exec);
}

double marginal_width_closed(double eta) {
  if (!std::isfinite(eta)) throw std::domain_error("marginal_width_closed: eta must be finite");
  return 0.5 * std::cosh(2.0 * eta);
}

double invariant_equation_residual(const BoostedOscillatorState& state,
                                   const ResidualGrid& grid, Exec exec) {
  if (!(grid.spacing > 0.0) || grid.spacing > 1e-2) {
    throw std::domain_error("invariant_equation_residual: spacing must lie in (0, 1e-2]");
  }
  if (!(grid.extent > 0.0) || !std::isfinite(grid.extent)) {
    throw std::domain_error("invariant_equation_residual: extent must be positive");
  }
  const double h = grid.spacing;
  const double n_est = std::floor(2.0 * grid.extent / h + 0.5) + 1.0;
  if (n_est < 5.0) throw std::domain_error("invariant_equation_residual: grid degenerate");
  if (n_est > 32768.0) {
    throw std::domain_error("invariant_equation_residual: grid too large; coarsen spacing");
  }
  const int n = static_cast<int>(n_est);
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double lo = -0.5 * h * (n - 1);  // symmetric grid honoring the exact spacing
  for (int i = 0; i < n; ++i) xs[i] = lo + i * h;

  const double inv_h2 = 1.0 / (h * h);
  auto residual = [&state, h, inv_h2](double z, double t) {
    const double psi = state.spatial(z, t);
    const double d2t = (state.spatial(z, t + h) - 2.0 * psi + state.spatial(z, t - h)) * inv_h2;
    const double d2z = (state.spatial(z + h, t) - 2.0 * psi + state.spatial(z - h, t)) * inv_h2;
    return 0.5 * ((t * t - z * z) * psi - (d2t - d2z));
  };
  return grid_max_abs(residual, xs, xs, exec);
}

double fourier_momentum_amplitude(const BoostedOscillatorState& state, double qz,
                                  double q0, Exec exec) {
  if (!std::isfinite(qz) || !std::isfinite(q0)) {
    throw std::domain_error("fourier_momentum_amplitude: momentum must be finite");
  }
  const QuadratureRule rule = squeeze_rule(state.eta);
  const double val = tensor_quad(
      [&state, qz, q0](double z, double t) {
        return state.spatial(z, t) * std::cos(qz * z + q0 * t);
      },
      rule, rule, exec);
  return val / two_pi;
}

}  // namespace sqz
