#pragma once
#include "sqz/kernels.hpp"
#include "sqz/quadrature.hpp"

namespace sqz {

// Longitudinal space-time point (z, t) with light-cone components
// u = (z + t)/sqrt2, v = (z - t)/sqrt2 kept alongside.
struct SpacetimePoint {
  double z = 0.0, t = 0.0;
  double u = 0.0, v = 0.0;

  static SpacetimePoint from_zt(double z, double t);
  static SpacetimePoint from_lightcone(double u, double v);
};

// Conjugate pair (q_z, q_0) with q_u = (q_0 - q_z)/sqrt2, q_v = (q_0 + q_z)/sqrt2.
struct MomentumPoint {
  double qz = 0.0, q0 = 0.0;
  double qu = 0.0, qv = 0.0;

  static MomentumPoint from_qzq0(double qz, double q0);
};

// Hyperbolic rotation by rapidity eta: cosh/sinh matrix acting on (z, t).
SpacetimePoint boost(const SpacetimePoint& p, double eta);
// Same map as pure light-cone scaling u -> e^{eta} u, v -> e^{-eta} v.
SpacetimePoint boost_lightcone(const SpacetimePoint& p, double eta);

// Ground-state covariant oscillator seen from a frame boosted by eta.
// spatial:  pi^{-1/2} exp(-(e^{-2 eta} u^2 + e^{2 eta} v^2) / 2)
// momentum: same form in (q_u, q_v); both stay normalized for every eta.
struct BoostedOscillatorState {
  double eta = 0.0;

  double spatial(double z, double t) const;
  double momentum(double qz, double q0) const;
};

enum class MarginalAxis { space_z, momentum_qz };

// Variance of the z (or q_z) marginal computed by 2-D quadrature.
// Both axes obey the same closed form cosh(2 eta) / 2.
double marginal_width(const BoostedOscillatorState& state, MarginalAxis axis,
                      Exec exec = Exec::parallel);
double marginal_width_closed(double eta);

// Centered-difference scan of the invariant oscillator equation
//   (1/2) { (t^2 - z^2) - (d^2/dt^2 - d^2/dz^2) } psi = 0
// over [-extent, extent]^2; returns the max absolute residual (O(h^2) small).
struct ResidualGrid {
  double extent = 2.0;
  double spacing = 1e-3;
};

double invariant_equation_residual(const BoostedOscillatorState& state,
                                   const ResidualGrid& grid,
                                   Exec exec = Exec::parallel);

// (1/2pi) iint psi(z, t) cos(q_z z + q_0 t) dz dt: quadrature route to the
// momentum amplitude, cross-checking the closed form.
double fourier_momentum_amplitude(const BoostedOscillatorState& state, double qz,
                                  double q0, Exec exec = Exec::parallel);

// Trapezoid rule wide and fine enough for amplitude-level integrands at this
// rapidity: extent ~ sigmas * sqrt(cosh 2 eta), spacing ~ e^{-|eta|} / points_per_sigma.
QuadratureRule squeeze_rule(double eta, double sigmas = 8.0,
                            double points_per_sigma = 4.0);

}  // namespace sqz
