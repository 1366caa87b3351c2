#pragma once

namespace sqz {

// Whether the beam figure quotes total energy E or longitudinal momentum p.
enum class EnergyConvention { total, momentum };

// Rapidity of a beam of total energy E and rest mass m (same units):
// eta = ln((E + sqrt(E^2 - m^2)) / m). Requires m > 0, E >= m.
double rapidity_from_beam(double beam_energy, double mass);

struct PartonKinematics {
  double beam_energy = 0.0;  // total energy, after conversion if needed
  double mass = 0.0;
  double rapidity = 0.0;

  static PartonKinematics from_beam(double value, double mass,
                                    EnergyConvention convention = EnergyConvention::total);
};

// Boosted-oscillator observables for one beam setting. The two variances are
// equal by construction (space and momentum marginals widen identically).
struct PartonReport {
  double rapidity = 0.0;
  double period_dilation = 0.0;    // e^{eta}
  double interaction_ratio = 0.0;  // e^{-2 eta}
  double entropy = 0.0;
  double temperature = 0.0;
  double var_z = 0.0;
  double var_qz = 0.0;
};

// Published benchmark: the interaction-time ratio quoted for a 900 GeV beam.
inline constexpr double reference_interaction_ratio = 1e-6;

PartonReport parton_report(const PartonKinematics& kin, double omega);

}  // namespace sqz
