#include "sqz/parton.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/entropy.hpp"
#include "sqz/lorentz.hpp"

namespace sqz {

double rapidity_from_beam(double beam_energy, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::domain_error("rapidity_from_beam: mass must be positive");
  }
  if (!(beam_energy >= mass) || !std::isfinite(beam_energy)) {
    throw std::domain_error("rapidity_from_beam: beam energy must be at least the rest mass");
  }
  const double p = std::sqrt((beam_energy - mass) * (beam_energy + mass));
  return std::log((beam_energy + p) / mass);
}

PartonKinematics PartonKinematics::from_beam(double value, double mass,
                                             EnergyConvention convention) {
  PartonKinematics kin;
  kin.mass = mass;
  if (convention == EnergyConvention::total) {
    kin.beam_energy = value;
    kin.rapidity = rapidity_from_beam(value, mass);
  } else {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
      throw std::domain_error("PartonKinematics: mass must be positive");
    }
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw std::domain_error("PartonKinematics: beam momentum must be nonnegative");
    }
    const double energy = std::hypot(value, mass);
    kin.beam_energy = energy;
    kin.rapidity = std::log((energy + value) / mass);
  }
  return kin;
}

PartonReport parton_report(const PartonKinematics& kin, double omega) {
  if (!std::isfinite(kin.rapidity) || kin.rapidity < 0.0) {
    throw std::domain_error("parton_report: rapidity must be nonnegative");
  }
  const double eta = kin.rapidity;
  PartonReport r;
  r.rapidity = eta;
  r.period_dilation = std::exp(eta);
  r.interaction_ratio = std::exp(-2.0 * eta);
  r.entropy = entropy(eta);
  r.temperature = effective_temperature(eta, omega).temperature;
  r.var_z = marginal_width_closed(eta);
  r.var_qz = marginal_width_closed(eta);
  return r;
}

}  // namespace sqz
