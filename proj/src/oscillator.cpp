#include "sqz/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace sqz {

namespace {
constexpr double inv_sqrt2 = 0.70710678118654752440;
constexpr double sqrt_pi_inv = 0.56418958354775628695;  // pi^{-1/2}
}  // namespace

void OscillatorSystem::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::domain_error("OscillatorSystem: mass must be positive");
  }
  if (!(spring > 0.0) || !std::isfinite(spring)) {
    throw std::domain_error("OscillatorSystem: spring constant must be positive");
  }
  if (!(std::fabs(coupling) < spring)) {
    throw std::domain_error(
        "OscillatorSystem: |coupling| must stay below the spring constant");
  }
}

NormalCoordinates to_normal(double x1, double x2) {
  return {(x1 - x2) * inv_sqrt2, (x1 + x2) * inv_sqrt2};
}

std::pair<double, double> from_normal(const NormalCoordinates& y) {
  return {(y.y2 + y.y1) * inv_sqrt2, (y.y2 - y.y1) * inv_sqrt2};
}

Squeeze eta_from_coupling(const OscillatorSystem& sys) {
  sys.validate();
  return {0.5 * std::log((sys.spring + sys.coupling) / (sys.spring - sys.coupling))};
}

GroundState::GroundState(double eta) : eta_(eta) {
  if (!std::isfinite(eta)) throw std::domain_error("GroundState: eta must be finite");
}

double GroundState::operator()(double x1, double x2) const {
  const NormalCoordinates y = to_normal(x1, x2);
  return sqrt_pi_inv *
         std::exp(-0.5 * (std::exp(eta_) * y.y1 * y.y1 + std::exp(-eta_) * y.y2 * y.y2));
}

GroundState ground_state(const OscillatorSystem& sys) {
  return GroundState(eta_from_coupling(sys).eta);
}

GroundState ground_state_for_eta(double eta) { return GroundState(eta); }

}  // namespace sqz
