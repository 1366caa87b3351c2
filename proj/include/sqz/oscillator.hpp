#pragma once
#include <utility>

namespace sqz {

// Two identical unit-frequency oscillators with spring constant `spring`,
// bilinearly coupled with strength `coupling`. The potential stays positive
// definite only for |coupling| < spring.
struct OscillatorSystem {
  double mass = 1.0;
  double spring = 1.0;
  double coupling = 0.0;

  void validate() const;  // throws std::domain_error on a bad parameter set
};

struct Squeeze {
  double eta = 0.0;
};

// Rotated pair in which the coupled Hamiltonian separates:
// y1 carries the stiffened mode, y2 the softened one.
struct NormalCoordinates {
  double y1 = 0.0;
  double y2 = 0.0;
};

NormalCoordinates to_normal(double x1, double x2);
std::pair<double, double> from_normal(const NormalCoordinates& y);

// eta = (1/2) ln((spring + coupling) / (spring - coupling)).
Squeeze eta_from_coupling(const OscillatorSystem& sys);

// Normalized two-variable ground-state amplitude
//   psi(x1, x2) = pi^{-1/2} exp(-(e^{eta} y1^2 + e^{-eta} y2^2) / 2).
class GroundState {
 public:
  explicit GroundState(double eta);
  double operator()(double x1, double x2) const;
  double eta() const { return eta_; }

 private:
  double eta_;
};

GroundState ground_state(const OscillatorSystem& sys);
GroundState ground_state_for_eta(double eta);

}  // namespace sqz
