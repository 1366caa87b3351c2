#pragma once
#include <vector>

#include "sqz/kernels.hpp"
#include "sqz/oscillator.hpp"
#include "sqz/quadrature.hpp"

namespace sqz {

// Eigenvalues lambda_k = (1 - r) r^k of the one-mode reduced density matrix,
// with r = tanh^2(eta/2), truncated once the geometric tail bound drops to
// tol. truncation_error holds the exact dropped mass r^{kmax+1}.
struct SchmidtSpectrum {
  double eta = 0.0;
  std::vector<double> lambdas;
  double truncation_error = 0.0;
};

SchmidtSpectrum schmidt_spectrum(double eta, double tol = 1e-12);

double purity(double eta);                               // Tr rho^2 = 1 / cosh(eta)
double purity_series(double eta, double tol = 1e-12);    // sum_k lambda_k^2, truncated
double entropy(double eta);                              // closed form, even in eta
double entropy_from_spectrum(const SchmidtSpectrum& s);  // -sum lambda ln lambda
double spectrum_second_moment(const SchmidtSpectrum& s); // sum lambda_k (k + 1/2)

// Truncated eigenfunction expansion of the two-mode ground state,
//   (1/cosh(eta/2)) sum_k tanh^k(eta/2) phi_k(x1) phi_k(x2),
// cut at the same kmax the spectrum uses for this tol.
double schmidt_reconstruct(double eta, double tol, double x1, double x2);

// Temperature at which a thermal oscillator of frequency omega reproduces the
// reduced state: tanh(eta/2) = exp(-omega / T). eta = 0 maps to T = 0;
// negative eta has no thermal description and is rejected.
struct ThermalMap {
  double omega = 0.0;
  double temperature = 0.0;
};

ThermalMap effective_temperature(double eta, double omega);

// rho(x, x') sampled on quadrature nodes by integrating the second coordinate
// out of the pure two-mode state. Independent route to the eigenvalues: the
// diagonal elements <phi_k| rho |phi_k> must match the geometric law.
class ReducedDensityMatrix {
 public:
  ReducedDensityMatrix(const OscillatorSystem& sys, const QuadratureRule& rule,
                       Exec exec = Exec::parallel);

  double eigenvalue(int k) const;  // k in [0, 30]
  const QuadratureRule& rule() const { return rule_; }

 private:
  QuadratureRule rule_;
  std::vector<double> rho_;  // dense n x n, row major
};

// One-shot convenience wrapper using a fixed wide trapezoid rule.
double reduced_density_eigenvalue_oracle(const OscillatorSystem& sys, int k,
                                         Exec exec = Exec::parallel);

}  // namespace sqz
