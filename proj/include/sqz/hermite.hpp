#pragma once
#include <vector>

namespace sqz {

// Highest oscillator-eigenfunction index the recurrences accept.
inline constexpr int hermite_cap = 512;

// Normalized harmonic-oscillator eigenfunction
//   phi_k(x) = (sqrt(pi) 2^k k!)^{-1/2} H_k(x) exp(-x^2/2),
// evaluated with the Gaussian folded into the three-term recurrence
//   phi_{k+1} = x sqrt(2/(k+1)) phi_k - sqrt(k/(k+1)) phi_{k-1},
// so no factorial or bare polynomial value is ever formed.
double hermite_phi(int k, double x);

// phi_0(x) .. phi_kmax(x) from a single recurrence pass.
std::vector<double> hermite_phi_row(int kmax, double x);

}  // namespace sqz
