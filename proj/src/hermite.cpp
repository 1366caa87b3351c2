#include "sqz/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sqz {

namespace {

constexpr double quartic_root_pi_inv = 0.75112554446494248286;  // pi^{-1/4}

void check_args(int k, double x) {
  if (k < 0) throw std::domain_error("hermite_phi: index must be nonnegative");
  if (k > hermite_cap) {
    throw std::domain_error("hermite_phi: index " + std::to_string(k) +
                            " exceeds cap " + std::to_string(hermite_cap));
  }
  if (!std::isfinite(x)) throw std::domain_error("hermite_phi: argument must be finite");
}

}  // namespace

double hermite_phi(int k, double x) {
  check_args(k, x);
  double prev = 0.0;
  double cur = quartic_root_pi_inv * std::exp(-0.5 * x * x);
  for (int j = 0; j < k; ++j) {
    const double next =
        x * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(double(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> hermite_phi_row(int kmax, double x) {
  check_args(kmax, x);
  std::vector<double> row(static_cast<std::size_t>(kmax) + 1);
  double prev = 0.0;
  double cur = quartic_root_pi_inv * std::exp(-0.5 * x * x);
  row[0] = cur;
  for (int j = 0; j < kmax; ++j) {
    const double next =
        x * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(double(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
    row[static_cast<std::size_t>(j) + 1] = cur;
  }
  return row;
}

}  // namespace sqz
