#include "sqz/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/hermite.hpp"

namespace sqz {

namespace {

constexpr long long spectrum_cap = 1LL << 22;

void check_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw std::domain_error("spectrum tolerance must be a positive finite number");
  }
}

}  // namespace

SchmidtSpectrum schmidt_spectrum(double eta, double tol) {
  check_tol(tol);
  if (!std::isfinite(eta)) throw std::domain_error("schmidt_spectrum: eta must be finite");

  const double th = std::tanh(0.5 * eta);
  const double r = th * th;

  long long kmax = 0;
  if (r > 0.0) {
    double bound = r / (1.0 - r);  // tail past k = 0
    while (bound > tol) {
      bound *= r;
      ++kmax;
      if (kmax > spectrum_cap) {
        throw std::domain_error(
            "schmidt_spectrum: spectrum would exceed the length cap; raise tol");
      }
    }
  }

  SchmidtSpectrum s;
  s.eta = eta;
  s.lambdas.resize(static_cast<std::size_t>(kmax) + 1);
  const double lam0 = 1.0 - r;
  double lam = lam0;
  for (long long k = 0; k <= kmax; ++k) {
    s.lambdas[static_cast<std::size_t>(k)] = lam;
    lam *= r;
  }
  s.truncation_error = std::pow(r, double(kmax) + 1.0);  // exact dropped mass
  return s;
}

double purity(double eta) {
  if (!std::isfinite(eta)) throw std::domain_error("purity: eta must be finite");
  return 1.0 / std::cosh(eta);
}

double purity_series(double eta, double tol) {
  check_tol(tol);
  if (!std::isfinite(eta)) throw std::domain_error("purity_series: eta must be finite");
  const double th = std::tanh(0.5 * eta);
  const double r2 = th * th;
  const double r4 = r2 * r2;
  double term = (1.0 - r2) * (1.0 - r2);  // lambda_0^2
  double sum = 0.0;
  for (long long k = 0;; ++k) {
    sum += term;
    if (term * r4 / (1.0 - r4) <= tol || r4 == 0.0) break;
    if (k > spectrum_cap) {
      throw std::domain_error("purity_series: series too long for this tol");
    }
    term *= r4;
  }
  return sum;
}

double entropy(double eta) {
  if (!std::isfinite(eta)) throw std::domain_error("entropy: eta must be finite");
  const double h = 0.5 * std::fabs(eta);
  if (h == 0.0) return 0.0;
  // rearranged from cosh^2 ln cosh - sinh^2 ln sinh: the direct difference
  // cancels two large products at strong squeeze, this form does not
  const double em = std::exp(-2.0 * h);
  const double log_cosh = h - 0.69314718055994530942 + std::log1p(em);
  const double log_coth = std::log1p(em) - std::log1p(-em);
  const double s = std::sinh(h);
  return 2.0 * (log_cosh + s * s * log_coth);
}

double entropy_from_spectrum(const SchmidtSpectrum& s) {
  double acc = 0.0;
  for (double lam : s.lambdas) {
    if (lam > 0.0) acc -= lam * std::log(lam);
  }
  return acc;
}

double spectrum_second_moment(const SchmidtSpectrum& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < s.lambdas.size(); ++k) {
    acc += s.lambdas[k] * (double(k) + 0.5);
  }
  return acc;
}

double schmidt_reconstruct(double eta, double tol, double x1, double x2) {
  const SchmidtSpectrum s = schmidt_spectrum(eta, tol);
  const std::size_t kmax = s.lambdas.size() - 1;
  if (kmax > static_cast<std::size_t>(hermite_cap)) {
    throw std::domain_error(
        "schmidt_reconstruct: expansion order exceeds the eigenfunction cap; raise tol");
  }
  const std::vector<double> p1 = hermite_phi_row(static_cast<int>(kmax), x1);
  const std::vector<double> p2 = hermite_phi_row(static_cast<int>(kmax), x2);
  const double th = std::tanh(0.5 * eta);
  double coeff = 1.0 / std::cosh(0.5 * eta);
  double sum = 0.0;
  for (std::size_t k = 0; k <= kmax; ++k) {
    sum += coeff * p1[k] * p2[k];
    coeff *= th;
  }
  return sum;
}

ThermalMap effective_temperature(double eta, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::domain_error("effective_temperature: omega must be positive");
  }
  if (!std::isfinite(eta) || eta < 0.0) {
    throw std::domain_error(
        "effective_temperature: eta must be nonnegative for a thermal description");
  }
  if (eta == 0.0) return {omega, 0.0};
  // ln tanh(eta/2) = ln(1 - e^{-eta}) - ln(1 + e^{-eta}), stable for all eta > 0
  const double em = std::exp(-eta);
  const double log_tanh = std::log1p(-em) - std::log1p(em);
  return {omega, omega * (-1.0 / log_tanh)};
}

ReducedDensityMatrix::ReducedDensityMatrix(const OscillatorSystem& sys,
                                           const QuadratureRule& rule, Exec exec)
    : rule_(rule) {
  sys.validate();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rule_.size());
  if (n < 2) throw std::invalid_argument("ReducedDensityMatrix: rule too small");

  const GroundState psi = ground_state(sys);
  std::vector<double> amp(static_cast<std::size_t>(n) * n);
  grid_map([&psi](double a, double b) { return psi(a, b); }, rule_.nodes, rule_.nodes,
           std::span<double>(amp), exec);

  rho_.assign(static_cast<std::size_t>(n) * n, 0.0);
  const double* w = rule_.weights.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double* row_i = amp.data() + i * n;
    for (std::ptrdiff_t j = i; j < n; ++j) {
      const double* row_j = amp.data() + j * n;
      double s = 0.0;
      for (std::ptrdiff_t a = 0; a < n; ++a) s += w[a] * row_i[a] * row_j[a];
      rho_[i * n + j] = s;
      rho_[j * n + i] = s;
    }
  }
}

double ReducedDensityMatrix::eigenvalue(int k) const {
  if (k < 0 || k > 30) {
    throw std::domain_error("ReducedDensityMatrix: eigenvalue index must lie in [0, 30]");
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rule_.size());
  std::vector<double> c(static_cast<std::size_t>(n));
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    c[i] = rule_.weights[i] * hermite_phi(k, rule_.nodes[i]);
  }
  double val = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = rho_.data() + i * n;
    for (std::ptrdiff_t j = 0; j < n; ++j) s += row[j] * c[j];
    val += c[i] * s;
  }
  return val;
}

double reduced_density_eigenvalue_oracle(const OscillatorSystem& sys, int k, Exec exec) {
  const ReducedDensityMatrix rho(sys, QuadratureRule::trapezoid(-12.0, 12.0, 200), exec);
  return rho.eigenvalue(k);
}

}  // namespace sqz
