#pragma once
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sqz/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqz {

enum class Exec { serial, parallel };

namespace detail {
inline void require_finite(double v, const char* where) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(where) + ": integrand produced a non-finite value");
  }
}
}  // namespace detail

// Tensor-product quadrature of f(x, y) over rx (x) and ry (y).
//
// Both variants accumulate one partial sum per x-row and combine the rows in
// index order, so the result is bitwise identical for any thread count and
// identical between the serial and parallel paths.

template <class F>
double tensor_quad_serial(F&& f, const QuadratureRule& rx, const QuadratureRule& ry) {
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(rx.size());
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(ry.size());
  std::vector<double> rows(static_cast<std::size_t>(nx));
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    const double x = rx.nodes[i];
    double s = 0.0;
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      s += ry.weights[j] * f(x, ry.nodes[j]);
    }
    rows[i] = rx.weights[i] * s;
  }
  double total = 0.0;
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    detail::require_finite(rows[i], "tensor_quad");
    total += rows[i];
  }
  return total;
}

template <class F>
double tensor_quad_parallel(F&& f, const QuadratureRule& rx, const QuadratureRule& ry) {
#ifdef _OPENMP
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(rx.size());
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(ry.size());
  std::vector<double> rows(static_cast<std::size_t>(nx));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    const double x = rx.nodes[i];
    double s = 0.0;
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      s += ry.weights[j] * f(x, ry.nodes[j]);
    }
    rows[i] = rx.weights[i] * s;
  }
  double total = 0.0;
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    detail::require_finite(rows[i], "tensor_quad");
    total += rows[i];
  }
  return total;
#else
  return tensor_quad_serial(f, rx, ry);
#endif
}

template <class F>
double tensor_quad(F&& f, const QuadratureRule& rx, const QuadratureRule& ry,
                   Exec exec = Exec::parallel) {
  return exec == Exec::serial ? tensor_quad_serial(f, rx, ry)
                              : tensor_quad_parallel(f, rx, ry);
}

// Same rule along both axes.
template <class F>
double integrate_2d(F&& f, const QuadratureRule& rule, Exec exec = Exec::parallel) {
  return tensor_quad(f, rule, rule, exec);
}

// out[i * ny + j] = f(xs[i], ys[j]); slot writes are independent, so the
// parallel variant is trivially deterministic.

template <class F>
void grid_map_serial(F&& f, std::span<const double> xs, std::span<const double> ys,
                     std::span<double> out) {
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(xs.size());
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(ys.size());
  if (out.size() != xs.size() * ys.size()) {
    throw std::invalid_argument("grid_map: output span has wrong size");
  }
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      out[i * ny + j] = f(xs[i], ys[j]);
    }
  }
}

template <class F>
void grid_map_parallel(F&& f, std::span<const double> xs, std::span<const double> ys,
                       std::span<double> out) {
#ifdef _OPENMP
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(xs.size());
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(ys.size());
  if (out.size() != xs.size() * ys.size()) {
    throw std::invalid_argument("grid_map: output span has wrong size");
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      out[i * ny + j] = f(xs[i], ys[j]);
    }
  }
#else
  grid_map_serial(f, xs, ys, out);
#endif
}

template <class F>
void grid_map(F&& f, std::span<const double> xs, std::span<const double> ys,
              std::span<double> out, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) {
    grid_map_serial(f, xs, ys, out);
  } else {
    grid_map_parallel(f, xs, ys, out);
  }
}

// max_{i,j} |f(xs[i], ys[j])|. The max reduction is exactly associative, so
// thread count cannot change the result. Throws if any value is non-finite.

template <class F>
double grid_max_abs_serial(F&& f, std::span<const double> xs, std::span<const double> ys) {
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(xs.size());
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(ys.size());
  double m = 0.0;
  long long bad = 0;
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      const double v = std::fabs(f(xs[i], ys[j]));
      if (!std::isfinite(v)) {
        ++bad;
      } else if (v > m) {
        m = v;
      }
    }
  }
  if (bad > 0) throw std::domain_error("grid_max_abs: integrand produced a non-finite value");
  return m;
}

template <class F>
double grid_max_abs_parallel(F&& f, std::span<const double> xs, std::span<const double> ys) {
#ifdef _OPENMP
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(xs.size());
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(ys.size());
  double m = 0.0;
  long long bad = 0;
#pragma omp parallel for schedule(static) reduction(max : m) reduction(+ : bad)
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      const double v = std::fabs(f(xs[i], ys[j]));
      if (!std::isfinite(v)) {
        ++bad;
      } else if (v > m) {
        m = v;
      }
    }
  }
  if (bad > 0) throw std::domain_error("grid_max_abs: integrand produced a non-finite value");
  return m;
#else
  return grid_max_abs_serial(f, xs, ys);
#endif
}

template <class F>
double grid_max_abs(F&& f, std::span<const double> xs, std::span<const double> ys,
                    Exec exec = Exec::parallel) {
  return exec == Exec::serial ? grid_max_abs_serial(f, xs, ys)
                              : grid_max_abs_parallel(f, xs, ys);
}

}  // namespace sqz
