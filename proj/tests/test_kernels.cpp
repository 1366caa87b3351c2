#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sqz/kernels.hpp"
#include "sqz/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sqz;

namespace {
double wavy(double x, double y) {
  return std::exp(-0.3 * x * x - 0.4 * y * y) * std::cos(1.7 * x + 0.9 * y);
}
}  // namespace

TEST_CASE("serial and parallel quadrature agree bitwise") {
  const auto rx = QuadratureRule::trapezoid(-5.0, 5.0, 173);
  const auto ry = QuadratureRule::trapezoid(-4.0, 6.0, 211);
  const double serial = tensor_quad_serial(wavy, rx, ry);
  const double parallel = tensor_quad_parallel(wavy, rx, ry);
  CHECK(serial == parallel);
  CHECK(tensor_quad(wavy, rx, ry, Exec::serial) == serial);
  CHECK(tensor_quad(wavy, rx, ry, Exec::parallel) == serial);
}

TEST_CASE("quadrature result is independent of the thread count") {
#ifdef _OPENMP
  const auto r = QuadratureRule::trapezoid(-6.0, 6.0, 301);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double one = tensor_quad_parallel(wavy, r, r);
  omp_set_num_threads(3);
  const double three = tensor_quad_parallel(wavy, r, r);
  omp_set_num_threads(7);
  const double seven = tensor_quad_parallel(wavy, r, r);
  omp_set_num_threads(saved);
  CHECK(one == three);
  CHECK(one == seven);
#else
  CHECK(true);  // no threading available; nothing to vary
#endif
}

TEST_CASE("grid map fills row-major and matches serial bitwise") {
  const std::vector<double> xs = {-1.0, 0.0, 2.0};
  const std::vector<double> ys = {0.5, 1.5};
  std::vector<double> a(6), b(6);
  grid_map(wavy, xs, ys, std::span<double>(a), Exec::serial);
  grid_map(wavy, xs, ys, std::span<double>(b), Exec::parallel);
  for (int i = 0; i < 6; ++i) CHECK(a[i] == b[i]);
  CHECK(a[0] == wavy(-1.0, 0.5));
  CHECK(a[1] == wavy(-1.0, 1.5));
  CHECK(a[5] == wavy(2.0, 1.5));
  std::vector<double> wrong(5);
  CHECK_THROWS_AS(grid_map(wavy, xs, ys, std::span<double>(wrong)), std::invalid_argument);
}

TEST_CASE("grid max abs finds the peak and matches serial") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 200; ++i) xs.push_back(-4.0 + i * 0.04);
  ys = xs;
  auto f = [](double x, double y) { return -2.5 * std::exp(-(x - 1) * (x - 1) - y * y); };
  const double serial = grid_max_abs(f, xs, ys, Exec::serial);
  const double parallel = grid_max_abs(f, xs, ys, Exec::parallel);
  CHECK(serial == parallel);
  CHECK(serial == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("non-finite values are reported, not propagated") {
  const std::vector<double> xs = {0.0, 1.0};
  auto bad = [](double x, double y) { return x == 0.0 && y == 0.0 ? std::nan("") : 1.0; };
  CHECK_THROWS_AS(grid_max_abs(bad, xs, xs, Exec::serial), std::domain_error);
  CHECK_THROWS_AS(grid_max_abs(bad, xs, xs, Exec::parallel), std::domain_error);
  const auto r = QuadratureRule::trapezoid(0.0, 1.0, 2);
  CHECK_THROWS_AS(tensor_quad(bad, r, r, Exec::serial), std::domain_error);
  CHECK_THROWS_AS(tensor_quad(bad, r, r, Exec::parallel), std::domain_error);
}
