#include <doctest.h>

#include <cmath>

#include "vortex/cubature.hpp"
#include "vortex/errors.hpp"

using namespace vortex;
using namespace vortex::cubature;

TEST_CASE("polynomials are integrated exactly") {
  const std::vector<Region<double>> regions{
      {{0.0, 1.0, 0.0, 2.0}, [](double u, double v) { return std::pow(u, 3) * std::pow(v, 5); }}};
  const auto out = integrate(regions, {1e-12, 1000});
  CHECK(out.value == doctest::Approx(0.25 * 64.0 / 6.0).epsilon(1e-14));
  CHECK(out.cells == 1);
  CHECK_FALSE(out.budget_exhausted);
}

TEST_CASE("adaptive refinement of a peaked integrand") {
  const double a = 0.3, c = 0.01;
  const std::vector<Region<double>> regions{
      {{0.0, 1.0, -1.0, 1.0}, [&](double u, double) { return 1.0 / ((u - a) * (u - a) + c * c); }}};
  const double exact = 2.0 * (std::atan((1.0 - a) / c) + std::atan(a / c)) / c;
  for (double target : {1e-4, 1e-8}) {
    const auto out = integrate(regions, {target, 100000});
    CHECK_FALSE(out.budget_exhausted);
    CHECK(out.cells > 1);
    CHECK(out.abs_error <= target);
    CHECK(std::abs(out.value - exact) <= std::max(out.abs_error, 1e-12 * exact));
  }
}

TEST_CASE("several regions and complex values") {
  const auto f = [](double u, double v) { return std::exp(Complex(0.0, u + v)); };
  const std::vector<Region<Complex>> regions{{{0.0, 1.0, 0.0, 1.0}, f}, {{1.0, 3.0, 0.0, 1.0}, f}};
  const auto out = integrate(regions, {1e-12, 1000});
  const Complex i(0.0, 1.0);
  const Complex exact = (std::exp(3.0 * i) - 1.0) * (std::exp(i) - 1.0) / (i * i);
  CHECK(std::abs(out.value - exact) < 1e-13);
}

TEST_CASE("exhausted budget is reported") {
  const std::vector<Region<double>> regions{
      {{0.0, 1.0, 0.0, 1.0}, [](double u, double v) { return 1.0 / std::sqrt(u * u + v * v + 1e-12); }}};
  const auto out = integrate(regions, {1e-14, 5});
  CHECK(out.budget_exhausted);
  CHECK(out.cells == 5);
  CHECK(out.abs_error > 1e-14);

  const std::vector<Region<double>> two{regions[0], regions[0]};
  CHECK_THROWS_AS((void)integrate(two, {1e-6, 1}), DomainError);
}

TEST_CASE("results are reproducible bit for bit") {
  const std::vector<Region<double>> regions{
      {{0.0, 2.0, 0.0, 1.0}, [](double u, double v) { return std::log(u + 1e-3) * std::cos(7 * v); }}};
  const auto a = integrate(regions, {1e-9, 50000});
  const auto b = integrate(regions, {1e-9, 50000});
  CHECK(a.value == b.value);
  CHECK(a.abs_error == b.abs_error);
  CHECK(a.cells == b.cells);
}
