#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "vortex/errors.hpp"
#include "vortex/rational.hpp"

using namespace vortex;
using namespace vortex::testing;

TEST_CASE("G in both forms on small cases") {
  const VortexConfiguration single({{{0.5, 0.5}, 2.0}});
  CHECK(eval_G_double_sum(single, {1, 2}) == Complex{});
  CHECK(eval_G_partial_fractions(single, {1, 2}) == Complex{});

  CHECK(eval_G_double_sum(two_unit_vortices(), 2.0) == Complex(1.0));
  CHECK(eval_G_partial_fractions(two_unit_vortices(), 2.0) == Complex(1.0));

  for (Complex z : {Complex(0.3, 0.7), Complex(-4, 2)}) {
    CHECK(std::abs(eval_G_double_sum(collinear_triple(), z)) < 1e-14);
    CHECK(std::abs(eval_G_partial_fractions(collinear_triple(), z)) < 1e-14);
  }
}

TEST_CASE("double-sum and partial-fraction forms agree") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_configuration(rng, 1 + trial % 8);
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_point(rng, c, 4.0, 0.05);
      const Complex a = eval_G_double_sum(c, z);
      const Complex b = eval_G_partial_fractions(c, z);
      CHECK(std::abs(a - b) <= 1e-10 * std::max(std::abs(a), 1e-300));
    }
  }
}

TEST_CASE("pole evaluation is rejected") {
  const auto c = collinear_triple();
  CHECK_THROWS_AS((void)eval_G_double_sum(c, 0.0), PoleEvaluation);
  CHECK_THROWS_AS((void)eval_G_partial_fractions(c, Complex(1.0, 1e-14)), PoleEvaluation);
  CHECK_THROWS_AS((void)integrand(c, -1.0), PoleEvaluation);
  CHECK_THROWS_AS((void)cross_term(c, 1.0), PoleEvaluation);
  CHECK_THROWS_AS((void)eval_T(c, 0, -1.0), PoleEvaluation);
  CHECK_NOTHROW((void)integrand(c, Complex(1.0, 1e-6)));
}

TEST_CASE("T_j") {
  CHECK(eval_T(VortexConfiguration({{{0, 0}, 1.0}}), 0, 1.0) == Complex(1.0));
  CHECK(eval_T(VortexConfiguration({{{0, 0}, 2.0}}), 0, Complex(0, 2)) == Complex(-1.0));
  CHECK_THROWS_AS((void)eval_T(two_unit_vortices(), 5, 3.0), std::out_of_range);
}

TEST_CASE("two-vortex integrand and cross term differ in sign") {
  CHECK(integrand(two_unit_vortices(), 0.5) == -32.0);
  CHECK(cross_term(two_unit_vortices(), 0.5) == 32.0);
}

TEST_CASE("single vortex integrand vanishes") {
  const VortexConfiguration single({{{1, -1}, -3.0}});
  for (Complex z : {Complex(0, 0), Complex(5, 5), Complex(1.001, -1)}) {
    CHECK(integrand(single, z) == 0.0);
    CHECK(cross_term(single, z) == 0.0);
  }
}

TEST_CASE("integrand equals cross term at equilibria") {
  std::mt19937_64 rng(22);
  for (const auto& c : {collinear_triple(), cube_roots_equilibrium(),
                        transform(collinear_triple(), Similarity{2.5, 0.7, {1, 1}})}) {
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_point(rng, c, 3.0 * (1.0 + c.diameter()), 1e-3);
      const double a = integrand(c, z);
      const double b = cross_term(c, z);
      CHECK(std::abs(a - b) <= 1e-10 * std::max(std::abs(a), std::abs(b)));
    }
  }
}

TEST_CASE("far-field decay of the integrand") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    // Unit diameter about the origin, so the first correction is O(1/|z|).
    const auto raw = random_configuration(rng, 3 + trial);
    const auto c = transform(transform(raw, Similarity::translate(-raw.centroid())),
                             Similarity::dilate(1.0 / raw.diameter()));
    double total = 0.0, quartic = 0.0;
    for (const auto& v : c) {
      total += v.circulation;
      quartic += std::pow(v.circulation, 4);
    }
    const double limit = std::pow(total, 4) - quartic;
    for (auto [radius, tol] : {std::pair{1e3, 1e-2}, std::pair{1e4, 1e-3}}) {
      const Complex z = std::polar(radius, 0.3 + trial);
      CHECK(std::pow(radius, 4) * integrand(c, z) == doctest::Approx(limit).epsilon(tol));
    }
  }
}

TEST_CASE("G vanishes exactly at equilibria") {
  std::mt19937_64 rng(24);
  for (const auto& c : {collinear_triple(), cube_roots_equilibrium()}) {
    REQUIRE(residual(c) < 1e-12);
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_point(rng, c, 5.0, 1e-2);
      double scale = 0.0;
      for (const auto& v : c) scale += std::abs(v.circulation) / std::abs(z - v.position);
      CHECK(std::abs(eval_G_double_sum(c, z)) < 1e-10 * scale * scale);
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = random_configuration(rng, 2 + trial % 5);
    if (residual(c) <= 0.1) continue;
    double largest = 0.0;
    for (int i = 0; i < 100; ++i) largest = std::max(largest, std::abs(eval_G_double_sum(c, random_point(rng, c, 4.0, 0.05))));
    CHECK(largest > 1e-3);
  }
}
