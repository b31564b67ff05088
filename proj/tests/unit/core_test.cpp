#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "support/oracles.hpp"
#include "vortex/configuration.hpp"
#include "vortex/errors.hpp"

using namespace vortex;
using namespace vortex::testing;

TEST_CASE("construction rejects invalid vortex sets") {
  CHECK_THROWS_AS(VortexConfiguration({}), InvalidConfiguration);
  CHECK_THROWS_AS(VortexConfiguration({{{0, 0}, 0.0}}), InvalidConfiguration);
  CHECK_THROWS_AS(VortexConfiguration({{{NAN, 0}, 1.0}}), InvalidConfiguration);
  CHECK_THROWS_AS(VortexConfiguration({{{0, 0}, 1.0}, {{0, std::numeric_limits<double>::infinity()}, 1.0}}),
                  InvalidConfiguration);

  try {
    VortexConfiguration({{{0, 0}, 1.0}, {{2, 0}, 1.0}, {{0, 0}, -1.0}});
    FAIL("coincident vortices accepted");
  } catch (const InvalidConfiguration& e) {
    const std::string msg = e.what();
    CHECK(msg.find('0') != std::string::npos);
    CHECK(msg.find('2') != std::string::npos);
  }
}

TEST_CASE("energy of small configurations") {
  CHECK(energy(two_unit_vortices()) == 0.0);
  const VortexConfiguration e_apart({{{0, 0}, 1.0}, {{std::numbers::e, 0}, 1.0}});
  CHECK(energy(e_apart) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(energy(VortexConfiguration({{{3, 4}, 2.5}})) == 0.0);

  const auto c = collinear_triple();
  CHECK(energy(c) == doctest::Approx(brute_energy(c)).epsilon(1e-14));
}

TEST_CASE("energy agrees with brute-force summation on random configurations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_configuration(rng, 2 + trial % 7);
    const double ref = brute_energy(c);
    CHECK(std::abs(energy(c) - ref) <= 1e-12 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("energy scaling law and similarity invariance") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = random_configuration(rng, 5);
    const double w = energy(c);
    for (double s : {0.5, 3.0, 17.0}) {
      const double scaled = energy(transform(c, Similarity::dilate(s)));
      CHECK(scaled == doctest::Approx(w - std::log(s) * pair_circulation_sum(c)).epsilon(1e-12));
    }
    CHECK(energy(transform(c, Similarity::translate({4.0, -7.0}))) == doctest::Approx(w).epsilon(1e-12));
    CHECK(energy(transform(c, Similarity::rotate(1.1))) == doctest::Approx(w).epsilon(1e-12));
  }
}

TEST_CASE("forces") {
  CHECK(force(VortexConfiguration({{{1, 1}, 3.0}}), 0) == Complex{});
  CHECK(force(two_unit_vortices(), 0) == Complex(-1.0, 0.0));
  CHECK(force(two_unit_vortices(), 1) == Complex(1.0, 0.0));
  CHECK_THROWS_AS((void)force(two_unit_vortices(), 2), std::out_of_range);

  const auto c = collinear_triple();
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(std::abs(force(c, j)) < 1e-15);
    CHECK(std::abs(brute_force(c, j)) < 1e-15);
  }
}

TEST_CASE("forces match direct substitution and sum to zero") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_configuration(rng, 2 + trial % 7);
    const auto f = forces(c);
    Complex total{};
    double term_scale = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      CHECK(std::abs(f[j] - brute_force(c, j)) <= 1e-13 * (1.0 + std::abs(f[j])));
      total += f[j];
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != j) term_scale += std::abs(c.circulation(j) * c.circulation(k) / (c.position(j) - c.position(k)));
    }
    CHECK(std::abs(total) < 1e-13 * term_scale);
  }
}

TEST_CASE("gradient") {
  const auto g = gradient(two_unit_vortices());
  CHECK(g[0] == Complex(2.0, 0.0));
  CHECK(g[1] == Complex(-2.0, 0.0));
  for (Complex gj : gradient(collinear_triple())) CHECK(std::abs(gj) < 1e-14);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_configuration(rng, 2 + trial % 7);
    const auto analytic = gradient(c);
    const auto fd = finite_difference_gradient(c, 1e-6 * c.diameter(), brute_energy);
    double diff = 0.0, norm = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      diff += std::norm(analytic[j] - fd[j]);
      norm += std::norm(analytic[j]);
    }
    CHECK(std::sqrt(diff / norm) < 1e-6);
  }
}

TEST_CASE("residual and equilibrium test") {
  CHECK(residual(collinear_triple()) < 1e-14);
  CHECK(residual(two_unit_vortices()) == 1.0);
  CHECK(is_equilibrium(collinear_triple(), 1e-10));
  CHECK_FALSE(is_equilibrium(two_unit_vortices(), 1e-10));
  CHECK(is_equilibrium(VortexConfiguration({{{0.3, 0.1}, -2.0}}), 1e-300));
  CHECK_THROWS_AS((void)is_equilibrium(collinear_triple(), 0.0), DomainError);
  CHECK_THROWS_AS((void)is_equilibrium(collinear_triple(), -1.0), DomainError);

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = random_configuration(rng, 4);
    for (double s : {0.25, 2.0, 9.0}) {
      CHECK(residual(transform(c, Similarity::dilate(s))) * s == doctest::Approx(residual(c)).epsilon(1e-12));
    }
  }
}

TEST_CASE("similarities") {
  const auto c = collinear_triple();
  CHECK(transform(c, Similarity{}) == c);

  const auto doubled = transform(c, Similarity::dilate(2.0));
  CHECK(doubled.position(0) == Complex(-2, 0));
  CHECK(doubled.position(1) == Complex(0, 0));
  CHECK(doubled.position(2) == Complex(2, 0));
  CHECK(doubled.circulation(1) == -0.5);
  CHECK(residual(doubled) < 1e-14);

  const Similarity general{1.7, 0.4, {2.0, -1.0}};
  const auto image = transform(c, general);
  CHECK(residual(image) < 1e-14);
  CHECK(image.min_separation() == doctest::Approx(1.7).epsilon(1e-14));
  CHECK(image.diameter() == doctest::Approx(3.4).epsilon(1e-14));
  CHECK(std::abs(image.centroid() - general.apply(c.centroid())) < 1e-14);
}
