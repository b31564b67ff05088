#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "vortex/adler_moser.hpp"
#include "vortex/errors.hpp"
#include "vortex/refine.hpp"

using namespace vortex;
using namespace vortex::testing;

namespace {

Coeffs coeffs_of(const Polynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

// Coefficient-wise P_{k+1}' P_{k-1} - P_{k+1} P_{k-1}' - (2k+1) P_k^2 with
// plain vector arithmetic, relative to the largest coefficient of the right side.
double wronskian_mismatch(const AdlerMoserChain& chain, int k) {
  const Coeffs lo = coeffs_of(chain[k - 1]), mid = coeffs_of(chain[k]), hi = coeffs_of(chain[k + 1]);
  Coeffs rhs = poly_mul(mid, mid);
  for (auto& c : rhs) c *= double(2 * k + 1);
  const Coeffs lhs = poly_sub(poly_mul(poly_diff(hi), lo), poly_mul(hi, poly_diff(lo)));
  const Coeffs diff = poly_sub(lhs, rhs);
  double scale = 0.0, worst = 0.0;
  for (auto c : rhs) scale = std::max(scale, std::abs(c));
  for (auto c : diff) worst = std::max(worst, std::abs(c));
  return worst / scale;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("base of the chain") {
  const auto chain = adler_moser_chain(1, {});
  REQUIRE(chain.polynomials.size() == 2);
  CHECK(coeffs_of(chain[0]) == Coeffs{1.0});
  CHECK(coeffs_of(chain[1]) == Coeffs{0.0, 1.0});
  CHECK(adler_moser_chain(0, {}).polynomials.size() == 1);
}

TEST_CASE("closed forms for n = 2 and n = 3") {
  const Complex tau(0.7, -0.2), sigma(-1.3, 0.4);
  const std::vector<Complex> params{tau, sigma};
  const auto chain = adler_moser_chain(3, params);
  CHECK(coeffs_of(chain[2]) == Coeffs{tau, 0.0, 0.0, 1.0});
  const Coeffs p3 = coeffs_of(chain[3]);
  const Coeffs expected{-5.0 * tau * tau, sigma, 0.0, 5.0 * tau, 0.0, 0.0, 1.0};
  REQUIRE(p3.size() == expected.size());
  for (std::size_t i = 0; i < p3.size(); ++i) CHECK(std::abs(p3[i] - expected[i]) < 1e-14);
}

TEST_CASE("Wronskian relation and degrees up to n = 4") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> params;
    for (int i = 0; i < 3; ++i) params.push_back({normal(rng), trial % 2 ? normal(rng) : 0.0});
    const auto chain = adler_moser_chain(4, params);
    for (int k = 0; k <= 4; ++k) {
      CHECK(chain[k].degree() == std::size_t(k * (k + 1) / 2));
      CHECK(chain[k].leading() == Complex(1.0));
    }
    for (int k = 1; k < 4; ++k) {
      CHECK(wronskian_mismatch(chain, k) < 1e-10);
      CHECK(wronskian_defect(chain, k) < 1e-10);
    }
  }
}

TEST_CASE("parameter count is checked") {
  const std::vector<Complex> one{1.0};
  CHECK_THROWS_AS((void)adler_moser_chain(3, one), DomainError);
  CHECK_THROWS_AS((void)adler_moser_chain(-1, {}), DomainError);
  CHECK_THROWS_AS((void)adler_moser_chain(1, one), DomainError);
}

TEST_CASE("n = 2, tau = -1 gives the cube-roots equilibrium") {
  const std::vector<Complex> params{-1.0};
  const auto config = config_from_adler_moser(adler_moser_chain(2, params));
  REQUIRE(config.size() == 4);
  CHECK(residual(config) < 1e-10);
  int negative = 0;
  for (const auto& v : config) {
    if (v.circulation < 0) {
      ++negative;
      CHECK(std::abs(v.position) < 1e-14);
    } else {
      CHECK(v.circulation == 1.0);
      CHECK(std::abs(std::pow(v.position, 3) - 1.0) < 1e-13);
    }
  }
  CHECK(negative == 1);
}

TEST_CASE("tau = 0 is degenerate") {
  const std::vector<Complex> zero{0.0};
  CHECK_THROWS_AS((void)config_from_adler_moser(adler_moser_chain(2, zero)), DegenerateParameters);
}

TEST_CASE("generated configurations are equilibria") {
  const std::vector<std::vector<Complex>> cases{
      {1.0, 1.0}, {Complex(0.5, 0.5), -2.0}, {-1.0, 0.7, 1.3}, {Complex(0.3, 1.1), 2.0, Complex(-1.0, 0.5)}};
  for (const auto& params : cases) {
    const int n = int(params.size()) + 1;
    const auto config = config_from_adler_moser(adler_moser_chain(n, params));
    CHECK(config.size() == std::size_t(n * (n + 1) / 2 + (n - 1) * n / 2));
    CHECK(residual(config) < 1e-8);
    const auto result = refine_equilibrium(config, all_indices(config.size()), {50, 1e-13, 1.0});
    CHECK(result.final_residual < 1e-12);
  }
}

TEST_CASE("random parameters give equilibria relative to the force scale") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> modulus(0.5, 2.0), phase(0.0, 6.283185307179586);
  int built = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Complex> params;
    for (int i = 0; i < n - 1; ++i) params.push_back(std::polar(modulus(rng), phase(rng)));
    const auto config = config_from_adler_moser(adler_moser_chain(n, params));
    double force_scale = 0.0;
    for (std::size_t j = 0; j < config.size(); ++j) {
      double row = 0.0;
      for (std::size_t k = 0; k < config.size(); ++k)
        if (k != j) row += std::abs(config.circulation(j) * config.circulation(k) / (config.position(j) - config.position(k)));
      force_scale = std::max(force_scale, row);
    }
    CHECK(is_equilibrium(config, 1e-6 * force_scale));
    ++built;
  }
  CHECK(built == 30);
}
