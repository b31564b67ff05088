#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "vortex/polynomial.hpp"

namespace vortex {

namespace {

// Fujiwara's bound: every root satisfies |z| <= 2 max_k |c_{n-k}/c_n|^{1/k},
// with the constant term halved.
double fujiwara_bound(const Polynomial& p) {
  const std::size_t n = p.degree();
  const double lead = std::abs(p.leading());
  double bound = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double ratio = std::abs(p.coefficient(n - k)) / lead;
    if (k == n) ratio *= 0.5;
    bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
  }
  return 2.0 * bound;
}

}  // namespace

RootsResult roots(const Polynomial& p, double tol) {
  if (p.degree() == 0) throw DomainError("roots: polynomial must have degree >= 1");
  if (!(tol > 0.0)) throw DomainError("roots: tolerance must be positive");

  const std::size_t n = p.degree();
  RootsResult result;
  auto& z = result.roots;
  z.resize(n);

  double radius = fujiwara_bound(p);
  if (!(radius > 0.0)) radius = 1.0;  // p = c z^n
  for (std::size_t k = 0; k < n; ++k) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
                         kAberthPhaseOffset;
    z[k] = std::polar(radius, phase);
  }

  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  int iter = 0;
  for (; iter < kAberthIterationCap && remaining > 0; ++iter) {
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const auto [value, slope] = p.eval_with_derivative(z[k]);
      if (std::abs(value) <= tol * p.magnitude_bound(z[k])) {
        done[k] = true;
        --remaining;
        continue;
      }
      Complex repulsion{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex newton = value / slope;
      const Complex step = newton / (1.0 - newton * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[k] -= step;
    }
  }
  result.iterations = iter;

  std::vector<std::size_t> failed;
  for (std::size_t k = 0; k < n; ++k) {
    if (!done[k] && std::abs(p(z[k])) > tol * p.magnitude_bound(z[k])) failed.push_back(k);
  }

  for (auto& r : z) {
    const auto [value, slope] = p.eval_with_derivative(r);
    if (slope == Complex{}) continue;
    const Complex polished = r - value / slope;
    if (std::abs(p(polished)) < std::abs(value)) r = polished;
  }

  double scale = 0.0;
  for (const auto& r : z) scale = std::max(scale, std::abs(r));
  if (scale == 0.0) scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) < 1e-6 * scale) result.near_multiple.emplace_back(i, j);
    }
  }

  if (!failed.empty()) {
    std::ostringstream msg;
    msg << "roots: " << failed.size() << " of " << n << " roots did not converge after "
        << kAberthIterationCap << " iterations (indices";
    for (auto k : failed) msg << ' ' << k;
    msg << ")";
    throw RootsNotConverged(msg.str(), std::move(failed), std::move(result));
  }
  return result;
}

}  // namespace vortex
