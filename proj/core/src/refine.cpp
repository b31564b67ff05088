#include "vortex/refine.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

constexpr double kSingularCutoff = 1e-10;
constexpr int kMaxHalvings = 40;

std::optional<VortexConfiguration> try_make(std::vector<Vortex> vortices) {
  try {
    return VortexConfiguration(std::move(vortices));
  } catch (const InvalidConfiguration&) {
    return std::nullopt;
  }
}

}  // namespace

const char* to_string(RefineStatus status) {
  switch (status) {
    case RefineStatus::converged:
      return "converged";
    case RefineStatus::max_iterations:
      return "max_iterations";
    case RefineStatus::stalled:
      return "stalled";
  }
  return "unknown";
}

std::vector<Complex> force_jacobian(const VortexConfiguration& config,
                                    std::span<const std::size_t> free) {
  const std::size_t n = config.size();
  std::vector<Complex> jac(n * free.size());
  for (std::size_t j = 0; j < n; ++j) {
    const double dj = config.circulation(j);
    for (std::size_t c = 0; c < free.size(); ++c) {
      const std::size_t k = free[c];
      Complex entry{};
      if (k == j) {
        for (std::size_t m = 0; m < n; ++m) {
          if (m == j) continue;
          const Complex diff = config.position(j) - config.position(m);
          entry -= dj * config.circulation(m) / (diff * diff);
        }
      } else {
        const Complex diff = config.position(j) - config.position(k);
        entry = dj * config.circulation(k) / (diff * diff);
      }
      jac[j * free.size() + c] = entry;
    }
  }
  return jac;
}

RefineResult refine_equilibrium(const VortexConfiguration& initial,
                                std::span<const std::size_t> free,
                                const NewtonSettings& settings) {
  if (settings.max_iterations < 1 || !(settings.tolerance > 0.0) ||
      !(settings.damping > 0.0 && settings.damping <= 1.0)) {
    throw DomainError(
        "refine_equilibrium: need max_iterations >= 1, tolerance > 0, damping in (0, 1]");
  }
  if (free.empty()) throw DomainError("refine_equilibrium: free index set is empty");
  std::set<std::size_t> seen;
  for (auto k : free) {
    if (k >= initial.size() || !seen.insert(k).second) {
      std::ostringstream msg;
      msg << "refine_equilibrium: free index " << k << " is out of range or repeated";
      throw DomainError(msg.str());
    }
  }

  using Matrix = Eigen::MatrixXcd;
  using Vector = Eigen::VectorXcd;
  const auto n = static_cast<Eigen::Index>(initial.size());
  const auto m = static_cast<Eigen::Index>(free.size());

  RefineResult result{initial, 0, residual(initial), residual(initial), RefineStatus::converged,
                      {}};
  result.residual_history.push_back(result.initial_residual);
  if (result.initial_residual <= settings.tolerance) return result;

  VortexConfiguration current = initial;
  double current_residual = result.initial_residual;
  double scale = settings.damping;
  result.status = RefineStatus::max_iterations;

  for (int iter = 0; iter < settings.max_iterations; ++iter) {
    const auto f = forces(current);
    const auto jac = force_jacobian(current, free);
    Matrix J(n, m);
    Vector rhs(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      rhs(j) = -f[static_cast<std::size_t>(j)];
      for (Eigen::Index c = 0; c < m; ++c) J(j, c) = jac[static_cast<std::size_t>(j * m + c)];
    }
    Eigen::JacobiSVD<Matrix> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().size() == 0 || svd.singularValues()(0) == 0.0) {
      throw NonConvergence("refine_equilibrium: Jacobian is singular (all singular values vanish)");
    }
    // Regularised pseudo-inverse: singular values below the cutoff are
    // dropped, the rest damped by mu = sigma_max |f| / min_separation. Near a
    // family of equilibria the small singular values scale with the residual,
    // and an undamped solve would take long steps along the family.
    const auto& sigma = svd.singularValues();
    const double mu = sigma(0) * rhs.norm() / current.min_separation();
    Vector coeff = svd.matrixU().adjoint() * rhs;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      coeff(i) *= sigma(i) > kSingularCutoff * sigma(0) ? sigma(i) / (sigma(i) * sigma(i) + mu) : 0.0;
    }
    const Vector step = svd.matrixV() * coeff;

    bool accepted = false;
    for (int halving = 0; halving < kMaxHalvings; ++halving) {
      std::vector<Vortex> trial(current.vortices().begin(), current.vortices().end());
      for (Eigen::Index c = 0; c < m; ++c) trial[free[static_cast<std::size_t>(c)]].position +=
          scale * step(c);
      if (auto candidate = try_make(std::move(trial))) {
        const double r = residual(*candidate);
        if (r < current_residual) {
          current = std::move(*candidate);
          current_residual = r;
          accepted = true;
          break;
        }
      }
      scale *= 0.5;
    }
    result.iterations = iter + 1;
    if (!accepted) {
      result.status = RefineStatus::stalled;
      break;
    }
    result.residual_history.push_back(current_residual);
    scale = std::min(1.0, 2.0 * scale);
    if (current_residual <= settings.tolerance) {
      result.status = RefineStatus::converged;
      break;
    }
  }
  result.configuration = std::move(current);
  result.final_residual = current_residual;
  return result;
}

}  // namespace vortex
