#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vortex/configuration.hpp"

namespace vortex {

struct NewtonSettings {
  int max_iterations = 50;
  double tolerance = 1e-12;  // target residual max_j |f_j|
  double damping = 1.0;      // initial step scale in (0, 1]
};

enum class RefineStatus { converged, max_iterations, stalled };

const char* to_string(RefineStatus status);

struct RefineResult {
  VortexConfiguration configuration;  // best iterate
  int iterations = 0;
  double initial_residual = 0.0;
  double final_residual = 0.0;
  RefineStatus status = RefineStatus::converged;
  std::vector<double> residual_history;  // one entry per accepted iterate, starting with the input

  [[nodiscard]] bool converged() const { return status == RefineStatus::converged; }
};

/// Damped Gauss-Newton on f_j(a) = 0 for all j, moving only the positions in
/// `free`; circulations stay fixed.
///
/// The Jacobian of f is holomorphic (df_j/da_k = d_j d_k / (a_j - a_k)^2), so
/// each step is a complex least-squares solve. Equilibria come in families
/// (similarities, and the free parameters of polynomial families), so instead
/// of pinning vortices the solve drops singular values below 1e-10 of the
/// largest and applies Levenberg-Marquardt damping proportional to the
/// residual. Steps are accepted only if they lower the residual; the step
/// scale halves on rejection and doubles (up to 1) after acceptance.
///
/// Non-convergence is reported through RefineResult::status. Throws
/// DomainError on invalid settings or free indices, NonConvergence if the
/// Jacobian vanishes while the residual is above tolerance.
RefineResult refine_equilibrium(const VortexConfiguration& initial,
                                std::span<const std::size_t> free,
                                const NewtonSettings& settings = {});

// Complex Jacobian df_j/da_{free[c]}, row-major N x free.size().
std::vector<Complex> force_jacobian(const VortexConfiguration& config,
                                    std::span<const std::size_t> free);

}  // namespace vortex
