#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vortex/configuration.hpp"

namespace vortex {

struct QuadratureSpec {
  double epsilon = 0.0;          // radius of the disks removed around each vortex
  double cutoff_radius = 0.0;    // R: quadrature covers B_R around the centroid
  double target_abs_error = 1e-5;
  std::int64_t max_cells = 2'000'000;  // leaf-cell cap; must cover the initial partition
};

struct QuadratureResult {
  double value = 0.0;  // includes tail_correction
  double abs_error_estimate = 0.0;
  double tail_correction = 0.0;  // contribution of |z - c| > R
  std::int64_t cells_used = 0;
  bool budget_exhausted = false;
  Complex complex_value{};  // full estimate for complex-valued integrands
};

// epsilon = 0.2 * min separation, R = 50 (1 + diameter), target 1e-5,
// 2e6 cells. For a single vortex epsilon defaults to 0.2.
QuadratureSpec default_spec(const VortexConfiguration& config);
// {0.2, 0.1, 0.05} * min separation ({0.2, 0.1, 0.05} for N = 1).
std::vector<double> default_epsilons(const VortexConfiguration& config);

// Throws DomainError unless 0 < epsilon < min_separation / 2,
// R > 2 (diameter + 1), target > 0 and max_cells >= 1.
void validate_spec(const VortexConfiguration& config, const QuadratureSpec& spec);

// Integral of the correlation integrand over |z - c| > R, c the centroid,
// summed from its circle-mean expansion (exact up to rounding).
double far_field_tail(const VortexConfiguration& config, double radius);
// Leading term pi (|sum d|^4 - sum d^4) / R^2 of far_field_tail.
double leading_tail(const VortexConfiguration& config, double radius);

/// A_eps: the correlation integrand over the plane minus the eps-disks.
///
/// B_R is split by a smooth partition of unity into a log-polar annulus
/// eps < |z - a_l| < rho_l around every vortex (rho_l half the distance to its
/// nearest neighbour) and a background piece on B_R that vanishes near the
/// vortices; |z - c| > R is added through far_field_tail. A single vortex
/// returns exactly 0.
QuadratureResult correlation_A_eps(const VortexConfiguration& config, const QuadratureSpec& spec);

enum class PairKernel {
  conjugate_first,  // conj(z - p)^-2 (z - q)^-2
  holomorphic,      // (z - p)^-2 (z - q)^-2
};

/// Integral of the pair kernel over the plane minus B_eps(p) and B_eps(q).
///
/// Quadrature on B_R around (p + q)/2 plus the closed-form tail; value is the
/// modulus of the complex estimate, complex_value the estimate itself. The
/// epsilon argument overrides spec.epsilon.
QuadratureResult pair_integral(Complex p, Complex q, double epsilon, const QuadratureSpec& spec,
                               PairKernel kernel = PairKernel::conjugate_first);

/// conj(T_j) T_k over the plane minus B_eps(a_j) and B_eps(a_k) (B_R around
/// the configuration centroid plus closed-form tail). value is the real part;
/// complex_value the full estimate. Throws DomainError when j == k.
QuadratureResult cross_pair_truncated(const VortexConfiguration& config, std::size_t j,
                                      std::size_t k, double epsilon, const QuadratureSpec& spec);

struct Extrapolation {
  double limit = 0.0;
  double error = 0.0;
  // Order alpha of A_eps - A ~ c eps^alpha estimated from the last three
  // points; NaN when fewer than three points or the differences do not fit.
  double observed_order = 0.0;
  bool degenerate = false;
};

/// Polynomial extrapolation in eps^2 to eps = 0 (Neville).
///
/// At an equilibrium A_eps - A expands in even powers of eps, so the
/// interpolant through all points in eps^2 removes the leading terms. When
/// every successive difference is below three times the combined quadrature
/// noise the fit is flagged degenerate and the last estimate is returned.
Extrapolation extrapolate_to_zero(std::span<const double> epsilons, std::span<const double> values,
                                  std::span<const double> errors);

struct CorrelationReport {
  std::vector<double> epsilons;
  std::vector<QuadratureResult> estimates;
  double extrapolated_limit = 0.0;
  double extrapolation_error = 0.0;
  double observed_order = 0.0;
  bool fit_degenerate = false;
  bool budget_exhausted = false;
};

// Runs correlation_A_eps for each epsilon (strictly decreasing, at least two)
// with the remaining fields of spec, then extrapolates.
CorrelationReport correlation_limit(const VortexConfiguration& config,
                                    std::span<const double> epsilons, const QuadratureSpec& spec);

}  // namespace vortex
