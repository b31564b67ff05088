#pragma once

#include <cstddef>

#include "vortex/configuration.hpp"

namespace vortex {

// Evaluation points closer than this to a vortex raise PoleEvaluation:
// kExclusionFloor * (1 + diameter).
inline constexpr double kExclusionFloor = 1e-12;

double exclusion_distance(const VortexConfiguration& config);

// Throws PoleEvaluation if z lies within the exclusion distance of a vortex.
void require_off_poles(const VortexConfiguration& config, Complex z);

// G(z) = sum over ordered pairs j != k of d_j d_k / ((z - a_j)(z - a_k)).
Complex eval_G_double_sum(const VortexConfiguration& config, Complex z);

// The same function from its simple poles: G(z) = 2 sum_j f_j / (z - a_j).
// The factor 2 is the residue of the ordered double sum at a_j.
Complex eval_G_partial_fractions(const VortexConfiguration& config, Complex z);

// T_j(z) = d_j^2 / (z - a_j)^2.
Complex eval_T(const VortexConfiguration& config, std::size_t j, Complex z);

// |sum_j d_j/(z - a_j)|^4 - sum_j d_j^4 / |z - a_j|^4.
double integrand(const VortexConfiguration& config, Complex z);

// Re sum over ordered pairs j != k of conj(T_j) T_k. Agrees with integrand()
// exactly when G vanishes identically, i.e. at an equilibrium.
double cross_term(const VortexConfiguration& config, Complex z);

namespace detail {
// integrand() without the pole check; callers guarantee admissibility.
double integrand_unchecked(const VortexConfiguration& config, Complex z);
}  // namespace detail

}  // namespace vortex
