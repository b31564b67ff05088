#include "vortex/moebius.hpp"

#include <cmath>

#include "vortex/errors.hpp"

namespace vortex {

MoebiusParams moebius_params(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw DomainError("moebius_params: epsilon must lie in (0, 1/2)");
  }
  MoebiusParams m;
  m.epsilon = epsilon;
  const double root = std::sqrt((1.0 - 2.0 * epsilon) * (1.0 + 2.0 * epsilon));
  m.b = 0.5 * (1.0 + root);
  // (1 - root) / 2 cancels badly for small epsilon; a = eps^2 / b is the same number.
  m.a = epsilon * epsilon / m.b;
  m.R1 = (epsilon - m.a) / (m.b - epsilon);
  m.R2 = 1.0 / m.R1;
  return m;
}

}  // namespace vortex
