#pragma once

#include "vortex/configuration.hpp"

namespace vortex {

/// Fractional-linear maps between the annulus R1 < |w| < R2 and the plane
/// with the disks B_eps(0) and B_eps(1) removed.
///
/// S(z) = (z - a) / (b - z) and its inverse T(w) = (b w + a) / (1 + w), where
/// a + b = 1, a b = eps^2, R1 = S(eps) and R2 = S(1 - eps) = 1 / R1.
struct MoebiusParams {
  double epsilon = 0.0;
  double a = 0.0;
  double b = 0.0;
  double R1 = 0.0;
  double R2 = 0.0;

  [[nodiscard]] Complex S(Complex z) const { return (z - a) / (b - z); }
  [[nodiscard]] Complex T(Complex w) const { return (b * w + a) / (1.0 + w); }
  // T'(w) = (b - a) / (1 + w)^2
  [[nodiscard]] Complex T_derivative(Complex w) const {
    const Complex s = 1.0 + w;
    return (b - a) / (s * s);
  }
};

// Throws DomainError unless 0 < epsilon < 1/2.
MoebiusParams moebius_params(double epsilon);

}  // namespace vortex
