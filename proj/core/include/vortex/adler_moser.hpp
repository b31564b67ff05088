#pragma once

#include <span>
#include <vector>

#include "vortex/configuration.hpp"
#include "vortex/polynomial.hpp"

namespace vortex {

/// Adler-Moser polynomials P_0, ..., P_n.
///
/// P_0 = 1, P_1 = z, and P_{k+1} is the monic solution of the Wronskian
/// recurrence
///
///   P_{k+1}' P_{k-1} - P_{k+1} P_{k-1}' = (2k + 1) P_k^2,
///
/// whose coefficient of z^{deg P_{k-1}} is left free by the recurrence and is
/// set to the parameter tau_{k+1}. deg P_k = k(k+1)/2.
struct AdlerMoserChain {
  int n = 0;
  std::vector<Complex> parameters;  // tau_2 ... tau_n
  std::vector<Polynomial> polynomials;

  [[nodiscard]] const Polynomial& operator[](int k) const { return polynomials.at(k); }
};

// Throws DomainError when n < 0 or parameters.size() != max(n - 1, 0).
AdlerMoserChain adler_moser_chain(int n, std::span<const Complex> parameters);

// Largest coefficient mismatch of the Wronskian relation linking
// P_{k-1}, P_k, P_{k+1}, relative to the largest coefficient of (2k+1) P_k^2.
double wronskian_defect(const AdlerMoserChain& chain, int k);

/// Circulation -1 at each root of P_{n-1} and +1 at each root of P_n.
///
/// Throws DegenerateParameters when either polynomial has (near-)multiple
/// roots, the root finder fails, or the two root sets collide.
VortexConfiguration config_from_adler_moser(const AdlerMoserChain& chain);

}  // namespace vortex
