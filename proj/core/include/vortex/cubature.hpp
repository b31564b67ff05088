#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vortex/configuration.hpp"

namespace vortex::cubature {

// Axis-aligned rectangle [u0, u1] x [v0, v1] in the integration variables.
struct Box {
  double u0 = 0.0;
  double u1 = 0.0;
  double v0 = 0.0;
  double v1 = 0.0;
};

// One initial cell together with the integrand on it (Jacobian included).
template <class Value>
struct Region {
  Box box;
  std::function<Value(double u, double v)> f;
};

// max_cells caps the number of leaf cells; a budget below the number of
// initial regions throws DomainError.
struct Options {
  double target_abs_error = 1e-6;
  std::int64_t max_cells = 2'000'000;
};

template <class Value>
struct Outcome {
  Value value{};
  double abs_error = 0.0;
  std::int64_t cells = 0;
  bool budget_exhausted = false;
};

/// Global adaptive product Gauss-Kronrod (7/15) cubature.
///
/// Every cell carries |K - G| error estimates per direction; the cell with the
/// largest error is bisected along its worse direction until the summed error
/// drops below the target or the cell budget is spent. Refinement order and
/// the final compensated reduction are fixed, so results are reproducible bit
/// for bit.
template <class Value>
Outcome<Value> integrate(const std::vector<Region<Value>>& regions, const Options& options);

extern template Outcome<double> integrate(const std::vector<Region<double>>&, const Options&);
extern template Outcome<Complex> integrate(const std::vector<Region<Complex>>&, const Options&);

}  // namespace vortex::cubature
