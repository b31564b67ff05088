#include "vortex/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vortex/errors.hpp"
#include "vortex/summation.hpp"

namespace vortex {

double exclusion_distance(const VortexConfiguration& config) {
  return kExclusionFloor * (1.0 + config.diameter());
}

void require_off_poles(const VortexConfiguration& config, Complex z) {
  const double floor = exclusion_distance(config);
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (!(std::abs(z - config.position(j)) >= floor)) {
      std::ostringstream msg;
      msg << "evaluation point (" << z.real() << ", " << z.imag() << ") is at the pole of vortex "
          << j;
      throw PoleEvaluation(msg.str());
    }
  }
}

Complex eval_G_double_sum(const VortexConfiguration& config, Complex z) {
  require_off_poles(config, z);
  CompensatedComplexSum sum;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const Complex pj = config.circulation(j) / (z - config.position(j));
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (k == j) continue;
      sum += pj * (config.circulation(k) / (z - config.position(k)));
    }
  }
  return sum.value();
}

Complex eval_G_partial_fractions(const VortexConfiguration& config, Complex z) {
  require_off_poles(config, z);
  CompensatedComplexSum sum;
  for (std::size_t j = 0; j < config.size(); ++j) {
    sum += force(config, j) / (z - config.position(j));
  }
  return 2.0 * sum.value();
}

Complex eval_T(const VortexConfiguration& config, std::size_t j, Complex z) {
  if (j >= config.size()) {
    throw std::out_of_range("eval_T: vortex index out of range");
  }
  require_off_poles(config, z);
  const Complex w = z - config.position(j);
  const double d = config.circulation(j);
  return d * d / (w * w);
}

namespace detail {

double integrand_unchecked(const VortexConfiguration& config, Complex z) {
  CompensatedComplexSum field;
  CompensatedSum self;
  for (const auto& v : config) {
    const Complex w = z - v.position;
    // Both terms come from the same rounded 1/(z - a_j) so that a lone
    // vortex cancels exactly.
    const Complex term = v.circulation * std::conj(w) / std::norm(w);
    field += term;
    const double q = std::norm(term);
    self += q * q;
  }
  const double m2 = std::norm(field.value());
  return m2 * m2 - self.value();
}

}  // namespace detail

double integrand(const VortexConfiguration& config, Complex z) {
  require_off_poles(config, z);
  return detail::integrand_unchecked(config, z);
}

double cross_term(const VortexConfiguration& config, Complex z) {
  require_off_poles(config, z);
  std::vector<Complex> t(config.size());
  for (std::size_t j = 0; j < config.size(); ++j) {
    const Complex w = z - config.position(j);
    const double d = config.circulation(j);
    t[j] = d * d / (w * w);
  }
  CompensatedComplexSum sum;
  double magnitude = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (j == k) continue;
      const Complex term = std::conj(t[j]) * t[k];
      sum += term;
      magnitude += std::abs(term);
    }
  }
  const Complex total = sum.value();
  // Ordered terms come in conjugate pairs.
  if (std::abs(total.imag()) > 1e-12 * magnitude + 1e-300) {
    throw std::logic_error("cross_term: ordered sum has a non-vanishing imaginary part");
  }
  return total.real();
}

}  // namespace vortex
