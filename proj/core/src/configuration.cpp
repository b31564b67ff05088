#include "vortex/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "vortex/errors.hpp"
#include "vortex/summation.hpp"

namespace vortex {

VortexConfiguration::VortexConfiguration(std::vector<Vortex> vortices)
    : vortices_(std::move(vortices)) {
  if (vortices_.empty()) {
    throw InvalidConfiguration("configuration must contain at least one vortex");
  }
  for (std::size_t j = 0; j < vortices_.size(); ++j) {
    const auto& v = vortices_[j];
    if (!std::isfinite(v.position.real()) || !std::isfinite(v.position.imag())) {
      std::ostringstream msg;
      msg << "vortex " << j << " has a non-finite position";
      throw InvalidConfiguration(msg.str());
    }
    if (!std::isfinite(v.circulation) || std::abs(v.circulation) < kCirculationFloor) {
      std::ostringstream msg;
      msg << "vortex " << j << " has circulation " << v.circulation
          << " (must be finite with |d| >= " << kCirculationFloor << ")";
      throw InvalidConfiguration(msg.str());
    }
  }

  diameter_ = 0.0;
  min_separation_ = std::numeric_limits<double>::infinity();
  std::size_t close_j = 0;
  std::size_t close_k = 0;
  for (std::size_t j = 0; j < vortices_.size(); ++j) {
    for (std::size_t k = j + 1; k < vortices_.size(); ++k) {
      const double dist = std::abs(vortices_[j].position - vortices_[k].position);
      diameter_ = std::max(diameter_, dist);
      if (dist < min_separation_) {
        min_separation_ = dist;
        close_j = j;
        close_k = k;
      }
    }
  }
  if (vortices_.size() > 1 && min_separation_ < kSeparationFloor * (1.0 + diameter_)) {
    std::ostringstream msg;
    msg << "vortices " << close_j << " and " << close_k << " are coincident (distance "
        << min_separation_ << ")";
    throw InvalidConfiguration(msg.str());
  }
}

Complex VortexConfiguration::centroid() const {
  CompensatedComplexSum sum;
  for (const auto& v : vortices_) sum += v.position;
  return sum.value() / static_cast<double>(vortices_.size());
}

bool VortexConfiguration::operator==(const VortexConfiguration& other) const {
  return std::equal(vortices_.begin(), vortices_.end(), other.vortices_.begin(),
                    other.vortices_.end(), [](const Vortex& a, const Vortex& b) {
                      return a.position == b.position && a.circulation == b.circulation;
                    });
}

Complex Similarity::apply(Complex z) const {
  return scale * std::polar(1.0, rotation) * z + translation;
}

double energy(const VortexConfiguration& config) {
  // Each unordered pair contributes twice d_j d_k * (-1/2) log|a_j - a_k|^2.
  CompensatedSum sum;
  for (std::size_t j = 0; j < config.size(); ++j) {
    for (std::size_t k = j + 1; k < config.size(); ++k) {
      const double dist2 = std::norm(config.position(j) - config.position(k));
      sum += -config.circulation(j) * config.circulation(k) * std::log(dist2);
    }
  }
  return sum.value();
}

Complex force(const VortexConfiguration& config, std::size_t j) {
  if (j >= config.size()) {
    throw std::out_of_range("force: vortex index out of range");
  }
  CompensatedComplexSum sum;
  const Complex aj = config.position(j);
  for (std::size_t k = 0; k < config.size(); ++k) {
    if (k == j) continue;
    sum += config.circulation(k) / (aj - config.position(k));
  }
  return config.circulation(j) * sum.value();
}

std::vector<Complex> forces(const VortexConfiguration& config) {
  std::vector<Complex> out(config.size());
  for (std::size_t j = 0; j < config.size(); ++j) out[j] = force(config, j);
  return out;
}

std::vector<Complex> gradient(const VortexConfiguration& config) {
  auto out = forces(config);
  for (auto& f : out) f = -2.0 * std::conj(f);
  return out;
}

double residual(const VortexConfiguration& config) {
  double worst = 0.0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    worst = std::max(worst, std::abs(force(config, j)));
  }
  return worst;
}

bool is_equilibrium(const VortexConfiguration& config, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("is_equilibrium: tolerance must be positive");
  }
  return residual(config) <= tol;
}

VortexConfiguration transform(const VortexConfiguration& config, const Similarity& map) {
  if (!(map.scale > 0.0) || !std::isfinite(map.scale)) {
    throw DomainError("similarity scale must be positive and finite");
  }
  std::vector<Vortex> out;
  out.reserve(config.size());
  for (const auto& v : config) out.push_back({map.apply(v.position), v.circulation});
  return VortexConfiguration(std::move(out));
}

double pair_circulation_sum(const VortexConfiguration& config) {
  CompensatedSum sum;
  for (std::size_t j = 0; j < config.size(); ++j) {
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (j != k) sum += config.circulation(j) * config.circulation(k);
    }
  }
  return sum.value();
}

}  // namespace vortex
