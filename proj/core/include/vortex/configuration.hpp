#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace vortex {

// Points of the plane are complex numbers x + iy.
using Complex = std::complex<double>;

// Configurations whose closest pair is nearer than
// kSeparationFloor * (1 + diameter) are rejected.
inline constexpr double kSeparationFloor = 1e-9;
inline constexpr double kCirculationFloor = 1e-12;

struct Vortex {
  Complex position;
  double circulation = 0.0;
};

/// An immutable, validated list of point vortices.
///
/// Construction enforces N >= 1, finite coordinates, |d_j| >= kCirculationFloor
/// and pairwise separation above the floor; violations throw
/// InvalidConfiguration with the offending indices in the message.
class VortexConfiguration {
 public:
  explicit VortexConfiguration(std::vector<Vortex> vortices);

  [[nodiscard]] std::size_t size() const { return vortices_.size(); }
  [[nodiscard]] const Vortex& operator[](std::size_t j) const { return vortices_[j]; }
  [[nodiscard]] std::span<const Vortex> vortices() const { return vortices_; }
  [[nodiscard]] auto begin() const { return vortices_.begin(); }
  [[nodiscard]] auto end() const { return vortices_.end(); }

  [[nodiscard]] Complex position(std::size_t j) const { return vortices_[j].position; }
  [[nodiscard]] double circulation(std::size_t j) const { return vortices_[j].circulation; }

  // Largest pairwise distance (0 for a single vortex).
  [[nodiscard]] double diameter() const { return diameter_; }
  // Smallest pairwise distance (+inf for a single vortex).
  [[nodiscard]] double min_separation() const { return min_separation_; }
  // Unweighted mean of the positions.
  [[nodiscard]] Complex centroid() const;

  bool operator==(const VortexConfiguration& other) const;

 private:
  std::vector<Vortex> vortices_;
  double diameter_ = 0.0;
  double min_separation_ = 0.0;
};

// z -> scale * e^{i rotation} * z + translation.
struct Similarity {
  double scale = 1.0;
  double rotation = 0.0;
  Complex translation{};

  static Similarity translate(Complex t) { return {1.0, 0.0, t}; }
  static Similarity dilate(double s) { return {s, 0.0, {}}; }
  static Similarity rotate(double angle) { return {1.0, angle, {}}; }

  [[nodiscard]] Complex apply(Complex z) const;
};

// Kirchhoff-Onsager energy, summed over ordered pairs j != k:
//   W = sum_{j != k} d_j d_k log(1 / |a_j - a_k|).
double energy(const VortexConfiguration& config);

// f_j = sum_{k != j} d_j d_k / (a_j - a_k). Throws std::out_of_range.
Complex force(const VortexConfiguration& config, std::size_t j);
std::vector<Complex> forces(const VortexConfiguration& config);

// Gradient of the ordered-pair energy, packed as dW/dx_j + i dW/dy_j.
// Equals -2 conj(f_j) because every unordered pair is counted twice.
std::vector<Complex> gradient(const VortexConfiguration& config);

// max_j |f_j|.
double residual(const VortexConfiguration& config);

// residual(config) <= tol. Throws DomainError unless tol > 0.
bool is_equilibrium(const VortexConfiguration& config, double tol);

VortexConfiguration transform(const VortexConfiguration& config, const Similarity& map);

// Sum of d_j d_k over ordered pairs j != k; the energy scaling law is
// W(s c) = W(c) - log(s) * pair_circulation_sum(c).
double pair_circulation_sum(const VortexConfiguration& config);

}  // namespace vortex
