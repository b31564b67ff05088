#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vortex/configuration.hpp"
#include "vortex/errors.hpp"

namespace vortex {

// Dense polynomial with complex coefficients, lowest degree first.
// Trailing zero coefficients are trimmed on construction; the zero
// polynomial is stored as the single coefficient 0 and has degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0}} {}
  explicit Polynomial(std::vector<Complex> coefficients);

  static Polynomial monomial(std::size_t degree, Complex coefficient = 1.0);
  // prod_i (z - r_i)
  static Polynomial from_roots(std::span<const Complex> roots);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }
  [[nodiscard]] std::span<const Complex> coefficients() const { return coeffs_; }
  [[nodiscard]] Complex coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  [[nodiscard]] Complex leading() const { return coeffs_.back(); }

  // Horner evaluation.
  [[nodiscard]] Complex operator()(Complex z) const;
  // Value and first derivative in one Horner pass.
  [[nodiscard]] std::pair<Complex, Complex> eval_with_derivative(Complex z) const;
  // sum_k |c_k| |z|^k, the scale against which |p(z)| is judged.
  [[nodiscard]] double magnitude_bound(Complex z) const;

  [[nodiscard]] Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& p);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

struct RootsResult {
  std::vector<Complex> roots;
  // Index pairs (i, j), i < j, whose roots are closer than 1e-6 * root scale.
  std::vector<std::pair<std::size_t, std::size_t>> near_multiple;
  int iterations = 0;

  [[nodiscard]] bool has_near_multiple() const { return !near_multiple.empty(); }
};

class RootsNotConverged : public NonConvergence {
 public:
  RootsNotConverged(const std::string& what, std::vector<std::size_t> failed, RootsResult partial)
      : NonConvergence(what), failed_(std::move(failed)), partial_(std::move(partial)) {}

  [[nodiscard]] const std::vector<std::size_t>& failed() const { return failed_; }
  [[nodiscard]] const RootsResult& partial() const { return partial_; }

 private:
  std::vector<std::size_t> failed_;
  RootsResult partial_;
};

inline constexpr int kAberthIterationCap = 200;
inline constexpr double kAberthPhaseOffset = 0.376;

/// All roots of p, with multiplicity, by simultaneous Aberth-Ehrlich iteration.
///
/// Starting guesses sit on a circle whose radius is the Fujiwara bound, rotated
/// by a fixed phase so symmetric polynomials do not start on a symmetry axis.
/// A root is accepted once |p(z)| <= tol * magnitude_bound(z); each accepted
/// root then receives one Newton polishing step (kept only if it lowers |p|).
/// Throws DomainError for degree 0 or tol <= 0, RootsNotConverged after
/// kAberthIterationCap sweeps.
RootsResult roots(const Polynomial& p, double tol);

}  // namespace vortex
