#include "vortex/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace vortex {

Polynomial::Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
  trim();
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t degree, Complex coefficient) {
  std::vector<Complex> c(degree + 1);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex{1.0}};
  for (const Complex r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> Polynomial::eval_with_derivative(Complex z) const {
  Complex p{};
  Complex dp{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

double Polynomial::magnitude_bound(Complex z) const {
  const double r = std::abs(z);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial();
  std::vector<Complex> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c(p.coeffs_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

}  // namespace vortex
