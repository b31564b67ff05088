#include "vortex/adler_moser.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

std::size_t triangular(int k) { return static_cast<std::size_t>(k) * (k + 1) / 2; }

// Solves L(P) = P' Q - P Q' = rhs for P of degree `degree`, top coefficient
// first. The coefficient c_m enters the z^{m + deg Q - 1} equation with pivot
// (m - deg Q) * lead(Q), so c_{deg Q} is the one free coefficient.
Polynomial solve_wronskian_step(const Polynomial& q, const Polynomial& rhs, std::size_t degree,
                                Complex free_value) {
  const std::size_t dq = q.degree();
  const Complex lead = q.leading();
  std::vector<Complex> c(degree + 1);
  for (std::size_t step = 0; step <= degree; ++step) {
    const std::size_t m = degree - step;
    if (m == dq) {
      c[m] = free_value;
      continue;
    }
    const std::size_t power = m + dq - 1;  // m != dq, so m + dq >= 1
    Complex acc = rhs.coefficient(power);
    for (std::size_t i = 0; i < dq; ++i) {
      const std::size_t mi = power + 1 - i;
      if (mi > degree) continue;
      acc -= (static_cast<double>(mi) - static_cast<double>(i)) * q.coefficient(i) * c[mi];
    }
    c[m] = acc / ((static_cast<double>(m) - static_cast<double>(dq)) * lead);
  }
  return Polynomial(std::move(c));
}

double root_scale(std::span<const Complex> a, std::span<const Complex> b) {
  double s = 1.0;
  for (auto z : a) s = std::max(s, std::abs(z));
  for (auto z : b) s = std::max(s, std::abs(z));
  return s;
}

std::vector<Complex> simple_roots(const Polynomial& p, int index) {
  if (p.degree() == 0) return {};
  try {
    auto r = roots(p, 1e-13);
    if (r.has_near_multiple()) {
      std::ostringstream msg;
      msg << "P_" << index << " has a near-multiple root near (" << r.roots[r.near_multiple[0].first]
          << "); perturb the parameters tau";
      throw DegenerateParameters(msg.str());
    }
    return std::move(r.roots);
  } catch (const RootsNotConverged& e) {
    std::ostringstream msg;
    msg << "roots of P_" << index << " did not converge (" << e.what()
        << "); the parameters likely produce a multiple root, perturb tau";
    throw DegenerateParameters(msg.str());
  }
}

}  // namespace

AdlerMoserChain adler_moser_chain(int n, std::span<const Complex> parameters) {
  if (n < 0) throw DomainError("adler_moser_chain: n must be non-negative");
  const auto expected = static_cast<std::size_t>(std::max(n - 1, 0));
  if (parameters.size() != expected) {
    std::ostringstream msg;
    msg << "adler_moser_chain: n = " << n << " needs " << expected << " parameters, got "
        << parameters.size();
    throw DomainError(msg.str());
  }

  AdlerMoserChain chain;
  chain.n = n;
  chain.parameters.assign(parameters.begin(), parameters.end());
  chain.polynomials.push_back(Polynomial({Complex{1.0}}));
  if (n >= 1) chain.polynomials.push_back(Polynomial::monomial(1));
  for (int k = 1; k < n; ++k) {
    const Polynomial& prev = chain.polynomials[k - 1];
    const Polynomial& cur = chain.polynomials[k];
    const Polynomial rhs = Complex(2.0 * k + 1.0) * (cur * cur);
    chain.polynomials.push_back(
        solve_wronskian_step(prev, rhs, triangular(k + 1), parameters[k - 1]));
  }
  return chain;
}

double wronskian_defect(const AdlerMoserChain& chain, int k) {
  if (k < 1 || k + 1 > chain.n) throw DomainError("wronskian_defect: need 1 <= k < n");
  const Polynomial& lo = chain[k - 1];
  const Polynomial& mid = chain[k];
  const Polynomial& hi = chain[k + 1];
  const Polynomial lhs = hi.derivative() * lo - hi * lo.derivative();
  const Polynomial rhs = Complex(2.0 * k + 1.0) * (mid * mid);
  double scale = 0.0;
  for (auto c : rhs.coefficients()) scale = std::max(scale, std::abs(c));
  double worst = 0.0;
  const std::size_t len = std::max(lhs.coefficients().size(), rhs.coefficients().size());
  for (std::size_t i = 0; i < len; ++i) {
    worst = std::max(worst, std::abs(lhs.coefficient(i) - rhs.coefficient(i)));
  }
  return worst / scale;
}

VortexConfiguration config_from_adler_moser(const AdlerMoserChain& chain) {
  if (chain.n < 1) throw DomainError("config_from_adler_moser: need n >= 1");
  const auto negative = simple_roots(chain[chain.n - 1], chain.n - 1);
  const auto positive = simple_roots(chain[chain.n], chain.n);

  const double scale = root_scale(negative, positive);
  for (std::size_t i = 0; i < negative.size(); ++i) {
    for (std::size_t j = 0; j < positive.size(); ++j) {
      if (std::abs(negative[i] - positive[j]) < 1e-6 * scale) {
        std::ostringstream msg;
        msg << "roots of P_" << chain.n - 1 << " and P_" << chain.n << " collide near "
            << positive[j] << "; perturb the parameters tau";
        throw DegenerateParameters(msg.str());
      }
    }
  }

  std::vector<Vortex> vortices;
  vortices.reserve(negative.size() + positive.size());
  for (auto z : negative) vortices.push_back({z, -1.0});
  for (auto z : positive) vortices.push_back({z, 1.0});
  try {
    return VortexConfiguration(std::move(vortices));
  } catch (const InvalidConfiguration& e) {
    throw DegenerateParameters(std::string("Adler-Moser roots are degenerate: ") + e.what());
  }
}

}  // namespace vortex
