#include "vortex/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "vortex/cubature.hpp"
#include "vortex/errors.hpp"
#include "vortex/rational.hpp"
#include "vortex/summation.hpp"

namespace vortex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// A removed disk B_eps(center) and the cutoff that equals 1 up to radius
// `inner` and falls smoothly to 0 at `outer`.
struct Excision {
  Complex center;
  double eps = 0.0;
  double inner = 0.0;
  double outer = 0.0;

  [[nodiscard]] double cutoff(double r) const {
    if (r <= inner) return 1.0;
    if (r >= outer) return 0.0;
    const double t = (r - inner) / (outer - inner);
    // C-infinity step between exp(-1/t) and exp(-1/(1-t)).
    const double rise = std::exp(-1.0 / t);
    const double fall = std::exp(-1.0 / (1.0 - t));
    return fall / (rise + fall);
  }
};

Excision make_excision(Complex center, double eps, double rho) {
  return {center, eps, std::max(eps, 0.5 * rho), rho};
}

int panel_count(double span, double width) {
  return std::max(1, static_cast<int>(std::ceil(span / width - 1e-9)));
}

template <class Value, class PointFn>
std::vector<cubature::Region<Value>> build_regions(const std::vector<Excision>& excisions,
                                                   Complex center, double radius,
                                                   const PointFn& g) {
  std::vector<cubature::Region<Value>> regions;

  for (const auto& ex : excisions) {
    const double lo = std::log(ex.eps);
    const double hi = std::log(ex.outer);
    const int nr = panel_count(hi - lo, kLn2);
    constexpr int nt = 4;
    auto f = [ex, &g](double u, double theta) -> Value {
      const double r = std::exp(u);
      const double w = ex.cutoff(r);
      if (w == 0.0) return Value{};
      return (w * r * r) * g(ex.center + std::polar(r, theta));
    };
    for (int i = 0; i < nr; ++i) {
      for (int k = 0; k < nt; ++k) {
        regions.push_back({{lo + (hi - lo) * i / nr, lo + (hi - lo) * (i + 1) / nr,
                            kTwoPi * k / nt, kTwoPi * (k + 1) / nt},
                           f});
      }
    }
  }

  double core = 0.0;
  for (const auto& ex : excisions) core = std::max(core, std::abs(ex.center - center) + ex.outer);
  core = std::min(core, 0.5 * radius);

  auto weight = [&excisions](Complex z) {
    double w = 1.0;
    for (const auto& ex : excisions) w -= ex.cutoff(std::abs(z - ex.center));
    return w;
  };
  auto inner_f = [center, weight, &g](double r, double theta) -> Value {
    const Complex z = center + std::polar(r, theta);
    const double w = weight(z);
    if (w <= 0.0) return Value{};
    return (w * r) * g(z);
  };
  auto outer_f = [center, weight, &g](double u, double theta) -> Value {
    const double r = std::exp(u);
    const Complex z = center + std::polar(r, theta);
    const double w = weight(z);
    if (w <= 0.0) return Value{};
    return (w * r * r) * g(z);
  };

  constexpr int nt = 8;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < nt; ++k) {
      regions.push_back(
          {{core * i / 2, core * (i + 1) / 2, kTwoPi * k / nt, kTwoPi * (k + 1) / nt}, inner_f});
    }
  }
  const double lo = std::log(core);
  const double hi = std::log(radius);
  const int nr = panel_count(hi - lo, kLn2);
  for (int i = 0; i < nr; ++i) {
    for (int k = 0; k < nt; ++k) {
      regions.push_back({{lo + (hi - lo) * i / nr, lo + (hi - lo) * (i + 1) / nr,
                          kTwoPi * k / nt, kTwoPi * (k + 1) / nt},
                         outer_f});
    }
  }
  return regions;
}

void validate_numerics(const QuadratureSpec& spec) {
  if (!(spec.target_abs_error > 0.0)) throw DomainError("target_abs_error must be positive");
  if (spec.max_cells < 1) throw DomainError("max_cells must be at least 1");
}

std::vector<double> nearest_distances(const VortexConfiguration& config) {
  std::vector<double> out(config.size(), std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < config.size(); ++j) {
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (j != k) out[j] = std::min(out[j], std::abs(config.position(j) - config.position(k)));
    }
  }
  return out;
}

// pi R^2 / (R^2 - conj(p) q)^2: the pair kernel conj(z-p)^-2 (z-q)^-2 over
// |z| > R, with p and q relative to the centre.
Complex pair_tail(Complex p, Complex q, double radius) {
  const double r2 = radius * radius;
  const Complex denom = r2 - std::conj(p) * q;
  return kPi * r2 / (denom * denom);
}

template <class Value>
QuadratureResult to_result(const cubature::Outcome<Value>& outcome) {
  QuadratureResult result;
  result.abs_error_estimate = outcome.abs_error;
  result.cells_used = outcome.cells;
  result.budget_exhausted = outcome.budget_exhausted;
  return result;
}

double neville_at_zero(std::span<const double> x, std::span<const double> y) {
  std::vector<double> p(y.begin(), y.end());
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return p[0];
}

// Solves (e1^a - e2^a) / (e2^a - e3^a) = ratio for a by bisection.
double fit_order(double e1, double e2, double e3, double ratio) {
  auto g = [&](double a) {
    return (std::pow(e1, a) - std::pow(e2, a)) / (std::pow(e2, a) - std::pow(e3, a)) - ratio;
  };
  double lo = 0.05;
  double hi = 20.0;
  double glo = g(lo);
  if (!std::isfinite(glo) || glo * g(hi) > 0.0) return std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (glo * gm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

QuadratureSpec default_spec(const VortexConfiguration& config) {
  QuadratureSpec spec;
  spec.epsilon = config.size() > 1 ? 0.2 * config.min_separation() : 0.2;
  spec.cutoff_radius = 50.0 * (1.0 + config.diameter());
  return spec;
}

std::vector<double> default_epsilons(const VortexConfiguration& config) {
  const double unit = config.size() > 1 ? config.min_separation() : 1.0;
  return {0.2 * unit, 0.1 * unit, 0.05 * unit};
}

void validate_spec(const VortexConfiguration& config, const QuadratureSpec& spec) {
  if (!(spec.epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (config.size() > 1 && !(spec.epsilon < 0.5 * config.min_separation())) {
    std::ostringstream msg;
    msg << "excision disks overlap: epsilon = " << spec.epsilon
        << " must be below half the minimum separation " << config.min_separation();
    throw DomainError(msg.str());
  }
  if (!(spec.cutoff_radius > 2.0 * (config.diameter() + 1.0))) {
    std::ostringstream msg;
    msg << "cutoff radius " << spec.cutoff_radius << " must exceed 2 (diameter + 1) = "
        << 2.0 * (config.diameter() + 1.0);
    throw DomainError(msg.str());
  }
  validate_numerics(spec);
}

double leading_tail(const VortexConfiguration& config, double radius) {
  CompensatedSum total;
  CompensatedSum fourth;
  for (const auto& v : config) {
    total += v.circulation;
    fourth += std::pow(v.circulation, 4);
  }
  const double m0 = total.value();
  return kPi * (m0 * m0 * m0 * m0 - fourth.value()) / (radius * radius);
}

double far_field_tail(const VortexConfiguration& config, double radius) {
  // Outside every vortex, S(z) = sum_i m_i / z^{i+1} with moments
  // m_i = sum_j d_j (a_j - c)^i, so S^2 = sum_n s_n / z^{n+2} and the circle
  // mean of |S|^4 is sum_n |s_n|^2 r^{-2n-4}. Positions are scaled by 1/R.
  const Complex c = config.centroid();
  const double r2 = radius * radius;
  std::vector<Complex> scaled;
  for (const auto& v : config) scaled.push_back((v.position - c) / radius);

  CompensatedSum self;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const double d2 = config.circulation(j) * config.circulation(j);
    const double shrink = 1.0 - std::norm(scaled[j]);
    self += d2 * d2 / (shrink * shrink);
  }

  std::vector<Complex> moments;
  std::vector<Complex> powers(config.size(), Complex{1.0});
  CompensatedSum field;
  const double floor = 1e-18 * (std::abs(self.value()) + 1.0);
  for (std::size_t n = 0; n < 400; ++n) {
    CompensatedComplexSum m;
    for (std::size_t j = 0; j < config.size(); ++j) {
      m += config.circulation(j) * powers[j];
      powers[j] *= scaled[j];
    }
    moments.push_back(m.value());
    CompensatedComplexSum s;
    for (std::size_t i = 0; i <= n; ++i) s += moments[i] * moments[n - i];
    const double term = std::norm(s.value()) / static_cast<double>(n + 1);
    field += term;
    if (n >= 2 && term < floor) break;
  }
  return kPi * (field.value() - self.value()) / r2;
}

QuadratureResult correlation_A_eps(const VortexConfiguration& config, const QuadratureSpec& spec) {
  validate_spec(config, spec);
  if (config.size() == 1) return {};

  const auto nearest = nearest_distances(config);
  std::vector<Excision> excisions;
  for (std::size_t l = 0; l < config.size(); ++l) {
    excisions.push_back(make_excision(config.position(l), spec.epsilon, 0.5 * nearest[l]));
  }
  auto g = [&config](Complex z) { return detail::integrand_unchecked(config, z); };
  const auto regions = build_regions<double>(excisions, config.centroid(), spec.cutoff_radius, g);
  const auto outcome =
      cubature::integrate(regions, {spec.target_abs_error, spec.max_cells});

  auto result = to_result(outcome);
  result.tail_correction = far_field_tail(config, spec.cutoff_radius);
  result.value = outcome.value + result.tail_correction;
  result.complex_value = result.value;
  return result;
}

QuadratureResult pair_integral(Complex p, Complex q, double epsilon, const QuadratureSpec& spec,
                               PairKernel kernel) {
  const double sep = std::abs(p - q);
  if (!(epsilon > 0.0) || !(epsilon < 0.5 * sep)) {
    std::ostringstream msg;
    msg << "pair_integral: epsilon = " << epsilon << " must lie in (0, |p - q|/2 = " << 0.5 * sep
        << ")";
    throw DomainError(msg.str());
  }
  if (!(spec.cutoff_radius > 2.0 * (sep + 1.0))) {
    throw DomainError("pair_integral: cutoff radius must exceed 2 (|p - q| + 1)");
  }
  validate_numerics(spec);

  const Complex center = 0.5 * (p + q);
  std::vector<Excision> excisions{make_excision(p, epsilon, 0.5 * sep),
                                  make_excision(q, epsilon, 0.5 * sep)};
  cubature::Outcome<Complex> outcome;
  Complex tail{};
  if (kernel == PairKernel::conjugate_first) {
    auto g = [p, q](Complex z) {
      const Complex a = std::conj(z - p);
      const Complex b = z - q;
      return 1.0 / (a * a * b * b);
    };
    outcome = cubature::integrate(build_regions<Complex>(excisions, center, spec.cutoff_radius, g),
                                  {spec.target_abs_error, spec.max_cells});
    tail = pair_tail(p - center, q - center, spec.cutoff_radius);
  } else {
    // Holomorphic and O(z^-4): every circle mean beyond R vanishes.
    auto g = [p, q](Complex z) {
      const Complex a = z - p;
      const Complex b = z - q;
      return 1.0 / (a * a * b * b);
    };
    outcome = cubature::integrate(build_regions<Complex>(excisions, center, spec.cutoff_radius, g),
                                  {spec.target_abs_error, spec.max_cells});
  }
  auto result = to_result(outcome);
  result.complex_value = outcome.value + tail;
  result.tail_correction = std::abs(tail);
  result.value = std::abs(result.complex_value);
  return result;
}

QuadratureResult cross_pair_truncated(const VortexConfiguration& config, std::size_t j,
                                      std::size_t k, double epsilon, const QuadratureSpec& spec) {
  if (j >= config.size() || k >= config.size()) {
    throw DomainError("cross_pair_truncated: index out of range");
  }
  if (j == k) throw DomainError("cross_pair_truncated: requires j != k");
  QuadratureSpec local = spec;
  local.epsilon = epsilon;
  validate_spec(config, local);

  const Complex aj = config.position(j);
  const Complex ak = config.position(k);
  const double weight = std::pow(config.circulation(j) * config.circulation(k), 2);
  const double sep = std::abs(aj - ak);
  std::vector<Excision> excisions{make_excision(aj, epsilon, 0.5 * sep),
                                  make_excision(ak, epsilon, 0.5 * sep)};
  auto g = [aj, ak, weight](Complex z) {
    const Complex a = std::conj(z - aj);
    const Complex b = z - ak;
    return weight / (a * a * b * b);
  };
  const Complex center = config.centroid();
  const auto outcome =
      cubature::integrate(build_regions<Complex>(excisions, center, spec.cutoff_radius, g),
                          {spec.target_abs_error, spec.max_cells});
  const Complex tail = weight * pair_tail(aj - center, ak - center, spec.cutoff_radius);
  auto result = to_result(outcome);
  result.complex_value = outcome.value + tail;
  result.tail_correction = tail.real();
  result.value = result.complex_value.real();
  return result;
}

Extrapolation extrapolate_to_zero(std::span<const double> epsilons, std::span<const double> values,
                                  std::span<const double> errors) {
  const std::size_t n = epsilons.size();
  if (n < 2 || values.size() != n || errors.size() != n) {
    throw DomainError("extrapolate_to_zero: need at least two (epsilon, value, error) triples");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(epsilons[i] > epsilons[i + 1]) || !(epsilons[i + 1] > 0.0)) {
      throw DomainError("extrapolate_to_zero: epsilons must be positive and strictly decreasing");
    }
  }

  Extrapolation out;
  out.observed_order = std::numeric_limits<double>::quiet_NaN();
  if (n >= 3) {
    const double d1 = values[n - 3] - values[n - 2];
    const double d2 = values[n - 2] - values[n - 1];
    if (d2 != 0.0 && d1 / d2 > 0.0) {
      out.observed_order = fit_order(epsilons[n - 3], epsilons[n - 2], epsilons[n - 1], d1 / d2);
    }
  }

  bool resolved = false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(values[i] - values[i + 1]) >= 3.0 * (errors[i] + errors[i + 1])) resolved = true;
  }
  if (!resolved) {
    out.degenerate = true;
    out.limit = values[n - 1];
    out.error = errors[n - 1];
    return out;
  }

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = epsilons[i] * epsilons[i];
  out.limit = neville_at_zero(x, values);
  const double coarser = neville_at_zero(std::span(x).subspan(1), values.subspan(1));

  // Lagrange weights of the interpolant at zero propagate quadrature noise.
  double noise = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double w = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (m != i) w *= x[m] / (x[m] - x[i]);
    }
    noise += std::abs(w) * errors[i];
  }
  out.error = std::abs(out.limit - coarser) + noise;
  return out;
}

CorrelationReport correlation_limit(const VortexConfiguration& config,
                                    std::span<const double> epsilons, const QuadratureSpec& spec) {
  if (epsilons.size() < 2) throw DomainError("correlation_limit: need at least two epsilons");
  for (std::size_t i = 0; i + 1 < epsilons.size(); ++i) {
    if (!(epsilons[i] > epsilons[i + 1])) {
      throw DomainError("correlation_limit: epsilons must be strictly decreasing");
    }
  }
  CorrelationReport report;
  report.epsilons.assign(epsilons.begin(), epsilons.end());
  std::vector<double> values;
  std::vector<double> errors;
  for (const double eps : epsilons) {
    QuadratureSpec local = spec;
    local.epsilon = eps;
    report.estimates.push_back(correlation_A_eps(config, local));
    values.push_back(report.estimates.back().value);
    errors.push_back(report.estimates.back().abs_error_estimate);
    report.budget_exhausted = report.budget_exhausted || report.estimates.back().budget_exhausted;
  }
  const auto fit = extrapolate_to_zero(report.epsilons, values, errors);
  report.extrapolated_limit = fit.limit;
  report.extrapolation_error = fit.error;
  report.observed_order = fit.observed_order;
  report.fit_degenerate = fit.degenerate;
  return report;
}

}  // namespace vortex
