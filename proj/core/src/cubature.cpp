#include "vortex/cubature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "vortex/errors.hpp"
#include "vortex/summation.hpp"

namespace vortex::cubature {

namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights; the
// odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kPoints = 15;

struct Rule {
  std::array<double, kPoints> x{};
  std::array<double, kPoints> wk{};
  std::array<double, kPoints> wg{};
};

constexpr Rule make_rule() {
  Rule r;
  for (int i = 0; i < 7; ++i) {
    r.x[i] = -kXgk[i];
    r.x[kPoints - 1 - i] = kXgk[i];
    r.wk[i] = r.wk[kPoints - 1 - i] = kWgk[i];
    if (i % 2 == 1) r.wg[i] = r.wg[kPoints - 1 - i] = kWg[i / 2];
  }
  r.x[7] = 0.0;
  r.wk[7] = kWgk[7];
  r.wg[7] = kWg[3];
  return r;
}

constexpr Rule kRule = make_rule();
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

template <class Value>
struct Cell {
  Box box;
  std::size_t region = 0;
  std::uint64_t id = 0;
  Value value{};
  double error = 0.0;
  double error_u = 0.0;
  double error_v = 0.0;
};

template <class Value>
double magnitude(const Value& v) {
  return std::abs(v);
}

template <class Value>
void evaluate(Cell<Value>& cell, const std::function<Value(double, double)>& f) {
  const double cu = 0.5 * (cell.box.u0 + cell.box.u1);
  const double hu = 0.5 * (cell.box.u1 - cell.box.u0);
  const double cv = 0.5 * (cell.box.v0 + cell.box.v1);
  const double hv = 0.5 * (cell.box.v1 - cell.box.v0);

  std::array<Value, kPoints> rows_k{};  // Kronrod in v, per u node
  std::array<Value, kPoints> rows_g{};  // Gauss in v, per u node
  double abs_sum = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double u = cu + hu * kRule.x[i];
    Value acc_k{};
    Value acc_g{};
    for (int j = 0; j < kPoints; ++j) {
      const Value fv = f(u, cv + hv * kRule.x[j]);
      acc_k += kRule.wk[j] * fv;
      if (kRule.wg[j] != 0.0) acc_g += kRule.wg[j] * fv;
      abs_sum += kRule.wk[i] * kRule.wk[j] * magnitude(fv);
    }
    rows_k[i] = acc_k;
    rows_g[i] = acc_g;
  }
  Value kk{};
  Value gk{};  // Gauss in u, Kronrod in v
  Value kg{};  // Kronrod in u, Gauss in v
  Value gg{};
  for (int i = 0; i < kPoints; ++i) {
    kk += kRule.wk[i] * rows_k[i];
    kg += kRule.wk[i] * rows_g[i];
    if (kRule.wg[i] != 0.0) {
      gk += kRule.wg[i] * rows_k[i];
      gg += kRule.wg[i] * rows_g[i];
    }
  }
  const double area = hu * hv;
  cell.value = area * kk;
  cell.error_u = area * magnitude(kk - gk);
  cell.error_v = area * magnitude(kk - kg);
  const double roundoff = 50.0 * kEpsilon * area * abs_sum;
  cell.error = std::max({area * magnitude(kk - gg), cell.error_u, cell.error_v, roundoff});
}

template <class Value>
struct WorseFirst {
  bool operator()(const Cell<Value>& a, const Cell<Value>& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.id > b.id;
  }
};

bool splittable(double lo, double hi) {
  const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
  return (hi - lo) > 1e-12 * scale;
}

}  // namespace

template <class Value>
Outcome<Value> integrate(const std::vector<Region<Value>>& regions, const Options& options) {
  if (static_cast<std::int64_t>(regions.size()) > options.max_cells) {
    throw DomainError("cubature: max_cells = " + std::to_string(options.max_cells) +
                      " is below the " + std::to_string(regions.size()) + " initial cells");
  }
  Outcome<Value> out;
  std::vector<Cell<Value>> heap;
  std::vector<Cell<Value>> finished;
  std::uint64_t next_id = 0;
  double total_error = 0.0;

  heap.reserve(regions.size());
  for (std::size_t r = 0; r < regions.size(); ++r) {
    Cell<Value> cell{regions[r].box, r, next_id++};
    evaluate(cell, regions[r].f);
    total_error += cell.error;
    heap.push_back(cell);
  }
  std::make_heap(heap.begin(), heap.end(), WorseFirst<Value>{});
  auto cells = static_cast<std::int64_t>(heap.size());

  while (total_error > options.target_abs_error && !heap.empty() && cells < options.max_cells) {
    std::pop_heap(heap.begin(), heap.end(), WorseFirst<Value>{});
    Cell<Value> parent = heap.back();
    heap.pop_back();

    const bool can_u = splittable(parent.box.u0, parent.box.u1);
    const bool can_v = splittable(parent.box.v0, parent.box.v1);
    if (!can_u && !can_v) {
      finished.push_back(parent);
      continue;
    }
    const bool along_u = can_u && (!can_v || parent.error_u >= parent.error_v);

    Cell<Value> lo{parent.box, parent.region, next_id++};
    Cell<Value> hi{parent.box, parent.region, next_id++};
    if (along_u) {
      const double mid = 0.5 * (parent.box.u0 + parent.box.u1);
      lo.box.u1 = mid;
      hi.box.u0 = mid;
    } else {
      const double mid = 0.5 * (parent.box.v0 + parent.box.v1);
      lo.box.v1 = mid;
      hi.box.v0 = mid;
    }
    evaluate(lo, regions[parent.region].f);
    evaluate(hi, regions[parent.region].f);
    total_error += lo.error + hi.error - parent.error;
    heap.push_back(lo);
    std::push_heap(heap.begin(), heap.end(), WorseFirst<Value>{});
    heap.push_back(hi);
    std::push_heap(heap.begin(), heap.end(), WorseFirst<Value>{});
    ++cells;
  }

  // Reduce in id order so the sum does not depend on heap layout.
  finished.insert(finished.end(), heap.begin(), heap.end());
  std::sort(finished.begin(), finished.end(),
            [](const Cell<Value>& a, const Cell<Value>& b) { return a.id < b.id; });
  CompensatedSum error_sum;
  if constexpr (std::is_same_v<Value, double>) {
    CompensatedSum sum;
    for (const auto& c : finished) {
      sum += c.value;
      error_sum += c.error;
    }
    out.value = sum.value();
  } else {
    CompensatedComplexSum sum;
    for (const auto& c : finished) {
      sum += c.value;
      error_sum += c.error;
    }
    out.value = sum.value();
  }
  out.abs_error = error_sum.value();
  out.cells = cells;
  out.budget_exhausted = out.abs_error > options.target_abs_error;
  return out;
}

template Outcome<double> integrate(const std::vector<Region<double>>&, const Options&);
template Outcome<Complex> integrate(const std::vector<Region<Complex>>&, const Options&);

}  // namespace vortex::cubature
