#pragma once

// Reference computations written independently of the library: plain loops
// and std::pow, no shared helpers. Tests compare library output against these.

#include <cmath>
#include <optional>
#include <vector>

namespace oracle {

inline double annuity(double r, int n) {
  double sum = 0.0;
  for (int t = 1; t <= n; ++t) sum += 1.0 / std::pow(1.0 + r, t);
  return sum;
}

inline double npv(double outlay, const std::vector<double>& flows, double r) {
  double sum = -outlay;
  for (std::size_t t = 0; t < flows.size(); ++t) {
    sum += flows[t] / std::pow(1.0 + r, static_cast<double>(t + 1));
  }
  return sum;
}

// First sign change of npv on a uniform grid over [lo, hi); returns the cell
// midpoint, so the answer is within step/2 of the true root.
inline std::optional<double> irr_scan(double outlay, const std::vector<double>& flows,
                                      double step = 1e-4, double lo = -0.99, double hi = 10.0) {
  double prev = npv(outlay, flows, lo);
  for (double r = lo + step; r <= hi; r += step) {
    double cur = npv(outlay, flows, r);
    if ((prev > 0.0) != (cur > 0.0)) return r - step / 2.0;
    prev = cur;
  }
  return std::nullopt;
}

// LCOH from first principles for a plant with a flat price per kg feedstock.
struct Plant {
  double capex_per_kw;
  double size_kw;
  double capacity_factor;
  double efficiency;
  double fixed_per_kg;
  double feedstock_per_kg;
};

inline double kwh_per_kg(double efficiency) { return 33.33 / efficiency; }

inline double output_kg(const Plant& p) {
  return p.size_kw * 8760.0 * p.capacity_factor / kwh_per_kg(p.efficiency);
}

inline double lcoh(const Plant& p, double r, int n) {
  double annualized = p.capex_per_kw * p.size_kw / annuity(r, n);
  return annualized / output_kg(p) + p.fixed_per_kg + p.feedstock_per_kg;
}

// Carbon price in [0, hi] where gap(c) changes sign, scanned at 1 USD/t and
// linearly interpolated inside the crossing cell.
template <class Gap>
std::optional<double> crossing_scan(Gap gap, double hi = 1000.0, double step = 1.0) {
  double prev = gap(0.0);
  if (prev == 0.0) return 0.0;
  for (double c = step; c <= hi; c += step) {
    double cur = gap(c);
    if (cur == 0.0) return c;
    if ((prev > 0.0) != (cur > 0.0)) return c - step + step * prev / (prev - cur);
    prev = cur;
  }
  return std::nullopt;
}

}  // namespace oracle
