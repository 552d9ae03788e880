#pragma once

#include <utility>
#include <vector>

#include "h2tea/types.hpp"

namespace h2tea {

// Per-kg cost decomposition. `credit` is a non-positive contribution.
struct CostBreakdown {
  double capital = 0.0;
  double fixed_om = 0.0;
  double feedstock = 0.0;
  double carbon = 0.0;
  double credit = 0.0;
  double transport = 0.0;
  double storage = 0.0;
  double total = 0.0;
  // Set when a credit larger than the cost was clipped so that total is 0.
  bool floored = false;

  double component_sum() const noexcept {
    return capital + fixed_om + feedstock + carbon + credit + transport + storage;
  }
};

// Capital recovery factor. r = 0 gives the 1/n limit.
double crf(double discount_rate, int lifetime_years);

// Present value of 1 USD/yr for n years: sum_{t=1..n} (1+r)^-t.
double annuity_sum(double discount_rate, int lifetime_years);

// Production-only breakdown: carbon, credit, transport and storage are 0.
CostBreakdown lcoh(const PathwayParams& params, const FinancialParams& fin);

struct ScaledBand {
  ValueBand band;
  bool clamped = false;  // plant size was outside [1, 100] MW
};

// Log-linear interpolation between the 1/10/100 MW anchors, applied to the
// low and high edges separately. Sizes outside the anchors clamp.
ScaledBand capex_at_scale(Pathway pathway, double plant_size_kw);
ScaledBand opex_at_scale(Pathway pathway, double plant_size_kw);

// LCOH total at each size, reading CAPEX and fixed O&M from the scale tables
// (band mids). Other parameters come from `params`.
std::vector<std::pair<double, double>> lcoh_vs_size(const PathwayParams& params,
                                                    const std::vector<double>& sizes_kw,
                                                    const FinancialParams& fin);

}  // namespace h2tea
