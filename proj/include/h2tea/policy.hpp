#pragma once

#include <map>
#include <utility>
#include <vector>

#include "h2tea/lcoh.hpp"
#include "h2tea/types.hpp"

namespace h2tea {

// Carbon cost per kg H2 from residual (post-capture) emissions.
double carbon_adder(const PathwayParams& params, double carbon_price_usd_per_ton);

// Share of a lifetime-flat credit that a credit lasting `credit_years`
// is worth once levelized: annuity(r, credit_years) / annuity(r, lifetime).
double credit_levelization_fraction(const FinancialParams& fin, int credit_years);

// LCOH with the carbon adder and levelized credit filled in. The total never
// goes below zero; when the credit would push it negative the credit is
// clipped and `floored` is set.
CostBreakdown effective_lcoh(const PathwayParams& params, const FinancialParams& fin,
                             const PolicyRegime& policy);

// Carbon price in [0, 1000] USD/t where the effective LCOH of `a` and `b`
// are equal. Throws no_crossing naming the cheaper pathway otherwise.
double switchover_carbon_price(const PathwayParams& a, const PathwayParams& b,
                               const FinancialParams& fin, const PolicyRegime& policy_base);

// NPV at a fixed hydrogen price for each carbon price on the grid.
std::vector<std::pair<double, double>> npv_vs_carbon_price(const PathwayParams& params,
                                                           const FinancialParams& fin,
                                                           const PolicyRegime& policy,
                                                           double h2_price,
                                                           const std::vector<double>& carbon_grid);

}  // namespace h2tea
