#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "h2tea/types.hpp"

namespace h2tea {

// Year-0 outlay (positive magnitude) followed by year-end net flows, t = 1..n.
struct CashFlowSeries {
  double initial_outlay = 0.0;
  std::vector<double> net_flows;
};

// Constant real cash flows from selling all output at `h2_price`. The
// production credit applies in years 1..credit_years only.
CashFlowSeries build_cashflows(const PathwayParams& params, const FinancialParams& fin,
                               const PolicyRegime& policy, double h2_price);

double npv(const CashFlowSeries& cf, double discount_rate);

// Bisection on (-0.99, 10). Throws no_sign_change when no outlay is
// recovered by a positive flow, solver_error if the bracket does not close.
double irr(const CashFlowSeries& cf);

// Price in [0, 100] USD/kg at which NPV at the discount rate is zero.
double breakeven_price(const PathwayParams& params, const FinancialParams& fin,
                       const PolicyRegime& policy);

std::vector<std::pair<double, double>> npv_vs_price(const PathwayParams& params,
                                                    const FinancialParams& fin,
                                                    const PolicyRegime& policy,
                                                    const std::vector<double>& price_grid);

// Entries without a sign change carry nullopt.
std::vector<std::pair<double, std::optional<double>>> irr_vs_price(
    const PathwayParams& params, const FinancialParams& fin, const PolicyRegime& policy,
    const std::vector<double>& price_grid);

}  // namespace h2tea
