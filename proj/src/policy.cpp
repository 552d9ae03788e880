#include "h2tea/policy.hpp"

#include <algorithm>
#include <string>

#include "bisect.hpp"
#include "h2tea/errors.hpp"
#include "h2tea/finance.hpp"

namespace h2tea {

namespace {

constexpr double kCarbonSearchHigh = 1000.0;

}  // namespace

double carbon_adder(const PathwayParams& params, double carbon_price_usd_per_ton) {
  if (!(carbon_price_usd_per_ton >= 0.0)) throw domain_error("carbon price must be >= 0");
  return params.effective_emission_intensity() * carbon_price_usd_per_ton / 1000.0;
}

double credit_levelization_fraction(const FinancialParams& fin, int credit_years) {
  if (credit_years <= 0) return 0.0;
  if (credit_years >= fin.lifetime_years) return 1.0;
  return annuity_sum(fin.discount_rate, credit_years) /
         annuity_sum(fin.discount_rate, fin.lifetime_years);
}

CostBreakdown effective_lcoh(const PathwayParams& params, const FinancialParams& fin,
                             const PolicyRegime& policy) {
  validate(policy, fin);
  CostBreakdown c = lcoh(params, fin);
  c.carbon = carbon_adder(params, policy.carbon_price);
  c.credit = -policy.credit_for(params.pathway) *
             credit_levelization_fraction(fin, policy.credit_years);
  double total = c.component_sum();
  if (total < 0.0) {
    c.credit = -(c.capital + c.fixed_om + c.feedstock + c.carbon + c.transport + c.storage);
    c.floored = true;
    total = std::max(0.0, c.component_sum());
  }
  c.total = total;
  return c;
}

double switchover_carbon_price(const PathwayParams& a, const PathwayParams& b,
                               const FinancialParams& fin, const PolicyRegime& policy_base) {
  if (a.effective_emission_intensity() == b.effective_emission_intensity()) {
    throw no_crossing(std::string(to_string(a.pathway)) + " and " +
                      std::string(to_string(b.pathway)) +
                      " have identical effective emission intensity; costs never cross");
  }
  auto gap = [&](double carbon_price) {
    PolicyRegime p = policy_base;
    p.carbon_price = carbon_price;
    return effective_lcoh(a, fin, p).total - effective_lcoh(b, fin, p).total;
  };
  double g0 = gap(0.0);
  double g1 = gap(kCarbonSearchHigh);
  if (g0 != 0.0 && g1 != 0.0 && std::signbit(g0) == std::signbit(g1)) {
    const PathwayParams& cheaper = g0 < 0.0 ? a : b;
    throw no_crossing(std::string(to_string(cheaper.pathway)) +
                      " is cheaper across the whole 0-1000 USD/t range");
  }
  return detail::bisect(gap, 0.0, kCarbonSearchHigh, 0.0);
}

std::vector<std::pair<double, double>> npv_vs_carbon_price(const PathwayParams& params,
                                                           const FinancialParams& fin,
                                                           const PolicyRegime& policy,
                                                           double h2_price,
                                                           const std::vector<double>& carbon_grid) {
  if (carbon_grid.empty()) throw domain_error("carbon price grid is empty");
  std::vector<std::pair<double, double>> out;
  out.reserve(carbon_grid.size());
  for (double carbon : carbon_grid) {
    PolicyRegime p = policy;
    p.carbon_price = carbon;
    out.emplace_back(carbon, npv(build_cashflows(params, fin, p, h2_price), fin.discount_rate));
  }
  return out;
}

}  // namespace h2tea
