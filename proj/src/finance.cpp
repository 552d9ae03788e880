#include "h2tea/finance.hpp"

#include <algorithm>
#include <cmath>

#include "bisect.hpp"
#include "h2tea/errors.hpp"
#include "h2tea/lcoh.hpp"
#include "h2tea/model.hpp"
#include "h2tea/policy.hpp"

namespace h2tea {

namespace {

constexpr double kIrrLow = -0.99;
constexpr double kIrrHigh = 10.0;
constexpr double kPriceLow = 0.0;
constexpr double kPriceHigh = 100.0;

}  // namespace

CashFlowSeries build_cashflows(const PathwayParams& params, const FinancialParams& fin,
                               const PolicyRegime& policy, double h2_price) {
  validate(params);
  validate(fin);
  validate(policy, fin);
  if (!(h2_price >= 0.0)) throw domain_error("hydrogen price must be >= 0");

  const double output = annual_output_kg(params, fin);
  const double variable = params.fixed_opex + params.ccs_opex + feedstock_per_kg(params) +
                          carbon_adder(params, policy.carbon_price);
  const double credit = policy.credit_for(params.pathway);

  CashFlowSeries cf;
  cf.initial_outlay = params.capex * fin.plant_size_kw;
  cf.net_flows.resize(static_cast<std::size_t>(fin.lifetime_years));
  for (int t = 1; t <= fin.lifetime_years; ++t) {
    double margin = h2_price - variable + (t <= policy.credit_years ? credit : 0.0);
    cf.net_flows[static_cast<std::size_t>(t - 1)] = output * margin;
  }
  return cf;
}

double npv(const CashFlowSeries& cf, double discount_rate) {
  if (!(discount_rate > -1.0)) throw domain_error("discount rate must be > -1");
  const double growth = 1.0 + discount_rate;
  double factor = 1.0;
  double sum = -cf.initial_outlay;
  for (double flow : cf.net_flows) {
    factor /= growth;
    sum += flow * factor;
  }
  return sum;
}

double irr(const CashFlowSeries& cf) {
  bool any_positive = std::any_of(cf.net_flows.begin(), cf.net_flows.end(),
                                  [](double v) { return v > 0.0; });
  if (!(cf.initial_outlay > 0.0) || !any_positive) throw no_sign_change();

  auto f = [&](double r) { return npv(cf, r); };
  return detail::bisect(f, kIrrLow, kIrrHigh, 1e-6 * cf.initial_outlay);
}

double breakeven_price(const PathwayParams& params, const FinancialParams& fin,
                       const PolicyRegime& policy) {
  if (!(annual_output_kg(params, fin) > 0.0)) throw domain_error("annual output must be > 0");
  auto f = [&](double price) {
    return npv(build_cashflows(params, fin, policy, price), fin.discount_rate);
  };
  // Zero tolerance: run until the bracket is adjacent doubles.
  return detail::bisect(f, kPriceLow, kPriceHigh, 0.0);
}

std::vector<std::pair<double, double>> npv_vs_price(const PathwayParams& params,
                                                    const FinancialParams& fin,
                                                    const PolicyRegime& policy,
                                                    const std::vector<double>& price_grid) {
  if (price_grid.empty()) throw domain_error("price grid is empty");
  std::vector<std::pair<double, double>> out;
  out.reserve(price_grid.size());
  for (double price : price_grid) {
    out.emplace_back(price, npv(build_cashflows(params, fin, policy, price), fin.discount_rate));
  }
  return out;
}

std::vector<std::pair<double, std::optional<double>>> irr_vs_price(
    const PathwayParams& params, const FinancialParams& fin, const PolicyRegime& policy,
    const std::vector<double>& price_grid) {
  if (price_grid.empty()) throw domain_error("price grid is empty");
  std::vector<std::pair<double, std::optional<double>>> out;
  out.reserve(price_grid.size());
  for (double price : price_grid) {
    std::optional<double> rate;
    try {
      rate = irr(build_cashflows(params, fin, policy, price));
    } catch (const no_sign_change&) {
    } catch (const solver_error&) {
      // Root below the search floor (e.g. flows recover a sliver of the outlay).
    }
    out.emplace_back(price, rate);
  }
  return out;
}

}  // namespace h2tea
