#include "h2tea/lcoh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "h2tea/dataset.hpp"
#include "h2tea/errors.hpp"
#include "h2tea/model.hpp"

namespace h2tea {

namespace {

void check_rate_and_life(double r, int n) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw domain_error("discount rate must be >= 0");
  if (n < 1) throw domain_error("lifetime must be >= 1 year");
}

// 1 - (1+r)^-n, accurate for small r.
double discount_gap(double r, int n) { return -std::expm1(-n * std::log1p(r)); }

ScaledBand interpolate_scale_table(const char* table, Pathway pathway, double plant_size_kw) {
  if (!(plant_size_kw > 0.0)) throw domain_error("plant size must be > 0");
  const auto& ds = ReferenceDataset::instance();
  const std::string row(to_string(pathway));

  double size_mw = plant_size_kw / 1000.0;
  ScaledBand out;
  if (size_mw < kScaleAnchorsMw.front()) {
    size_mw = kScaleAnchorsMw.front();
    out.clamped = true;
  } else if (size_mw > kScaleAnchorsMw.back()) {
    size_mw = kScaleAnchorsMw.back();
    out.clamped = true;
  }

  std::size_t seg = size_mw <= kScaleAnchorsMw[1] ? 0 : 1;
  double x0 = kScaleAnchorsMw[seg];
  double x1 = kScaleAnchorsMw[seg + 1];
  const ValueBand& a = ds.get(table, row, scale_column(x0));
  const ValueBand& b = ds.get(table, row, scale_column(x1));

  // Exact anchors are returned untouched.
  if (size_mw == x0) {
    out.band = a;
    return out;
  }
  if (size_mw == x1) {
    out.band = b;
    return out;
  }
  double w = std::log(size_mw / x0) / std::log(x1 / x0);
  double low = a.low + w * (b.low - a.low);
  double high = a.high + w * (b.high - a.high);
  out.band = ValueBand::of(low, high);
  return out;
}

}  // namespace

double crf(double discount_rate, int lifetime_years) {
  check_rate_and_life(discount_rate, lifetime_years);
  if (discount_rate == 0.0) return 1.0 / lifetime_years;
  return discount_rate / discount_gap(discount_rate, lifetime_years);
}

double annuity_sum(double discount_rate, int lifetime_years) {
  if (lifetime_years == 0) return 0.0;
  check_rate_and_life(discount_rate, lifetime_years);
  if (discount_rate == 0.0) return static_cast<double>(lifetime_years);
  return discount_gap(discount_rate, lifetime_years) / discount_rate;
}

CostBreakdown lcoh(const PathwayParams& params, const FinancialParams& fin) {
  validate(params);
  validate(fin);
  double output = annual_output_kg(params, fin);
  if (!(output > 0.0)) throw domain_error("annual hydrogen output is zero");

  CostBreakdown c;
  c.capital = params.capex * fin.plant_size_kw * crf(fin.discount_rate, fin.lifetime_years) / output;
  c.fixed_om = params.fixed_opex + params.ccs_opex;
  c.feedstock = feedstock_per_kg(params);
  c.total = c.component_sum();
  return c;
}

ScaledBand capex_at_scale(Pathway pathway, double plant_size_kw) {
  return interpolate_scale_table("table10", pathway, plant_size_kw);
}

ScaledBand opex_at_scale(Pathway pathway, double plant_size_kw) {
  return interpolate_scale_table("table11", pathway, plant_size_kw);
}

std::vector<std::pair<double, double>> lcoh_vs_size(const PathwayParams& params,
                                                    const std::vector<double>& sizes_kw,
                                                    const FinancialParams& fin) {
  if (sizes_kw.empty()) throw domain_error("lcoh_vs_size needs at least one plant size");
  std::vector<std::pair<double, double>> out;
  out.reserve(sizes_kw.size());
  for (double size : sizes_kw) {
    PathwayParams p = params;
    p.capex = capex_at_scale(p.pathway, size).band.mid;
    p.fixed_opex = opex_at_scale(p.pathway, size).band.mid;
    FinancialParams f = fin;
    f.plant_size_kw = size;
    out.emplace_back(size, lcoh(p, f).total);
  }
  return out;
}

}  // namespace h2tea
