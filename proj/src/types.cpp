#include "h2tea/types.hpp"

#include <cmath>
#include <string>

#include "h2tea/errors.hpp"

namespace h2tea {

std::string_view to_string(Pathway p) noexcept {
  switch (p) {
    case Pathway::green: return "green";
    case Pathway::blue: return "blue";
    case Pathway::gray: return "gray";
  }
  return "?";
}

Pathway parse_pathway(std::string_view name) {
  if (name == "green") return Pathway::green;
  if (name == "blue") return Pathway::blue;
  if (name == "gray") return Pathway::gray;
  throw config_error("pathway", "unknown pathway '" + std::string(name) + "'");
}

ValueBand ValueBand::of(double low, double high) { return of(low, 0.5 * (low + high), high); }

ValueBand ValueBand::of(double low, double mid, double high) {
  if (!(low <= mid && mid <= high)) {
    throw domain_error("value band requires low <= mid <= high");
  }
  return {low, mid, high};
}

double ValueBand::at(BandPoint p) const noexcept {
  switch (p) {
    case BandPoint::low: return low;
    case BandPoint::mid: return mid;
    case BandPoint::high: return high;
  }
  return mid;
}

bool operator==(const ValueBand& a, const ValueBand& b) noexcept {
  return a.low == b.low && a.mid == b.mid && a.high == b.high;
}

namespace {

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw config_error(key, what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate(const PathwayParams& p) {
  require(finite(p.capex) && p.capex >= 0.0, "capex", "must be >= 0");
  require(finite(p.fixed_opex) && p.fixed_opex >= 0.0, "fixed_opex", "must be >= 0");
  require(finite(p.ccs_opex) && p.ccs_opex >= 0.0, "ccs_opex", "must be >= 0");
  require(finite(p.feedstock_cost) && p.feedstock_cost >= 0.0, "feedstock_cost", "must be >= 0");
  require(finite(p.efficiency) && p.efficiency > 0.0 && p.efficiency <= 1.0, "efficiency",
          "must lie in (0, 1]");
  require(finite(p.capacity_factor) && p.capacity_factor > 0.0 && p.capacity_factor <= 1.0,
          "capacity_factor", "must lie in (0, 1]");
  require(finite(p.emission_intensity_unabated) && p.emission_intensity_unabated >= 0.0,
          "emission_intensity_unabated", "must be >= 0");
  require(finite(p.capture_rate) && p.capture_rate >= 0.0 && p.capture_rate < 1.0,
          "capture_rate", "must lie in [0, 1)");
  if (p.electricity_price) {
    require(p.pathway == Pathway::green, "electricity_price", "only valid for green hydrogen");
    require(finite(*p.electricity_price) && *p.electricity_price >= 0.0, "electricity_price",
            "must be >= 0");
  }
}

void validate(const FinancialParams& f) {
  require(finite(f.discount_rate) && f.discount_rate >= 0.0, "discount_rate", "must be >= 0");
  require(f.lifetime_years >= 1, "lifetime_years", "must be >= 1");
  require(finite(f.plant_size_kw) && f.plant_size_kw > 0.0, "plant_size_kw", "must be > 0");
}

void validate(const PolicyRegime& r, const FinancialParams& f) {
  require(finite(r.carbon_price) && r.carbon_price >= 0.0, "carbon_price_usd_per_ton",
          "must be >= 0");
  for (const auto& [p, c] : r.credits) {
    require(finite(c) && c >= 0.0, "credits", "must be >= 0");
  }
  require(r.credit_years >= 0 && r.credit_years <= f.lifetime_years, "credit_years",
          "must lie in [0, lifetime_years]");
}

}  // namespace h2tea
