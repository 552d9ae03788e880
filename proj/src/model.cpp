#include "h2tea/model.hpp"

#include "h2tea/errors.hpp"

namespace h2tea {

double specific_energy_kwh_per_kg(double efficiency) {
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw domain_error("efficiency must lie in (0, 1]");
  }
  return kLhvKwhPerKg / efficiency;
}

double feedstock_cost_green(double electricity_price_usd_per_mwh, double efficiency) {
  if (!(electricity_price_usd_per_mwh >= 0.0)) {
    throw domain_error("electricity price must be >= 0");
  }
  return specific_energy_kwh_per_kg(efficiency) * electricity_price_usd_per_mwh / 1000.0;
}

double feedstock_per_kg(const PathwayParams& p) {
  if (p.pathway == Pathway::green && p.electricity_price) {
    return feedstock_cost_green(*p.electricity_price, p.efficiency);
  }
  return p.feedstock_cost;
}

double annual_output_kg(const PathwayParams& p, const FinancialParams& fin) {
  return fin.plant_size_kw * kHoursPerYear * p.capacity_factor /
         specific_energy_kwh_per_kg(p.efficiency);
}

}  // namespace h2tea
