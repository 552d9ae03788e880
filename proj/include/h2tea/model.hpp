#pragma once

#include "h2tea/types.hpp"

namespace h2tea {

// Electricity input per kg of hydrogen at the given LHV efficiency.
double specific_energy_kwh_per_kg(double efficiency);

// Electricity cost per kg H2. Linear in price, inverse in efficiency.
double feedstock_cost_green(double electricity_price_usd_per_mwh, double efficiency);

// Feedstock per kg actually charged: derived from electricity for green
// plants that carry a price, the stored USD/kg otherwise.
double feedstock_per_kg(const PathwayParams& p);

double annual_output_kg(const PathwayParams& p, const FinancialParams& fin);

}  // namespace h2tea
