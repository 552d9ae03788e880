#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace h2tea {

enum class Pathway { green, blue, gray };

inline constexpr std::array<Pathway, 3> kAllPathways = {Pathway::green, Pathway::blue,
                                                        Pathway::gray};

std::string_view to_string(Pathway p) noexcept;

// Throws config_error for anything but "green", "blue" or "gray".
Pathway parse_pathway(std::string_view name);

// Which point of a range-valued table entry a computation reads.
enum class BandPoint { low, mid, high };

struct ValueBand {
  double low = 0.0;
  double mid = 0.0;
  double high = 0.0;

  // mid defaults to the arithmetic midpoint.
  static ValueBand of(double low, double high);
  static ValueBand of(double low, double mid, double high);
  static ValueBand point(double v) { return {v, v, v}; }

  double at(BandPoint p) const noexcept;
  bool contains(double v) const noexcept { return v >= low && v <= high; }
};

bool operator==(const ValueBand& a, const ValueBand& b) noexcept;

// Lower heating value of hydrogen; efficiencies are on this basis.
inline constexpr double kLhvKwhPerKg = 33.33;
inline constexpr double kHoursPerYear = 8760.0;

struct PathwayParams {
  Pathway pathway = Pathway::green;
  double capex = 0.0;                        // USD/kW input capacity
  double fixed_opex = 0.0;                   // USD/kg, non-feedstock O&M
  double ccs_opex = 0.0;                     // USD/kg, capture/compression/transport of CO2
  double feedstock_cost = 0.0;               // USD/kg; ignored when electricity_price is set
  double efficiency = 1.0;                   // LHV fraction
  double capacity_factor = 1.0;
  double emission_intensity_unabated = 0.0;  // kg CO2 / kg H2
  double capture_rate = 0.0;
  std::optional<double> electricity_price;   // USD/MWh, green only

  double effective_emission_intensity() const noexcept {
    return emission_intensity_unabated * (1.0 - capture_rate);
  }
};

struct FinancialParams {
  double discount_rate = 0.07;
  int lifetime_years = 20;
  double plant_size_kw = 10'000.0;
};

struct PolicyRegime {
  double carbon_price = 0.0;               // USD/ton CO2
  std::map<Pathway, double> credits;       // USD/kg H2, missing pathway = 0
  int credit_years = 0;

  double credit_for(Pathway p) const noexcept {
    auto it = credits.find(p);
    return it == credits.end() ? 0.0 : it->second;
  }

  // Zero carbon price, no credits.
  static PolicyRegime none() { return {}; }
};

// Throws config_error naming the offending field.
void validate(const PathwayParams& p);
void validate(const FinancialParams& f);
void validate(const PolicyRegime& r, const FinancialParams& f);

}  // namespace h2tea
