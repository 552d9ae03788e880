#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "h2tea/scenario.hpp"
#include "h2tea/table.hpp"
#include "h2tea/types.hpp"

namespace h2tea {

enum class Metric { lcoh, npv, irr, breakeven, delivered_cost };

Metric parse_metric(std::string_view name);
std::string_view to_string(Metric m) noexcept;

// Metric for one pathway under the scenario's active policy. NPV and IRR use
// the scenario's market price; IRR is nullopt when undefined.
std::optional<double> evaluate_metric(const Scenario& s, Pathway p, Metric m);

// Maps a sweep/tornado parameter to a dotted scenario key. "h2_price" is the
// market price; a bare field name ("capex") is taken relative to the
// pathway; anything containing a dot is used as given.
std::string resolve_parameter(std::string_view parameter, Pathway p);

// lo, lo+step, ... up to hi inclusive (within 1e-9 step).
std::vector<double> grid_from_range(double lo, double hi, double step);

struct SweepSpec {
  std::string parameter;
  std::vector<double> grid;
  Metric metric = Metric::lcoh;
  std::vector<Pathway> pathways;
};

struct SweepResult {
  SweepSpec spec;
  // values[i][j]: grid point i, pathway j
  std::vector<std::vector<std::optional<double>>> values;

  Table to_table() const;
};

struct ExecutionOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Throws config_error for an unknown parameter or one the pathway lacks
// (e.g. electricity_price on gray).
SweepResult sweep(const Scenario& base, const SweepSpec& spec, ExecutionOptions exec = {});

struct TornadoParam {
  std::string parameter;
  double low = 0.0;
  double high = 0.0;
};

struct TornadoEntry {
  std::string parameter;
  double low_value = 0.0;
  double high_value = 0.0;
  double metric_at_low = 0.0;
  double metric_at_high = 0.0;
  double swing = 0.0;
};

// One entry per parameter, sorted by descending swing (ties by name).
std::vector<TornadoEntry> tornado(const Scenario& base, Pathway p,
                                  const std::vector<TornadoParam>& params, Metric metric);

// Symmetric +/- `fraction` band around the scenario's current value.
TornadoParam relative_band(const Scenario& s, Pathway p, std::string_view parameter,
                           double fraction);

Table tornado_table(Pathway p, const std::vector<TornadoEntry>& entries);

enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6, fig7, fig8, fig9, fig10, fig12, fig13 };

inline constexpr std::array<FigureId, 12> kAllFigures = {
    FigureId::fig1, FigureId::fig2, FigureId::fig3,  FigureId::fig4,
    FigureId::fig5, FigureId::fig6, FigureId::fig7,  FigureId::fig8,
    FigureId::fig9, FigureId::fig10, FigureId::fig12, FigureId::fig13};

// fig11 (investment trends) is rejected with a config_error explaining it is
// not model output.
FigureId parse_figure_id(std::string_view name);
std::string_view to_string(FigureId f) noexcept;

// Grids the figures are drawn on. Pinned; golden files depend on them.
namespace figure_grids {
inline constexpr double kPriceLo = 0.0, kPriceHi = 10.0, kPriceStep = 0.25;
inline constexpr double kCarbonLo = 0.0, kCarbonHi = 200.0, kCarbonStep = 10.0;
inline constexpr double kElectricityLo = 0.0, kElectricityHi = 100.0, kElectricityStep = 5.0;
inline constexpr std::array<double, 3> kPlantSizesKw = {1'000.0, 10'000.0, 100'000.0};
inline constexpr std::array<double, 5> kFig3ElectricityPrices = {20.0, 30.0, 40.0, 50.0, 60.0};
}  // namespace figure_grids

Table figure_data(FigureId id, const Scenario& s, ExecutionOptions exec = {});

// Scenario the electricity-price figure is drawn with: non-electricity O&M
// taken from the plant-size OPEX table instead of the flat defaults.
Scenario fig13_scenario(const Scenario& s);

// Pathway parameters with CAPEX and fixed O&M read from the plant-size tables.
PathwayParams at_scale(const PathwayParams& p, double plant_size_kw);

// Static investment-trend figures quoted in the source text; not model output.
Table investment_trends_table();

}  // namespace h2tea
