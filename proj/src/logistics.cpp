#include "h2tea/logistics.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "h2tea/dataset.hpp"
#include "h2tea/errors.hpp"

namespace h2tea {

std::string_view to_string(TransportMode m) noexcept {
  switch (m) {
    case TransportMode::pipeline_new: return "pipeline_new";
    case TransportMode::pipeline_repurposed: return "pipeline_repurposed";
    case TransportMode::lh2_ship_large: return "lh2_ship_large";
    case TransportMode::lh2_ship_small: return "lh2_ship_small";
    case TransportMode::truck_tube: return "truck_tube";
    case TransportMode::truck_cryo: return "truck_cryo";
    case TransportMode::carrier_nh3: return "carrier_nh3";
    case TransportMode::carrier_lohc: return "carrier_lohc";
  }
  return "?";
}

std::string_view to_string(StorageKind k) noexcept {
  switch (k) {
    case StorageKind::compressed_350: return "compressed_350";
    case StorageKind::compressed_700: return "compressed_700";
    case StorageKind::lh2_tank_small: return "lh2_tank_small";
    case StorageKind::lh2_tank_large: return "lh2_tank_large";
    case StorageKind::salt_cavern: return "salt_cavern";
    case StorageKind::depleted_field: return "depleted_field";
    case StorageKind::aquifer: return "aquifer";
    case StorageKind::nh3_store: return "nh3_store";
    case StorageKind::lohc_store: return "lohc_store";
    case StorageKind::metal_hydride: return "metal_hydride";
  }
  return "?";
}

TransportMode parse_transport_mode(std::string_view name) {
  for (auto m : kAllTransportModes) {
    if (to_string(m) == name) return m;
  }
  throw config_error("mode", "unknown transport mode '" + std::string(name) + "'");
}

StorageKind parse_storage_kind(std::string_view name) {
  for (auto k : kAllStorageKinds) {
    if (to_string(k) == name) return k;
  }
  throw config_error("storage", "unknown storage kind '" + std::string(name) + "'");
}

bool is_carrier(TransportMode m) noexcept {
  return m == TransportMode::carrier_nh3 || m == TransportMode::carrier_lohc;
}

void validate(const TransportLeg& leg) {
  auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!(std::isfinite(leg.distance_km) && leg.distance_km > 0.0)) {
    throw domain_error("leg distance must be > 0 km");
  }
  if (!nonneg(leg.fixed_cost_per_kg) || !nonneg(leg.variable_cost_per_kg_per_1000km) ||
      !nonneg(leg.reconversion_cost_per_kg)) {
    throw domain_error("leg costs must be >= 0");
  }
  if (!(leg.loss_fraction >= 0.0 && leg.loss_fraction < 1.0)) {
    throw domain_error("leg loss fraction must lie in [0, 1)");
  }
  if (!is_carrier(leg.mode) && leg.reconversion_cost_per_kg != 0.0) {
    throw domain_error("only carrier legs have a reconversion cost");
  }
}

void validate(const StorageSpec& s) {
  auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!nonneg(s.capex_per_kg_capacity) || !nonneg(s.opex_per_kg_year) ||
      !nonneg(s.conversion_cost_per_kg)) {
    throw domain_error("storage costs must be >= 0");
  }
  if (!(s.cycles_per_year >= 1.0)) throw domain_error("storage cycles per year must be >= 1");
  if (!(s.efficiency_loss >= 0.0 && s.efficiency_loss < 1.0)) {
    throw domain_error("storage efficiency loss must lie in [0, 1)");
  }
}

namespace {

// 1 - (1 - rate)^periods
double compounded_loss(double rate_fraction, double periods) {
  return -std::expm1(periods * std::log1p(-rate_fraction));
}

}  // namespace

TransportLeg make_leg(TransportMode mode, double distance_km,
                      const LogisticsAssumptions& assumptions, BandPoint point) {
  const auto& ds = ReferenceDataset::instance();
  const std::string row(to_string(mode));
  auto val = [&](const char* table, const char* column) {
    return ds.get(table, row, column).at(point);
  };

  TransportLeg leg;
  leg.mode = mode;
  leg.distance_km = distance_km;
  const double thousands_km = distance_km / 1000.0;
  switch (mode) {
    case TransportMode::pipeline_new:
    case TransportMode::pipeline_repurposed:
      leg.variable_cost_per_kg_per_1000km = val("table2", "opex");
      leg.loss_fraction = compounded_loss(val("table2", "energy_loss") / 100.0, thousands_km);
      break;
    case TransportMode::lh2_ship_large:
    case TransportMode::lh2_ship_small: {
      leg.fixed_cost_per_kg = val("table3", "liquefaction");
      leg.variable_cost_per_kg_per_1000km = val("table3", "shipping");
      double voyage_days = distance_km / assumptions.ship_speed_km_per_day;
      leg.loss_fraction = compounded_loss(val("table3", "boil_off") / 100.0, voyage_days);
      break;
    }
    case TransportMode::truck_tube:
    case TransportMode::truck_cryo:
      leg.fixed_cost_per_kg = val("table4", "compression");
      leg.variable_cost_per_kg_per_1000km = val("table4", "trucking");
      break;
    case TransportMode::carrier_nh3:
    case TransportMode::carrier_lohc:
      leg.fixed_cost_per_kg = val("table5", "synthesis");
      leg.variable_cost_per_kg_per_1000km = val("table5", "transport");
      leg.reconversion_cost_per_kg = val("table5", "reconversion");
      break;
  }
  validate(leg);
  return leg;
}

StorageSpec make_storage(StorageKind kind, const LogisticsAssumptions& a, BandPoint point) {
  const auto& ds = ReferenceDataset::instance();
  const std::string row(to_string(kind));
  auto val = [&](const char* table, const char* column) {
    return ds.get(table, row, column).at(point);
  };

  StorageSpec s;
  s.kind = kind;
  switch (kind) {
    case StorageKind::compressed_350:
    case StorageKind::compressed_700:
      s.capex_per_kg_capacity = val("table6", "capex");
      s.opex_per_kg_year = val("table6", "opex");
      s.cycles_per_year = a.cycles_compressed;
      s.efficiency_loss = val("table6", "efficiency_loss") / 100.0;
      break;
    case StorageKind::lh2_tank_small:
    case StorageKind::lh2_tank_large: {
      s.capex_per_kg_capacity = val("table7", "capex");
      s.opex_per_kg_year = val("table7", "opex");
      s.cycles_per_year = a.cycles_lh2_tank;
      // Boil-off is per day, held for one cycle period.
      double days_held = 365.0 / s.cycles_per_year;
      s.efficiency_loss = compounded_loss(val("table7", "boil_off") / 100.0, days_held);
      break;
    }
    case StorageKind::salt_cavern:
    case StorageKind::depleted_field:
    case StorageKind::aquifer: {
      s.capex_per_kg_capacity = val("table8", "capex");
      s.opex_per_kg_year = val("table8", "opex");
      s.cycles_per_year = a.cycles_underground;
      double eff_pct = kind == StorageKind::salt_cavern
                           ? a.salt_cavern_cycle_efficiency_pct.at(point)
                           : val("table8", "cycle_efficiency");
      s.efficiency_loss = 1.0 - eff_pct / 100.0;
      break;
    }
    case StorageKind::nh3_store:
    case StorageKind::lohc_store:
    case StorageKind::metal_hydride:
      s.opex_per_kg_year = val("table9", "storage_cost");
      s.conversion_cost_per_kg = val("table9", "cost") + val("table9", "reconversion");
      s.cycles_per_year = a.cycles_chemical;
      s.efficiency_loss = val("table9", "efficiency_loss") / 100.0;
      break;
  }
  validate(s);
  return s;
}

double leg_base_cost(const TransportLeg& leg) {
  validate(leg);
  return leg.fixed_cost_per_kg + leg.variable_cost_per_kg_per_1000km * leg.distance_km / 1000.0 +
         leg.reconversion_cost_per_kg;
}

double leg_cost(const TransportLeg& leg) { return leg_base_cost(leg) / (1.0 - leg.loss_fraction); }

double storage_cost_per_kg(const StorageSpec& s, const FinancialParams& fin) {
  validate(s);
  double annual = s.capex_per_kg_capacity * crf(fin.discount_rate, fin.lifetime_years) +
                  s.opex_per_kg_year;
  return (annual / s.cycles_per_year + s.conversion_cost_per_kg) / (1.0 - s.efficiency_loss);
}

DeliveredCost compose_chain(const CostBreakdown& production, std::span<const TransportLeg> legs,
                            const std::optional<StorageSpec>& store, const FinancialParams& fin) {
  DeliveredCost d;
  d.production = production.total;
  double survival = 1.0;
  for (const auto& leg : legs) {
    d.transport += leg_base_cost(leg);
    survival *= 1.0 - leg.loss_fraction;
  }
  if (store) d.storage = storage_cost_per_kg(*store, fin);
  d.total = d.production + d.transport + d.storage;
  d.loss_adjusted_total = d.total / survival;
  if (d.total > 0.0) {
    d.shares.transport = d.transport / d.total;
    d.shares.storage = d.storage / d.total;
    d.shares.production = 1.0 - d.shares.transport - d.shares.storage;
  }
  return d;
}

int cost_component_count(const TransportLeg& leg) {
  return (leg.fixed_cost_per_kg != 0.0) + (leg.variable_cost_per_kg_per_1000km != 0.0) +
         (leg.reconversion_cost_per_kg != 0.0) + (leg.loss_fraction != 0.0);
}

ChainChoice cheapest_chain(double distance_km, const CostBreakdown& production,
                           const FinancialParams& fin,
                           std::span<const TransportMode> candidate_modes,
                           const LogisticsAssumptions& assumptions) {
  if (candidate_modes.empty()) throw domain_error("no candidate transport modes");
  if (!(distance_km > 0.0)) throw domain_error("distance must be > 0 km");

  std::optional<ChainChoice> best;
  for (TransportMode mode : candidate_modes) {
    ChainChoice c;
    c.mode = mode;
    c.leg = make_leg(mode, distance_km, assumptions);
    c.leg_cost = leg_cost(c.leg);
    auto key = [](const ChainChoice& x) {
      return std::make_tuple(x.leg_cost, cost_component_count(x.leg), to_string(x.mode));
    };
    if (!best || key(c) < key(*best)) best = c;
  }
  best->delivered = compose_chain(production, std::span(&best->leg, 1), std::nullopt, fin);
  return *best;
}

}  // namespace h2tea
