#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "h2tea/lcoh.hpp"
#include "h2tea/types.hpp"

namespace h2tea {

enum class TransportMode {
  pipeline_new,
  pipeline_repurposed,
  lh2_ship_large,
  lh2_ship_small,
  truck_tube,
  truck_cryo,
  carrier_nh3,
  carrier_lohc,
};

inline constexpr std::array<TransportMode, 8> kAllTransportModes = {
    TransportMode::pipeline_new, TransportMode::pipeline_repurposed,
    TransportMode::lh2_ship_large, TransportMode::lh2_ship_small,
    TransportMode::truck_tube,   TransportMode::truck_cryo,
    TransportMode::carrier_nh3,  TransportMode::carrier_lohc,
};

enum class StorageKind {
  compressed_350,
  compressed_700,
  lh2_tank_small,
  lh2_tank_large,
  salt_cavern,
  depleted_field,
  aquifer,
  nh3_store,
  lohc_store,
  metal_hydride,
};

inline constexpr std::array<StorageKind, 10> kAllStorageKinds = {
    StorageKind::compressed_350, StorageKind::compressed_700, StorageKind::lh2_tank_small,
    StorageKind::lh2_tank_large, StorageKind::salt_cavern,    StorageKind::depleted_field,
    StorageKind::aquifer,        StorageKind::nh3_store,      StorageKind::lohc_store,
    StorageKind::metal_hydride,
};

std::string_view to_string(TransportMode m) noexcept;
std::string_view to_string(StorageKind k) noexcept;
// Both throw config_error on an unknown name.
TransportMode parse_transport_mode(std::string_view name);
StorageKind parse_storage_kind(std::string_view name);

bool is_carrier(TransportMode m) noexcept;

struct TransportLeg {
  TransportMode mode = TransportMode::pipeline_new;
  double distance_km = 0.0;
  double fixed_cost_per_kg = 0.0;                // liquefaction, compression or synthesis
  double variable_cost_per_kg_per_1000km = 0.0;
  double reconversion_cost_per_kg = 0.0;         // carriers only
  double loss_fraction = 0.0;                    // share of hydrogen lost on this leg
};

struct StorageSpec {
  StorageKind kind = StorageKind::salt_cavern;
  double capex_per_kg_capacity = 0.0;   // USD per kg of working capacity
  double opex_per_kg_year = 0.0;        // USD per kg of capacity per year
  double conversion_cost_per_kg = 0.0;  // chemical stores: synthesis + reconversion per kg cycled
  double cycles_per_year = 1.0;
  double efficiency_loss = 0.0;
};

// Assumptions the tables leave open. Percentages stay in percent.
struct LogisticsAssumptions {
  double ship_speed_km_per_day = 600.0;  // 25 km/h
  double cycles_compressed = 52.0;
  double cycles_lh2_tank = 52.0;
  double cycles_underground = 12.0;
  double cycles_chemical = 12.0;
  // The table prints 5-95 %; 75-95 is used for costing.
  ValueBand salt_cavern_cycle_efficiency_pct = ValueBand::of(75.0, 95.0);
};

void validate(const TransportLeg& leg);
void validate(const StorageSpec& s);

// Leg built from the transport tables. Pipeline OPEX and energy loss are read
// per 1000 km; LH2 boil-off compounds per voyage day.
TransportLeg make_leg(TransportMode mode, double distance_km,
                      const LogisticsAssumptions& assumptions = {},
                      BandPoint point = BandPoint::mid);

StorageSpec make_storage(StorageKind kind, const LogisticsAssumptions& assumptions = {},
                         BandPoint point = BandPoint::mid);

// Handling cost before loss: fixed + variable * distance/1000 + reconversion.
double leg_base_cost(const TransportLeg& leg);

// USD per kg delivered: leg_base_cost / (1 - loss_fraction).
double leg_cost(const TransportLeg& leg);

// USD per kg cycled through the store, including the loss uplift.
double storage_cost_per_kg(const StorageSpec& s, const FinancialParams& fin);

struct CostShares {
  double production = 1.0;
  double transport = 0.0;
  double storage = 0.0;
};

struct DeliveredCost {
  double production = 0.0;
  double transport = 0.0;
  double storage = 0.0;
  double total = 0.0;
  // total / prod(1 - loss) over the legs
  double loss_adjusted_total = 0.0;
  CostShares shares;
};

// Production total plus the summed leg handling costs and one optional store.
DeliveredCost compose_chain(const CostBreakdown& production, std::span<const TransportLeg> legs,
                            const std::optional<StorageSpec>& store, const FinancialParams& fin);

struct ChainChoice {
  TransportMode mode = TransportMode::pipeline_new;
  TransportLeg leg;
  double leg_cost = 0.0;
  DeliveredCost delivered;
};

// Single-mode chain with the lowest leg_cost. Ties go to the leg with fewer
// non-zero cost components, then to the lexicographically smaller mode name.
ChainChoice cheapest_chain(double distance_km, const CostBreakdown& production,
                           const FinancialParams& fin,
                           std::span<const TransportMode> candidate_modes,
                           const LogisticsAssumptions& assumptions = {});

// Number of non-zero terms among fixed, variable, reconversion and loss.
int cost_component_count(const TransportLeg& leg);

}  // namespace h2tea
