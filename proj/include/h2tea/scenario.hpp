#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "h2tea/logistics.hpp"
#include "h2tea/types.hpp"

namespace h2tea {

enum class OpexSource { table1, table11 };

struct LogisticsSettings {
  double distance_km = 1000.0;
  TransportMode mode = TransportMode::pipeline_repurposed;
  std::optional<StorageKind> storage = StorageKind::salt_cavern;
  LogisticsAssumptions assumptions;
};

// Fully resolved model inputs plus the merged configuration tree they came
// from. `config` is the canonical form: defaults with user overrides applied.
struct Scenario {
  std::map<Pathway, PathwayParams> pathways;
  FinancialParams financial;
  PolicyRegime policy;         // always populated; see policy_enabled
  bool policy_enabled = false;
  OpexSource opex_source = OpexSource::table1;
  double h2_price = 5.0;       // market price for NPV/IRR metrics, USD/kg
  LogisticsSettings logistics;
  nlohmann::json config;

  const PathwayParams& params(Pathway p) const { return pathways.at(p); }

  // The regime computations should apply: `policy` when enabled, else none.
  PolicyRegime active_policy() const { return policy_enabled ? policy : PolicyRegime::none(); }

  // FNV-1a 64 over the canonical JSON dump.
  std::uint64_t checksum() const;
};

// Shipped defaults file, embedded at build time.
std::string_view builtin_defaults_text();

// Parses `config_text` (JSON; empty or whitespace means "{}") and overlays it
// on `defaults_text`. Keys absent from the defaults are rejected. Throws
// config_error naming the dotted key on any parse or validation failure.
Scenario load_scenario(std::string_view config_text,
                       std::string_view defaults_text = builtin_defaults_text());

// Re-resolves a scenario after setting one dotted key (e.g.
// "pathways.green.capex" or "policy.carbon_price_usd_per_ton").
Scenario with_value(const Scenario& base, std::string_view dotted_key, double value);

// Reads a numeric field by dotted key; throws config_error if absent.
double value_at(const Scenario& s, std::string_view dotted_key);

Scenario resolve_scenario(const nlohmann::json& merged_config);

}  // namespace h2tea
