#include "h2tea/scenario.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "h2tea/checksum.hpp"
#include "h2tea/errors.hpp"
#include "h2tea/lcoh.hpp"
#include "h2tea_defaults_embed.hpp"

namespace h2tea {

using nlohmann::json;

std::string_view builtin_defaults_text() { return kEmbeddedDefaultsJson; }

std::uint64_t Scenario::checksum() const { return fnv1a64(config.dump()); }

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

std::vector<std::string> split_key(std::string_view dotted) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : dotted) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& p : parts) {
    if (p.empty()) throw config_error(std::string(dotted), "malformed key path");
  }
  return parts;
}

json parse_json(std::string_view text, const char* what) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error("", std::string(what) + " parse error: " + e.what());
  }
}

bool same_kind(const json& def, const json& user) {
  if (def.is_null()) return user.is_null() || user.is_number();
  if (def.is_number()) return user.is_number();
  if (def.is_string()) return user.is_string();
  if (def.is_boolean()) return user.is_boolean();
  if (def.is_array()) {
    if (!user.is_array() || user.size() != def.size()) return false;
    for (const auto& v : user) {
      if (!v.is_number()) return false;
    }
    return true;
  }
  return false;
}

// Defaults define the schema: every user key must already exist there.
void overlay(json& target, const json& user, const std::string& path) {
  if (!user.is_object()) throw config_error(path, "expected an object");
  for (const auto& [key, value] : user.items()) {
    std::string here = join(path, key);
    if (!target.contains(key)) throw config_error(here, "unknown key");
    json& slot = target[key];
    if (slot.is_object()) {
      overlay(slot, value, here);
    } else if (!same_kind(slot, value)) {
      throw config_error(here, "wrong value type");
    } else {
      slot = value;
    }
  }
}

const json& node_at(const json& root, const std::string& key) {
  const json* cur = &root;
  for (const auto& part : split_key(key)) {
    if (!cur->is_object() || !cur->contains(part)) throw config_error(key, "missing key");
    cur = &(*cur)[part];
  }
  return *cur;
}

double number_at(const json& root, const std::string& key) {
  const json& n = node_at(root, key);
  if (!n.is_number()) throw config_error(key, "expected a number");
  double v = n.get<double>();
  if (!std::isfinite(v)) throw config_error(key, "must be finite");
  return v;
}

int integer_at(const json& root, const std::string& key) {
  double v = number_at(root, key);
  if (v != std::floor(v) || std::fabs(v) > 1e6) throw config_error(key, "expected an integer");
  return static_cast<int>(v);
}

std::string string_at(const json& root, const std::string& key) {
  const json& n = node_at(root, key);
  if (!n.is_string()) throw config_error(key, "expected a string");
  return n.get<std::string>();
}

void check(bool ok, const std::string& key, const char* what) {
  if (!ok) throw config_error(key, what);
}

// Runs `f`, re-keying config_errors raised by the generic validators.
template <class F>
void under(const std::string& prefix, F&& f) {
  try {
    f();
  } catch (const config_error& e) {
    throw config_error(join(prefix, e.key()), e.detail());
  }
}

PathwayParams resolve_pathway(const json& cfg, Pathway pathway, const FinancialParams& fin,
                              OpexSource opex_source) {
  const std::string base = "pathways." + std::string(to_string(pathway));
  auto key = [&](const char* k) { return base + "." + k; };

  PathwayParams p;
  p.pathway = pathway;
  p.capex = number_at(cfg, key("capex"));
  check(p.capex > 0.0, key("capex"), "must be > 0");
  p.fixed_opex = number_at(cfg, key("fixed_opex"));
  p.ccs_opex = number_at(cfg, key("ccs_opex"));
  p.efficiency = number_at(cfg, key("efficiency"));
  p.capacity_factor = number_at(cfg, key("capacity_factor"));
  p.emission_intensity_unabated = number_at(cfg, key("emission_intensity_unabated"));
  p.capture_rate = number_at(cfg, key("capture_rate"));

  if (pathway == Pathway::green) {
    p.electricity_price = number_at(cfg, key("electricity_price"));
  } else {
    double index = number_at(cfg, key("gas_price_index"));
    check(index >= 0.0, key("gas_price_index"), "must be >= 0");
    p.feedstock_cost = number_at(cfg, key("feedstock_cost")) * index;
  }
  under(base, [&] { validate(p); });

  if (opex_source == OpexSource::table11) {
    p.fixed_opex = opex_at_scale(pathway, fin.plant_size_kw).band.mid;
  }
  return p;
}

}  // namespace

Scenario resolve_scenario(const json& cfg) {
  Scenario s;
  s.config = cfg;

  if (cfg.contains("schema_version")) {
    check(integer_at(cfg, "schema_version") == 1, "schema_version", "unsupported version");
  }

  s.financial.discount_rate = number_at(cfg, "financial.discount_rate");
  s.financial.lifetime_years = integer_at(cfg, "financial.lifetime_years");
  s.financial.plant_size_kw = number_at(cfg, "financial.plant_size_kw");
  under("financial", [&] { validate(s.financial); });

  std::string opex = string_at(cfg, "opex_source");
  if (opex == "table1") {
    s.opex_source = OpexSource::table1;
  } else if (opex == "table11") {
    s.opex_source = OpexSource::table11;
  } else {
    throw config_error("opex_source", "expected \"table1\" or \"table11\"");
  }

  s.h2_price = number_at(cfg, "market.h2_price_usd_per_kg");
  check(s.h2_price >= 0.0, "market.h2_price_usd_per_kg", "must be >= 0");

  for (Pathway p : kAllPathways) {
    s.pathways[p] = resolve_pathway(cfg, p, s.financial, s.opex_source);
  }

  const json& pol = node_at(cfg, "policy.enabled");
  check(pol.is_boolean(), "policy.enabled", "expected true or false");
  s.policy_enabled = pol.get<bool>();
  s.policy.carbon_price = number_at(cfg, "policy.carbon_price_usd_per_ton");
  for (Pathway p : kAllPathways) {
    s.policy.credits[p] = number_at(cfg, "policy.credits." + std::string(to_string(p)));
  }
  s.policy.credit_years = node_at(cfg, "policy.credit_years").is_null()
                              ? s.financial.lifetime_years
                              : integer_at(cfg, "policy.credit_years");
  under("policy", [&] { validate(s.policy, s.financial); });

  auto& lg = s.logistics;
  lg.distance_km = number_at(cfg, "logistics.distance_km");
  check(lg.distance_km > 0.0, "logistics.distance_km", "must be > 0");
  under("logistics", [&] { lg.mode = parse_transport_mode(string_at(cfg, "logistics.mode")); });
  std::string storage = string_at(cfg, "logistics.storage");
  if (storage == "none") {
    lg.storage.reset();
  } else {
    under("logistics", [&] { lg.storage = parse_storage_kind(storage); });
  }
  auto& a = lg.assumptions;
  a.ship_speed_km_per_day = number_at(cfg, "logistics.ship_speed_km_per_day");
  check(a.ship_speed_km_per_day > 0.0, "logistics.ship_speed_km_per_day", "must be > 0");
  auto cycles = [&](const char* k) {
    std::string key = std::string("logistics.cycles_per_year.") + k;
    double v = number_at(cfg, key);
    check(v >= 1.0, key, "must be >= 1");
    return v;
  };
  a.cycles_compressed = cycles("compressed");
  a.cycles_lh2_tank = cycles("lh2_tank");
  a.cycles_underground = cycles("underground");
  a.cycles_chemical = cycles("chemical");
  const json& eff = node_at(cfg, "logistics.salt_cavern_cycle_efficiency_pct");
  check(eff.is_array() && eff.size() == 2 && eff[0].is_number() && eff[1].is_number(),
        "logistics.salt_cavern_cycle_efficiency_pct", "expected [low, high]");
  double lo = eff[0].get<double>();
  double hi = eff[1].get<double>();
  check(lo > 0.0 && lo <= hi && hi <= 100.0, "logistics.salt_cavern_cycle_efficiency_pct",
        "expected 0 < low <= high <= 100");
  a.salt_cavern_cycle_efficiency_pct = ValueBand::of(lo, hi);
  return s;
}

Scenario load_scenario(std::string_view config_text, std::string_view defaults_text) {
  json merged = parse_json(defaults_text, "defaults");
  if (!merged.is_object()) throw config_error("", "defaults must be a JSON object");
  json user = parse_json(config_text, "scenario");
  overlay(merged, user, "");
  return resolve_scenario(merged);
}

Scenario with_value(const Scenario& base, std::string_view dotted_key, double value) {
  json cfg = base.config;
  json* cur = &cfg;
  const std::string key(dotted_key);
  for (const auto& part : split_key(key)) {
    if (!cur->is_object() || !cur->contains(part)) throw config_error(key, "unknown key");
    cur = &(*cur)[part];
  }
  if (!(cur->is_number() || cur->is_null())) throw config_error(key, "not a numeric field");
  *cur = value;
  return resolve_scenario(cfg);
}

double value_at(const Scenario& s, std::string_view dotted_key) {
  const std::string key(dotted_key);
  if (key == "policy.credit_years") return s.policy.credit_years;
  return number_at(s.config, key);
}

}  // namespace h2tea
