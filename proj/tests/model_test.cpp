#include <doctest.h>

#include <string>

#include "h2tea/checksum.hpp"
#include "h2tea/dataset.hpp"
#include "h2tea/errors.hpp"
#include "h2tea/model.hpp"
#include "h2tea/scenario.hpp"
#include "h2tea/types.hpp"

using namespace h2tea;
using doctest::Approx;

namespace {

std::string config_error_key(const std::string& text) {
  try {
    load_scenario(text);
  } catch (const config_error& e) {
    return e.key();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("pathway names round-trip and unknown names are rejected") {
  for (Pathway p : kAllPathways) CHECK(parse_pathway(to_string(p)) == p);
  CHECK_THROWS_AS(parse_pathway("turquoise"), config_error);
  CHECK_THROWS_AS(parse_pathway("Green"), config_error);
}

TEST_CASE("value band midpoint defaults to the arithmetic mean") {
  ValueBand b = ValueBand::of(3.5, 6.0);
  CHECK(b.mid == 4.75);
  CHECK(b.at(BandPoint::low) == 3.5);
  CHECK(b.at(BandPoint::high) == 6.0);
  CHECK(b.contains(6.0));
  CHECK_FALSE(b.contains(6.0000001));
}

TEST_CASE("green feedstock from electricity price") {
  // 33.33 / 0.60 kWh/kg at 0.05 USD/kWh
  CHECK(feedstock_cost_green(50, 0.60) == Approx(33.33 / 0.60 * 0.05).epsilon(1e-12));
  CHECK(feedstock_cost_green(50, 0.60) == Approx(2.78).epsilon(0.002));
  CHECK(feedstock_cost_green(0, 0.65) == 0.0);
  CHECK(feedstock_cost_green(30, 0.70) == Approx(1.43).epsilon(0.002));

  const ValueBand& band = ReferenceDataset::instance().get("table12", "green", "feedstock");
  CHECK(band.contains(feedstock_cost_green(50, 0.60)));
  CHECK_FALSE(band.contains(feedstock_cost_green(30, 0.70)));

  CHECK_THROWS_AS(feedstock_cost_green(50, 0.0), domain_error);
  CHECK_THROWS_AS(feedstock_cost_green(50, -0.1), domain_error);
}

TEST_CASE("green feedstock is linear in price and inverse in efficiency") {
  for (double eff : {0.55, 0.60, 0.65, 0.70, 1.0}) {
    double unit = feedstock_cost_green(1.0, eff);
    for (double price : {0.0, 7.5, 20.0, 50.0, 133.0}) {
      CHECK(feedstock_cost_green(price, eff) == Approx(price * unit).epsilon(1e-12));
    }
    CHECK(feedstock_cost_green(40, eff) * eff == Approx(feedstock_cost_green(40, 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("green feedstock over the assumed electricity and efficiency ranges") {
  const ValueBand& band = ReferenceDataset::instance().get("table12", "green", "feedstock");
  int outside = 0;
  for (double price : {20.0, 30.0, 40.0, 50.0}) {
    for (double eff : {0.60, 0.65, 0.70}) {
      double v = feedstock_cost_green(price, eff);
      if (!band.contains(v)) {
        ++outside;
        // Cheap power at the efficient end drops below the band.
        CHECK(price <= 30.0);
        CHECK(v < band.low);
      }
    }
  }
  CHECK(feedstock_cost_green(20, 0.70) == Approx(0.952).epsilon(0.001));
  CHECK(outside >= 1);
}

TEST_CASE("annual output") {
  PathwayParams p;
  p.capacity_factor = 0.5;
  p.efficiency = 0.60;
  FinancialParams fin;
  fin.plant_size_kw = 10'000;
  CHECK(annual_output_kg(p, fin) == Approx(10'000 * 8760 * 0.5 / (33.33 / 0.60)).epsilon(1e-12));
  CHECK(annual_output_kg(p, fin) == Approx(788'400).epsilon(0.001));

  p.capacity_factor = 1.0;
  fin.plant_size_kw = 1.0;
  CHECK(annual_output_kg(p, fin) == Approx(157.7).epsilon(0.001));

  p.capacity_factor = 1e-9;
  CHECK(annual_output_kg(p, fin) < 1e-6);
}

TEST_CASE("annual output is linear in size and capacity factor") {
  PathwayParams p;
  p.efficiency = 0.75;
  p.capacity_factor = 0.4;
  FinancialParams fin;
  fin.plant_size_kw = 1000;
  double base = annual_output_kg(p, fin);
  fin.plant_size_kw = 3000;
  CHECK(annual_output_kg(p, fin) == Approx(3 * base).epsilon(1e-12));
  fin.plant_size_kw = 1000;
  p.capacity_factor = 0.8;
  CHECK(annual_output_kg(p, fin) == Approx(2 * base).epsilon(1e-12));
}

TEST_CASE("parameter validation names the field") {
  PathwayParams p;
  p.capex = 1000;
  p.efficiency = 0.7;
  p.capacity_factor = 0.9;
  CHECK_NOTHROW(validate(p));

  auto key_of = [](PathwayParams bad) {
    try {
      validate(bad);
    } catch (const config_error& e) {
      return e.key();
    }
    return std::string("<no error>");
  };
  PathwayParams bad = p;
  bad.efficiency = 1.2;
  CHECK(key_of(bad) == "efficiency");
  bad = p;
  bad.capacity_factor = 0.0;
  CHECK(key_of(bad) == "capacity_factor");
  bad = p;
  bad.capture_rate = 1.0;
  CHECK(key_of(bad) == "capture_rate");
  bad = p;
  bad.fixed_opex = -0.01;
  CHECK(key_of(bad) == "fixed_opex");
  bad = p;
  bad.pathway = Pathway::gray;
  bad.electricity_price = 40.0;
  CHECK(key_of(bad) == "electricity_price");

  FinancialParams fin;
  fin.discount_rate = 0.0;
  CHECK_NOTHROW(validate(fin));
  fin.lifetime_years = 0;
  CHECK_THROWS_AS(validate(fin), config_error);
}

TEST_CASE("empty scenario yields the defaults") {
  Scenario s = load_scenario("");
  CHECK(s.params(Pathway::green).capex == 1700);
  CHECK(s.params(Pathway::blue).capex == 1100);
  CHECK(s.params(Pathway::gray).capex == 900);
  CHECK(s.financial.discount_rate == 0.07);
  CHECK(s.financial.lifetime_years == 20);
  CHECK(s.financial.plant_size_kw == 10'000);
  CHECK(s.params(Pathway::green).electricity_price == 50.0);
  CHECK_FALSE(s.params(Pathway::gray).electricity_price.has_value());
  CHECK(s.params(Pathway::blue).capture_rate == 0.875);
  CHECK(s.params(Pathway::gray).emission_intensity_unabated == 9.5);
  CHECK(s.policy.credit_for(Pathway::green) == 3.0);
  CHECK(s.policy.credit_for(Pathway::blue) == 1.0);
  CHECK(s.policy.credit_for(Pathway::gray) == 0.0);
  CHECK(s.policy.credit_years == 20);
  CHECK_FALSE(s.policy_enabled);
  CHECK(s.active_policy().credits.empty());

  CHECK(load_scenario("  \n").checksum() == s.checksum());
  CHECK(load_scenario("{}").checksum() == s.checksum());
}

TEST_CASE("scenario overrides") {
  Scenario s = load_scenario(R"({"financial": {"discount_rate": 0.0}})");
  CHECK(s.financial.discount_rate == 0.0);

  s = load_scenario(R"({"pathways": {"gray": {"gas_price_index": 2.0}}})");
  CHECK(s.params(Pathway::gray).feedstock_cost == Approx(2.30));

  s = load_scenario(R"({"policy": {"enabled": true, "credit_years": 10}})");
  CHECK(s.active_policy().credit_years == 10);
  CHECK(s.active_policy().credit_for(Pathway::green) == 3.0);

  s = load_scenario(R"({"logistics": {"storage": "none", "mode": "truck_cryo"}})");
  CHECK_FALSE(s.logistics.storage.has_value());
  CHECK(s.logistics.mode == TransportMode::truck_cryo);
}

TEST_CASE("scenario errors name the offending key") {
  CHECK(config_error_key(R"({"pathways": {"green": {"efficiency": 1.2}}})") ==
        "pathways.green.efficiency");
  CHECK(config_error_key(R"({"pathways": {"blue": {"capex": 0}}})") == "pathways.blue.capex");
  CHECK(config_error_key(R"({"financial": {"wacc": 0.08}})") == "financial.wacc");
  CHECK(config_error_key(R"({"financial": {"lifetime_years": "twenty"}})") ==
        "financial.lifetime_years");
  CHECK(config_error_key(R"({"financial": {"lifetime_years": 20.5}})") ==
        "financial.lifetime_years");
  CHECK(config_error_key(R"({"policy": {"credit_years": 40}})") == "policy.credit_years");
  CHECK(config_error_key(R"({"logistics": {"mode": "teleport"}})") == "logistics.mode");
  CHECK(config_error_key(R"({"opex_source": "table7"})") == "opex_source");
  CHECK(config_error_key(R"({"schema_version": 2})") == "schema_version");
  CHECK_THROWS_AS(load_scenario("{\"financial\": "), config_error);
  CHECK_THROWS_AS(load_scenario("[1, 2]"), config_error);
}

TEST_CASE("with_value re-resolves one field") {
  Scenario base = load_scenario("");
  Scenario s = with_value(base, "pathways.green.capex", 1200);
  CHECK(s.params(Pathway::green).capex == 1200);
  CHECK(s.params(Pathway::blue).capex == 1100);
  CHECK(value_at(s, "pathways.green.capex") == 1200);
  CHECK(value_at(base, "policy.credit_years") == 20);
  CHECK_THROWS_AS(with_value(base, "pathways.green.colour", 1), config_error);
  CHECK_THROWS_AS(with_value(base, "logistics.mode", 1), config_error);
  CHECK_THROWS_AS(with_value(base, "pathways.green.efficiency", 1.5), config_error);
}

TEST_CASE("table11 opex source replaces fixed O&M") {
  Scenario s = load_scenario(R"({"opex_source": "table11"})");
  CHECK(s.params(Pathway::green).fixed_opex == Approx(0.05));
  CHECK(s.params(Pathway::blue).fixed_opex == Approx(0.08));
  CHECK(s.params(Pathway::gray).fixed_opex == Approx(0.07));
}

TEST_CASE("dataset transcription spot checks") {
  const auto& ds = ReferenceDataset::instance();
  CHECK(ds.get("table1", "green", "capex") == ValueBand::point(1700));
  CHECK(ds.get("table1", "gray", "breakeven_price") == ValueBand::of(1.5, 2.0));
  CHECK(ds.get("table2", "pipeline_repurposed", "capex") == ValueBand::of(0.3e6, 0.6e6));
  CHECK(ds.get("table3", "lh2_ship_large", "boil_off") == ValueBand::of(0.2, 0.4));
  CHECK(ds.get("table5", "carrier_lohc", "reconversion") == ValueBand::of(1.0, 2.0));
  CHECK(ds.get("table7", "lh2_tank_large", "capex") == ValueBand::of(1800, 3800));
  CHECK(ds.get("table8", "salt_cavern", "cycle_efficiency") == ValueBand::of(5, 95));
  CHECK(ds.get("table9", "nh3_store", "storage_cost") == ValueBand::of(0.35, 0.80));
  CHECK(ds.get("table10", "green", "1mw") == ValueBand::of(1500, 2500));
  CHECK(ds.get("table10", "gray", "100mw") == ValueBand::of(500, 800));
  CHECK(ds.get("table11", "blue", "1mw") == ValueBand::of(0.07, 0.12));
  CHECK(ds.get("table13", "green", "capex") == ValueBand::point(1700));
  CHECK(ds.get("table13", "blue", "lcoh") == ValueBand::of(2.0, 3.5));
  CHECK_FALSE(ds.find("table14", "green", "capex").has_value());
  CHECK_THROWS_AS(ds.get("table1", "green", "water"), domain_error);
}

TEST_CASE("dataset bands are ordered and keys are unique") {
  const auto& cells = ReferenceDataset::instance().cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(cells[i].value.low <= cells[i].value.mid);
    CHECK(cells[i].value.mid <= cells[i].value.high);
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      bool same = cells[i].table_id == cells[j].table_id && cells[i].row == cells[j].row &&
                  cells[i].column == cells[j].column;
      CHECK_FALSE(same);
    }
  }
}

TEST_CASE("dataset checksum is frozen") {
  const auto& ds = ReferenceDataset::instance();
  CHECK(ds.cells().size() == 117);
  CHECK(ds.to_csv().rfind("table_id,row,column,low,mid,high,unit\n", 0) == 0);
  CHECK(hex64(ds.checksum()) == "92f7ea867093e2d0");
  CHECK(ds.checksum() == fnv1a64(ds.to_csv()));
}

TEST_CASE("fnv1a reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}
