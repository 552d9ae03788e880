#include "h2tea/dataset.hpp"

#include <fmt/format.h>

#include "h2tea/checksum.hpp"
#include "h2tea/errors.hpp"

namespace h2tea {

std::string hex64(std::uint64_t v) { return fmt::format("{:016x}", v); }

std::string scale_column(double size_mw) { return fmt::format("{}mw", size_mw); }

namespace {

struct Builder {
  std::vector<DatasetCell>& out;
  std::string table;

  void range(std::string row, std::string column, double low, double high, std::string unit) {
    out.push_back({table, std::move(row), std::move(column), ValueBand::of(low, high),
                   std::move(unit)});
  }
  void point(std::string row, std::string column, double v, std::string unit) {
    out.push_back({table, std::move(row), std::move(column), ValueBand::point(v),
                   std::move(unit)});
  }
};

void table1(std::vector<DatasetCell>& c) {
  Builder b{c, "table1"};
  b.point("green", "capex", 1700, "USD/kW");
  b.point("blue", "capex", 1100, "USD/kW");
  b.point("gray", "capex", 900, "USD/kW");
  b.point("green", "opex", 0.50, "USD/kg");
  b.point("blue", "opex", 0.30, "USD/kg");
  b.point("gray", "opex", 0.20, "USD/kg");
  b.point("green", "electricity_cost", 50, "USD/MWh");
  b.point("green", "carbon_price", 100, "USD/t");
  b.point("blue", "carbon_price", 50, "USD/t");
  b.point("gray", "carbon_price", 0, "USD/t");
  b.range("green", "breakeven_price", 4.5, 6.0, "USD/kg");
  b.range("blue", "breakeven_price", 2.5, 3.5, "USD/kg");
  b.range("gray", "breakeven_price", 1.5, 2.0, "USD/kg");
}

void transport_tables(std::vector<DatasetCell>& c) {
  Builder t2{c, "table2"};
  t2.range("pipeline_new", "capex", 1.0e6, 2.0e6, "USD/km");
  t2.range("pipeline_new", "opex", 0.10, 0.15, "USD/kg");
  t2.range("pipeline_new", "max_capacity", 100, 500, "t/day");
  t2.range("pipeline_new", "energy_loss", 0.5, 1, "%");
  t2.range("pipeline_repurposed", "capex", 0.3e6, 0.6e6, "USD/km");
  t2.range("pipeline_repurposed", "opex", 0.07, 0.10, "USD/kg");
  t2.range("pipeline_repurposed", "max_capacity", 50, 300, "t/day");
  t2.range("pipeline_repurposed", "energy_loss", 1, 2, "%");

  Builder t3{c, "table3"};
  t3.range("lh2_ship_large", "liquefaction", 1.5, 2.0, "USD/kg");
  t3.range("lh2_ship_large", "shipping", 0.50, 1.20, "USD/kg/1000km");
  t3.range("lh2_ship_large", "boil_off", 0.2, 0.4, "%");
  t3.range("lh2_ship_small", "liquefaction", 2.0, 3.0, "USD/kg");
  t3.range("lh2_ship_small", "shipping", 1.00, 2.00, "USD/kg/1000km");
  t3.range("lh2_ship_small", "boil_off", 0.3, 0.5, "%");

  Builder t4{c, "table4"};
  t4.range("truck_tube", "compression", 0.5, 1.0, "USD/kg");
  t4.range("truck_tube", "trucking", 2.00, 5.00, "USD/kg/1000km");
  t4.range("truck_tube", "storage_pressure", 350, 700, "bar");
  t4.range("truck_cryo", "compression", 1.0, 1.5, "USD/kg");
  t4.range("truck_cryo", "trucking", 1.50, 3.50, "USD/kg/1000km");
  t4.range("truck_cryo", "storage_pressure", 250, 400, "bar");

  Builder t5{c, "table5"};
  t5.range("carrier_nh3", "synthesis", 1.0, 1.5, "USD/kg");
  t5.range("carrier_nh3", "transport", 0.30, 0.70, "USD/kg/1000km");
  t5.range("carrier_nh3", "reconversion", 0.75, 1.50, "USD/kg");
  t5.range("carrier_lohc", "synthesis", 1.2, 1.8, "USD/kg");
  t5.range("carrier_lohc", "transport", 0.50, 1.00, "USD/kg/1000km");
  t5.range("carrier_lohc", "reconversion", 1.00, 2.00, "USD/kg");
}

void storage_tables(std::vector<DatasetCell>& c) {
  Builder t6{c, "table6"};
  t6.range("compressed_350", "capex", 650, 1200, "USD/kg");
  t6.range("compressed_350", "opex", 6, 12, "USD/kg/yr");
  t6.point("compressed_350", "storage_pressure", 350, "bar");
  t6.range("compressed_350", "efficiency_loss", 5, 10, "%");
  t6.range("compressed_700", "capex", 1200, 2000, "USD/kg");
  t6.range("compressed_700", "opex", 9, 18, "USD/kg/yr");
  t6.point("compressed_700", "storage_pressure", 700, "bar");
  t6.range("compressed_700", "efficiency_loss", 10, 15, "%");
  t6.range("high_capacity_cylinders", "capex", 1800, 2700, "USD/kg");
  t6.range("high_capacity_cylinders", "opex", 12, 22, "USD/kg/yr");
  t6.point("high_capacity_cylinders", "storage_pressure", 700, "bar");
  t6.range("high_capacity_cylinders", "efficiency_loss", 10, 20, "%");

  Builder t7{c, "table7"};
  t7.range("lh2_tank_small", "capex", 2500, 4500, "USD/kg");
  t7.range("lh2_tank_small", "opex", 55, 110, "USD/kg/yr");
  t7.range("lh2_tank_small", "boil_off", 0.3, 0.5, "%");
  t7.range("lh2_tank_large", "capex", 1800, 3800, "USD/kg");
  t7.range("lh2_tank_large", "opex", 45, 85, "USD/kg/yr");
  t7.range("lh2_tank_large", "boil_off", 0.1, 0.3, "%");

  // Salt cavern cycle efficiency is stored as printed ("5 - 95").
  Builder t8{c, "table8"};
  t8.range("salt_cavern", "capex", 0.15, 0.60, "USD/kg");
  t8.range("salt_cavern", "opex", 0.02, 0.07, "USD/kg/yr");
  t8.range("salt_cavern", "capacity", 10'000, 100'000, "t");
  t8.range("salt_cavern", "cycle_efficiency", 5, 95, "%");
  t8.range("depleted_field", "capex", 0.30, 0.90, "USD/kg");
  t8.range("depleted_field", "opex", 0.03, 0.12, "USD/kg/yr");
  t8.range("depleted_field", "capacity", 50'000, 500'000, "t");
  t8.range("depleted_field", "cycle_efficiency", 75, 90, "%");
  t8.range("aquifer", "capex", 0.40, 1.20, "USD/kg");
  t8.range("aquifer", "opex", 0.04, 0.18, "USD/kg/yr");
  t8.range("aquifer", "capacity", 100'000, 1'000'000, "t");
  t8.range("aquifer", "cycle_efficiency", 70, 85, "%");

  Builder t9{c, "table9"};
  t9.range("nh3_store", "cost", 1.2, 1.80, "USD/kg");
  t9.range("nh3_store", "storage_cost", 0.35, 0.80, "USD/kg/yr");
  t9.range("nh3_store", "reconversion", 0.80, 1.70, "USD/kg");
  t9.range("nh3_store", "efficiency_loss", 25, 40, "%");
  t9.range("lohc_store", "cost", 1.5, 2.2, "USD/kg");
  t9.range("lohc_store", "storage_cost", 0.55, 1.10, "USD/kg/yr");
  t9.range("lohc_store", "reconversion", 1.20, 2.50, "USD/kg");
  t9.range("lohc_store", "efficiency_loss", 30, 45, "%");
  t9.range("metal_hydride", "cost", 2.2, 3.5, "USD/kg");
  t9.range("metal_hydride", "storage_cost", 0.90, 1.80, "USD/kg/yr");
  t9.range("metal_hydride", "reconversion", 1.70, 3.20, "USD/kg");
  t9.range("metal_hydride", "efficiency_loss", 35, 50, "%");
}

void production_tables(std::vector<DatasetCell>& c) {
  Builder t10{c, "table10"};
  t10.range("green", "1mw", 1500, 2500, "USD/kW");
  t10.range("green", "10mw", 1200, 1700, "USD/kW");
  t10.range("green", "100mw", 800, 1500, "USD/kW");
  t10.range("blue", "1mw", 900, 1500, "USD/kW");
  t10.range("blue", "10mw", 800, 1200, "USD/kW");
  t10.range("blue", "100mw", 700, 1000, "USD/kW");
  t10.range("gray", "1mw", 700, 1000, "USD/kW");
  t10.range("gray", "10mw", 600, 900, "USD/kW");
  t10.range("gray", "100mw", 500, 800, "USD/kW");

  Builder t11{c, "table11"};
  t11.range("green", "1mw", 0.04, 0.09, "USD/kg");
  t11.range("green", "10mw", 0.03, 0.07, "USD/kg");
  t11.range("green", "100mw", 0.02, 0.06, "USD/kg");
  t11.range("blue", "1mw", 0.07, 0.12, "USD/kg");
  t11.range("blue", "10mw", 0.06, 0.10, "USD/kg");
  t11.range("blue", "100mw", 0.05, 0.09, "USD/kg");
  t11.range("gray", "1mw", 0.06, 0.10, "USD/kg");
  t11.range("gray", "10mw", 0.05, 0.09, "USD/kg");
  t11.range("gray", "100mw", 0.04, 0.08, "USD/kg");

  Builder t12{c, "table12"};
  t12.range("green", "feedstock", 1.50, 3.00, "USD/kg");
  t12.range("blue", "feedstock", 0.90, 1.80, "USD/kg");
  t12.range("gray", "feedstock", 0.80, 1.50, "USD/kg");

  // CAPEX is printed "1,7" and "1,1" for green and blue; read as 1,700 and 1,100.
  Builder t13{c, "table13"};
  t13.point("green", "capex", 1700, "USD/kW");
  t13.point("blue", "capex", 1100, "USD/kW");
  t13.point("gray", "capex", 900, "USD/kW");
  t13.range("green", "opex", 0.05, 0.09, "USD/kg");
  t13.range("blue", "opex", 0.07, 0.12, "USD/kg");
  t13.range("gray", "opex", 0.06, 0.10, "USD/kg");
  t13.range("green", "feedstock", 1.50, 3.00, "USD/kg");
  t13.range("blue", "feedstock", 0.90, 1.80, "USD/kg");
  t13.range("gray", "feedstock", 0.80, 1.50, "USD/kg");
  t13.range("green", "efficiency", 60, 70, "%");
  t13.range("blue", "efficiency", 70, 80, "%");
  t13.range("gray", "efficiency", 75, 85, "%");
  t13.range("green", "lcoh", 3.50, 6.00, "USD/kg");
  t13.range("blue", "lcoh", 2.00, 3.50, "USD/kg");
  t13.range("gray", "lcoh", 1.50, 2.50, "USD/kg");
}

}  // namespace

ReferenceDataset::ReferenceDataset() {
  table1(cells_);
  transport_tables(cells_);
  storage_tables(cells_);
  production_tables(cells_);
}

const ReferenceDataset& ReferenceDataset::instance() {
  static const ReferenceDataset ds;
  return ds;
}

std::optional<ValueBand> ReferenceDataset::find(std::string_view table, std::string_view row,
                                            std::string_view column) const {
  for (const auto& c : cells_) {
    if (c.table_id == table && c.row == row && c.column == column) return c.value;
  }
  return std::nullopt;
}

const ValueBand& ReferenceDataset::get(std::string_view table, std::string_view row,
                                   std::string_view column) const {
  for (const auto& c : cells_) {
    if (c.table_id == table && c.row == row && c.column == column) return c.value;
  }
  throw domain_error(fmt::format("no dataset entry {}/{}/{}", table, row, column));
}

std::string ReferenceDataset::to_csv() const {
  std::string out = "table_id,row,column,low,mid,high,unit\n";
  for (const auto& c : cells_) {
    out += fmt::format("{},{},{},{},{},{},{}\n", c.table_id, c.row, c.column, c.value.low,
                       c.value.mid, c.value.high, c.unit);
  }
  return out;
}

std::uint64_t ReferenceDataset::checksum() const { return fnv1a64(to_csv()); }

}  // namespace h2tea
