#include "h2tea/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <span>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "h2tea/errors.hpp"
#include "h2tea/finance.hpp"
#include "h2tea/lcoh.hpp"
#include "h2tea/logistics.hpp"
#include "h2tea/policy.hpp"

namespace h2tea {

namespace {

// Gray, blue, green: the column order of every per-pathway figure.
constexpr std::array<Pathway, 3> kFigureOrder = {Pathway::gray, Pathway::blue, Pathway::green};

// Evaluates f(0..n-1) into an ordered vector, optionally across threads.
// Each index is written by exactly one worker, so output order never depends
// on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, ExecutionOptions exec, F&& f) {
  std::vector<T> out(n);
  unsigned threads = exec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : exec.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<Column> pathway_columns(Column x, const char* unit, int precision) {
  std::vector<Column> cols{std::move(x)};
  for (Pathway p : kFigureOrder) cols.push_back({std::string(to_string(p)), unit, precision});
  return cols;
}

Table series_table(Column x, const char* unit, int precision, const std::vector<double>& grid,
                   const std::vector<std::array<std::optional<double>, 3>>& values) {
  Table t;
  t.columns = pathway_columns(std::move(x), unit, precision);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Cell> row{grid[i]};
    for (const auto& v : values[i]) row.push_back(v ? Cell(*v) : Cell());
    t.add_row(std::move(row));
  }
  return t;
}

std::vector<double> price_grid() {
  using namespace figure_grids;
  return grid_from_range(kPriceLo, kPriceHi, kPriceStep);
}

std::vector<double> carbon_grid() {
  using namespace figure_grids;
  return grid_from_range(kCarbonLo, kCarbonHi, kCarbonStep);
}

Table fig_cost_shares(const Scenario& s) {
  Table t;
  t.columns = {{"plant_size_mw", "MW", 0},        {"pathway", "", 0},
               {"production", "USD/kg", 6},       {"transport", "USD/kg", 6},
               {"storage", "USD/kg", 6},          {"production_share", "", 6},
               {"transport_share", "", 6},        {"storage_share", "", 6}};
  const auto& lg = s.logistics;
  TransportLeg leg = make_leg(lg.mode, lg.distance_km, lg.assumptions);
  std::optional<StorageSpec> store;
  if (lg.storage) store = make_storage(*lg.storage, lg.assumptions);
  for (double size : figure_grids::kPlantSizesKw) {
    FinancialParams fin = s.financial;
    fin.plant_size_kw = size;
    for (Pathway p : kFigureOrder) {
      CostBreakdown prod = lcoh(at_scale(s.params(p), size), fin);
      DeliveredCost d = compose_chain(prod, std::span(&leg, 1), store, fin);
      t.add_row({size / 1000.0, std::string(to_string(p)), d.production, d.transport, d.storage,
                 d.shares.production, d.shares.transport, d.shares.storage});
    }
  }
  return t;
}

Table fig_npv_vs_price(const Scenario& s, ExecutionOptions exec) {
  auto grid = price_grid();
  PolicyRegime policy = s.active_policy();
  auto values = parallel_map<std::array<std::optional<double>, 3>>(grid.size(), exec, [&](std::size_t i) {
    std::array<std::optional<double>, 3> row;
    for (std::size_t j = 0; j < 3; ++j) {
      Pathway p = kFigureOrder[j];
      row[j] = npv(build_cashflows(s.params(p), s.financial, policy, grid[i]),
                   s.financial.discount_rate);
    }
    return row;
  });
  return series_table({"h2_price", "USD/kg", 2}, "USD", 2, grid, values);
}

Table fig_green_electricity_profitability(const Scenario& s, ExecutionOptions exec) {
  auto grid = price_grid();
  const auto& elec = figure_grids::kFig3ElectricityPrices;
  PolicyRegime policy = s.active_policy();
  auto values = parallel_map<std::vector<double>>(grid.size(), exec, [&](std::size_t i) {
    std::vector<double> row;
    for (double e : elec) {
      PathwayParams g = s.params(Pathway::green);
      g.electricity_price = e;
      row.push_back(npv(build_cashflows(g, s.financial, policy, grid[i]),
                        s.financial.discount_rate));
    }
    return row;
  });
  Table t;
  t.columns.push_back({"h2_price", "USD/kg", 2});
  for (double e : elec) t.columns.push_back({fmt::format("green_elec_{}_usd_per_mwh", e), "USD", 2});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Cell> row{grid[i]};
    for (double v : values[i]) row.push_back(v);
    t.add_row(std::move(row));
  }
  return t;
}

Table fig_irr_vs_price(const Scenario& s, ExecutionOptions exec) {
  auto grid = price_grid();
  PolicyRegime policy = s.active_policy();
  auto values = parallel_map<std::array<std::optional<double>, 3>>(grid.size(), exec, [&](std::size_t i) {
    std::array<std::optional<double>, 3> row;
    for (std::size_t j = 0; j < 3; ++j) {
      row[j] = irr_vs_price(s.params(kFigureOrder[j]), s.financial, policy, {grid[i]})
                   .front()
                   .second;
    }
    return row;
  });
  return series_table({"h2_price", "USD/kg", 2}, "fraction/yr", 6, grid, values);
}

Table fig_tornado(const Scenario& s) {
  Table out;
  for (Pathway p : kFigureOrder) {
    std::vector<TornadoParam> params{
        {"h2_price", s.h2_price - 1.0, s.h2_price + 1.0},
        relative_band(s, p, "capex", 0.30),
        relative_band(s, p, p == Pathway::green ? "electricity_price" : "feedstock_cost", 0.30),
    };
    Table t = tornado_table(p, tornado(s, p, params, Metric::npv));
    if (out.columns.empty()) out.columns = t.columns;
    for (auto& row : t.rows) out.rows.push_back(std::move(row));
  }
  return out;
}

enum class SizeSeries { lcoh, npv, capex };

Table fig_by_size(const Scenario& s, SizeSeries m) {
  std::vector<double> sizes(figure_grids::kPlantSizesKw.begin(), figure_grids::kPlantSizesKw.end());
  std::vector<std::array<std::optional<double>, 3>> values;
  PolicyRegime policy = s.active_policy();
  for (double size : sizes) {
    FinancialParams fin = s.financial;
    fin.plant_size_kw = size;
    std::array<std::optional<double>, 3> row;
    for (std::size_t j = 0; j < 3; ++j) {
      PathwayParams p = at_scale(s.params(kFigureOrder[j]), size);
      switch (m) {
        case SizeSeries::lcoh: row[j] = lcoh(p, fin).total; break;
        case SizeSeries::npv:
          row[j] = npv(build_cashflows(p, fin, policy, s.h2_price), fin.discount_rate);
          break;
        case SizeSeries::capex: row[j] = p.capex; break;
      }
    }
    values.push_back(row);
  }
  std::vector<double> mw;
  for (double kw : sizes) mw.push_back(kw / 1000.0);
  switch (m) {
    case SizeSeries::lcoh: return series_table({"plant_size_mw", "MW", 0}, "USD/kg", 6, mw, values);
    case SizeSeries::npv: return series_table({"plant_size_mw", "MW", 0}, "USD", 2, mw, values);
    case SizeSeries::capex: break;
  }
  return series_table({"plant_size_mw", "MW", 0}, "USD/kW", 2, mw, values);
}

Table fig_carbon(const Scenario& s, bool npv_metric, ExecutionOptions exec) {
  auto grid = carbon_grid();
  auto values = parallel_map<std::array<std::optional<double>, 3>>(grid.size(), exec, [&](std::size_t i) {
    PolicyRegime policy = s.policy;
    policy.carbon_price = grid[i];
    std::array<std::optional<double>, 3> row;
    for (std::size_t j = 0; j < 3; ++j) {
      const PathwayParams& p = s.params(kFigureOrder[j]);
      row[j] = npv_metric
                   ? npv(build_cashflows(p, s.financial, policy, s.h2_price), s.financial.discount_rate)
                   : effective_lcoh(p, s.financial, policy).total;
    }
    return row;
  });
  return npv_metric ? series_table({"carbon_price_usd_per_ton", "USD/t", 0}, "USD", 2, grid, values)
                    : series_table({"carbon_price_usd_per_ton", "USD/t", 0}, "USD/kg", 6, grid, values);
}

Table fig_electricity(const Scenario& base, ExecutionOptions exec) {
  using namespace figure_grids;
  Scenario s = fig13_scenario(base);
  auto grid = grid_from_range(kElectricityLo, kElectricityHi, kElectricityStep);
  PolicyRegime policy = s.active_policy();
  auto values = parallel_map<double>(grid.size(), exec, [&](std::size_t i) {
    PathwayParams g = s.params(Pathway::green);
    g.electricity_price = grid[i];
    return effective_lcoh(g, s.financial, policy).total;
  });
  Table t;
  t.columns = {{"electricity_price_usd_per_mwh", "USD/MWh", 0}, {"green", "USD/kg", 6}};
  for (std::size_t i = 0; i < grid.size(); ++i) t.add_row({grid[i], values[i]});
  return t;
}

}  // namespace

Metric parse_metric(std::string_view name) {
  for (Metric m : {Metric::lcoh, Metric::npv, Metric::irr, Metric::breakeven, Metric::delivered_cost}) {
    if (to_string(m) == name) return m;
  }
  throw config_error("metric", "unknown metric '" + std::string(name) + "'");
}

std::string_view to_string(Metric m) noexcept {
  switch (m) {
    case Metric::lcoh: return "lcoh";
    case Metric::npv: return "npv";
    case Metric::irr: return "irr";
    case Metric::breakeven: return "breakeven";
    case Metric::delivered_cost: return "delivered_cost";
  }
  return "?";
}

std::optional<double> evaluate_metric(const Scenario& s, Pathway p, Metric m) {
  const PathwayParams& params = s.params(p);
  const PolicyRegime policy = s.active_policy();
  switch (m) {
    case Metric::lcoh: return effective_lcoh(params, s.financial, policy).total;
    case Metric::npv:
      return npv(build_cashflows(params, s.financial, policy, s.h2_price), s.financial.discount_rate);
    case Metric::irr:
      return irr_vs_price(params, s.financial, policy, {s.h2_price}).front().second;
    case Metric::breakeven: return breakeven_price(params, s.financial, policy);
    case Metric::delivered_cost: {
      const auto& lg = s.logistics;
      TransportLeg leg = make_leg(lg.mode, lg.distance_km, lg.assumptions);
      std::optional<StorageSpec> store;
      if (lg.storage) store = make_storage(*lg.storage, lg.assumptions);
      return compose_chain(effective_lcoh(params, s.financial, policy), std::span(&leg, 1), store,
                           s.financial)
          .total;
    }
  }
  return std::nullopt;
}

std::string resolve_parameter(std::string_view parameter, Pathway p) {
  if (parameter.empty()) throw config_error("param", "empty parameter name");
  if (parameter == "h2_price") return "market.h2_price_usd_per_kg";
  if (parameter.find('.') != std::string_view::npos) return std::string(parameter);
  return "pathways." + std::string(to_string(p)) + "." + std::string(parameter);
}

std::vector<double> grid_from_range(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw config_error("range", "expected lo <= hi and step > 0");
  }
  double span = (hi - lo) / step;
  if (span > 1e6) throw config_error("range", "too many grid points");
  auto n = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

SweepResult sweep(const Scenario& base, const SweepSpec& spec, ExecutionOptions exec) {
  if (spec.grid.empty()) throw config_error("range", "sweep grid is empty");
  for (std::size_t i = 1; i < spec.grid.size(); ++i) {
    if (!(spec.grid[i] > spec.grid[i - 1])) throw config_error("range", "grid must be strictly increasing");
  }
  if (spec.pathways.empty()) throw config_error("pathway", "no pathways selected");
  // Surface bad keys before fanning out.
  for (Pathway p : spec.pathways) {
    try {
      value_at(base, resolve_parameter(spec.parameter, p));
    } catch (const config_error& e) {
      throw config_error("param", "'" + spec.parameter + "' does not apply to " +
                                      std::string(to_string(p)) + " (" + e.what() + ")");
    }
  }

  SweepResult r{spec, {}};
  r.values = parallel_map<std::vector<std::optional<double>>>(spec.grid.size(), exec, [&](std::size_t i) {
    std::vector<std::optional<double>> row;
    for (Pathway p : spec.pathways) {
      Scenario s = with_value(base, resolve_parameter(spec.parameter, p), spec.grid[i]);
      row.push_back(evaluate_metric(s, p, spec.metric));
    }
    return row;
  });
  return r;
}

Table SweepResult::to_table() const {
  int precision = spec.metric == Metric::npv ? 2 : 6;
  const char* unit = spec.metric == Metric::npv   ? "USD"
                     : spec.metric == Metric::irr ? "fraction/yr"
                                                  : "USD/kg";
  Table t;
  t.columns.push_back({spec.parameter, "", 6});
  for (Pathway p : spec.pathways) t.columns.push_back({std::string(to_string(p)), unit, precision});
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    std::vector<Cell> row{spec.grid[i]};
    for (const auto& v : values[i]) row.push_back(v ? Cell(*v) : Cell());
    t.add_row(std::move(row));
  }
  return t;
}

std::vector<TornadoEntry> tornado(const Scenario& base, Pathway p,
                                  const std::vector<TornadoParam>& params, Metric metric) {
  std::vector<TornadoEntry> out;
  for (const auto& tp : params) {
    if (!(tp.low < tp.high)) throw config_error(tp.parameter, "tornado low must be < high");
    std::string key = resolve_parameter(tp.parameter, p);
    auto at = [&](double v) {
      auto m = evaluate_metric(with_value(base, key, v), p, metric);
      if (!m) throw no_sign_change();
      return *m;
    };
    TornadoEntry e{tp.parameter, tp.low, tp.high, at(tp.low), at(tp.high), 0.0};
    e.swing = std::fabs(e.metric_at_high - e.metric_at_low);
    out.push_back(e);
  }
  std::stable_sort(out.begin(), out.end(), [](const TornadoEntry& a, const TornadoEntry& b) {
    if (a.swing != b.swing) return a.swing > b.swing;
    return a.parameter < b.parameter;
  });
  return out;
}

TornadoParam relative_band(const Scenario& s, Pathway p, std::string_view parameter,
                           double fraction) {
  double v = value_at(s, resolve_parameter(parameter, p));
  return {std::string(parameter), v * (1.0 - fraction), v * (1.0 + fraction)};
}

Table tornado_table(Pathway p, const std::vector<TornadoEntry>& entries) {
  Table t;
  t.columns = {{"pathway", "", 0},        {"parameter", "", 0},    {"low_value", "", 6},
               {"high_value", "", 6},     {"metric_at_low", "", 6}, {"metric_at_high", "", 6},
               {"swing", "", 6}};
  for (const auto& e : entries) {
    t.add_row({std::string(to_string(p)), e.parameter, e.low_value, e.high_value, e.metric_at_low,
               e.metric_at_high, e.swing});
  }
  return t;
}

FigureId parse_figure_id(std::string_view name) {
  if (name == "fig11") {
    throw config_error("figure",
                       "fig11 (investment trends) is market data, not model output; "
                       "see `dataset export --what investment-trends`");
  }
  for (FigureId f : kAllFigures) {
    if (to_string(f) == name) return f;
  }
  throw config_error("figure", "unknown figure '" + std::string(name) + "'");
}

std::string_view to_string(FigureId f) noexcept {
  switch (f) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
    case FigureId::fig5: return "fig5";
    case FigureId::fig6: return "fig6";
    case FigureId::fig7: return "fig7";
    case FigureId::fig8: return "fig8";
    case FigureId::fig9: return "fig9";
    case FigureId::fig10: return "fig10";
    case FigureId::fig12: return "fig12";
    case FigureId::fig13: return "fig13";
  }
  return "?";
}

PathwayParams at_scale(const PathwayParams& p, double plant_size_kw) {
  PathwayParams out = p;
  out.capex = capex_at_scale(p.pathway, plant_size_kw).band.mid;
  out.fixed_opex = opex_at_scale(p.pathway, plant_size_kw).band.mid;
  return out;
}

Scenario fig13_scenario(const Scenario& s) {
  nlohmann::json cfg = s.config;
  cfg["opex_source"] = "table11";
  return resolve_scenario(cfg);
}

Table figure_data(FigureId id, const Scenario& s, ExecutionOptions exec) {
  switch (id) {
    case FigureId::fig1: return fig_cost_shares(s);
    case FigureId::fig2:
    case FigureId::fig4: return fig_npv_vs_price(s, exec);
    case FigureId::fig3: return fig_green_electricity_profitability(s, exec);
    case FigureId::fig5: return fig_irr_vs_price(s, exec);
    case FigureId::fig6: return fig_tornado(s);
    case FigureId::fig7: return fig_by_size(s, SizeSeries::lcoh);
    case FigureId::fig8: return fig_by_size(s, SizeSeries::capex);
    case FigureId::fig9: return fig_by_size(s, SizeSeries::npv);
    case FigureId::fig10: return fig_carbon(s, false, exec);
    case FigureId::fig12: return fig_carbon(s, true, exec);
    case FigureId::fig13: return fig_electricity(s, exec);
  }
  throw domain_error("unhandled figure");
}

Table investment_trends_table() {
  Table t;
  t.columns = {{"pathway", "", 0}, {"year", "", 0}, {"investment", "USD billion", 0},
               {"qualifier", "", 0}, {"source", "", 0}};
  const std::string note = "non-model data quoted from text";
  t.add_row({std::string("green"), 2035.0, 250.0, std::string("cumulative, over"), note});
  t.add_row({std::string("blue"), 2035.0, 100.0, std::string("approximately"), note});
  t.add_row({std::string("gray"), 2030.0, 0.0, std::string("negligible"), note});
  return t;
}

}  // namespace h2tea
