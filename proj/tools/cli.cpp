#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "h2tea/analysis.hpp"
#include "h2tea/checksum.hpp"
#include "h2tea/dataset.hpp"
#include "h2tea/errors.hpp"
#include "h2tea/finance.hpp"
#include "h2tea/logistics.hpp"
#include "h2tea/policy.hpp"
#include "h2tea/scenario.hpp"
#include "h2tea/table.hpp"

namespace h2tea::cli {

namespace {

constexpr const char* kProgram = "h2tea";

struct Options {
  std::string scenario_path;
  std::string format;  // default: csv for figure and dataset, table otherwise
  std::string out_path;
  bool policy_on = false;
  bool policy_off = false;
  unsigned threads = 0;

  std::string pathway;
  std::optional<double> price;
  std::optional<double> distance_km;
  std::string modes;
  bool modes_given = false;
  std::vector<std::string> params;
  std::string range;
  std::string metric;
  std::string figure;
  std::string what = "tables";
};

std::string read_file(const std::string& path, const std::string& key) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error(key, "cannot read file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Scenario load(const Options& o) {
  std::string defaults(builtin_defaults_text());
  if (const char* env = std::getenv("H2TEA_DEFAULTS"); env && *env) {
    defaults = read_file(env, "H2TEA_DEFAULTS");
  }
  std::string text = o.scenario_path.empty() ? std::string() : read_file(o.scenario_path, "scenario");
  Scenario s = load_scenario(text, defaults);
  if (o.policy_on || o.policy_off) {
    nlohmann::json cfg = s.config;
    cfg["policy"]["enabled"] = o.policy_on;
    s = resolve_scenario(cfg);
  }
  return s;
}

std::vector<Pathway> pathways_of(const std::string& name) {
  if (name.empty() || name == "all") return {Pathway::gray, Pathway::blue, Pathway::green};
  return {parse_pathway(name)};
}

double parse_number(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw config_error(key, "expected a number, got '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
  }
  return parts;
}

double require_price(const Options& o) {
  if (!o.price) throw config_error("price", "--price is required");
  if (*o.price < 0.0) throw config_error("price", "must be >= 0");
  return *o.price;
}

std::string iso_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest(const std::vector<std::string>& args, const Scenario* s) {
  std::string line = kProgram;
  for (const auto& a : args) line += " " + a;
  nlohmann::ordered_json m;
  m["command_line"] = line;
  m["scenario_checksum"] = s ? hex64(s->checksum()) : std::string();
  m["dataset_checksum"] = hex64(ReferenceDataset::instance().checksum());
  m["tool_version"] = H2TEA_VERSION;
  m["timestamp"] = iso_timestamp();
  return m.dump(2) + "\n";
}

void emit(const Options& o, const std::string& text, const std::string& manifest_text,
          std::ostream& out, std::ostream& err) {
  if (o.out_path.empty()) {
    out << text;
    err << manifest_text;
    return;
  }
  auto write = [](const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw config_error("out", "cannot write file '" + path + "'");
    f << body;
    if (!f.flush()) throw config_error("out", "cannot write file '" + path + "'");
  };
  write(o.out_path, text);
  write(o.out_path + ".manifest.json", manifest_text);
}

// USD/kg reports print cents; data-oriented commands keep six decimals.
constexpr int kReportDecimals = 2;

Table cmd_lcoh(const Scenario& s, const Options& o) {
  Table t;
  t.columns = {{"pathway", "", 0},
               {"capital", "USD/kg", kReportDecimals},
               {"fixed_om", "USD/kg", kReportDecimals},
               {"feedstock", "USD/kg", kReportDecimals},
               {"carbon", "USD/kg", kReportDecimals},
               {"credit", "USD/kg", kReportDecimals},
               {"transport", "USD/kg", kReportDecimals},
               {"storage", "USD/kg", kReportDecimals},
               {"total", "USD/kg", kReportDecimals},
               {"floored", "", 0}};
  PolicyRegime policy = s.active_policy();
  for (Pathway p : pathways_of(o.pathway)) {
    CostBreakdown c = effective_lcoh(s.params(p), s.financial, policy);
    t.add_row({std::string(to_string(p)), c.capital, c.fixed_om, c.feedstock, c.carbon, c.credit,
               c.transport, c.storage, c.total, std::string(c.floored ? "yes" : "no")});
  }
  return t;
}

Table cmd_npv(const Scenario& s, const Options& o) {
  double price = require_price(o);
  Table t;
  t.columns = {{"pathway", "", 0}, {"h2_price", "USD/kg", 6}, {"npv", "USD", 2}};
  for (Pathway p : pathways_of(o.pathway)) {
    double v = npv(build_cashflows(s.params(p), s.financial, s.active_policy(), price),
                   s.financial.discount_rate);
    t.add_row({std::string(to_string(p)), price, v});
  }
  return t;
}

Table cmd_irr(const Scenario& s, const Options& o) {
  double price = require_price(o);
  Table t;
  t.columns = {{"pathway", "", 0}, {"h2_price", "USD/kg", 6}, {"irr", "fraction/yr", 6}};
  for (Pathway p : pathways_of(o.pathway)) {
    CashFlowSeries cf = build_cashflows(s.params(p), s.financial, s.active_policy(), price);
    t.add_row({std::string(to_string(p)), price, irr(cf)});
  }
  return t;
}

Table cmd_breakeven(const Scenario& s, const Options& o) {
  Table t;
  // Nine decimals so that NPV at the printed price stays within a dollar.
  t.columns = {{"pathway", "", 0}, {"breakeven_price", "USD/kg", 9}};
  for (Pathway p : pathways_of(o.pathway)) {
    t.add_row({std::string(to_string(p)),
               breakeven_price(s.params(p), s.financial, s.active_policy())});
  }
  return t;
}

std::vector<TransportMode> parse_modes(const Options& o) {
  if (!o.modes_given) return {kAllTransportModes.begin(), kAllTransportModes.end()};
  std::vector<TransportMode> modes;
  for (const auto& name : split(o.modes, ',')) {
    if (name.empty()) continue;
    modes.push_back(parse_transport_mode(name));
  }
  if (modes.empty()) throw config_error("modes", "no transport modes given");
  return modes;
}

Table cmd_chain(const Scenario& s, const Options& o) {
  double distance = o.distance_km.value_or(s.logistics.distance_km);
  if (!(distance > 0.0)) throw config_error("distance-km", "must be > 0");
  std::vector<TransportMode> modes = parse_modes(o);
  Pathway pathway = o.pathway.empty() ? Pathway::green : parse_pathway(o.pathway);

  const auto& lg = s.logistics;
  CostBreakdown prod = effective_lcoh(s.params(pathway), s.financial, s.active_policy());
  std::optional<StorageSpec> store;
  if (lg.storage) store = make_storage(*lg.storage, lg.assumptions);
  ChainChoice best = cheapest_chain(distance, prod, s.financial, modes, lg.assumptions);

  Table t;
  t.columns = {{"mode", "", 0},
               {"distance_km", "km", 1},
               {"fixed", "USD/kg", kReportDecimals},
               {"variable", "USD/kg", kReportDecimals},
               {"reconversion", "USD/kg", kReportDecimals},
               {"loss_uplift", "USD/kg", kReportDecimals},
               {"total", "USD/kg", kReportDecimals},
               {"delivered_total", "USD/kg", kReportDecimals},
               {"cheapest", "", 0}};
  for (TransportMode m : modes) {
    TransportLeg leg = make_leg(m, distance, lg.assumptions);
    DeliveredCost d = compose_chain(prod, std::span(&leg, 1), store, s.financial);
    double variable = leg.variable_cost_per_kg_per_1000km * distance / 1000.0;
    t.add_row({std::string(to_string(m)), distance, leg.fixed_cost_per_kg, variable,
               leg.reconversion_cost_per_kg, leg_cost(leg) - leg_base_cost(leg), leg_cost(leg),
               d.total, std::string(m == best.mode ? "*" : "")});
  }
  return t;
}

Table cmd_sweep(const Scenario& s, const Options& o) {
  if (o.params.size() != 1) throw config_error("param", "sweep takes exactly one --param");
  auto parts = split(o.range, ':');
  if (parts.size() != 3) throw config_error("range", "expected lo:hi:step");
  SweepSpec spec;
  spec.parameter = o.params.front();
  spec.grid = grid_from_range(parse_number(parts[0], "range"), parse_number(parts[1], "range"),
                              parse_number(parts[2], "range"));
  spec.metric = o.metric.empty() ? Metric::lcoh : parse_metric(o.metric);
  spec.pathways = pathways_of(o.pathway);
  return sweep(s, spec, {o.threads}).to_table();
}

Table cmd_tornado(const Scenario& s, const Options& o) {
  Pathway p = o.pathway.empty() ? Pathway::green : parse_pathway(o.pathway);
  Metric metric = o.metric.empty() ? Metric::npv : parse_metric(o.metric);
  std::vector<TornadoParam> params;
  for (const auto& spec : o.params) {
    auto parts = split(spec, ':');
    if (parts.size() != 3 || parts[0].empty()) throw config_error("param", "expected name:low:high");
    params.push_back({parts[0], parse_number(parts[1], "param"), parse_number(parts[2], "param")});
  }
  if (params.empty()) {
    params = {{"h2_price", s.h2_price - 1.0, s.h2_price + 1.0},
              relative_band(s, p, "capex", 0.30),
              relative_band(s, p, p == Pathway::green ? "electricity_price" : "feedstock_cost", 0.30)};
  }
  return tornado_table(p, tornado(s, p, params, metric));
}

Table dataset_table() {
  Table t;
  t.columns = {{"table_id", "", 0}, {"row", "", 0},  {"column", "", 0}, {"low", "", -1},
               {"mid", "", -1},     {"high", "", -1}, {"unit", "", 0}};
  for (const auto& c : ReferenceDataset::instance().cells()) {
    t.add_row({c.table_id, c.row, c.column, c.value.low, c.value.mid, c.value.high, c.unit});
  }
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Techno-economic model for gray, blue and green hydrogen", kProgram};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", H2TEA_VERSION);
  app.add_option("--scenario", o.scenario_path, "Scenario JSON overlaid on the defaults");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", o.out_path, "Write output here; manifest goes to <out>.manifest.json");
  auto* pol_on = app.add_flag("--policy", o.policy_on, "Apply carbon price and credits");
  auto* pol_off = app.add_flag("--no-policy", o.policy_off, "Ignore carbon price and credits");
  pol_on->excludes(pol_off);
  app.add_option("--threads", o.threads, "Worker threads for sweeps (0 = all cores)");

  auto pathway_opt = [&](CLI::App* c, const char* help) { c->add_option("--pathway", o.pathway, help); };
  auto price_opt = [&](CLI::App* c) { c->add_option("--price", o.price, "Hydrogen price, USD/kg"); };

  auto* lcoh_cmd = app.add_subcommand("lcoh", "Levelized cost breakdown");
  pathway_opt(lcoh_cmd, "green, blue, gray or all");
  auto* npv_cmd = app.add_subcommand("npv", "Net present value at a hydrogen price");
  pathway_opt(npv_cmd, "green, blue, gray or all");
  price_opt(npv_cmd);
  auto* irr_cmd = app.add_subcommand("irr", "Internal rate of return at a hydrogen price");
  pathway_opt(irr_cmd, "green, blue, gray or all");
  price_opt(irr_cmd);
  auto* be_cmd = app.add_subcommand("breakeven", "Hydrogen price at which NPV is zero");
  pathway_opt(be_cmd, "green, blue, gray or all");
  auto* chain_cmd = app.add_subcommand("chain", "Delivered cost per transport mode");
  pathway_opt(chain_cmd, "Production pathway (default green)");
  chain_cmd->add_option("--distance-km", o.distance_km, "Transport distance");
  chain_cmd->add_option("--modes", o.modes, "Comma-separated candidate modes")
      ->each([&](const std::string&) { o.modes_given = true; });
  auto* sweep_cmd = app.add_subcommand("sweep", "Metric over a parameter grid");
  pathway_opt(sweep_cmd, "green, blue, gray or all");
  sweep_cmd->add_option("--param", o.params, "Parameter key")->required();
  sweep_cmd->add_option("--range", o.range, "lo:hi:step")->required();
  sweep_cmd->add_option("--metric", o.metric, "lcoh, npv, irr, breakeven or delivered_cost");
  auto* tornado_cmd = app.add_subcommand("tornado", "One-at-a-time sensitivity");
  pathway_opt(tornado_cmd, "Pathway (default green)");
  tornado_cmd->add_option("--param", o.params, "name:low:high, repeatable");
  tornado_cmd->add_option("--metric", o.metric, "Metric (default npv)");
  auto* figure_cmd = app.add_subcommand("figure", "Data behind one figure");
  figure_cmd->add_option("id", o.figure, "fig1..fig10, fig12, fig13")->required();
  auto* dataset_cmd = app.add_subcommand("dataset", "Built-in cost tables");
  dataset_cmd->require_subcommand(1, 1);
  auto* export_cmd = dataset_cmd->add_subcommand("export", "Print the transcribed tables");
  export_cmd->add_option("--what", o.what, "tables or investment-trends")
      ->check(CLI::IsMember({"tables", "investment-trends"}));
  for (auto* c : app.get_subcommands({})) c->fallthrough();
  export_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << H2TEA_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  }

  try {
    bool data_cmd = figure_cmd->parsed() || dataset_cmd->parsed();
    Format format = o.format.empty() ? (data_cmd ? Format::csv : Format::table) : parse_format(o.format);
    if (export_cmd->parsed()) {
      Table t = o.what == "tables" ? dataset_table() : investment_trends_table();
      std::string text = (o.what == "tables" && format == Format::csv)
                             ? ReferenceDataset::instance().to_csv()
                             : t.render(format);
      emit(o, text, manifest(args, nullptr), out, err);
      return kOk;
    }

    Scenario s = load(o);
    Table t;
    if (lcoh_cmd->parsed()) {
      t = cmd_lcoh(s, o);
    } else if (npv_cmd->parsed()) {
      t = cmd_npv(s, o);
    } else if (irr_cmd->parsed()) {
      t = cmd_irr(s, o);
    } else if (be_cmd->parsed()) {
      t = cmd_breakeven(s, o);
    } else if (chain_cmd->parsed()) {
      t = cmd_chain(s, o);
    } else if (sweep_cmd->parsed()) {
      t = cmd_sweep(s, o);
    } else if (tornado_cmd->parsed()) {
      t = cmd_tornado(s, o);
    } else if (figure_cmd->parsed()) {
      t = figure_data(parse_figure_id(o.figure), s, {o.threads});
    }
    emit(o, t.render(format), manifest(args, &s), out, err);
    return kOk;
  } catch (const config_error& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const no_sign_change& e) {
    err << "error: " << e.what() << "\n";
    return kUndefined;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace h2tea::cli
