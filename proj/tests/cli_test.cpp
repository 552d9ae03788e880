#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "h2tea/checksum.hpp"
#include "h2tea/dataset.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = h2tea::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("h2tea_cli_test_" + name);
}

}  // namespace

TEST_CASE("lcoh prints every pathway") {
  Result r = run({"lcoh", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gray") != std::string::npos);
  CHECK(r.out.find("blue") != std::string::npos);
  CHECK(r.out.find("green") != std::string::npos);
  CHECK(r.err.find("scenario_checksum") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"npv", "--pathway", "green"}).code == 2);
  CHECK(run({"npv", "--pathway", "green", "--price", "-1"}).code == 2);
  CHECK(run({"lcoh", "--pathway", "purple"}).code == 2);
  CHECK(run({"figure", "fig11"}).code == 2);
  CHECK(run({"figure", "fig99"}).code == 2);
  CHECK(run({"--format", "xml", "lcoh"}).code == 2);
  CHECK(run({"--policy", "--no-policy", "lcoh"}).code == 2);
  CHECK(run({"chain", "--modes", "canoe"}).code == 2);
  CHECK(run({"sweep", "--param", "electricity_price", "--range", "0:10:5", "--pathway", "gray"}).code == 2);
  CHECK(run({"sweep", "--param", "capex", "--range", "10:0:5"}).code == 2);
  CHECK(run({"irr", "--pathway", "gray", "--price", "1"}).code == 3);
}

TEST_CASE("missing scenario file names the path") {
  Result r = run({"--scenario", "/nonexistent/h2tea.json", "lcoh"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/nonexistent/h2tea.json") != std::string::npos);
}

TEST_CASE("scenario with an unknown key is rejected") {
  auto path = temp_path("bad.json");
  std::ofstream(path) << R"({"financial": {"discount_rat": 0.08}})";
  Result r = run({"--scenario", path.string(), "lcoh"});
  CHECK(r.code == 2);
  CHECK(r.err.find("discount_rat") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("scenario overrides reach the output") {
  auto path = temp_path("override.json");
  std::ofstream(path) << R"({"financial": {"discount_rate": 0.0}})";
  Result base = run({"--format", "csv", "breakeven", "--pathway", "green"});
  Result changed = run({"--scenario", path.string(), "--format", "csv", "breakeven", "--pathway", "green"});
  CHECK(changed.code == 0);
  CHECK(base.out != changed.out);
  std::filesystem::remove(path);
}

TEST_CASE("npv at the printed break-even is close to zero") {
  Result be = run({"--format", "csv", "breakeven", "--pathway", "blue"});
  REQUIRE(be.code == 0);
  std::string line = be.out.substr(be.out.find('\n') + 1);
  std::string price = line.substr(line.rfind(',') + 1);
  price.erase(price.find_last_not_of("\n") + 1);
  Result npv = run({"--format", "csv", "npv", "--pathway", "blue", "--price", price});
  REQUIRE(npv.code == 0);
  std::string v = npv.out.substr(npv.out.find('\n') + 1);
  v = v.substr(v.rfind(',') + 1);
  CHECK(std::fabs(std::stod(v)) <= 0.01);
}

TEST_CASE("numbers agree across output formats") {
  Result csv = run({"--format", "csv", "lcoh", "--pathway", "blue"});
  Result json = run({"--format", "json", "lcoh", "--pathway", "blue"});
  Result text = run({"--format", "table", "lcoh", "--pathway", "blue"});
  REQUIRE(csv.code == 0);
  std::string row = csv.out.substr(csv.out.find('\n') + 1);
  std::stringstream ss(row);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell.erase(cell.find_last_not_of("\n") + 1);
    if (cell.empty()) continue;
    CHECK_MESSAGE(json.out.find(cell) != std::string::npos, cell);
    CHECK_MESSAGE(text.out.find(cell) != std::string::npos, cell);
  }
}

TEST_CASE("policy switch changes the green total") {
  Result off = run({"--no-policy", "--format", "csv", "lcoh", "--pathway", "green"});
  Result on = run({"--policy", "--format", "csv", "lcoh", "--pathway", "green"});
  CHECK(off.code == 0);
  CHECK(on.code == 0);
  CHECK(off.out != on.out);
}

TEST_CASE("chain lists modes and marks the cheapest") {
  Result r = run({"--format", "csv", "chain", "--distance-km", "300", "--modes",
                  "truck_tube,lh2_ship_large"});
  CHECK(r.code == 0);
  auto truck = r.out.find("truck_tube");
  REQUIRE(truck != std::string::npos);
  std::string truck_line = r.out.substr(truck, r.out.find('\n', truck) - truck);
  CHECK(truck_line.back() == '*');
}

TEST_CASE("figure output is byte identical across runs and thread counts") {
  for (const char* fig : {"fig1", "fig5", "fig6", "fig10", "fig13"}) {
    Result a = run({"figure", fig});
    Result b = run({"figure", fig});
    Result c = run({"--threads", "4", "figure", fig});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("--out writes the report and a manifest beside it") {
  auto out = temp_path("fig2.csv");
  Result r = run({"--out", out.string(), "figure", "fig2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out) == run({"figure", "fig2"}).out);
  std::string manifest = slurp(out.string() + ".manifest.json");
  CHECK(manifest.find("\"command_line\"") != std::string::npos);
  CHECK(manifest.find("\"dataset_checksum\"") != std::string::npos);
  CHECK(manifest.find(h2tea::hex64(h2tea::ReferenceDataset::instance().checksum())) != std::string::npos);
  std::filesystem::remove(out);
  std::filesystem::remove(out.string() + ".manifest.json");
}

TEST_CASE("dataset export") {
  Result tables = run({"dataset", "export", "--what", "tables"});
  CHECK(tables.code == 0);
  CHECK(tables.out == h2tea::ReferenceDataset::instance().to_csv());
  Result trends = run({"dataset", "export", "--what", "investment-trends"});
  CHECK(trends.code == 0);
  CHECK(trends.out.find("non-model") != std::string::npos);
}
