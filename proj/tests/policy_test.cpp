#include <doctest.h>

#include <cmath>

#include "h2tea/errors.hpp"
#include "h2tea/finance.hpp"
#include "h2tea/lcoh.hpp"
#include "h2tea/model.hpp"
#include "h2tea/policy.hpp"
#include "h2tea/scenario.hpp"
#include "oracles.hpp"

using namespace h2tea;
using doctest::Approx;

namespace {

const Scenario& defaults() {
  static const Scenario s = load_scenario("");
  return s;
}

PolicyRegime carbon_only(double price) {
  PolicyRegime p;
  p.carbon_price = price;
  return p;
}

}  // namespace

TEST_CASE("carbon adder examples") {
  const Scenario& s = defaults();
  CHECK(carbon_adder(s.params(Pathway::gray), 100) == Approx(0.95).epsilon(1e-14));
  CHECK(carbon_adder(s.params(Pathway::green), 100) == 0.0);
  CHECK(carbon_adder(s.params(Pathway::green), 1e6) == 0.0);
  CHECK(carbon_adder(s.params(Pathway::blue), 200) == Approx(0.2375).epsilon(1e-14));
  CHECK_THROWS_AS(carbon_adder(s.params(Pathway::gray), -1), domain_error);
}

TEST_CASE("credit levelization fraction") {
  FinancialParams fin;
  CHECK(credit_levelization_fraction(fin, 20) == 1.0);
  CHECK(credit_levelization_fraction(fin, 0) == 0.0);
  CHECK(credit_levelization_fraction(fin, 10) ==
        Approx(oracle::annuity(0.07, 10) / oracle::annuity(0.07, 20)).epsilon(1e-13));
  fin.discount_rate = 0.0;
  CHECK(credit_levelization_fraction(fin, 5) == Approx(0.25).epsilon(1e-15));
}

TEST_CASE("gray at 200 USD/t") {
  const Scenario& s = defaults();
  CostBreakdown c = effective_lcoh(s.params(Pathway::gray), s.financial, carbon_only(200));
  CHECK(c.carbon == Approx(1.9).epsilon(1e-14));
  CHECK(c.total >= 3.3);
  CHECK(c.total <= 4.5);
  CHECK(c.total == Approx(lcoh(s.params(Pathway::gray), s.financial).total + 1.9).epsilon(1e-14));
}

TEST_CASE("full-duration credits subtract flat") {
  const Scenario& s = defaults();
  PolicyRegime pol = s.policy;
  pol.carbon_price = 0.0;
  double green_base = lcoh(s.params(Pathway::green), s.financial).total;
  double blue_base = lcoh(s.params(Pathway::blue), s.financial).total;
  CostBreakdown green = effective_lcoh(s.params(Pathway::green), s.financial, pol);
  CostBreakdown blue = effective_lcoh(s.params(Pathway::blue), s.financial, pol);
  CHECK(green.credit == -3.0);
  CHECK(green_base - green.total == Approx(3.0).epsilon(1e-14));
  CHECK(blue_base - blue.total == Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(green.floored);
  CHECK(green.total == green.component_sum());
}

TEST_CASE("credit larger than cost floors at zero") {
  const Scenario& s = defaults();
  PolicyRegime pol = s.policy;
  pol.credits[Pathway::gray] = 10.0;
  CostBreakdown c = effective_lcoh(s.params(Pathway::gray), s.financial, pol);
  CHECK(c.floored);
  CHECK(c.total == Approx(0.0).scale(1.0));
  CHECK(c.total >= 0.0);
  CHECK(c.credit <= 0.0);
  CHECK(c.total == Approx(c.component_sum()).scale(1.0));
}

TEST_CASE("green effective LCOH ignores the carbon price") {
  const Scenario& s = defaults();
  PolicyRegime pol = s.policy;
  pol.carbon_price = 0.0;
  double at0 = effective_lcoh(s.params(Pathway::green), s.financial, pol).total;
  for (double c = 0; c <= 1000; c += 37.5) {
    pol.carbon_price = c;
    CHECK(effective_lcoh(s.params(Pathway::green), s.financial, pol).total == at0);
  }
}

TEST_CASE("effective LCOH is affine in carbon price with slope intensity/1000") {
  const Scenario& s = defaults();
  for (Pathway p : kAllPathways) {
    const PathwayParams& pp = s.params(p);
    double a = effective_lcoh(pp, s.financial, carbon_only(0)).total;
    double b = effective_lcoh(pp, s.financial, carbon_only(120)).total;
    double c = effective_lcoh(pp, s.financial, carbon_only(350)).total;
    double slope = pp.effective_emission_intensity() / 1000.0;
    CHECK((b - a) / 120 == Approx(slope).epsilon(1e-10).scale(1.0));
    CHECK((c - b) / 230 == Approx(slope).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("green with credit stays under 2 USD/kg") {
  const Scenario& s = defaults();
  double base = lcoh(s.params(Pathway::green), s.financial).total;
  CHECK(base < 5.0);
  PolicyRegime pol = s.policy;
  for (double c = 0; c <= 200; c += 10) {
    pol.carbon_price = c;
    CHECK(effective_lcoh(s.params(Pathway::green), s.financial, pol).total < 2.0);
  }
}

TEST_CASE("break-even passes carbon and credit straight through") {
  const Scenario& s = defaults();
  PolicyRegime pol = s.policy;
  pol.carbon_price = 60.0;
  for (Pathway p : kAllPathways) {
    const PathwayParams& pp = s.params(p);
    double plain = breakeven_price(pp, s.financial, PolicyRegime::none());
    double with = breakeven_price(pp, s.financial, pol);
    double expected = plain + carbon_adder(pp, 60.0) - pol.credit_for(p);
    CHECK(std::fabs(with - expected) < 1e-9);
  }
}

TEST_CASE("switchover gray versus blue matches the closed form") {
  const Scenario& s = defaults();
  const PathwayParams& gray = s.params(Pathway::gray);
  const PathwayParams& blue = s.params(Pathway::blue);
  double gap0 = lcoh(blue, s.financial).total - lcoh(gray, s.financial).total;
  double d_intensity = gray.effective_emission_intensity() - blue.effective_emission_intensity();
  double closed = gap0 / (d_intensity / 1000.0);
  double solved = switchover_carbon_price(gray, blue, s.financial, PolicyRegime::none());
  CHECK(solved == Approx(closed).epsilon(1e-10));
}

TEST_CASE("switchover agrees with a dense scan") {
  const Scenario& s = defaults();
  PolicyRegime pol = s.policy;
  const PathwayParams& gray = s.params(Pathway::gray);
  const PathwayParams& green = s.params(Pathway::green);
  auto gap = [&](double c) {
    PolicyRegime p = pol;
    p.carbon_price = c;
    return effective_lcoh(gray, s.financial, p).total - effective_lcoh(green, s.financial, p).total;
  };
  auto scanned = oracle::crossing_scan(gap);
  REQUIRE(scanned.has_value());
  double solved = switchover_carbon_price(gray, green, s.financial, pol);
  CHECK(std::fabs(solved - *scanned) < 1e-6);
  CHECK(solved >= 0.0);
  CHECK(solved <= 150.0);
}

TEST_CASE("switchover errors") {
  const Scenario& s = defaults();
  const PathwayParams& green = s.params(Pathway::green);
  CHECK_THROWS_AS(switchover_carbon_price(green, green, s.financial, s.policy), no_crossing);

  // Blue with a huge credit is cheaper than gray everywhere on [0, 1000].
  PolicyRegime pol = s.policy;
  pol.credits[Pathway::blue] = 3.0;
  try {
    switchover_carbon_price(s.params(Pathway::gray), s.params(Pathway::blue), s.financial, pol);
    FAIL("expected no_crossing");
  } catch (const no_crossing& e) {
    CHECK(std::string(e.what()).find("blue") != std::string::npos);
  }
}

TEST_CASE("npv against carbon price") {
  const Scenario& s = defaults();
  PolicyRegime pol = s.policy;
  std::vector<double> grid{0, 50, 100, 150, 200};
  auto green = npv_vs_carbon_price(s.params(Pathway::green), s.financial, pol, 5.0, grid);
  for (auto [c, v] : green) CHECK(v == green.front().second);

  auto gray = npv_vs_carbon_price(s.params(Pathway::gray), s.financial, pol, 5.0, grid);
  auto blue = npv_vs_carbon_price(s.params(Pathway::blue), s.financial, pol, 5.0, grid);
  double gray_slope = (gray[4].second - gray[0].second) / 200.0;
  double blue_slope = (blue[4].second - blue[0].second) / 200.0;
  double expected = -annual_output_kg(s.params(Pathway::gray), s.financial) * 9.5 / 1000.0 *
                    oracle::annuity(0.07, 20);
  CHECK(gray_slope == Approx(expected).epsilon(1e-10));
  CHECK(gray_slope < 0.0);
  double ratio = gray_slope / (blue_slope / annual_output_kg(s.params(Pathway::blue), s.financial) *
                               annual_output_kg(s.params(Pathway::gray), s.financial));
  CHECK(ratio == Approx(8.0).epsilon(1e-10));

  auto none = npv_vs_carbon_price(s.params(Pathway::gray), s.financial, PolicyRegime::none(), 4.0, {0});
  CHECK(none[0].second ==
        npv(build_cashflows(s.params(Pathway::gray), s.financial, PolicyRegime::none(), 4.0), 0.07));
}
