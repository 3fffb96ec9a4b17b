#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ergokit/scenarios.hpp"

using namespace ergokit;
using nlohmann::ordered_json;

TEST_CASE("csv schema: banner line, headers, 17-digit round trip") {
  const std::string csv = run_scenario_bytes(
      R"({"scenario": "tls-family", "format": "csv", "params": {"points": 7}})");
  std::istringstream in(csv);
  std::string line1, line2, line3;
  std::getline(in, line1);
  std::getline(in, line2);
  std::getline(in, line3);
  CHECK(line1.rfind("# ergokit ", 0) == 0);
  CHECK(line1.find("scenario=tls-family") != std::string::npos);
  CHECK(line2.rfind("p,C,C2,R,", 0) == 0);

  // Numbers survive a parse round trip exactly.
  const std::string first = line3.substr(0, line3.find(','));
  CHECK(std::stod(first) == 0.6000000000000001);
}

TEST_CASE("identical configs produce identical bytes") {
  const char* configs[] = {
      R"({"scenario": "tls-dynamics", "format": "csv", "params": {"samples": 40}})",
      R"({"scenario": "x-state", "format": "json", "params": {"points": 21}})",
      R"({"scenario": "charging", "format": "json"})",
      R"({"scenario": "decay", "format": "csv", "params": {"grid": 30, "members": 3, "type": "gaussian"}})",
  };
  for (const char* cfg : configs) {
    CHECK(run_scenario_bytes(cfg) == run_scenario_bytes(cfg));
  }
}

TEST_CASE("sweep output does not depend on the worker count") {
  const std::string serial = run_scenario_bytes(
      R"({"scenario": "decay", "format": "csv", "params": {"grid": 24, "members": 4, "jobs": 1}})");
  const std::string threaded = run_scenario_bytes(
      R"({"scenario": "decay", "format": "csv", "params": {"grid": 24, "members": 4, "jobs": 3}})");
  CHECK(serial == threaded);
}

TEST_CASE("config validation rejects malformed requests") {
  CHECK_THROWS_AS(run_scenario_bytes("not json"), BadConfig);
  CHECK_THROWS_AS(run_scenario_bytes(R"({"format": "csv"})"), BadConfig);
  CHECK_THROWS_AS(run_scenario_bytes(R"({"scenario": "nope"})"), BadConfig);
  CHECK_THROWS_AS(run_scenario_bytes(
                      R"({"scenario": "x-state", "format": "xml"})"),
                  BadConfig);
  CHECK_THROWS_AS(run_scenario_bytes(
                      R"({"scenario": "x-state", "params": {"qq": 1}})"),
                  BadConfig);
  CHECK_THROWS_AS(run_scenario_bytes(
                      R"({"scenario": "x-state", "params": {"points": 1.5}})"),
                  BadConfig);
  CHECK_THROWS_AS(run_scenario_bytes(
                      R"({"scenario": "decay", "params": {"type": "spin"}})"),
                  BadConfig);
  // Out-of-range physics parameters surface as domain errors.
  CHECK_THROWS_AS(run_scenario_bytes(
                      R"({"scenario": "tls-family", "params": {"pbar": 0.4}})"),
                  DomainError);
}

TEST_CASE("metadata round-trips through the JSON header") {
  const std::string text = run_scenario_bytes(
      R"({"scenario": "gaussian-family", "format": "json", "params": {"points": 11}})");
  const ordered_json root = ordered_json::parse(text);
  CHECK(root.at("metadata").at("scenario") == "gaussian-family");
  CHECK(root.at("metadata").at("parameters").at("points") == 11);
  CHECK(root.at("metadata").at("parameters").at("mubar_sq") == 5.0);
  CHECK(root.at("columns").at("xi").size() == 11);
  // Columns share one length.
  size_t rows = 0;
  for (const auto& [name, col] : root.at("columns").items()) {
    if (rows == 0) rows = col.size();
    CHECK(col.size() == rows);
  }
}

TEST_CASE("charging summary carries the headline numbers") {
  const ordered_json root = ordered_json::parse(run_scenario_bytes(
      R"({"scenario": "charging", "format": "json", "params": {"s0": 1.0}})"));
  const double alpha_over_pi =
      root.at("columns").at("alpha_T_over_pi").at(0).get<double>();
  CHECK(alpha_over_pi > 0.735);
  CHECK(alpha_over_pi < 0.745);
  CHECK(root.at("columns").at("p_bar").at(0).get<double>() ==
        doctest::Approx(root.at("columns").at("R_family").at(0).get<double>() /
                            2.0 +
                        0.5)
            .epsilon(1e-12));
}

TEST_CASE("channel walk reports clean residuals and a flat charge") {
  const ordered_json root = ordered_json::parse(run_scenario_bytes(
      R"({"scenario": "tls-channel", "format": "json", "params": {"steps": 12}})"));
  const auto& cols = root.at("columns");
  for (const auto& v : cols.at("kraus_completeness")) CHECK(v.get<double>() < 1e-12);
  for (const auto& v : cols.at("swap_distance")) CHECK(v.get<double>() < 1e-12);
  const double charge = cols.at("R").at(0).get<double>();
  CHECK(charge == doctest::Approx(0.4).epsilon(1e-12));  // pbar = 0.7 default
  for (const auto& v : cols.at("R")) CHECK(v.get<double>() == doctest::Approx(charge).epsilon(1e-12));
}

TEST_CASE("wigner frames integrate to frame count over phase space") {
  const ordered_json root = ordered_json::parse(run_scenario_bytes(
      R"({"scenario": "gaussian-dynamics", "format": "json",
          "params": {"observable": "wigner", "frames": 2,
                     "wigner_points": 81, "wigner_extent": 6.0}})"));
  const auto& cols = root.at("columns");
  const size_t rows = cols.at("W").size();
  CHECK(rows == 2 * 81 * 81);
  const double cell = (12.0 / 80.0) * (12.0 / 80.0);
  double integral = 0.0;
  for (const auto& v : cols.at("W")) integral += v.get<double>() * cell;
  CHECK(integral == doctest::Approx(2.0).epsilon(2e-3));
}

TEST_CASE("selftest passes clean and fails under mutation by name") {
  const SelftestResult clean = run_selftest();
  CHECK(clean.all_passed());
  CHECK(clean.entries.size() == 6);

  const SelftestResult mutated = run_selftest("tls-split");
  CHECK_FALSE(mutated.all_passed());
  bool named = false;
  for (const auto& e : mutated.entries)
    if (!e.passed && e.name == "tls-split") named = true;
  CHECK(named);
  CHECK(mutated.report().find("[FAIL] tls-split") != std::string::npos);
}
