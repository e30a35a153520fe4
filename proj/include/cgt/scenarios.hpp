#pragma once

#include <string>
#include <vector>

#include "cgt/oracle.hpp"

namespace cgt {

struct ScenarioStep {
  std::string desc;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

struct ScenarioReport {
  std::string id;
  bool pass = false;
  std::vector<ScenarioStep> steps;
  double ms = 0.0;
};

// Group context the scenarios run against. Setting `corrupt` swaps the
// Baumslag-Solitar oracle for a free oracle on the same letters — a fault
// injection hook; scenarios that depend on the BS relations must then fail.
struct ScenarioContext {
  bool corrupt = false;
  OraclePtr bs_oracle() const;
};

// Catalog order is the execution and report order.
const std::vector<std::string>& scenario_ids();

// Runs one scenario; throws on an unknown id. A scenario failure is not an
// exception: it is a report whose status is fail.
ScenarioReport run_scenario(const std::string& id,
                            const ScenarioContext& ctx = {});

std::vector<ScenarioReport> run_all(const ScenarioContext& ctx = {});

bool all_pass(const std::vector<ScenarioReport>& reports);

// Human-readable and machine-readable renderings. Apart from the wall-time
// field, both are deterministic.
std::string report_text(const std::vector<ScenarioReport>& reports);
std::string report_json(const std::vector<ScenarioReport>& reports);

}  // namespace cgt
