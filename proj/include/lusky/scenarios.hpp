#pragma once

// Named, self-contained reproduction scenarios.  Each one builds its own
// inputs, runs one end-to-end claim of the library with pinned parameters
// and tolerances, and reports pass/fail plus human-readable detail lines.
// The acceptance runner executes all of them; the CLI `repro` subcommand
// runs one by name.

#include <span>
#include <string>
#include <vector>

namespace lusky {

struct ScenarioResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;  // "ok: ..." / "FAIL: ..." per check
};

// All scenario names, in suite order.
std::span<const char* const> scenario_names();

// Runs one scenario with its pinned default parameters; throws Error for
// an unknown name.
ScenarioResult run_scenario(const std::string& name);

// Parameterized variant of the spike-construction round trip backing the
// "prop-ajexample" scenario: chain gaps either grow linearly (g_j = j + 2)
// or stay constant, spike level C >= 3.
struct AjExampleParams {
  std::string gaps = "linear";  // "linear" or "const:<g>"
  double C = 3.0;
  int blocks = 30;
};

ScenarioResult run_ajexample(const AjExampleParams& params);

}  // namespace lusky
