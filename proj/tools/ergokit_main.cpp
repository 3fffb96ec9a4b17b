// ergokit command-line front end. Parses flags into a scenario config,
// hands it to the shared library through the C interface, and writes the
// returned bytes in one shot (no partial files on failure).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ergokit.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(ergokit_status status) {
  switch (ergokit_status_class(status)) {
    case 0: return 0;
    case 2: return kExitNumeric;
    default: return kExitValidation;
  }
}

int fail(ergokit_status status) {
  std::cerr << "ergokit: error: " << ergokit_last_error() << "\n";
  return exit_code_for(status);
}

int write_output(const std::string& bytes, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return 0;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "ergokit: error: cannot open '" << path << "' for writing\n";
    return kExitValidation;
  }
  out << bytes;
  if (!out.good()) {
    std::cerr << "ergokit: error: short write to '" << path << "'\n";
    return kExitNumeric;
  }
  return 0;
}

int run_config(const ordered_json& config, const std::string& output) {
  const std::string payload = config.dump();
  char* bytes = nullptr;
  size_t len = 0;
  const ergokit_status status = ergokit_scenario_run(payload.c_str(), &bytes, &len);
  if (status != ERGOKIT_OK) return fail(status);
  const std::string data(bytes, len);
  ergokit_buffer_free(bytes);
  return write_output(data, output);
}

// One subcommand per scenario; every flag maps onto one config parameter so
// a bare invocation reproduces the reference dataset for that scenario.
struct ScenarioCli {
  ordered_json params = ordered_json::object();
  std::string format;
  std::string output;

  void attach_common(CLI::App* cmd, const std::string& default_format) {
    format = default_format;
    cmd->add_option("-o,--output", output, "output path ('-' for stdout)");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  void number(CLI::App* cmd, const std::string& flag, const std::string& key,
              const std::string& help) {
    auto setter = [this, key](double v) { params[key] = v; };
    cmd->add_option_function<double>(flag, setter, help);
  }

  void integer(CLI::App* cmd, const std::string& flag, const std::string& key,
               const std::string& help) {
    auto setter = [this, key](int v) { params[key] = v; };
    cmd->add_option_function<int>(flag, setter, help);
  }

  void text(CLI::App* cmd, const std::string& flag, const std::string& key,
            const std::string& help, const std::vector<std::string>& allowed) {
    auto setter = [this, key](std::string v) { params[key] = v; };
    cmd->add_option_function<std::string>(flag, setter, help)
        ->check(CLI::IsMember(allowed));
  }

  ordered_json config(const std::string& scenario) const {
    ordered_json c;
    c["scenario"] = scenario;
    c["format"] = format;
    c["params"] = params;
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      std::string("ergokit ") + ergokit_version() +
      " - ergotropy datasets for two-level and Gaussian quantum batteries"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string config_output;
  app.add_option("--config", config_path,
                 "run a JSON config file instead of a subcommand");
  app.add_option("-o,--output", config_output,
                 "output path for --config ('-' for stdout)");

  int jobs = 1;
  if (const char* env = std::getenv("ERGOKIT_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) jobs = v;
  }

  ScenarioCli tls_family, tls_channel, tls_dynamics, xstate, g_family,
      g_dynamics, decay, charging;

  CLI::App* c1 = app.add_subcommand("tls-family", "isoergotropic family sweep");
  tls_family.attach_common(c1, "csv");
  tls_family.number(c1, "--pbar", "pbar", "reference excited population");
  tls_family.number(c1, "--omega", "omega", "level splitting");
  tls_family.number(c1, "--theta", "theta", "coherence phase");
  tls_family.integer(c1, "--points", "points", "grid points");

  CLI::App* c2 = app.add_subcommand("tls-channel",
                                    "charge-preserving channel walk");
  tls_channel.attach_common(c2, "csv");
  tls_channel.number(c2, "--pbar", "pbar", "family reference population");
  tls_channel.number(c2, "--omega", "omega", "level splitting");
  tls_channel.number(c2, "--p-from", "p_from", "walk start population");
  tls_channel.number(c2, "--theta-from", "theta_from", "walk start phase");
  tls_channel.number(c2, "--p-to", "p_to", "walk end population");
  tls_channel.number(c2, "--theta-to", "theta_to", "walk end phase");
  tls_channel.integer(c2, "--steps", "steps", "walk steps");

  CLI::App* c3 = app.add_subcommand("tls-dynamics",
                                    "two-TLS exchange dynamics");
  tls_dynamics.attach_common(c3, "csv");
  tls_dynamics.number(c3, "--pbar", "pbar", "family reference population");
  tls_dynamics.number(c3, "--omega", "omega", "level splitting");
  tls_dynamics.number(c3, "--eta", "eta", "coupling strength");
  tls_dynamics.number(c3, "--theta", "theta", "battery phase");
  tls_dynamics.number(c3, "--phi", "phi", "auxiliary phase");
  tls_dynamics.integer(c3, "--samples", "samples", "time samples");
  tls_dynamics.number(c3, "--periods", "periods", "periods of pi/eta");

  CLI::App* c4 = app.add_subcommand("x-state", "two-cell X-state profile");
  xstate.attach_common(c4, "csv");
  xstate.number(c4, "--omega", "omega", "single-cell splitting");
  xstate.integer(c4, "--points", "points", "q grid points");

  CLI::App* c5 = app.add_subcommand("gaussian-family",
                                    "Gaussian isoergotropic family sweep");
  g_family.attach_common(c5, "csv");
  g_family.number(c5, "--mubar-sq", "mubar_sq", "family charge |mu|^2");
  g_family.number(c5, "--occupation", "occupation", "thermal occupation N");
  g_family.number(c5, "--omega", "omega", "mode frequency");
  g_family.number(c5, "--phi", "phi", "squeezing phase");
  g_family.number(c5, "--theta", "theta", "displacement phase");
  g_family.integer(c5, "--points", "points", "xi grid points");

  CLI::App* c6 = app.add_subcommand("gaussian-dynamics",
                                    "two-mode beam-splitter dynamics");
  g_dynamics.attach_common(c6, "csv");
  g_dynamics.number(c6, "--mubar-sq", "mubar_sq", "family charge |mu|^2");
  g_dynamics.number(c6, "--nb0", "N_B0", "battery initial occupation");
  g_dynamics.number(c6, "--na0", "N_A0", "auxiliary initial occupation");
  g_dynamics.number(c6, "--xi", "xi", "shared squeezing magnitude");
  g_dynamics.number(c6, "--phi", "phi", "squeezing phase");
  g_dynamics.number(c6, "--theta-b", "theta_B", "battery displacement phase");
  g_dynamics.number(c6, "--omega", "omega", "mode frequency");
  g_dynamics.number(c6, "--eta", "eta", "coupling strength");
  g_dynamics.integer(c6, "--samples", "samples", "time samples");
  g_dynamics.number(c6, "--periods", "periods", "periods of pi/eta");
  g_dynamics.text(c6, "--observable", "observable", "dataset kind",
                  {"trajectory", "wigner"});
  g_dynamics.integer(c6, "--frames", "frames", "wigner frames at k pi/(4 eta)");
  g_dynamics.number(c6, "--wigner-extent", "wigner_extent",
                    "phase-space half-width");
  g_dynamics.integer(c6, "--wigner-points", "wigner_points",
                     "grid points per axis");

  CLI::App* c7 = app.add_subcommand("decay", "open-system discharge");
  decay.attach_common(c7, "csv");
  decay.text(c7, "--type", "type", "battery type", {"tls", "gaussian"});
  decay.text(c7, "--observable", "observable", "dataset kind",
             {"trajectory", "halflife"});
  decay.number(c7, "--pbar", "pbar", "TLS family reference population");
  decay.number(c7, "--nbar", "nbar", "bath occupation");
  decay.number(c7, "--gamma", "gamma", "decay rate");
  decay.number(c7, "--omega", "omega", "splitting / frequency");
  decay.number(c7, "--mubar-sq", "mubar_sq", "Gaussian family charge");
  decay.number(c7, "--occupation", "occupation", "Gaussian initial N");
  decay.integer(c7, "--members", "members", "family members in the sweep");
  decay.integer(c7, "--grid", "grid", "time samples");
  decay.number(c7, "--horizon", "horizon", "time horizon in units of 1/gamma");

  CLI::App* c8 = app.add_subcommand("charging", "optimal-power charging");
  charging.attach_common(c8, "json");
  charging.number(c8, "--s0", "s0", "initial Bloch radius");
  charging.number(c8, "--epsilon", "epsilon", "drive strength bound");
  charging.number(c8, "--omega", "omega", "level splitting");
  charging.text(c8, "--observable", "observable", "dataset kind",
                {"summary", "trajectory", "power"});
  charging.integer(c8, "--samples", "samples", "samples for series output");

  CLI::App* c9 = app.add_subcommand("selftest", "run the oracle suites");
  std::string mutate;
  unsigned long long seed = 12345;
  c9->add_option("--mutate", mutate,
                 "skew the named suite's reference value (expects failure)");
  c9->add_option("--seed", seed, "seed for the randomized suites");

  app.add_option("--jobs", jobs, "worker threads for sweeps (ERGOKIT_JOBS)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (c9->parsed()) {
    char* report = nullptr;
    size_t len = 0;
    const ergokit_status status =
        ergokit_selftest(mutate.empty() ? nullptr : mutate.c_str(), seed,
                         &report, &len);
    if (report) {
      std::cout << std::string(report, len);
      ergokit_buffer_free(report);
    }
    if (status == ERGOKIT_OK) return 0;
    if (status == ERGOKIT_ERR_SELFTEST_FAILED) return kExitNumeric;
    return fail(status);
  }

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "ergokit: error: cannot read '" << config_path << "'\n";
      return kExitValidation;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    ordered_json config;
    try {
      config = ordered_json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "ergokit: error: bad config JSON: " << e.what() << "\n";
      return kExitValidation;
    }
    return run_config(config, config_output);
  }

  const struct {
    CLI::App* cmd;
    ScenarioCli* cli;
    const char* name;
    bool takes_jobs;
  } table[] = {
      {c1, &tls_family, "tls-family", false},
      {c2, &tls_channel, "tls-channel", false},
      {c3, &tls_dynamics, "tls-dynamics", false},
      {c4, &xstate, "x-state", false},
      {c5, &g_family, "gaussian-family", false},
      {c6, &g_dynamics, "gaussian-dynamics", false},
      {c7, &decay, "decay", true},
      {c8, &charging, "charging", false},
  };
  for (const auto& row : table) {
    if (!row.cmd->parsed()) continue;
    if (row.takes_jobs && jobs > 1) row.cli->params["jobs"] = jobs;
    return run_config(row.cli->config(row.name), row.cli->output);
  }

  std::cout << app.help();
  return 0;
}
