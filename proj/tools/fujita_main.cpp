// fujita: experiment runner for the fractional reaction-diffusion laboratory.
//
//   fujita <command> --config <file> [--seed N] [--out DIR]
//
// Commands: regime, verify-steady, evolve, dichotomy, fk-check, ball.
// Writes report.json plus plot CSVs into the output directory; exit status 0
// iff every built-in assertion passed.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fujita/experiment.hpp"
#include "fujita/kernels.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fractional Fujita equation laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  long long seed = -1;
  bool print_report = false;

  for (const char* name :
       {"regime", "verify-steady", "evolve", "dichotomy", "fk-check", "ball"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "config JSON file")->required();
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--out", out_dir, "override the output directory");
    sub->add_flag("--print-report", print_report, "echo report.json to stdout");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config file " << config_path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    auto config = fujita::cli::parse_config(buf.str());
    if (config.command != command) {
      std::cerr << "error: config names command \"" << config.command
                << "\" but the subcommand is \"" << command << "\"\n";
      return 2;
    }
    if (seed >= 0) {
      config.seed = static_cast<std::uint64_t>(seed);
      config.resolved["seed"] = config.seed;
    }
    if (!out_dir.empty()) {
      config.output_dir = out_dir;
      config.resolved["output_dir"] = out_dir;
    }
    std::cerr << "fujita " << command << " (simd backend: "
              << fujita::kernels::backend_name() << ", out: " << config.output_dir << ")\n";
    const int status = fujita::cli::execute(config);
    if (print_report) {
      std::ifstream rep_file(config.output_dir + "/report.json");
      std::cout << rep_file.rdbuf();
    }
    std::cerr << (status == 0 ? "PASS" : "FAIL") << "\n";
    return status;
  } catch (const fujita::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
