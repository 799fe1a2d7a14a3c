// bsvy_lab: runs verification scenarios from INI configs and writes reports.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "bsvy/error.hpp"
#include "bsvy/functional.hpp"
#include "bsvy/harness.hpp"

namespace {

void print_summary(const bsvy::Report& r) {
  for (const auto& c : r.checks)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  computed=" << c.computed << " predicted=" << c.predicted
              << " [" << bsvy::to_string(c.provenance) << "]\n";
  for (const auto& w : r.warnings) std::cout << "WARN " << w << "\n";
  std::cout << r.scenario << ": " << (r.passed() ? "all checks passed" : "check failure") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-set functional verification lab"};
  app.require_subcommand(1);

  std::string config;
  std::string axis;
  bsvy::RunOptions opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Scenario INI file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out-dir", opt.out_dir, "Directory for report files");
    sub->add_flag("--strict", opt.strict, "Treat a boundary argmax of the lambda scan as an error");
    sub->add_option("--threads", opt.threads, "Worker threads (overrides BSVY_THREADS)")->check(CLI::NonNegativeNumber);
    sub->add_option("--resolution-scale", opt.resolution_scale, "Multiplier for every quadrature resolution")
        ->check(CLI::PositiveNumber);
  };
  CLI::App* run = app.add_subcommand("run", "Run the suite named in the config");
  add_common(run);
  run->add_flag("--check-resolution", opt.check_resolution,
                "Re-run at doubled resolution and compare headline numbers (exit 3 on disagreement)");
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one axis and write a table");
  add_common(sweep);
  sweep->add_option("--axis", axis, "Sweep axis")->required()->check(CLI::IsMember(bsvy::kSweepAxes));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const bsvy::Scenario sc = bsvy::load_scenario_file(config);
    const bsvy::Report r = run->parsed() ? bsvy::run_scenario(sc, opt) : bsvy::sweep_scenario(sc, axis, opt);
    print_summary(r);
    return bsvy::exit_status(r);
  } catch (const bsvy::InvalidParameter& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const bsvy::BoundaryArgmax& e) {
    std::cerr << "boundary argmax: " << e.what() << "\n";
    return 1;
  } catch (const bsvy::QuadratureInconsistency& e) {
    std::cerr << "quadrature inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const bsvy::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
