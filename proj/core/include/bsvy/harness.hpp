#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "bsvy/config.hpp"

namespace bsvy {

enum class Provenance { literature, trivial, derived };
std::string to_string(Provenance p);

struct CheckRecord {
  std::string name;
  double computed = 0.0;
  double predicted = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  Provenance provenance = Provenance::derived;
  std::string note;
};

/// A flat table; every row has one entry per column.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;  // optional first column of strings (empty when unused)
};

/// A number that the resolution check compares across runs.
struct Headline {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;  // relative
};

struct Report {
  std::string scenario;
  std::string suite;
  nlohmann::json echo;        // the parsed scenario
  nlohmann::json resolution;  // quadrature stamps actually used
  std::vector<CheckRecord> checks;
  std::vector<Table> tables;
  std::vector<Headline> headlines;
  std::vector<std::string> warnings;
  double wall_seconds = 0.0;  // written to a separate timing file

  bool passed() const;
  void add(CheckRecord c) { checks.push_back(std::move(c)); }
};

struct RunOptions {
  std::string out_dir = ".";
  bool strict = false;
  int threads = 0;
  double resolution_scale = 1.0;
  /// Re-run at twice the resolution and compare headline numbers; violations
  /// throw QuadratureInconsistency.
  bool check_resolution = false;
  bool write_files = true;
};

/// Dispatches the suite. Throws InvalidParameter before any computation when
/// the scenario fails validation.
Report run_scenario(const Scenario& sc, const RunOptions& opt);

inline const std::vector<std::string> kSweepAxes{"lambda", "R", "epsilon", "dilation", "q"};

/// One table with one row per axis value.
Report sweep_scenario(const Scenario& sc, const std::string& axis, const RunOptions& opt);

/// Deterministic payload: everything except timing.
nlohmann::json report_json(const Report& r);
std::string table_csv(const Table& t);
/// <out_dir>/<scenario>.report.json, <scenario>.<table>.csv, <scenario>.timing.json
void write_report(const Report& r, const std::string& out_dir);

/// Exit status: 0 all checks pass, 1 a check failed, 2 invalid config, 3 quadrature inconsistency.
int exit_status(const Report& r);

/// Scales every quadrature resolution of the functional config.
FunctionalConfig scaled_config(const FunctionalConfig& c, double scale, int dim);

}  // namespace bsvy
