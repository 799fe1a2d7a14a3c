#pragma once

#include <map>
#include <string>
#include <vector>

#include "bsvy/field.hpp"
#include "bsvy/functional.hpp"
#include "bsvy/spaces.hpp"

namespace bsvy {

/// Flat INI document: section -> key -> raw value, in file order.
class IniDocument {
 public:
  using Section = std::vector<std::pair<std::string, std::string>>;

  static IniDocument parse_file(const std::string& path);
  static IniDocument parse_string(const std::string& text);

  bool has_section(const std::string& s) const;
  bool has(const std::string& section, const std::string& key) const;
  const Section& section(const std::string& s) const;
  std::vector<std::string> section_names() const;
  /// Appends a key, creating the section on first use.
  void set(const std::string& section, const std::string& key, const std::string& value);

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
  /// Whitespace- or comma-separated numbers.
  std::vector<double> get_list(const std::string& section, const std::string& key) const;
  std::vector<double> get_list(const std::string& section, const std::string& key,
                               const std::vector<double>& fallback) const;

  /// Every key except those listed, parsed as numeric lists.
  ParamRecord numeric_params(const std::string& section, const std::vector<std::string>& skip) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, Section> sections_;
};

/// Parses a number; "inf" and "-inf" are accepted.
double parse_number(const std::string& s);
std::vector<double> parse_number_list(const std::string& s);

struct FunctionSpec {
  std::string id;
  ParamRecord params;
  AnalyticField build() const;
};

struct Scenario {
  std::string name;
  std::string suite;
  std::vector<FunctionSpec> functions;  // [function], then [function_2], [function_3], ...
  bool has_space = false;
  SpaceSpec space = Lebesgue{2.0};
  FunctionalConfig functional;
  IniDocument doc;  // full document; suites read their own keys from [suite]
};

inline const std::vector<std::string> kSuites{"limit", "equivalence", "gn", "sharpness", "defect",
                                              "sparse", "weights", "spaces", "calculus-oracles"};

/// Throws InvalidParameter on unknown suites, catalog ids, space tags or
/// malformed values.
Scenario load_scenario(const IniDocument& doc, const std::string& fallback_name = "scenario");
Scenario load_scenario_file(const std::string& path);

}  // namespace bsvy
