#include "bsvy/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "bsvy/error.hpp"

namespace bsvy {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

IniDocument from_tree(const pt::ptree& tree) {
  IniDocument doc;
  for (const auto& [name, sec] : tree) {
    if (sec.empty() && !sec.data().empty()) throw InvalidParameter("key outside a section: " + name);
    for (const auto& [key, val] : sec) doc.set(name, key, trim(val.data()));
  }
  return doc;
}

}  // namespace

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidParameter("not a number: '" + s + "'");
  }
  if (used != s.size()) throw InvalidParameter("not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_number_list(const std::string& raw) {
  std::string s = raw;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_number(tok));
  return out;
}

IniDocument IniDocument::parse_file(const std::string& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw InvalidParameter(std::string("cannot parse config: ") + e.what());
  }
  return from_tree(tree);
}

IniDocument IniDocument::parse_string(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw InvalidParameter(std::string("cannot parse config: ") + e.what());
  }
  return from_tree(tree);
}

bool IniDocument::has_section(const std::string& s) const { return sections_.count(s) != 0; }

bool IniDocument::has(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  if (it == sections_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](const auto& kv) { return kv.first == key; });
}

const IniDocument::Section& IniDocument::section(const std::string& s) const {
  const auto it = sections_.find(s);
  if (it == sections_.end()) throw InvalidParameter("missing section [" + s + "]");
  return it->second;
}

std::vector<std::string> IniDocument::section_names() const { return order_; }

void IniDocument::set(const std::string& section, const std::string& key, const std::string& value) {
  if (!has_section(section)) order_.push_back(section);
  sections_[section].emplace_back(key, value);
}

std::string IniDocument::get_string(const std::string& section, const std::string& key) const {
  for (const auto& [k, v] : this->section(section))
    if (k == key) return v;
  throw InvalidParameter("missing key '" + key + "' in [" + section + "]");
}

std::string IniDocument::get_string(const std::string& section, const std::string& key,
                                    const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

double IniDocument::get_double(const std::string& section, const std::string& key) const {
  try {
    return parse_number(get_string(section, key));
  } catch (const InvalidParameter& e) {
    throw InvalidParameter("[" + section + "] " + key + ": " + e.what());
  }
}

double IniDocument::get_double(const std::string& section, const std::string& key, double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

int IniDocument::get_int(const std::string& section, const std::string& key, int fallback) const {
  if (!has(section, key)) return fallback;
  const double v = get_double(section, key);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw InvalidParameter("[" + section + "] " + key + " must be an integer");
  return static_cast<int>(v);
}

bool IniDocument::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  if (!has(section, key)) return fallback;
  const std::string v = get_string(section, key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw InvalidParameter("[" + section + "] " + key + " must be a boolean");
}

std::vector<double> IniDocument::get_list(const std::string& section, const std::string& key) const {
  try {
    return parse_number_list(get_string(section, key));
  } catch (const InvalidParameter& e) {
    throw InvalidParameter("[" + section + "] " + key + ": " + e.what());
  }
}

std::vector<double> IniDocument::get_list(const std::string& section, const std::string& key,
                                          const std::vector<double>& fallback) const {
  return has(section, key) ? get_list(section, key) : fallback;
}

ParamRecord IniDocument::numeric_params(const std::string& s, const std::vector<std::string>& skip) const {
  ParamRecord rec;
  for (const auto& [k, v] : section(s)) {
    if (std::find(skip.begin(), skip.end(), k) != skip.end()) continue;
    rec.set(k, get_list(s, k));
  }
  return rec;
}

AnalyticField FunctionSpec::build() const { return make_catalog_function(id, params); }

namespace {

FunctionalConfig read_functional(const IniDocument& doc) {
  FunctionalConfig c;
  const std::string s = "functional";
  if (!doc.has_section(s)) return c;
  static const std::vector<std::string> known{
      "k", "ell", "q", "gamma", "b_offset", "convexified", "lambda_min", "lambda_max", "lambda_per_decade",
      "directions", "radial_per_decade", "window_nodes", "r_min_factor", "r_max", "box_factor",
      "points_per_axis", "threads", "strict"};
  for (const auto& [k, v] : doc.section(s))
    if (std::find(known.begin(), known.end(), k) == known.end()) throw InvalidParameter("unknown key '" + k + "' in [functional]");
  c.k = doc.get_int(s, "k", c.k);
  c.ell = doc.get_int(s, "ell", c.ell);
  c.q = doc.get_double(s, "q", c.q);
  c.gamma = doc.get_double(s, "gamma", c.gamma);
  c.b_offset = doc.get_double(s, "b_offset", c.b_offset);
  c.convexified = doc.get_bool(s, "convexified", c.convexified);
  c.lambdas.min = doc.get_double(s, "lambda_min", c.lambdas.min);
  c.lambdas.max = doc.get_double(s, "lambda_max", c.lambdas.max);
  c.lambdas.per_decade = doc.get_int(s, "lambda_per_decade", c.lambdas.per_decade);
  c.hquad.directions = doc.get_int(s, "directions", c.hquad.directions);
  c.hquad.radial_per_decade = doc.get_int(s, "radial_per_decade", c.hquad.radial_per_decade);
  c.hquad.window_nodes = doc.get_int(s, "window_nodes", c.hquad.window_nodes);
  c.hquad.r_min_factor = doc.get_double(s, "r_min_factor", c.hquad.r_min_factor);
  c.hquad.r_max = doc.get_double(s, "r_max", c.hquad.r_max);
  c.box_factor = doc.get_double(s, "box_factor", c.box_factor);
  c.points_per_axis = doc.get_int(s, "points_per_axis", c.points_per_axis);
  c.threads = doc.get_int(s, "threads", c.threads);
  c.strict = doc.get_bool(s, "strict", c.strict);
  return c;
}

const std::map<std::string, std::vector<std::string>>& suite_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"limit", {"tolerance", "weighting", "check_sup"}},
      {"equivalence", {"dilations", "window"}},
      {"gn", {"mode", "s", "q0", "q", "eta", "s0", "dilations", "stability", "endpoint_check"}},
      {"sharpness", {"dim", "p", "q", "k", "ell", "gamma", "lambda", "radii", "directions", "expect", "threshold"}},
      {"defect", {"k", "q", "eps", "directions", "radial_per_decade", "points_per_axis"}},
      {"sparse", {"p", "beta", "k", "ell", "jmin", "jmax", "resolution", "dilations", "factor", "lambda_count",
                  "qx_trials", "seed", "weight", "weight_a", "weight_c", "weight_x0"}},
      {"weights", {"dim", "p_list", "critical_index", "weight", "weight_a", "weight_c", "weight_x0"}},
      {"spaces", {"dim", "p", "trials", "points_per_axis", "tolerance", "seed"}},
      {"calculus-oracles", {"seed"}}};
  return keys;
}

void check_suite_keys(const IniDocument& doc, const std::string& suite) {
  const auto& allowed = suite_keys().at(suite);
  for (const auto& [k, v] : doc.section("suite")) {
    if (k == "name" || k == "scenario" || k == "sweep_values") continue;
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw InvalidParameter("unknown key '" + k + "' in [suite] for suite '" + suite + "'");
  }
}

}  // namespace

Scenario load_scenario(const IniDocument& doc, const std::string& fallback_name) {
  Scenario sc;
  sc.doc = doc;
  sc.suite = doc.get_string("suite", "name");
  if (std::find(kSuites.begin(), kSuites.end(), sc.suite) == kSuites.end())
    throw InvalidParameter("unknown suite '" + sc.suite + "'");
  check_suite_keys(doc, sc.suite);
  sc.name = doc.get_string("suite", "scenario", fallback_name);
  for (const std::string& sec : doc.section_names()) {
    if (sec != "function" && sec.rfind("function_", 0) != 0) continue;
    FunctionSpec fs;
    fs.id = doc.get_string(sec, "id");
    fs.params = doc.numeric_params(sec, {"id"});
    fs.build();  // validates the id and parameters now rather than mid-run
    sc.functions.push_back(fs);
  }
  if (doc.has_section("space")) {
    sc.has_space = true;
    sc.space = make_space(doc.get_string("space", "tag"), doc.numeric_params("space", {"tag"}));
  }
  sc.functional = read_functional(doc);
  sc.functional.space = sc.space;
  for (const auto& name : doc.section_names()) {
    if (name == "suite" || name == "space" || name == "functional" || name == "function" ||
        name.rfind("function_", 0) == 0)
      continue;
    throw InvalidParameter("unknown section [" + name + "]");
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::string stem = path;
  const auto slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  const auto dot = stem.find_last_of('.');
  if (dot != std::string::npos) stem = stem.substr(0, dot);
  return load_scenario(IniDocument::parse_file(path), stem);
}

}  // namespace bsvy
