#pragma once

#include <string>
#include <variant>

#include "bsvy/field.hpp"
#include "bsvy/weights.hpp"

namespace bsvy {

/// Phi for Orlicz-type norms.
/// power: t^p1; power_sum: t^p1 + t^p2; power_log: t^p1 log(e + t).
struct OrliczFunction {
  enum class Kind { power, power_sum, power_log };
  Kind kind = Kind::power;
  double p1 = 2.0;
  double p2 = 2.0;

  double operator()(double t) const;
  double lower_type() const;
  double upper_type() const;
  /// Phi^{-1}(y) by bisection.
  double inverse(double y) const;
};

/// r(x) = base + amplitude * exp(-|x|^2 / width^2); constant when amplitude = 0.
struct ExponentFunction {
  double base = 2.0;
  double amplitude = 0.0;
  double width = 1.0;

  double operator()(const Point& x) const;
  double lower() const { return std::min(base, base + amplitude); }
  double upper() const { return std::max(base, base + amplitude); }
};

struct Lebesgue { double p = 2.0; };
struct WeightedLebesgue { double p = 2.0; WeightSpec weight; };
struct Lorentz { double r = 2.0; double tau = 2.0; };
struct VariableLebesgue { ExponentFunction exponent; };
struct MixedNorm { std::array<double, kMaxDim> r{2.0, 2.0, 2.0}; };
struct Orlicz { OrliczFunction phi; };
struct Morrey { double u = 2.0; double p = 2.0; int jmin = -12; int jmax = 6; };
struct BourgainMorrey { double u = 2.0; double p = 2.0; double r = 4.0; int jmin = -12; int jmax = 6; };
struct BesovBourgainMorrey {
  double u = 2.0; double p = 2.0; double r = 4.0; double tau = 4.0;
  int jmin = -12; int jmax = 6;
};
struct HerzLocal { double p = 2.0; double r = 2.0; double a = 0.0; Point center{}; };
struct OrliczSlice { double r = 2.0; double t = 0.5; OrliczFunction phi; };

using SpaceSpec = std::variant<Lebesgue, WeightedLebesgue, Lorentz, VariableLebesgue, MixedNorm, Orlicz,
                               Morrey, BourgainMorrey, BesovBourgainMorrey, HerzLocal, OrliczSlice>;

/// Throws InvalidParameter when the parameters leave the normed range.
void validate_space(const SpaceSpec& spec, int dim);

/// ||g||_X for a field sampled at cell centres and extended by zero.
double space_norm(const SpaceSpec& spec, const SampledField& g);
/// || |g|^q ||_X^{1/q}
double convexified_norm(const SpaceSpec& spec, double q, const SampledField& g);
/// Requires |g1| <= |g2| cellwise; true iff ||g1|| <= ||g2|| (1 + 1e-9).
bool lattice_check(const SpaceSpec& spec, const SampledField& g1, const SampledField& g2);

/// The Lebesgue-type exponent p that enters the admissible range of gamma
/// (p for Lebesgue, weighted, Morrey-type and Herz; r for Lorentz and slices;
/// the lower type or lower exponent bound otherwise).
double space_exponent(const SpaceSpec& spec);

std::string space_tag(const SpaceSpec& spec);
SpaceSpec make_space(const std::string& tag, const ParamRecord& params);
ParamRecord space_params(const SpaceSpec& spec);

}  // namespace bsvy
