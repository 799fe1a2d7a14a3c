#include "bsvy/weights.hpp"

#include <algorithm>
#include <limits>

#include "bsvy/error.hpp"

namespace bsvy {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

WeightSpec WeightSpec::constant(int dim, double c) {
  WeightSpec w;
  w.kind = Kind::constant;
  w.dim = dim;
  w.c = c;
  return w;
}

WeightSpec WeightSpec::power(int dim, double a) {
  WeightSpec w;
  w.kind = Kind::power;
  w.dim = dim;
  w.a = a;
  return w;
}

WeightSpec WeightSpec::shifted_power(int dim, double a, const Point& x0) {
  WeightSpec w = power(dim, a);
  w.kind = Kind::shifted_power;
  w.x0 = x0;
  return w;
}

void WeightSpec::validate() const {
  require(dim >= 1 && dim <= kMaxDim, "weight dim must be 1, 2, or 3");
  if (kind == Kind::constant) {
    require(c > 0.0 && std::isfinite(c), "constant weight must be positive");
  } else {
    require(a > -dim, "power weight exponent must exceed -dim for local integrability");
  }
}

double WeightSpec::operator()(const Point& x) const {
  if (kind == Kind::constant) return c;
  const double r = norm(axpy(-1.0, singular_point(), x));
  return std::pow(r, a);
}

Point WeightSpec::singular_point() const { return kind == Kind::shifted_power ? x0 : Point{}; }

std::string weight_tag(const WeightSpec& w) {
  switch (w.kind) {
    case WeightSpec::Kind::constant: return "constant";
    case WeightSpec::Kind::power: return "power";
    case WeightSpec::Kind::shifted_power: return "shifted_power";
  }
  return "constant";
}

WeightSpec make_weight(const std::string& tag, const ParamRecord& p) {
  const int dim = static_cast<int>(p.get("dim", 1.0));
  WeightSpec w;
  if (tag == "constant") {
    w = WeightSpec::constant(dim, p.get("c", 1.0));
  } else if (tag == "power") {
    w = WeightSpec::power(dim, p.get("a"));
  } else if (tag == "shifted_power") {
    Point x0{};
    const auto v = p.list("x0");
    for (std::size_t i = 0; i < v.size() && i < kMaxDim; ++i) x0[i] = v[i];
    w = WeightSpec::shifted_power(dim, p.get("a"), x0);
  } else {
    throw InvalidParameter("unknown weight '" + tag + "'");
  }
  w.validate();
  return w;
}

ParamRecord weight_params(const WeightSpec& w) {
  ParamRecord p;
  p.set("dim", w.dim);
  if (w.kind == WeightSpec::Kind::constant) p.set("c", w.c);
  else p.set("a", w.a);
  if (w.kind == WeightSpec::Kind::shifted_power)
    p.set("x0", std::vector<double>(w.x0.begin(), w.x0.begin() + w.dim));
  return p;
}

namespace {

// int_lo^hi |t|^e dt
double power_integral_1d(double lo, double hi, double e) {
  if (hi <= lo) return 0.0;
  if (e <= -1.0 && lo <= 0.0 && hi >= 0.0) return kInf;
  auto prim = [e](double t) {
    if (e == -1.0) return (t > 0 ? 1.0 : -1.0) * std::log(std::abs(t));
    const double v = std::pow(std::abs(t), e + 1.0) / (e + 1.0);
    return t >= 0 ? v : -v;
  };
  if (e == -1.0) {
    // both endpoints on the same side of 0
    return std::abs(std::log(std::abs(hi)) - std::log(std::abs(lo)));
  }
  return prim(hi) - prim(lo);
}

bool closure_contains(const Cube& q, const Point& x) {
  for (int i = 0; i < q.dim; ++i)
    if (x[i] < q.corner[i] || x[i] > q.corner[i] + q.edge) return false;
  return true;
}

}  // namespace

double cube_mass(const WeightSpec& w, const Cube& q, double s) {
  if (w.kind == WeightSpec::Kind::constant) return std::pow(w.c, s) * q.volume();
  const double e = w.a * s;
  if (e == 0.0) return q.volume();
  const Point x0 = w.singular_point();
  if (q.dim == 1) return power_integral_1d(q.corner[0] - x0[0], q.corner[0] + q.edge - x0[0], e);
  if (e <= -q.dim && closure_contains(q, x0)) return kInf;
  constexpr int m = 64;
  const double h = q.edge / m;
  double sum = 0.0;
  const int total = q.dim == 2 ? m * m : m * m * m;
  for (int t = 0; t < total; ++t) {
    int rem = t;
    Point x{};
    for (int a = q.dim - 1; a >= 0; --a) {
      x[a] = q.corner[a] + ((rem % m) + 0.5) * h - x0[a];
      rem /= m;
    }
    sum += std::pow(norm(x), e);
  }
  return sum * std::pow(h, q.dim);
}

double ess_inf(const WeightSpec& w, const Cube& q) {
  if (w.kind == WeightSpec::Kind::constant) return w.c;
  if (w.a == 0.0) return 1.0;
  const Point x0 = w.singular_point();
  double near2 = 0.0, far2 = 0.0;
  for (int i = 0; i < q.dim; ++i) {
    const double lo = q.corner[i] - x0[i];
    const double hi = lo + q.edge;
    const double dn = lo > 0 ? lo : (hi < 0 ? -hi : 0.0);
    const double df = std::max(std::abs(lo), std::abs(hi));
    near2 += dn * dn;
    far2 += df * df;
  }
  return w.a > 0 ? std::pow(std::sqrt(near2), w.a) : std::pow(std::sqrt(far2), w.a);
}

double ap_quotient(const WeightSpec& w, double p, const Cube& q) {
  require(p >= 1.0, "A_p needs p >= 1");
  const double vol = q.volume();
  const double mass = cube_mass(w, q, 1.0);
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw InvalidParameter("weight mass is zero or infinite on a family cube");
  if (w.is_constant()) return 1.0;  // c * (c^{-1/(p-1)})^{p-1} without rounding
  const double avg = mass / vol;
  if (p == 1.0) {
    const double inf = ess_inf(w, q);
    return inf > 0.0 ? avg / inf : kInf;
  }
  const double dual = cube_mass(w, q, -1.0 / (p - 1.0));
  if (!std::isfinite(dual)) return kInf;
  return avg * std::pow(dual / vol, p - 1.0);
}

double ap_constant(const WeightSpec& w, double p, const CubeFamily& family) {
  require(!family.cubes.empty(), "cube family is empty");
  double best = 0.0;
  for (const Cube& q : family.cubes) best = std::max(best, ap_quotient(w, p, q));
  return best;
}

CubeFamily default_family(const WeightSpec& w, int accumulating, int jmin, int jmax) {
  require(jmin <= jmax, "family level window is empty");
  CubeFamily f;
  const int n = w.dim;
  const Point s = w.singular_point();
  for (int j = jmin; j <= jmax; ++j) {
    const double e = std::ldexp(1.0, j);
    std::array<long long, kMaxDim> base{};
    for (int i = 0; i < n; ++i) base[i] = static_cast<long long>(std::floor(s[i] / e));
    const int count = n == 1 ? 3 : (n == 2 ? 9 : 27);
    for (int t = 0; t < count; ++t) {
      Cube q;
      q.dim = n;
      q.edge = e;
      int rem = t;
      for (int i = 0; i < n; ++i) {
        q.corner[i] = (base[i] + (rem % 3) - 1) * e;
        rem /= 3;
      }
      f.cubes.push_back(q);
    }
  }
  for (int i = 1; i <= accumulating; ++i) {
    const double eps = std::ldexp(1.0, -i);
    for (double side : {1.0, -1.0}) {
      Cube q;
      q.dim = n;
      q.edge = 1.0;
      for (int a = 0; a < n; ++a) q.corner[a] = side > 0 ? s[a] + eps : s[a] - eps - 1.0;
      f.cubes.push_back(q);
    }
  }
  return f;
}

bool doubling_check(const WeightSpec& w, double p, const Cube& q, const Cube& s, double ap_est) {
  require(s.contains(q), "doubling check needs Q inside S");
  const double ratio = s.volume() / q.volume();
  return cube_mass(w, s) <= ap_est * std::pow(ratio, p) * cube_mass(w, q) * (1.0 + 1e-9);
}

std::vector<double> default_r_grid() {
  std::vector<double> r;
  for (int i = 0; i <= 30; ++i) r.push_back(1.0 + 0.1 * i);
  return r;
}

CriticalIndexResult critical_index(const WeightSpec& w, const std::vector<double>& r_grid) {
  require(!r_grid.empty(), "r grid is empty");
  require(std::is_sorted(r_grid.begin(), r_grid.end()) && r_grid.front() >= 1.0,
          "r grid must be increasing in [1, inf)");
  CriticalIndexResult out{kInf, r_grid, {}};
  const CubeFamily f1 = default_family(w, 40);
  const CubeFamily f2 = default_family(w, 80);
  const CubeFamily f3 = default_family(w, 160);
  for (double r : r_grid) {
    const std::array<double, 3> est{ap_constant(w, r, f1), ap_constant(w, r, f2), ap_constant(w, r, f3)};
    out.estimates.push_back(est);
    const bool stable = std::isfinite(est[2]) && std::abs(est[1] / est[0] - 1.0) < 0.05 &&
                        std::abs(est[2] / est[1] - 1.0) < 0.05;
    if (stable && !std::isfinite(out.index)) out.index = r;
  }
  return out;
}

}  // namespace bsvy
