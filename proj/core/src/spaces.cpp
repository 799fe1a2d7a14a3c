#include "bsvy/spaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bsvy/error.hpp"
#include "bsvy/quadrature.hpp"

namespace bsvy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double max_abs(const SampledField& g) {
  double m = 0.0;
  for (double v : g.values()) m = std::max(m, std::abs(v));
  return m;
}

// Smallest lambda with modular(lambda) <= 1; modular is non-increasing.
double modular_norm(const std::function<double(double)>& modular, double start) {
  double lo = start, hi = start;
  int guard = 0;
  while (modular(lo) <= 1.0) {
    lo *= 0.5;
    if (++guard > 2000 || lo == 0.0) throw NumericalFailure("modular never exceeds 1; degenerate Phi");
  }
  guard = 0;
  while (modular(hi) > 1.0) {
    hi *= 2.0;
    if (++guard > 2000 || !std::isfinite(hi)) throw NumericalFailure("modular never drops to 1; degenerate Phi");
  }
  for (int it = 0; it < 200; ++it) {
    if (hi / lo - 1.0 < 1e-12) return 0.5 * (lo + hi);
    const double mid = std::sqrt(lo * hi);
    if (modular(mid) > 1.0) lo = mid;
    else hi = mid;
  }
  throw NumericalFailure("norm bisection did not converge in 200 iterations");
}

double lebesgue(double p, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : g.values()) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s * g.grid().cell_volume(), 1.0 / p);
}

Cube cell_cube(const GridSpec& grid, std::size_t i) {
  const auto idx = grid.unflatten(i);
  Cube c;
  c.dim = grid.dim;
  c.edge = grid.cell_width();
  for (int a = 0; a < grid.dim; ++a) c.corner[a] = -grid.half_width + idx[a] * c.edge;
  return c;
}

double weighted(const WeightedLebesgue& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  const GridSpec& grid = g.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0.0) continue;
    double mass;
    if (s.weight.is_constant()) mass = (s.weight.kind == WeightSpec::Kind::constant ? s.weight.c : 1.0) * grid.cell_volume();
    else if (grid.dim == 1) mass = cube_mass(s.weight, cell_cube(grid, i));
    else mass = s.weight(grid.center(i)) * grid.cell_volume();
    sum += std::pow(std::abs(g[i]) / m, s.p) * mass;
  }
  return m * std::pow(sum, 1.0 / s.p);
}

double lorentz(const Lorentz& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(g[a]) > std::abs(g[b]); });
  const double vol = g.grid().cell_volume();
  const double e = s.tau / s.r;
  double sum = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double v = std::abs(g[order[i]]) / m;
    if (v == 0.0) break;
    const double t = std::pow((i + 1) * vol, e);
    sum += std::pow(v, s.tau) * (t - prev);
    prev = t;
  }
  return m * std::pow(sum / e, 1.0 / s.tau);
}

double variable(const VariableLebesgue& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  const GridSpec& grid = g.grid();
  std::vector<double> expo(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) expo[i] = s.exponent(grid.center(i));
  const double vol = grid.cell_volume();
  auto modular = [&](double lam) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0.0) sum += std::pow(std::abs(g[i]) / lam, expo[i]);
    return sum * vol;
  };
  return modular_norm(modular, m);
}

double orlicz_of(const OrliczFunction& phi, const std::vector<double>& vals, double vol, double start) {
  auto modular = [&](double lam) {
    double sum = 0.0;
    for (double v : vals)
      if (v != 0.0) sum += phi(std::abs(v) / lam);
    return sum * vol;
  };
  return modular_norm(modular, start);
}

double mixed(const MixedNorm& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  const GridSpec& grid = g.grid();
  const int n = grid.dim;
  const int N = grid.points_per_axis;
  const double h = grid.cell_width();
  // axis 0 (x_1) is integrated first; it is the slowest index in the layout
  std::vector<double> cur(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) cur[i] = std::abs(g[i]) / m;
  std::size_t outer = cur.size() / N;
  for (int a = 0; a < n; ++a) {
    // cur holds a tensor of remaining axes a..n-1 with axis a slowest
    const double r = s.r[a];
    std::vector<double> next(outer, 0.0);
    for (int i = 0; i < N; ++i)
      for (std::size_t o = 0; o < outer; ++o) next[o] += std::pow(cur[i * outer + o], r);
    for (double& v : next) v = std::pow(v * h, 1.0 / r);
    // the following axis becomes the slowest
    cur = std::move(next);
    outer = std::max<std::size_t>(1, outer / N);
  }
  return m * cur[0];
}

// ---- Morrey family -------------------------------------------------------

struct Overlap {
  long long m;
  std::vector<std::pair<int, double>> cells;
};

// Cubes 2^j(m + [0,1) + off) meeting [-L, L], each with its cell overlaps.
std::vector<Overlap> axis_overlaps(const GridSpec& grid, int j, double off) {
  const double e = std::ldexp(1.0, j);
  const double L = grid.half_width;
  const double h = grid.cell_width();
  const int N = grid.points_per_axis;
  std::vector<Overlap> out;
  const long long m0 = static_cast<long long>(std::floor(-L / e - off)) - 1;
  const long long m1 = static_cast<long long>(std::ceil(L / e - off)) + 1;
  for (long long m = m0; m <= m1; ++m) {
    const double a = e * (m + off);
    const double b = a + e;
    if (b <= -L || a >= L) continue;
    Overlap o{m, {}};
    const int k0 = std::max(0, static_cast<int>(std::floor((a + L) / h)));
    const int k1 = std::min(N - 1, static_cast<int>(std::floor((b + L) / h)));
    for (int k = k0; k <= k1; ++k) {
      const double lo = -L + k * h;
      const double len = std::min(b, lo + h) - std::max(a, lo);
      if (len > 0.0) o.cells.emplace_back(k, len);
    }
    if (!o.cells.empty()) out.push_back(std::move(o));
  }
  return out;
}

// For every cube of level j and shift (thirds) compute int_Q |g/m|^p.
std::vector<double> cube_sums(const GridSpec& grid, const std::vector<double>& G, int j,
                              const std::array<int, kMaxDim>& thirds) {
  const int n = grid.dim;
  const int N = grid.points_per_axis;
  std::vector<std::vector<Overlap>> ov(n);
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  for (int a = 0; a < n; ++a) ov[a] = axis_overlaps(grid, j, sign * thirds[a] / 3.0);
  // contract axis by axis; layout: current axis slowest, remaining axes follow
  std::vector<double> cur = G;
  std::size_t inner = cur.size() / N;  // product of sizes of the axes after the current one
  std::vector<std::size_t> done_sizes;
  std::size_t done = 1;  // product of contracted (cube) sizes so far, kept as fastest block
  // Represent cur as [axis a][remaining axes][done cubes]
  for (int a = 0; a < n; ++a) {
    const auto& list = ov[a];
    std::vector<double> next(list.size() * inner * done, 0.0);
    for (std::size_t c = 0; c < list.size(); ++c)
      for (const auto& [k, len] : list[c].cells) {
        const double* src = &cur[static_cast<std::size_t>(k) * inner * done];
        double* dst = &next[c * inner * done];
        for (std::size_t t = 0; t < inner * done; ++t) dst[t] += len * src[t];
      }
    // move the new cube axis to the fastest position: [remaining][done][cubes_a]
    const std::size_t nc = list.size();
    std::vector<double> moved(next.size());
    for (std::size_t c = 0; c < nc; ++c)
      for (std::size_t t = 0; t < inner * done; ++t) moved[t * nc + c] = next[c * inner * done + t];
    cur = std::move(moved);
    done *= nc;
    inner = a + 1 < n ? inner / N : 1;
  }
  return cur;
}

struct MorreyLevels {
  // per level: values V_Q = |Q|^{1/u - 1/p} ||g 1_Q||_p (scaled by 1/max)
  std::vector<std::vector<double>> per_level;
  std::vector<int> levels;
  // for levels finer than the grid: per-cell closed form multiplicity
  std::vector<double> fine_multiplicity;
};

struct MorreyParams {
  double u, p;
  int jmin, jmax;
};

MorreyLevels morrey_levels(const MorreyParams& mp, const SampledField& g, double scale,
                           const std::array<int, kMaxDim>& thirds) {
  const GridSpec& grid = g.grid();
  const int n = grid.dim;
  const double h = grid.cell_width();
  std::vector<double> G(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) G[i] = std::pow(std::abs(g[i]) / scale, mp.p);
  MorreyLevels out;
  for (int j = mp.jmin; j <= mp.jmax; ++j) {
    const double e = std::ldexp(1.0, j);
    const double factor = std::pow(e, n * (1.0 / mp.u - 1.0 / mp.p));
    std::vector<double> vals;
    if (e < h) {
      // cubes inside a single cell: V = |g_c| e^{n/u}; (h/e)^n of them per cell
      vals.reserve(g.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        if (G[i] != 0.0) vals.push_back(std::pow(G[i], 1.0 / mp.p) * std::pow(e, n / mp.u));
      out.fine_multiplicity.push_back(std::pow(h / e, n));
    } else {
      const auto sums = cube_sums(grid, G, j, thirds);
      vals.reserve(sums.size());
      for (double s : sums)
        if (s > 0.0) vals.push_back(factor * std::pow(s, 1.0 / mp.p));
      out.fine_multiplicity.push_back(1.0);
    }
    out.per_level.push_back(std::move(vals));
    out.levels.push_back(j);
  }
  return out;
}

std::vector<std::array<int, kMaxDim>> all_shifts(int n) {
  std::vector<std::array<int, kMaxDim>> out;
  const int count = n == 1 ? 3 : (n == 2 ? 9 : 27);
  for (int t = 0; t < count; ++t) {
    std::array<int, kMaxDim> s{};
    int rem = t;
    for (int a = 0; a < n; ++a) {
      s[a] = rem % 3;
      rem /= 3;
    }
    out.push_back(s);
  }
  return out;
}

double morrey(const Morrey& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  double best = 0.0;
  for (const auto& shift : all_shifts(g.grid().dim)) {
    const auto lv = morrey_levels({s.u, s.p, s.jmin, s.jmax}, g, m, shift);
    for (const auto& vals : lv.per_level)
      for (double v : vals) best = std::max(best, v);
  }
  return m * best;
}

// sum over cubes of V^r, per level, standard grid
std::vector<double> bourgain_level_sums(double u, double p, double r, int jmin, int jmax,
                                        const SampledField& g, double m) {
  const auto lv = morrey_levels({u, p, jmin, jmax}, g, m, {0, 0, 0});
  std::vector<double> sums;
  for (std::size_t l = 0; l < lv.per_level.size(); ++l) {
    double s = 0.0;
    for (double v : lv.per_level[l]) s += std::pow(v, r);
    sums.push_back(s * lv.fine_multiplicity[l]);
  }
  return sums;
}

double bourgain_morrey(const BourgainMorrey& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  if (std::isinf(s.r)) return morrey({s.u, s.p, s.jmin, s.jmax}, g);
  double total = 0.0;
  for (double v : bourgain_level_sums(s.u, s.p, s.r, s.jmin, s.jmax, g, m)) total += v;
  return m * std::pow(total, 1.0 / s.r);
}

double besov_bourgain_morrey(const BesovBourgainMorrey& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  double total = 0.0;
  for (double v : bourgain_level_sums(s.u, s.p, s.r, s.jmin, s.jmax, g, m))
    total += std::pow(v, s.tau / s.r);
  return m * std::pow(total, 1.0 / s.tau);
}

double herz(const HerzLocal& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  const GridSpec& grid = g.grid();
  std::map<int, double> shells;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0.0) continue;
    const double d = norm(axpy(-1.0, s.center, grid.center(i)));
    if (d == 0.0) continue;
    const int k = static_cast<int>(std::floor(std::log2(d))) + 1;
    shells[k] += std::pow(std::abs(g[i]) / m, s.p);
  }
  double total = 0.0;
  for (const auto& [k, mass] : shells)
    total += std::pow(2.0, k * s.a * s.r) * std::pow(mass * grid.cell_volume(), s.r / s.p);
  return m * std::pow(total, 1.0 / s.r);
}

double orlicz_slice(const OrliczSlice& s, const SampledField& g) {
  const double m = max_abs(g);
  if (m == 0.0) return 0.0;
  const GridSpec& grid = g.grid();
  const int n = grid.dim;
  const int N = grid.points_per_axis;
  const double h = grid.cell_width();
  const double vol = grid.cell_volume();
  const int pad = static_cast<int>(std::ceil(s.t / h));
  const int M = N + 2 * pad;
  // cell offsets inside the ball of radius t
  std::vector<std::array<int, kMaxDim>> offsets;
  const int lim_y = n > 1 ? pad : 0;
  const int lim_z = n > 2 ? pad : 0;
  for (int a = -pad; a <= pad; ++a)
    for (int b = -lim_y; b <= lim_y; ++b)
      for (int c = -lim_z; c <= lim_z; ++c)
        if (std::sqrt(double(a * a + b * b + c * c)) * h < s.t) offsets.push_back({a, b, c});
  const double ball = offsets.size() * vol;
  const double ind = 1.0 / s.phi.inverse(1.0 / ball);
  std::size_t total_outer = 1;
  for (int a = 0; a < n; ++a) total_outer *= M;
  double sum = 0.0;
  std::vector<double> local;
  for (std::size_t o = 0; o < total_outer; ++o) {
    std::array<int, kMaxDim> idx{};
    std::size_t rem = o;
    for (int a = n - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(rem % M) - pad;
      rem /= M;
    }
    local.clear();
    for (const auto& off : offsets) {
      std::size_t flat = 0;
      bool inside = true;
      for (int a = 0; a < n; ++a) {
        const int k = idx[a] + off[a];
        if (k < 0 || k >= N) {
          inside = false;
          break;
        }
        flat = flat * N + k;
      }
      if (inside && g[flat] != 0.0) local.push_back(g[flat] / m);
    }
    if (local.empty()) continue;
    double lm = 0.0;
    for (double v : local) lm = std::max(lm, std::abs(v));
    const double nrm = orlicz_of(s.phi, local, vol, lm);
    sum += std::pow(nrm / ind, s.r) * vol;
  }
  return m * std::pow(sum, 1.0 / s.r);
}

void check_phi(const OrliczFunction& phi) {
  require(phi.p1 >= 1.0 && phi.p2 >= 1.0, "Orlicz exponents must be >= 1");
}

}  // namespace

// ---------------------------------------------------------------- Phi, r(x)

double OrliczFunction::operator()(double t) const {
  switch (kind) {
    case Kind::power: return std::pow(t, p1);
    case Kind::power_sum: return std::pow(t, p1) + std::pow(t, p2);
    case Kind::power_log: return std::pow(t, p1) * std::log(std::exp(1.0) + t);
  }
  return 0.0;
}

double OrliczFunction::lower_type() const {
  return kind == Kind::power_sum ? std::min(p1, p2) : p1;
}

double OrliczFunction::upper_type() const {
  switch (kind) {
    case Kind::power: return p1;
    case Kind::power_sum: return std::max(p1, p2);
    case Kind::power_log: return p1 + 1.0;
  }
  return p1;
}

double OrliczFunction::inverse(double y) const {
  if (y <= 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while ((*this)(hi) < y) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < y) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double ExponentFunction::operator()(const Point& x) const {
  if (amplitude == 0.0) return base;
  return base + amplitude * std::exp(-dot(x, x) / (width * width));
}

// ------------------------------------------------------------------ public

void validate_space(const SpaceSpec& spec, int dim) {
  std::visit(
      overloaded{
          [](const Lebesgue& s) { require(s.p >= 1.0 && std::isfinite(s.p), "Lebesgue needs p in [1, inf)"); },
          [dim](const WeightedLebesgue& s) {
            require(s.p >= 1.0 && std::isfinite(s.p), "weighted Lebesgue needs p in [1, inf)");
            require(s.weight.dim == dim, "weight dimension differs from the field");
            s.weight.validate();
          },
          [](const Lorentz& s) {
            require(s.r > 1.0 && s.tau > 1.0 && std::isfinite(s.r) && std::isfinite(s.tau),
                    "Lorentz needs r, tau in (1, inf)");
          },
          [](const VariableLebesgue& s) {
            require(s.exponent.lower() >= 1.0 && std::isfinite(s.exponent.upper()),
                    "variable exponent must satisfy 1 <= r(x) < inf");
            require(s.exponent.width > 0.0, "variable exponent width must be positive");
          },
          [dim](const MixedNorm& s) {
            for (int a = 0; a < dim; ++a)
              require(s.r[a] >= 1.0 && std::isfinite(s.r[a]), "mixed norm exponents must be in [1, inf)");
          },
          [](const Orlicz& s) { check_phi(s.phi); },
          [](const Morrey& s) {
            require(1.0 <= s.p && s.p <= s.u && std::isfinite(s.u), "Morrey needs 1 <= p <= u < inf");
            require(s.jmin <= s.jmax, "Morrey level window is empty");
          },
          [](const BourgainMorrey& s) {
            require(1.0 <= s.p && s.p <= s.u && s.u <= s.r, "Bourgain-Morrey needs 1 <= p <= u <= r");
            require(s.jmin <= s.jmax, "Bourgain-Morrey level window is empty");
          },
          [](const BesovBourgainMorrey& s) {
            require(1.0 <= s.p && s.p <= s.u && s.u <= s.r && std::isfinite(s.r),
                    "Besov-Bourgain-Morrey needs 1 <= p <= u <= r < inf");
            require(s.tau >= 1.0 && std::isfinite(s.tau), "Besov-Bourgain-Morrey needs tau in [1, inf)");
            require(s.jmin <= s.jmax, "Besov-Bourgain-Morrey level window is empty");
          },
          [dim](const HerzLocal& s) {
            require(s.p >= 1.0 && s.r >= 1.0 && std::isfinite(s.p) && std::isfinite(s.r),
                    "Herz needs p, r in [1, inf)");
            const double upper = s.p == 1.0 ? 0.0 : dim * (1.0 - 1.0 / s.p);
            require(-dim / s.p < s.a && s.a < upper, "Herz exponent a must satisfy -n/p < a < n/p'");
          },
          [](const OrliczSlice& s) {
            require(s.r >= 1.0 && std::isfinite(s.r), "Orlicz-slice needs r in [1, inf)");
            require(s.t > 0.0, "Orlicz-slice radius must be positive");
            check_phi(s.phi);
          },
      },
      spec);
}

double space_norm(const SpaceSpec& spec, const SampledField& g) {
  require(g.size() > 0, "empty field");
  validate_space(spec, g.grid().dim);
  return std::visit(
      overloaded{
          [&](const Lebesgue& s) { return lebesgue(s.p, g); },
          [&](const WeightedLebesgue& s) { return weighted(s, g); },
          [&](const Lorentz& s) { return lorentz(s, g); },
          [&](const VariableLebesgue& s) { return variable(s, g); },
          [&](const MixedNorm& s) { return mixed(s, g); },
          [&](const Orlicz& s) {
            const double m = max_abs(g);
            if (m == 0.0) return 0.0;
            std::vector<double> v(g.values());
            for (double& x : v) x /= m;
            return m * orlicz_of(s.phi, v, g.grid().cell_volume(), 1.0);
          },
          [&](const Morrey& s) { return morrey(s, g); },
          [&](const BourgainMorrey& s) { return bourgain_morrey(s, g); },
          [&](const BesovBourgainMorrey& s) { return besov_bourgain_morrey(s, g); },
          [&](const HerzLocal& s) { return herz(s, g); },
          [&](const OrliczSlice& s) { return orlicz_slice(s, g); },
      },
      spec);
}

double convexified_norm(const SpaceSpec& spec, double q, const SampledField& g) {
  require(q > 0.0, "convexification exponent must be positive");
  if (q == 1.0) return space_norm(spec, g);
  const SampledField gq = g.map([q](double v) { return std::pow(std::abs(v), q); });
  return std::pow(space_norm(spec, gq), 1.0 / q);
}

bool lattice_check(const SpaceSpec& spec, const SampledField& g1, const SampledField& g2) {
  require(g1.size() == g2.size(), "lattice check needs fields on the same grid");
  for (std::size_t i = 0; i < g1.size(); ++i)
    require(std::abs(g1[i]) <= std::abs(g2[i]), "lattice check needs |g1| <= |g2| pointwise");
  return space_norm(spec, g1) <= space_norm(spec, g2) * (1.0 + 1e-9);
}

double space_exponent(const SpaceSpec& spec) {
  return std::visit(overloaded{
                        [](const Lebesgue& s) { return s.p; },
                        [](const WeightedLebesgue& s) { return s.p; },
                        [](const Lorentz& s) { return s.r; },
                        [](const VariableLebesgue& s) { return s.exponent.lower(); },
                        [](const MixedNorm& s) { return *std::min_element(s.r.begin(), s.r.end()); },
                        [](const Orlicz& s) { return s.phi.lower_type(); },
                        [](const Morrey& s) { return s.p; },
                        [](const BourgainMorrey& s) { return s.p; },
                        [](const BesovBourgainMorrey& s) { return s.p; },
                        [](const HerzLocal& s) { return s.p; },
                        [](const OrliczSlice& s) { return std::min(s.r, s.phi.lower_type()); },
                    },
                    spec);
}

// ------------------------------------------------------------ serialization

namespace {

OrliczFunction read_phi(const ParamRecord& p) {
  OrliczFunction phi;
  const double kind = p.get("phi_kind", 0.0);
  require(kind == 0.0 || kind == 1.0 || kind == 2.0, "phi_kind must be 0 (power), 1 (power_sum) or 2 (power_log)");
  phi.kind = static_cast<OrliczFunction::Kind>(static_cast<int>(kind));
  phi.p1 = p.get("p1", 2.0);
  phi.p2 = p.get("p2", phi.p1);
  return phi;
}

void write_phi(ParamRecord& p, const OrliczFunction& phi) {
  p.set("phi_kind", static_cast<double>(static_cast<int>(phi.kind)));
  p.set("p1", phi.p1);
  p.set("p2", phi.p2);
}

}  // namespace

std::string space_tag(const SpaceSpec& spec) {
  static const char* names[] = {"lebesgue", "weighted_lebesgue",   "lorentz",     "variable_lebesgue",
                                "mixed_norm", "orlicz",            "morrey",      "bourgain_morrey",
                                "besov_bourgain_morrey", "herz_local", "orlicz_slice"};
  return names[spec.index()];
}

SpaceSpec make_space(const std::string& tag, const ParamRecord& p) {
  const int jmin = static_cast<int>(p.get("jmin", -12.0));
  const int jmax = static_cast<int>(p.get("jmax", 6.0));
  if (tag == "lebesgue") return Lebesgue{p.get("p", 2.0)};
  if (tag == "weighted_lebesgue") {
    const double kind = p.get("weight_kind", 0.0);
    ParamRecord wp;
    wp.set("dim", p.get("dim", 1.0));
    wp.set("c", p.get("weight_c", 1.0));
    wp.set("a", p.get("weight_a", 0.0));
    wp.set("x0", p.list("weight_x0", {0.0, 0.0, 0.0}));
    static const char* kinds[] = {"constant", "power", "shifted_power"};
    require(kind == 0.0 || kind == 1.0 || kind == 2.0, "weight_kind must be 0, 1, or 2");
    return WeightedLebesgue{p.get("p", 2.0), make_weight(kinds[static_cast<int>(kind)], wp)};
  }
  if (tag == "lorentz") return Lorentz{p.get("r", 2.0), p.get("tau", 2.0)};
  if (tag == "variable_lebesgue")
    return VariableLebesgue{{p.get("base", 2.0), p.get("amplitude", 0.0), p.get("width", 1.0)}};
  if (tag == "mixed_norm") {
    MixedNorm s;
    const auto r = p.list("r", {2.0});
    for (int a = 0; a < kMaxDim; ++a) s.r[a] = r[std::min<std::size_t>(a, r.size() - 1)];
    return s;
  }
  if (tag == "orlicz") return Orlicz{read_phi(p)};
  if (tag == "morrey") return Morrey{p.get("u", 2.0), p.get("p", 2.0), jmin, jmax};
  if (tag == "bourgain_morrey")
    return BourgainMorrey{p.get("u", 2.0), p.get("p", 2.0), p.get("r", 4.0), jmin, jmax};
  if (tag == "besov_bourgain_morrey")
    return BesovBourgainMorrey{p.get("u", 2.0), p.get("p", 2.0), p.get("r", 4.0), p.get("tau", 4.0), jmin, jmax};
  if (tag == "herz_local") {
    HerzLocal s{p.get("p", 2.0), p.get("r", 2.0), p.get("a", 0.0), {}};
    const auto c = p.list("center", {0.0});
    for (std::size_t i = 0; i < c.size() && i < kMaxDim; ++i) s.center[i] = c[i];
    return s;
  }
  if (tag == "orlicz_slice") return OrliczSlice{p.get("r", 2.0), p.get("t", 0.5), read_phi(p)};
  throw InvalidParameter("unknown space '" + tag + "'");
}

ParamRecord space_params(const SpaceSpec& spec) {
  ParamRecord p;
  std::visit(overloaded{
                 [&](const Lebesgue& s) { p.set("p", s.p); },
                 [&](const WeightedLebesgue& s) {
                   p.set("p", s.p);
                   p.set("weight_kind", static_cast<double>(static_cast<int>(s.weight.kind)));
                   p.set("weight_c", s.weight.c);
                   p.set("weight_a", s.weight.a);
                   p.set("weight_x0", std::vector<double>(s.weight.x0.begin(), s.weight.x0.end()));
                 },
                 [&](const Lorentz& s) {
                   p.set("r", s.r);
                   p.set("tau", s.tau);
                 },
                 [&](const VariableLebesgue& s) {
                   p.set("base", s.exponent.base);
                   p.set("amplitude", s.exponent.amplitude);
                   p.set("width", s.exponent.width);
                 },
                 [&](const MixedNorm& s) { p.set("r", std::vector<double>(s.r.begin(), s.r.end())); },
                 [&](const Orlicz& s) { write_phi(p, s.phi); },
                 [&](const Morrey& s) {
                   p.set("u", s.u);
                   p.set("p", s.p);
                   p.set("jmin", s.jmin);
                   p.set("jmax", s.jmax);
                 },
                 [&](const BourgainMorrey& s) {
                   p.set("u", s.u);
                   p.set("p", s.p);
                   p.set("r", s.r);
                   p.set("jmin", s.jmin);
                   p.set("jmax", s.jmax);
                 },
                 [&](const BesovBourgainMorrey& s) {
                   p.set("u", s.u);
                   p.set("p", s.p);
                   p.set("r", s.r);
                   p.set("tau", s.tau);
                   p.set("jmin", s.jmin);
                   p.set("jmax", s.jmax);
                 },
                 [&](const HerzLocal& s) {
                   p.set("p", s.p);
                   p.set("r", s.r);
                   p.set("a", s.a);
                   p.set("center", std::vector<double>(s.center.begin(), s.center.end()));
                 },
                 [&](const OrliczSlice& s) {
                   p.set("r", s.r);
                   p.set("t", s.t);
                   write_phi(p, s.phi);
                 },
             },
             spec);
  return p;
}

}  // namespace bsvy
