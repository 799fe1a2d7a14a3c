#include "bsvy/dyadic.hpp"

#include <algorithm>
#include <limits>

#include "bsvy/calculus.hpp"
#include "bsvy/error.hpp"
#include "bsvy/quadrature.hpp"

namespace bsvy {

namespace {

double shift_offset(int level, int thirds) {
  const double a = thirds / 3.0;
  return (level % 2 == 0) ? a : -a;
}

void check_shift(int dim, const Shift& s) {
  for (int a = 0; a < dim; ++a) require(s[a] >= 0 && s[a] <= 2, "shift components must be 0, 1/3, or 2/3");
}

}  // namespace

Cube cube_geometry(int dim, const Shift& shift, int level, const std::array<long long, kMaxDim>& m) {
  check_shift(dim, shift);
  Cube c;
  c.dim = dim;
  c.edge = std::ldexp(1.0, level);
  for (int a = 0; a < dim; ++a) c.corner[a] = c.edge * (static_cast<double>(m[a]) + shift_offset(level, shift[a]));
  return c;
}

Cube DyadicCube::geometry() const { return cube_geometry(dim, shift, level, m); }

DyadicCube dyadic_cube_containing(int dim, const Shift& shift, int level, const Point& x) {
  check_shift(dim, shift);
  DyadicCube q;
  q.dim = dim;
  q.shift = shift;
  q.level = level;
  const double e = std::ldexp(1.0, level);
  for (int a = 0; a < dim; ++a) {
    long long m = static_cast<long long>(std::floor(x[a] / e - shift_offset(level, shift[a])));
    // guard against rounding at cube faces
    while (e * (m + shift_offset(level, shift[a])) > x[a]) --m;
    while (e * (m + 1 + shift_offset(level, shift[a])) <= x[a]) ++m;
    q.m[a] = m;
  }
  return q;
}

std::vector<Shift> all_shift_vectors(int dim) {
  std::vector<Shift> out;
  const int count = dim == 1 ? 3 : (dim == 2 ? 9 : 27);
  for (int t = 0; t < count; ++t) {
    Shift s{};
    int rem = t;
    for (int a = 0; a < dim; ++a) {
      s[a] = rem % 3;
      rem /= 3;
    }
    out.push_back(s);
  }
  return out;
}

ContainingCube containing_cube(const Ball& b, int jmin, int jmax) {
  require(b.radius > 0.0, "ball radius must be positive");
  const double diam = 2.0 * b.radius;
  const int start = std::max(jmin, static_cast<int>(std::floor(std::log2(diam))));
  for (int j = start; j <= jmax; ++j) {
    for (const Shift& s : all_shift_vectors(b.dim)) {
      const DyadicCube q = dyadic_cube_containing(b.dim, s, j, b.center);
      const Cube c = q.geometry();
      bool inside = true;
      for (int a = 0; a < b.dim && inside; ++a)
        inside = c.corner[a] <= b.center[a] - b.radius && b.center[a] + b.radius < c.corner[a] + c.edge;
      if (inside) return {q, c.edge / diam};
    }
  }
  throw InvalidParameter("no shifted dyadic cube contains the ball within the level window");
}

// ------------------------------------------------------------- level scans

namespace {

double support_of(const AnalyticField& f) {
  const double s = f.support_radius();
  if (std::isfinite(s)) return s;
  const double e = f.effective_radius();
  require(std::isfinite(e), "level families need a compactly supported or rapidly decaying field");
  return e;
}

double distance_to_cube(const Cube& c, const Point& x) {
  double d2 = 0.0;
  for (int a = 0; a < c.dim; ++a) {
    const double lo = c.corner[a], hi = c.corner[a] + c.edge;
    const double d = x[a] < lo ? lo - x[a] : (x[a] > hi ? x[a] - hi : 0.0);
    d2 += d * d;
  }
  return std::sqrt(d2);
}

}  // namespace

LevelScan::LevelScan(const AnalyticField& f, const LevelScanParams& params) : params_(params), dim_(f.dim()) {
  require(params.k >= 1 && params.ell >= 0 && params.ell <= params.k, "level family needs 0 <= ell <= k");
  require(params.jmin <= params.jmax, "level window is empty");
  check_shift(dim_, params.shift);
  if (f.is_polynomial_of_degree_at_most(params.k - 1)) return;
  const double R = support_of(f);
  // the window is measured in units of the support so dilations by 2^m shift it exactly
  const int offset = static_cast<int>(std::floor(std::log2(R)));
  const Point origin{};
  for (int j = params.jmin + offset; j <= params.jmax + offset; ++j) {
    const double e = std::ldexp(1.0, j);
    std::array<long long, kMaxDim> lo{}, hi{};
    for (int a = 0; a < dim_; ++a) {
      const double off = shift_offset(j, params.shift[a]);
      lo[a] = static_cast<long long>(std::floor(-R / e - off)) - 1;
      hi[a] = static_cast<long long>(std::ceil(R / e - off)) + 1;
    }
    std::array<long long, kMaxDim> m = lo;
    while (true) {
      DyadicCube q{dim_, params.shift, j, m};
      const Cube c = q.geometry();
      if (distance_to_cube(c, origin) < R) {
        CubeRecord rec{q, 0.0, 0.0, false};
        if (params.check_resolution) {
          const auto chk = local_approximation_checked(f, c, params.k, params.resolution);
          rec.e_k = chk.value;
          rec.flagged = chk.flagged;
        } else {
          rec.e_k = local_approximation(f, c, params.k, params.resolution);
        }
        rec.tau = rec.e_k / std::pow(c.volume(), params.beta + double(params.ell) / dim_);
        cubes_.push_back(rec);
      }
      int a = dim_ - 1;
      while (a >= 0 && ++m[a] > hi[a]) {
        m[a] = lo[a];
        --a;
      }
      if (a < 0) break;
    }
  }
}

std::vector<CubeRecord> LevelScan::members(double lambda) const {
  require(lambda > 0.0, "lambda must be positive");
  std::vector<CubeRecord> out;
  for (const auto& c : cubes_)
    if (c.tau > lambda) out.push_back(c);
  return out;
}

std::pair<double, double> LevelScan::tau_range() const {
  double hi = 0.0;
  for (const auto& c : cubes_) hi = std::max(hi, c.tau);
  double lo = hi;
  for (const auto& c : cubes_)
    if (c.tau > 1e-14 * hi) lo = std::min(lo, c.tau);
  return {lo, hi};
}

int LevelScan::flagged_count() const {
  return static_cast<int>(std::count_if(cubes_.begin(), cubes_.end(), [](const CubeRecord& c) { return c.flagged; }));
}

LevelFamily level_family(const LevelScan& scan, double lambda) {
  return LevelFamily{lambda, scan.params(), scan.dim(), scan.members(lambda)};
}

LevelFamily level_family(const AnalyticField& f, double lambda, const LevelScanParams& params) {
  return level_family(LevelScan(f, params), lambda);
}

double sparse_sum(const LevelFamily& family, double p, double beta, const WeightSpec& w) {
  double s = 0.0;
  for (const auto& rec : family.members) {
    const Cube c = rec.cube.geometry();
    s += std::pow(c.volume(), p * (beta - 1.0)) * cube_mass(w, c);
  }
  return s;
}

std::vector<double> sparse_lambda_grid(const LevelScan& scan, int count) {
  require(count >= 2, "lambda grid needs at least two points");
  const auto [lo, hi] = scan.tau_range();
  std::vector<double> out;
  if (hi <= 0.0) return out;
  const double a = std::log(lo * 0.5), b = std::log(hi * (1.0 - 1e-9));
  for (int i = 0; i < count; ++i) out.push_back(std::exp(a + (b - a) * i / (count - 1)));
  return out;
}

double weighted_gradient_integral(const AnalyticField& f, int ell, double p, const WeightSpec& w) {
  const double R = support_of(f);
  const int n = f.dim();
  auto integrand = [&](const Point& x) {
    const double g = gradient_magnitude(f, x, ell);
    return g == 0.0 ? 0.0 : std::pow(g, p) * w(x);
  };
  if (n == 1) {
    // x = x0 +- t^2 on either side of the singular point removes |x - x0|^a singularities
    const double x0 = w.singular_point()[0];
    double total = 0.0;
    for (double side : {-1.0, 1.0}) {
      const double end = side > 0 ? R : -R;
      const double len = side * (end - x0);
      if (len <= 0.0) continue;
      const Rule1D g = composite_gauss(64, 8, 0.0, std::sqrt(len));
      for (std::size_t i = 0; i < g.x.size(); ++i) {
        const double t = g.x[i];
        total += g.w[i] * 2.0 * t * integrand({x0 + side * t * t, 0.0, 0.0});
      }
    }
    // the part of [-R, R] on the far side of x0 when x0 lies outside
    return total;
  }
  const GridSpec grid{n, R, n == 2 ? 256 : 64};
  double s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) s += integrand(grid.center(i));
  return s * grid.cell_volume();
}

SparseSupResult sparse_sup(const AnalyticField& f, const LevelScan& scan, double p, const WeightSpec& w,
                           const std::vector<double>& lambdas) {
  SparseSupResult out;
  out.lambdas = lambdas;
  const double beta = scan.params().beta;
  for (double lam : lambdas) {
    const double v = std::pow(lam, p) * sparse_sum(level_family(scan, lam), p, beta, w);
    out.values.push_back(v);
    out.sup = std::max(out.sup, v);
  }
  out.rhs = weighted_gradient_integral(f, scan.params().ell, p, w);
  out.ratio = out.rhs > 0.0 ? out.sup / out.rhs : (out.sup > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  return out;
}

QxResult qx_check(const LevelFamily& family, double p, const Point& x) {
  const double beta = family.params.beta;
  require(beta != 1.0, "the sparse characterization needs beta != 1");
  std::vector<const CubeRecord*> hits;
  for (const auto& rec : family.members)
    if (rec.cube.geometry().contains(x)) hits.push_back(&rec);
  if (hits.empty()) throw InvalidParameter("x is not covered by the family");
  const CubeRecord* best = hits.front();
  for (const CubeRecord* h : hits)
    if ((beta < 1.0) ? h->cube.level < best->cube.level : h->cube.level > best->cube.level) best = h;
  const double e = p * (beta - 1.0);
  const double ref = std::pow(best->cube.volume(), e);
  double sum = 0.0;
  for (const CubeRecord* h : hits) sum += std::pow(h->cube.volume(), e);
  QxResult out;
  out.qx = best->cube;
  out.ratio = sum / ref;
  out.bound = 1.0 / (1.0 - std::pow(2.0, -family.dim * p * std::abs(beta - 1.0)));
  out.containing = static_cast<int>(hits.size());
  return out;
}

double averaged_modulus(const ScalarFn& f, int dim, const Cube& q, int resolution) {
  const NodeSet nodes = region_nodes(q, resolution);
  std::vector<double> v(nodes.x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(nodes.x[i]);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) row += nodes.w[j] * std::abs(v[i] - v[j]);
    s += nodes.w[i] * row;
  }
  return s * std::pow(q.volume(), -1.0 - 1.0 / dim);
}

double averaged_modulus(const AnalyticField& f, const Cube& q, int resolution) {
  return averaged_modulus([&f](const Point& x) { return f(x); }, f.dim(), q, resolution);
}

WhitneyResult whitney_ratio(const AnalyticField& f, const Cube& q, int k, int resolution) {
  require(k >= 1, "Whitney ratio needs k >= 1");
  WhitneyResult out;
  if (f.is_polynomial_of_degree_at_most(k - 1)) {
    out.exact_zero_pair = true;
    return out;
  }
  out.e_k = local_approximation(f, q, k, resolution);
  const int n = f.dim();
  const SphereRule sph = sphere_rule(n, 64);
  for (const Point& xi : sph.dirs)
    for (int i = 1; i <= 16; ++i) {
      const double r = q.edge / k * i / 16.0;
      const Point h{r * xi[0], r * xi[1], r * xi[2]};
      // Q(k,h) = {x in Q : x + k h in Q} is again a box
      std::array<double, kMaxDim> lo{}, len{};
      bool empty = false;
      for (int a = 0; a < n; ++a) {
        lo[a] = q.corner[a] + std::max(0.0, -k * h[a]);
        len[a] = q.edge - k * std::abs(h[a]);
        if (len[a] <= 1e-14 * q.edge) empty = true;
      }
      if (empty) continue;
      std::array<Rule1D, kMaxDim> rules;
      for (int a = 0; a < n; ++a) rules[a] = gauss_legendre(resolution, lo[a], lo[a] + len[a]);
      double s = 0.0;
      const int R = resolution;
      const int total = n == 1 ? R : (n == 2 ? R * R : R * R * R);
      for (int t = 0; t < total; ++t) {
        int rem = t;
        Point x{};
        double w = 1.0;
        for (int a = n - 1; a >= 0; --a) {
          const int idx = rem % R;
          rem /= R;
          x[a] = rules[a].x[idx];
          w *= rules[a].w[idx];
        }
        s += w * std::abs(forward_difference(f, x, h, k));
      }
      out.sup_difference = std::max(out.sup_difference, s);
    }
  if (out.sup_difference == 0.0) {
    if (out.e_k > 1e-12) throw QuadratureInconsistency("Whitney denominator vanishes with a nonzero local approximation");
    out.exact_zero_pair = true;
    return out;
  }
  out.ratio = out.e_k / out.sup_difference;
  return out;
}

namespace {

double grad_of_difference(const AnalyticField& f, const Polynomial& p, const Point& x, int j) {
  if (j == 0) return std::abs(f(x) - p(x));
  double s = 0.0;
  for (const MultiIndex& b : multi_indices_of_order(f.dim(), j)) {
    const double d = f.derivative(x, b) - p.derivative(x, b);
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

PoincareResult poincare_ratio(const AnalyticField& f, const Region& omega, int k, int j, const SpaceSpec& spec,
                              int points_per_axis) {
  require(k >= 1 && j >= 0 && j <= k - 1, "Poincare ratio needs 0 <= j <= k - 1");
  require(region_dim(omega) == f.dim(), "region and field dimensions differ");
  if (const auto* a = std::get_if<Annulus>(&omega)) require(a->dim >= 2, "annulus case needs dim >= 2");
  PoincareResult out;
  if (f.is_polynomial_of_degree_at_most(k - 1)) {
    out.polynomial = true;
    return out;
  }
  const int n = f.dim();
  const int N = points_per_axis > 0 ? points_per_axis : (n == 1 ? 4096 : (n == 2 ? 256 : 64));
  double L = 0.0;
  const double size = region_size(omega);
  const Point c = region_center(omega);
  for (int a = 0; a < n; ++a) {
    if (const auto* cube = std::get_if<Cube>(&omega))
      L = std::max({L, std::abs(cube->corner[a]), std::abs(cube->corner[a] + cube->edge)});
    else
      L = std::max({L, std::abs(c[a] - size), std::abs(c[a] + size)});
  }
  const GridSpec grid{n, L, N};
  const Polynomial p = minimizing_polynomial(f, omega, k - 1);
  std::vector<double> num(grid.size(), 0.0), den(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point x = grid.center(i);
    if (!region_contains(omega, x)) continue;
    num[i] = grad_of_difference(f, p, x, j);
    den[i] = gradient_magnitude(f, x, k);
  }
  out.numerator = space_norm(spec, SampledField(grid, std::move(num)));
  const double dn = space_norm(spec, SampledField(grid, std::move(den)));
  out.denominator = std::pow(size, k - j) * dn;
  if (out.denominator == 0.0) {
    if (out.numerator > 1e-12) throw InvalidParameter("grad^k f vanishes on the region but f - P does not");
    return out;
  }
  out.ratio = out.numerator / out.denominator;
  return out;
}

VariantPoincareResult variant_poincare_check(const AnalyticField& f, const Point& x, double radius,
                                             const Ball& b1, int k, int depth) {
  require(radius > 0.0 && b1.radius > 0.0 && depth >= 0 && k >= 1, "invalid variant Poincare parameters");
  const double off = norm(axpy(-1.0, b1.center, x));
  require(off + b1.radius <= radius * (1.0 + 1e-12), "B1 must lie inside B");
  require(radius + off <= 3.0 * b1.radius * (1.0 + 1e-12), "B must lie inside 3 B1");
  VariantPoincareResult out;
  if (f.is_polynomial_of_degree_at_most(k - 1)) return out;
  const Polynomial p1 = minimizing_polynomial(f, b1, k - 1);
  out.lhs = std::abs(f(x) - p1(x));
  for (int j = 0; j <= depth; ++j) {
    const Ball bj{f.dim(), x, std::ldexp(radius, -j)};
    out.rhs += local_approximation(f, bj, k) / region_measure(bj);
  }
  if (out.rhs == 0.0) {
    if (out.lhs > 1e-12) throw QuadratureInconsistency("variant Poincare right side vanishes with a nonzero left side");
    return out;
  }
  out.ratio = out.lhs / out.rhs;
  return out;
}

}  // namespace bsvy
