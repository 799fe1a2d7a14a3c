#include "bsvy/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <map>
#include <mutex>
#include <numbers>

#include "bsvy/error.hpp"

namespace bsvy {

namespace {

const Rule1D& reference_rule(int n) {
  static std::mutex mu;
  static std::map<int, Rule1D> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Rule1D r;
  const auto zeros = boost::math::legendre_p_zeros<double>(n);
  auto weight = [n](double x) {
    const double d = boost::math::legendre_p_prime(n, x);
    return 2.0 / ((1.0 - x * x) * d * d);
  };
  // zeros are the non-negative roots, ascending
  for (auto z = zeros.rbegin(); z != zeros.rend(); ++z) {
    if (*z == 0.0) continue;
    r.x.push_back(-*z);
    r.w.push_back(weight(*z));
  }
  for (double z : zeros) {
    r.x.push_back(z);
    r.w.push_back(weight(z));
  }
  return cache.emplace(n, std::move(r)).first->second;
}

}  // namespace

Rule1D gauss_legendre(int n, double a, double b) {
  require(n >= 1 && n <= 512, "Gauss-Legendre order must be in [1, 512]");
  if (n == 1) return Rule1D{{0.5 * (a + b)}, {b - a}};
  const Rule1D& ref = reference_rule(n);
  Rule1D r;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < ref.x.size(); ++i) {
    r.x.push_back(mid + half * ref.x[i]);
    r.w.push_back(half * ref.w[i]);
  }
  return r;
}

Rule1D composite_gauss(int panels, int order, double a, double b) {
  require(panels >= 1, "composite rule needs at least one panel");
  Rule1D out;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const Rule1D g = gauss_legendre(order, a + i * h, a + (i + 1) * h);
    out.x.insert(out.x.end(), g.x.begin(), g.x.end());
    out.w.insert(out.w.end(), g.w.begin(), g.w.end());
  }
  return out;
}

double sphere_area(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return 2.0 * std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi;
  }
  throw InvalidParameter("dimension must be 1, 2, or 3");
}

double unit_ball_volume(int dim) { return sphere_area(dim) / dim; }

SphereRule sphere_rule(int dim, int count) {
  SphereRule s;
  if (dim == 1) {
    s.dirs = {Point{1.0, 0.0, 0.0}, Point{-1.0, 0.0, 0.0}};
    s.w = {1.0, 1.0};
    return s;
  }
  require(count >= 4, "sphere rule needs at least 4 directions");
  if (dim == 2) {
    const double dt = 2.0 * std::numbers::pi / count;
    for (int i = 0; i < count; ++i) {
      const double t = (i + 0.5) * dt;
      s.dirs.push_back({std::cos(t), std::sin(t), 0.0});
      s.w.push_back(dt);
    }
    return s;
  }
  require(dim == 3, "dimension must be 1, 2, or 3");
  const int nt = std::max(2, static_cast<int>(std::lround(std::sqrt(count / 2.0))));
  const int np = 2 * nt;
  const Rule1D g = gauss_legendre(nt);
  const double dp = 2.0 * std::numbers::pi / np;
  for (int i = 0; i < nt; ++i) {
    const double ct = g.x[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int j = 0; j < np; ++j) {
      const double ph = (j + 0.5) * dp;
      s.dirs.push_back({st * std::cos(ph), st * std::sin(ph), ct});
      s.w.push_back(g.w[i] * dp);
    }
  }
  return s;
}

std::vector<double> geometric_nodes(double a, double b, int per_decade) {
  require(a > 0.0 && b > a, "geometric nodes need 0 < a < b");
  require(per_decade >= 1, "geometric nodes need at least one point per decade");
  const int m = std::max(1, static_cast<int>(std::ceil(std::log10(b / a) * per_decade)));
  std::vector<double> r(m + 1);
  const double la = std::log(a);
  const double step = (std::log(b) - la) / m;
  for (int i = 0; i <= m; ++i) r[i] = std::exp(la + i * step);
  r.front() = a;
  r.back() = b;
  return r;
}

}  // namespace bsvy
