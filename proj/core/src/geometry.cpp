#include "bsvy/geometry.hpp"

#include <numbers>

#include "bsvy/error.hpp"
#include "bsvy/quadrature.hpp"

namespace bsvy {

Point Cube::center() const {
  Point c{};
  for (int i = 0; i < dim; ++i) c[i] = corner[i] + 0.5 * edge;
  return c;
}

bool Cube::contains(const Point& x) const {
  for (int i = 0; i < dim; ++i)
    if (x[i] < corner[i] || x[i] >= corner[i] + edge) return false;
  return true;
}

bool Cube::contains(const Cube& o) const {
  const double slack = 1e-12 * std::max(edge, o.edge);
  for (int i = 0; i < dim; ++i) {
    if (o.corner[i] < corner[i] - slack) return false;
    if (o.corner[i] + o.edge > corner[i] + edge + slack) return false;
  }
  return true;
}

Cube Cube::dilated(double a) const {
  Cube c = *this;
  for (int i = 0; i < dim; ++i) c.corner[i] *= a;
  c.edge *= a;
  return c;
}

int region_dim(const Region& r) {
  return std::visit([](const auto& g) { return g.dim; }, r);
}

double region_measure(const Region& r) {
  if (auto c = std::get_if<Cube>(&r)) return c->volume();
  if (auto b = std::get_if<Ball>(&r)) return unit_ball_volume(b->dim) * std::pow(b->radius, b->dim);
  const auto& a = std::get<Annulus>(r);
  return unit_ball_volume(a.dim) * (std::pow(a.outer, a.dim) - std::pow(a.inner, a.dim));
}

bool region_contains(const Region& r, const Point& x) {
  if (auto c = std::get_if<Cube>(&r)) return c->contains(x);
  if (auto b = std::get_if<Ball>(&r)) {
    Point d = axpy(-1.0, b->center, x);
    return norm(d) < b->radius;
  }
  const auto& a = std::get<Annulus>(r);
  const double d = norm(axpy(-1.0, a.center, x));
  return d >= a.inner && d < a.outer;
}

double region_size(const Region& r) {
  if (auto c = std::get_if<Cube>(&r)) return c->edge;
  if (auto b = std::get_if<Ball>(&r)) return b->radius;
  return std::get<Annulus>(r).outer;
}

Point region_center(const Region& r) {
  if (auto c = std::get_if<Cube>(&r)) return c->center();
  if (auto b = std::get_if<Ball>(&r)) return b->center;
  return std::get<Annulus>(r).center;
}

Region region_dilated(const Region& r, double a) {
  if (auto c = std::get_if<Cube>(&r)) return c->dilated(a);
  if (auto b = std::get_if<Ball>(&r)) {
    Ball o = *b;
    for (double& v : o.center) v *= a;
    o.radius *= a;
    return o;
  }
  Annulus o = std::get<Annulus>(r);
  for (double& v : o.center) v *= a;
  o.inner *= a;
  o.outer *= a;
  return o;
}

namespace {

NodeSet polar_nodes(int dim, const Point& c, double r0, double r1, int res) {
  NodeSet out;
  const Rule1D rad = gauss_legendre(res, r0, r1);
  if (dim == 1) {
    for (int s : {-1, 1})
      for (std::size_t i = 0; i < rad.x.size(); ++i) {
        out.x.push_back({c[0] + s * rad.x[i], 0.0, 0.0});
        out.w.push_back(rad.w[i]);
      }
    return out;
  }
  const SphereRule sph = sphere_rule(dim, dim == 2 ? 4 * res : 4 * res * res);
  for (std::size_t i = 0; i < rad.x.size(); ++i) {
    const double jac = std::pow(rad.x[i], dim - 1);
    for (std::size_t d = 0; d < sph.dirs.size(); ++d) {
      out.x.push_back(axpy(rad.x[i], sph.dirs[d], c));
      out.w.push_back(rad.w[i] * jac * sph.w[d]);
    }
  }
  return out;
}

}  // namespace

NodeSet region_nodes(const Region& r, int res) {
  require(res >= 2, "region quadrature needs at least 2 points per axis");
  if (auto c = std::get_if<Cube>(&r)) {
    const Rule1D g = gauss_legendre(res, 0.0, c->edge);
    NodeSet out;
    const int n = c->dim;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= g.x.size();
    out.x.reserve(total);
    out.w.reserve(total);
    std::array<std::size_t, kMaxDim> idx{};
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t rem = t;
      for (int a = n - 1; a >= 0; --a) {
        idx[a] = rem % g.x.size();
        rem /= g.x.size();
      }
      Point x{};
      double w = 1.0;
      for (int a = 0; a < n; ++a) {
        x[a] = c->corner[a] + g.x[idx[a]];
        w *= g.w[idx[a]];
      }
      out.x.push_back(x);
      out.w.push_back(w);
    }
    return out;
  }
  if (auto b = std::get_if<Ball>(&r)) return polar_nodes(b->dim, b->center, 0.0, b->radius, res);
  const auto& a = std::get<Annulus>(r);
  require(a.inner >= 0.0 && a.outer > a.inner, "annulus radii must satisfy 0 <= inner < outer");
  return polar_nodes(a.dim, a.center, a.inner, a.outer, res);
}

}  // namespace bsvy
