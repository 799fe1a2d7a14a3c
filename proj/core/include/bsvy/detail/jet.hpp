#pragma once

#include <cmath>
#include <vector>

namespace bsvy::detail {

// Truncated Taylor expansion c_0 + c_1 t + ... + c_K t^K about a point;
// c_m = g^(m)(t0) / m!.
class Jet {
 public:
  explicit Jet(int order, double value = 0.0) : c_(order + 1, 0.0) { c_[0] = value; }

  static Jet variable(int order, double t0) {
    Jet j(order, t0);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int m) const { return c_[m]; }
  double& operator[](int m) { return c_[m]; }

  double derivative(int m) const {
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    return c_[m] * fact;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }
  Jet& operator+=(double s) {
    c_[0] += s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator-(Jet a) { return a *= -1.0; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const int k = a.order();
    Jet r(k);
    for (int i = 0; i <= k; ++i) {
      if (a.c_[i] == 0.0) continue;
      for (int j = 0; i + j <= k; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  // 1 / a, requires a[0] != 0.
  friend Jet reciprocal(const Jet& a) {
    const int k = a.order();
    Jet r(k);
    r.c_[0] = 1.0 / a.c_[0];
    for (int m = 1; m <= k; ++m) {
      double s = 0.0;
      for (int j = 1; j <= m; ++j) s += a.c_[j] * r.c_[m - j];
      r.c_[m] = -s / a.c_[0];
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

  friend Jet exp(const Jet& a) {
    const int k = a.order();
    Jet r(k);
    r.c_[0] = std::exp(a.c_[0]);
    for (int m = 1; m <= k; ++m) {
      double s = 0.0;
      for (int j = 1; j <= m; ++j) s += j * a.c_[j] * r.c_[m - j];
      r.c_[m] = s / m;
    }
    return r;
  }

  friend Jet pow_int(const Jet& a, int n) {
    Jet r(a.order(), 1.0);
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
  }

 private:
  std::vector<double> c_;
};

}  // namespace bsvy::detail
