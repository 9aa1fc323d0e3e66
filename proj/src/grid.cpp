#include "bhf/grid.hpp"

#include <cmath>
#include <numbers>

namespace bhf {

using std::numbers::pi;

const char* dim_name(Dim d) {
  switch (d) {
    case Dim::One: return "1";
    case Dim::Radial3: return "3-radial";
    case Dim::Three: return "3";
  }
  return "?";
}

Dim dim_from_name(const std::string& s) {
  if (s == "1" || s == "1d") return Dim::One;
  if (s == "3-radial" || s == "radial") return Dim::Radial3;
  if (s == "3" || s == "3d") return Dim::Three;
  throw ConfigError("unknown dimension '" + s + "'");
}

int spatial_dim(Dim d) { return d == Dim::One ? 1 : 3; }

Grid::Grid(Dim d, int n_, double len) : dim(d), n(n_), length(len) {
  if (n < 8) throw ConfigError("grid needs n >= 8");
  if (!(len > 0)) throw ConfigError("grid length must be positive");
  if (periodic() && n % 2) throw ConfigError("periodic grids need even n");
}

double Grid::node(int k) const {
  return dim == Dim::Radial3 ? (k + 1) * spacing() : -0.5 * length + k * spacing();
}

Vec Grid::nodes() const {
  Vec x(n);
  for (int k = 0; k < n; ++k) x[k] = node(k);
  return x;
}

double Grid::dp() const {
  if (dim == Dim::Radial3) return pi / ((n + 1) * spacing());
  return 2 * pi / length;
}

Vec Grid::frequencies() const {
  Vec p(n);
  const double d = dp();
  for (int j = 0; j < n; ++j) p[j] = dim == Dim::Radial3 ? (j + 1) * d : (j - n / 2) * d;
  return p;
}

Vec Grid::weights() const {
  const double dx = spacing();
  if (dim == Dim::Radial3) {
    Vec w(n);
    for (int k = 0; k < n; ++k) {
      const double r = node(k);
      w[k] = 4 * pi * r * r * dx;
    }
    return w;
  }
  return Vec::Constant(n, dx);
}

Vec Grid::freq_weights() const {
  const double d = dp();
  if (dim == Dim::Radial3) {
    Vec p = frequencies();
    return (4 * pi * d) * p.array().square();
  }
  return Vec::Constant(n, d);
}

bool same_geometry(const Grid& a, const Grid& b, double rtol) {
  return a.dim == b.dim && a.n == b.n && std::abs(a.length - b.length) <= rtol * std::abs(b.length);
}

}  // namespace bhf
