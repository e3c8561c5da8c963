#include "hypermf/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypermf {

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::Box: return "box";
    case SpaceKind::Torus: return "torus";
    case SpaceKind::Sphere: return "sphere";
    case SpaceKind::Simplex: return "simplex";
    case SpaceKind::FiniteGrid: return "finite-grid";
  }
  return "box";
}

SpaceKind space_kind_from_string(const std::string& s) {
  if (s == "box") return SpaceKind::Box;
  if (s == "torus") return SpaceKind::Torus;
  if (s == "sphere") return SpaceKind::Sphere;
  if (s == "simplex") return SpaceKind::Simplex;
  if (s == "finite-grid" || s == "finite_grid") return SpaceKind::FiniteGrid;
  throw std::invalid_argument("unknown space kind: " + s);
}

Space Space::box(std::vector<double> lo, std::vector<double> hi) {
  if (lo.empty() || lo.size() != hi.size()) throw std::invalid_argument("box: bad bounds");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i]) || !std::isfinite(lo[i]) || !std::isfinite(hi[i]))
      throw std::invalid_argument("box: bounds must be finite with lo < hi");
  Space s;
  s.kind = SpaceKind::Box;
  s.dim = static_cast<int>(lo.size());
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  return s;
}

Space Space::unit_box(int dim) {
  return box(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0));
}

Space Space::torus(int dim, double period) {
  if (dim < 1 || !(period > 0)) throw std::invalid_argument("torus: bad parameters");
  Space s;
  s.kind = SpaceKind::Torus;
  s.dim = dim;
  s.period = period;
  return s;
}

Space Space::sphere(int ambient_dim, double radius) {
  if (ambient_dim < 2 || !(radius > 0)) throw std::invalid_argument("sphere: bad parameters");
  Space s;
  s.kind = SpaceKind::Sphere;
  s.dim = ambient_dim;
  s.radius = radius;
  s.sphere_factor_dim = ambient_dim;
  return s;
}

Space Space::simplex(int dim, double scale, bool surface) {
  if (dim < 1 || !(scale > 0)) throw std::invalid_argument("simplex: bad parameters");
  Space s;
  s.kind = SpaceKind::Simplex;
  s.dim = dim;
  s.simplex_scale = scale;
  s.simplex_surface = surface;
  return s;
}

Space Space::finite_grid(std::vector<std::vector<double>> pts) {
  if (pts.empty()) throw std::invalid_argument("finite_grid: empty");
  Space s;
  s.kind = SpaceKind::FiniteGrid;
  s.dim = static_cast<int>(pts.front().size());
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != s.dim) throw std::invalid_argument("finite_grid: ragged points");
  s.grid_points = std::move(pts);
  return s;
}

double Space::distance(std::span<const double> a, std::span<const double> b) const {
  double d = 0.0;
  if (kind == SpaceKind::Torus) {
    for (int i = 0; i < dim; ++i) {
      double t = std::fabs(a[i] - b[i]);
      t = std::fmod(t, period);
      d += std::min(t, period - t);
    }
    return d;
  }
  for (int i = 0; i < dim; ++i) d += std::fabs(a[i] - b[i]);
  return d;
}

bool Space::contains(std::span<const double> p, double tol) const {
  return violation(p) <= tol;
}

double Space::violation(std::span<const double> p) const {
  switch (kind) {
    case SpaceKind::Box: {
      double v = 0.0;
      for (int i = 0; i < dim; ++i) {
        if (p[i] < lo[i]) v += lo[i] - p[i];
        if (p[i] > hi[i]) v += p[i] - hi[i];
      }
      return v;
    }
    case SpaceKind::Torus:
      return 0.0;  // every representative wraps inside
    case SpaceKind::Sphere: {
      // product of spheres: each factor block must have 2-norm == radius
      double v = 0.0;
      const int f = sphere_factor_dim;
      for (int s = 0; s < dim; s += f) {
        double n2 = 0.0;
        for (int i = 0; i < f; ++i) n2 += p[s + i] * p[s + i];
        v += std::fabs(std::sqrt(n2) - radius);
      }
      return v;
    }
    case SpaceKind::Simplex: {
      double v = 0.0, sum = 0.0;
      for (int i = 0; i < dim; ++i) {
        if (p[i] < 0) v += -p[i];
        sum += p[i];
      }
      if (simplex_surface)
        v += std::fabs(sum - simplex_scale);
      else if (sum > simplex_scale)
        v += sum - simplex_scale;
      return v;
    }
    case SpaceKind::FiniteGrid: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& g : grid_points) {
        double d = 0.0;
        for (int i = 0; i < dim; ++i) d += std::fabs(p[i] - g[i]);
        best = std::min(best, d);
      }
      return best;
    }
  }
  return 0.0;
}

double Space::diameter() const {
  switch (kind) {
    case SpaceKind::Box: {
      double d = 0.0;
      for (int i = 0; i < dim; ++i) d += hi[i] - lo[i];
      return d;
    }
    case SpaceKind::Torus:
      return dim * period / 2.0;
    case SpaceKind::Sphere:
      return (dim / sphere_factor_dim) * 2.0 * radius * sphere_factor_dim;  // crude 1-norm bound
    case SpaceKind::Simplex:
      return 2.0 * simplex_scale;
    case SpaceKind::FiniteGrid: {
      double d = 0.0;
      for (const auto& a : grid_points)
        for (const auto& b : grid_points) d = std::max(d, distance(a, b));
      return d;
    }
  }
  return 0.0;
}

Space Space::power(int p) const {
  if (p < 1) throw std::invalid_argument("power: p >= 1 required");
  if (p == 1) return *this;
  Space s = *this;
  s.dim = dim * p;
  switch (kind) {
    case SpaceKind::Box:
      s.lo.clear();
      s.hi.clear();
      for (int r = 0; r < p; ++r) {
        s.lo.insert(s.lo.end(), lo.begin(), lo.end());
        s.hi.insert(s.hi.end(), hi.begin(), hi.end());
      }
      return s;
    case SpaceKind::Torus:
      return s;
    case SpaceKind::Sphere:
      s.sphere_factor_dim = sphere_factor_dim;
      return s;
    case SpaceKind::Simplex:
      throw std::invalid_argument("power: simplex products are not supported");
    case SpaceKind::FiniteGrid: {
      // cartesian product of the grid with itself
      std::vector<std::vector<double>> pts;
      pts.emplace_back();
      for (int r = 0; r < p; ++r) {
        std::vector<std::vector<double>> next;
        for (const auto& acc : pts)
          for (const auto& g : grid_points) {
            auto v = acc;
            v.insert(v.end(), g.begin(), g.end());
            next.push_back(std::move(v));
          }
        pts = std::move(next);
      }
      s.grid_points = std::move(pts);
      return s;
    }
  }
  return s;
}

void Space::wrap(std::span<double> p) const {
  if (kind != SpaceKind::Torus) return;
  for (int i = 0; i < dim; ++i) {
    p[i] = std::fmod(p[i], period);
    if (p[i] < 0) p[i] += period;
  }
}

bool Space::same_as(const Space& o, double tol) const {
  if (kind != o.kind || dim != o.dim) return false;
  auto close = [&](double a, double b) { return std::fabs(a - b) <= tol; };
  switch (kind) {
    case SpaceKind::Box:
      for (int i = 0; i < dim; ++i)
        if (!close(lo[i], o.lo[i]) || !close(hi[i], o.hi[i])) return false;
      return true;
    case SpaceKind::Torus:
      return close(period, o.period);
    case SpaceKind::Sphere:
      return close(radius, o.radius) && sphere_factor_dim == o.sphere_factor_dim;
    case SpaceKind::Simplex:
      return close(simplex_scale, o.simplex_scale) && simplex_surface == o.simplex_surface;
    case SpaceKind::FiniteGrid:
      return grid_points == o.grid_points;
  }
  return false;
}

std::vector<double> kronecker_point(int dim, std::size_t index, unsigned seed) {
  // Generalized golden-ratio lattice: alphas from the root of g^(d+1) = g + 1.
  double g = 1.5;
  for (int it = 0; it < 64; ++it) g = std::pow(1.0 + g, 1.0 / (dim + 1));
  std::vector<double> p(dim);
  const double offset = 0.5 + seed * 0.148214653667;
  double a = 1.0;
  for (int i = 0; i < dim; ++i) {
    a /= g;
    double v = std::fmod(offset + (index + 1) * a, 1.0);
    p[i] = v < 0 ? v + 1.0 : v;
  }
  return p;
}

}  // namespace hypermf
