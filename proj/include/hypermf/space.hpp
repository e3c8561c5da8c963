#pragma once

#include <span>
#include <string>
#include <vector>

namespace hypermf {

enum class SpaceKind { Box, Torus, Sphere, Simplex, FiniteGrid };

std::string to_string(SpaceKind k);
SpaceKind space_kind_from_string(const std::string& s);

// Compact metric space embedded in R^dim, metric induced by the 1-norm
// (geodesic wrap per coordinate on the torus). Immutable value type.
struct Space {
  SpaceKind kind = SpaceKind::Box;
  int dim = 1;

  std::vector<double> lo, hi;  // Box
  double period = 1.0;         // Torus (per coordinate)
  double radius = 1.0;         // Sphere factors
  int sphere_factor_dim = 0;   // ambient dim of each sphere factor (dim % factor == 0)
  double simplex_scale = 1.0;  // Simplex: {x >= 0, sum x <= scale} (solid)
  bool simplex_surface = false;  // {x >= 0, sum x == scale}
  std::vector<std::vector<double>> grid_points;  // FiniteGrid

  static Space box(std::vector<double> lo, std::vector<double> hi);
  static Space unit_interval() { return box({0.0}, {1.0}); }
  static Space unit_box(int dim);
  static Space torus(int dim, double period = 1.0);
  static Space sphere(int ambient_dim, double radius = 1.0);
  static Space simplex(int dim, double scale = 1.0, bool surface = false);
  static Space finite_grid(std::vector<std::vector<double>> pts);

  double distance(std::span<const double> a, std::span<const double> b) const;
  bool contains(std::span<const double> p, double tol = 1e-12) const;
  // 1-norm distance from p to the space (0 when inside); used for drift reports.
  double violation(std::span<const double> p) const;
  double diameter() const;
  // X^p with the same per-factor structure and summed 1-norm metric.
  Space power(int p) const;
  // Reduce torus coordinates into [0, period).
  void wrap(std::span<double> p) const;

  bool same_as(const Space& o, double tol = 1e-12) const;
};

// Deterministic low-discrepancy points (Kronecker lattice on [0,1)^dim).
// The seed only shifts the lattice offset.
std::vector<double> kronecker_point(int dim, std::size_t index, unsigned seed = 0);

}  // namespace hypermf
