#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hypermf/space.hpp"

namespace hypermf {

// Finite positive Borel measure as weighted atoms on a compact Space.
// Points are stored flat (row-major, stride = space.dim). Immutable by
// convention: operations return new measures.
struct AtomicMeasure {
  Space space;
  std::vector<double> pts;  // size() * space.dim
  std::vector<double> w;    // nonnegative

  std::size_t size() const { return w.size(); }
  std::span<const double> point(std::size_t i) const {
    return {pts.data() + i * space.dim, static_cast<std::size_t>(space.dim)};
  }

  // Total variation norm = sum of weights, fixed index order.
  double mass() const;

  static AtomicMeasure zero(Space s) { return AtomicMeasure{std::move(s), {}, {}}; }
  static AtomicMeasure dirac(Space s, std::span<const double> x, double weight = 1.0);

  void append(std::span<const double> x, double weight);
  // Checks weights >= 0 and points inside the space (1e-12). Throws on failure.
  void validate() const;
};

// sum_i w_i f(z_i); throws if f is non-finite at a support point.
double integrate(const std::function<double(std::span<const double>)>& f,
                 const AtomicMeasure& mu);

// Cartesian product: support = product of supports, weights multiply.
// Throws std::length_error when the product support exceeds `cap`.
AtomicMeasure product_measure(std::span<const AtomicMeasure> factors,
                              std::size_t cap = 5000);

// Atoms moved by `map`, weights untouched. Throws std::domain_error if an
// image lies outside `target` (torus images are wrapped instead).
AtomicMeasure push_forward(const AtomicMeasure& mu,
                           const std::function<std::vector<double>(std::span<const double>)>& map,
                           const Space& target);

// Coinciding atoms (coordinates within tol) merged, weights summed. Output
// order = first occurrence. Zero-weight atoms are kept only if keep_zero.
AtomicMeasure merge_duplicates(const AtomicMeasure& mu, double tol = 1e-12,
                               bool keep_zero = false);

}  // namespace hypermf
