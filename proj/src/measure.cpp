#include "hypermf/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace hypermf {

double AtomicMeasure::mass() const {
  double s = 0.0;
  for (double x : w) s += x;
  return s;
}

AtomicMeasure AtomicMeasure::dirac(Space s, std::span<const double> x, double weight) {
  AtomicMeasure m{std::move(s), {}, {}};
  m.append(x, weight);
  return m;
}

void AtomicMeasure::append(std::span<const double> x, double weight) {
  if (static_cast<int>(x.size()) != space.dim)
    throw std::invalid_argument("append: point dimension mismatch");
  pts.insert(pts.end(), x.begin(), x.end());
  w.push_back(weight);
}

void AtomicMeasure::validate() const {
  if (pts.size() != w.size() * static_cast<std::size_t>(space.dim))
    throw std::invalid_argument("measure: point/weight size mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (!(w[i] >= 0.0) || !std::isfinite(w[i]))
      throw std::invalid_argument("measure: negative or non-finite weight");
    if (!space.contains(point(i), 1e-12))
      throw std::invalid_argument("measure: support point outside the space");
  }
}

double integrate(const std::function<double(std::span<const double>)>& f,
                 const AtomicMeasure& mu) {
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double v = f(mu.point(i));
    if (!std::isfinite(v)) throw std::domain_error("integrate: non-finite integrand value");
    s += mu.w[i] * v;
  }
  return s;
}

AtomicMeasure product_measure(std::span<const AtomicMeasure> factors, std::size_t cap) {
  if (factors.empty()) throw std::invalid_argument("product_measure: no factors");
  std::size_t count = 1;
  int dim = 0;
  for (const auto& f : factors) {
    count *= f.size();
    dim += f.space.dim;
    if (count > cap) throw std::length_error("product_measure: support cap exceeded");
  }
  Space prod = factors[0].space;
  if (factors.size() > 1) {
    // all factors must share the structure for a clean power space
    for (std::size_t i = 1; i < factors.size(); ++i)
      if (!factors[i].space.same_as(factors[0].space))
        throw std::invalid_argument("product_measure: heterogeneous factor spaces");
    prod = factors[0].space.power(static_cast<int>(factors.size()));
  }

  AtomicMeasure out{prod, {}, {}};
  out.pts.reserve(count * dim);
  out.w.reserve(count);
  std::vector<std::size_t> idx(factors.size(), 0);
  if (count == 0) return out;
  for (;;) {
    double weight = 1.0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto p = factors[f].point(idx[f]);
      out.pts.insert(out.pts.end(), p.begin(), p.end());
      weight *= factors[f].w[idx[f]];
    }
    out.w.push_back(weight);
    // odometer increment, last factor fastest
    std::size_t f = factors.size();
    while (f > 0) {
      --f;
      if (++idx[f] < factors[f].size()) break;
      idx[f] = 0;
      if (f == 0) return out;
    }
  }
}

AtomicMeasure push_forward(const AtomicMeasure& mu,
                           const std::function<std::vector<double>(std::span<const double>)>& map,
                           const Space& target) {
  AtomicMeasure out{target, {}, {}};
  out.pts.reserve(mu.size() * target.dim);
  out.w = mu.w;  // weights preserved exactly
  for (std::size_t i = 0; i < mu.size(); ++i) {
    auto y = map(mu.point(i));
    if (static_cast<int>(y.size()) != target.dim)
      throw std::domain_error("push_forward: image dimension mismatch");
    target.wrap(y);
    if (!target.contains(y, 1e-9))
      throw std::domain_error("push_forward: image outside target space");
    out.pts.insert(out.pts.end(), y.begin(), y.end());
  }
  return out;
}

AtomicMeasure merge_duplicates(const AtomicMeasure& mu, double tol, bool keep_zero) {
  AtomicMeasure out{mu.space, {}, {}};
  const int d = mu.space.dim;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto p = mu.point(i);
    bool merged = false;
    for (std::size_t j = 0; j < out.size(); ++j) {
      bool same = true;
      for (int c = 0; c < d; ++c)
        if (std::fabs(out.pts[j * d + c] - p[c]) > tol) {
          same = false;
          break;
        }
      if (same) {
        out.w[j] += mu.w[i];
        merged = true;
        break;
      }
    }
    if (!merged && (keep_zero || mu.w[i] != 0.0)) out.append(p, mu.w[i]);
  }
  return out;
}

}  // namespace hypermf
