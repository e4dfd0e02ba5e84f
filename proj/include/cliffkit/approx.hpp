#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffkit/identities.hpp"
#include "cliffkit/multivector.hpp"
#include "cliffkit/parallel.hpp"

namespace cliffkit::approx {

// A point of [0,1]^d. For d = 1 only the first coordinate is used.
using Point = std::array<double, 2>;
using CliffordFunction = std::function<Multivector<double>(const Point &)>;
using RealFunction = std::function<double(const Point &)>;

// Uniform grid on [0,1]^d with `intervals` equal steps per axis, so
// intervals + 1 nodes per axis, endpoints included. Node index is
// ix * (intervals + 1) + iy.
struct Grid {
  int dim = 1;
  int intervals = 1024;

  // 1024 steps on [0,1], 64 x 64 steps on [0,1]^2.
  static Grid standard(int dim) {
    if (dim == 1)
      return {1, 1024};
    if (dim == 2)
      return {2, 64};
    throw std::invalid_argument("domain dimension must be 1 or 2");
  }

  int nodes_per_axis() const { return intervals + 1; }

  std::size_t node_count() const {
    const auto r = static_cast<std::size_t>(nodes_per_axis());
    return dim == 1 ? r : r * r;
  }

  double coordinate(int i) const { return static_cast<double>(i) / intervals; }

  Point node(std::size_t index) const {
    const auto r = static_cast<std::size_t>(nodes_per_axis());
    if (dim == 1)
      return {coordinate(static_cast<int>(index)), 0.0};
    return {coordinate(static_cast<int>(index / r)), coordinate(static_cast<int>(index % r))};
  }

  void validate() const {
    if (dim != 1 && dim != 2)
      throw std::invalid_argument("domain dimension must be 1 or 2");
    if (intervals < 1)
      throw std::invalid_argument("grid needs at least one interval per axis");
  }
};

// Clifford-valued continuous function on [0,1]^d, kept both as a callable
// and as its samples on a grid.
class SampledFunction {
public:
  SampledFunction(Signature sig, Grid grid, CliffordFunction fn)
      : sig_(sig), grid_(grid), fn_(std::move(fn)) {
    grid_.validate();
    values_.reserve(grid_.node_count());
    for (std::size_t i = 0; i < grid_.node_count(); ++i) {
      values_.push_back(fn_(grid_.node(i)));
      if (!(values_.back().signature() == sig_))
        throw std::invalid_argument("sampled value has signature " +
                                    to_string(values_.back().signature()) + ", expected " +
                                    to_string(sig_));
    }
  }

  const Signature &signature() const { return sig_; }
  const Grid &grid() const { return grid_; }
  const std::vector<Multivector<double>> &values() const { return values_; }
  Multivector<double> operator()(const Point &x) const { return fn_(x); }
  const CliffordFunction &function() const { return fn_; }

private:
  Signature sig_;
  Grid grid_;
  CliffordFunction fn_;
  std::vector<Multivector<double>> values_;
};

// Real component f_I = <f e^I>_0 of a sampled function.
struct ComponentField {
  BladeMask mask;
  Grid grid;
  std::vector<double> values;
  RealFunction fn;
};

inline std::vector<ComponentField> extract_components(const SampledFunction &f) {
  const Signature &sig = f.signature();
  std::vector<ComponentField> out;
  out.reserve(sig.blade_count());
  for (std::uint32_t bits = 0; bits < sig.blade_count(); ++bits) {
    const BladeMask mask(bits);
    ComponentField c{mask, f.grid(), {}, {}};
    c.values.reserve(f.values().size());
    for (const auto &v : f.values())
      c.values.push_back(coeff(v, mask));
    c.fn = [fn = f.function(), mask](const Point &x) { return coeff(fn(x), mask); };
    out.push_back(std::move(c));
  }
  return out;
}

// Sum over I of values_I(x) e_I at grid node `node`.
inline Multivector<double> recombine(const Signature &sig, const std::vector<ComponentField> &parts,
                                     std::size_t node) {
  Multivector<double> out(sig);
  for (const auto &c : parts)
    out += Multivector<double>::blade(sig, c.mask, c.values[node]);
  return out;
}

// <f(x)>_0 computed at every node through the sandwich-sum formula, using
// the principal-involution branch when n is odd.
inline SampledFunction algebraic_scalar_projection(const SampledFunction &f) {
  return SampledFunction(f.signature(), f.grid(), [fn = f.function()](const Point &x) {
    return scalar_part_expression(fn(x));
  });
}

// Values of the degree-m Bernstein basis C(m,k) x^k (1-x)^{m-k}, k = 0..m,
// built by the de Casteljau recurrence.
inline std::vector<double> bernstein_basis(int m, double x) {
  std::vector<double> b(static_cast<std::size_t>(m) + 1, 0.0);
  b[0] = 1.0;
  const double y = 1.0 - x;
  for (int r = 1; r <= m; ++r) {
    b[r] = x * b[r - 1];
    for (int k = r - 1; k >= 1; --k)
      b[k] = y * b[k] + x * b[k - 1];
    b[0] = y * b[0];
  }
  return b;
}

// Tensor-product Bernstein polynomial B_m[c] on [0,1]^d.
//
// Stored as the (bi)linear interpolant of the corner values plus the
// Bernstein polynomial of the residual c - L. The operator reproduces
// (bi)linear functions, so this equals B_m[c]; it also keeps constant and
// coordinate components exact in floating point, since their residual
// samples are exactly zero.
class BernsteinApproximant {
public:
  BernsteinApproximant(int dim, int degree, std::array<double, 4> corners,
                       std::vector<double> residual)
      : dim_(dim), degree_(degree), corners_(corners), residual_(std::move(residual)) {}

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  // Control values c(k/m) (or c(j/m, k/m)), row-major on the first axis.
  std::vector<double> control_values() const {
    std::vector<double> out(residual_.size());
    const int m1 = degree_ + 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Point x = dim_ == 1 ? Point{double(i) / degree_, 0.0}
                                : Point{double(int(i) / m1) / degree_, double(int(i) % m1) / degree_};
      out[i] = linear_part(x) + residual_[i];
    }
    return out;
  }

  double operator()(const Point &x) const {
    const auto bx = bernstein_basis(degree_, x[0]);
    if (dim_ == 1)
      return linear_part(x) + residual_part(bx, {});
    return linear_part(x) + residual_part(bx, bernstein_basis(degree_, x[1]));
  }

  double linear_part(const Point &x) const {
    if (dim_ == 1)
      return corners_[0] + (corners_[1] - corners_[0]) * x[0];
    const double dx = corners_[2] - corners_[0];
    const double dy = corners_[1] - corners_[0];
    const double dxy = corners_[3] - corners_[2] - corners_[1] + corners_[0];
    return corners_[0] + dx * x[0] + dy * x[1] + dxy * x[0] * x[1];
  }

  // Bernstein polynomial of the residual from precomputed basis rows; by is
  // ignored when d = 1.
  double residual_part(std::span<const double> bx, std::span<const double> by) const {
    const std::size_t m1 = static_cast<std::size_t>(degree_) + 1;
    double acc = 0.0;
    if (dim_ == 1) {
      for (std::size_t k = 0; k < m1; ++k)
        acc += residual_[k] * bx[k];
    } else {
      for (std::size_t j = 0; j < m1; ++j) {
        double row = 0.0;
        for (std::size_t k = 0; k < m1; ++k)
          row += residual_[j * m1 + k] * by[k];
        acc += row * bx[j];
      }
    }
    return acc;
  }

private:
  int dim_;
  int degree_;
  std::array<double, 4> corners_; // d=1: c(0), c(1); d=2: c00, c01, c10, c11
  std::vector<double> residual_;
};

inline BernsteinApproximant bernstein_fit(const ComponentField &c, int degree) {
  if (degree < 1)
    throw std::invalid_argument("Bernstein degree must be at least 1");
  const int dim = c.grid.dim;
  const double m = degree;
  std::array<double, 4> corners{};
  if (dim == 1) {
    corners = {c.fn({0.0, 0.0}), c.fn({1.0, 0.0}), 0.0, 0.0};
  } else {
    corners = {c.fn({0.0, 0.0}), c.fn({0.0, 1.0}), c.fn({1.0, 0.0}), c.fn({1.0, 1.0})};
  }
  BernsteinApproximant shape(dim, degree, corners, {});
  const std::size_t m1 = static_cast<std::size_t>(degree) + 1;
  std::vector<double> residual(dim == 1 ? m1 : m1 * m1);
  for (std::size_t i = 0; i < residual.size(); ++i) {
    const Point x = dim == 1 ? Point{double(i) / m, 0.0}
                             : Point{double(i / m1) / m, double(i % m1) / m};
    residual[i] = c.fn(x) - shape.linear_part(x);
  }
  return BernsteinApproximant(dim, degree, corners, std::move(residual));
}

// Approximant values at every node of `grid`, same node order as Grid::node.
inline std::vector<double> evaluate_on_grid(const BernsteinApproximant &b, const Grid &grid) {
  const int r = grid.nodes_per_axis();
  std::vector<std::vector<double>> basis(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    basis[i] = bernstein_basis(b.degree(), grid.coordinate(i));
  std::vector<double> out(grid.node_count());
  for (std::size_t node = 0; node < out.size(); ++node) {
    const Point x = grid.node(node);
    if (grid.dim == 1) {
      out[node] = b.linear_part(x) + b.residual_part(basis[node], {});
    } else {
      const std::size_t ix = node / static_cast<std::size_t>(r);
      const std::size_t iy = node % static_cast<std::size_t>(r);
      out[node] = b.linear_part(x) + b.residual_part(basis[ix], basis[iy]);
    }
  }
  return out;
}

struct ComponentError {
  BladeMask mask;
  double sup_error = 0.0;
};

struct ApproxResult {
  int degree = 0;
  std::vector<ComponentError> component_errors;
  // Max over grid nodes of max_I |f_I(x) - B_m[f_I](x)|.
  double combined_error = 0.0;
};

// Fits every component with B_m, recombines sum_I B_m[f_I] e_I and measures
// the sup-norm error on the sample grid.
inline ApproxResult approximate(const SampledFunction &f, int degree) {
  if (degree < 1)
    throw std::invalid_argument("Bernstein degree must be at least 1");
  const Signature &sig = f.signature();
  const auto parts = extract_components(f);
  const auto fitted = parallel_map(parts.size(), [&](std::size_t i) {
    return evaluate_on_grid(bernstein_fit(parts[i], degree), f.grid());
  });

  ApproxResult result;
  result.degree = degree;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    double err = 0.0;
    for (std::size_t node = 0; node < fitted[i].size(); ++node)
      err = std::max(err, std::abs(parts[i].values[node] - fitted[i][node]));
    result.component_errors.push_back({parts[i].mask, err});
  }
  for (std::size_t node = 0; node < f.values().size(); ++node) {
    Multivector<double> approximant(sig);
    for (std::size_t i = 0; i < parts.size(); ++i)
      approximant[parts[i].mask] = fitted[i][node];
    const auto diff = f.values()[node] - approximant;
    for (const double c : diff.coeffs())
      result.combined_error = std::max(result.combined_error, std::abs(c));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Built-in targets
// ---------------------------------------------------------------------------

struct TargetInfo {
  std::string name;
  std::string description;
  int dim;
  int min_n;
  Signature default_signature;
};

inline const std::vector<TargetInfo> &targets() {
  static const std::vector<TargetInfo> list = {
      {"constant", "1 + 0.5*e1 - 2*e12..n", 1, 1, Signature(0, 2)},
      {"coordinate", "x*e1", 1, 1, Signature(1, 0)},
      {"clifford-exp", "cos x + sin x*e12", 1, 2, Signature(0, 2)},
      {"rotor", "cos(t/2) + sin(t/2)*e12, t = pi*(x + y)/2, on [0,1]^2", 2, 2, Signature(2, 0)},
  };
  return list;
}

inline const TargetInfo &target_info(const std::string &name) {
  for (const auto &t : targets())
    if (t.name == name)
      return t;
  throw std::invalid_argument("unknown target '" + name + "'");
}

inline SampledFunction make_target(const std::string &name, const Signature &sig) {
  const TargetInfo &info = target_info(name);
  if (sig.n() < info.min_n)
    throw std::invalid_argument("target '" + name + "' needs n >= " + std::to_string(info.min_n));
  const Grid grid = Grid::standard(info.dim);
  CliffordFunction fn;
  if (name == "constant") {
    Multivector<double> value = Multivector<double>::scalar(sig, 1.0);
    value[BladeMask(1)] += 0.5;
    value[BladeMask::pseudoscalar(sig)] -= 2.0;
    fn = [value](const Point &) { return value; };
  } else if (name == "coordinate") {
    fn = [sig](const Point &x) { return Multivector<double>::blade(sig, BladeMask(1), x[0]); };
  } else if (name == "clifford-exp") {
    fn = [sig](const Point &x) {
      auto v = Multivector<double>::scalar(sig, std::cos(x[0]));
      v[BladeMask(3)] = std::sin(x[0]);
      return v;
    };
  } else {
    fn = [sig](const Point &x) {
      const double half = std::numbers::pi * (x[0] + x[1]) / 4.0;
      auto v = Multivector<double>::scalar(sig, std::cos(half));
      v[BladeMask(3)] = std::sin(half);
      return v;
    };
  }
  return SampledFunction(sig, grid, std::move(fn));
}

} // namespace cliffkit::approx
