#pragma once

// Scale-identity checker. A metric formula f of dimension n in inputs x_i of
// dimensions n_i must satisfy n f = sum_i n_i x_i df/dx_i; the partials come
// from one forward-mode dual pass per input.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "geodiff/homogeneity/dual.hpp"
#include "geodiff/sampling.hpp"

namespace geodiff::homogeneity {

using D = Dual<double>;

struct FormulaDescriptor {
  std::string name;
  int n = 1;                // output dimension
  std::vector<int> dims;    // input dimensions, 1 for lengths and 0 for angles
  std::function<D(std::span<const D>)> evaluate;
  /// Throws ErrorKind::Domain if the point is outside the formula's domain.
  std::function<void(std::span<const double>)> check_domain;
  /// Random in-domain point.
  std::function<std::vector<double>(Rng&)> sample;

  std::size_t arity() const { return dims.size(); }
  double value(std::span<const double> point) const;
  /// Partial derivative with respect to input i.
  double partial(std::span<const double> point, std::size_t i) const;
};

/// All geometric theorem ops (incenter_ratio as a dimensionless n=0 entry,
/// bisector_problem_solve through its z output) followed by circle area and
/// sphere volume.
std::vector<FormulaDescriptor> registry();

/// |n f - S| / max(n |f|, 1e-30) with S = sum n_i x_i df/dx_i; for n = 0 the
/// denominator is max(sum n_i |x_i df/dx_i|, 1e-30).
double scale_residual(const FormulaDescriptor& fd, std::span<const double> point);

/// |f(lambda x) - lambda^n f(x)| / |lambda^n f(x)|, scaling only the inputs
/// with n_i = 1. Returns the absolute gap when f(x) = 0.
double scaling_error(const FormulaDescriptor& fd, std::span<const double> point, double lambda);

}  // namespace geodiff::homogeneity
