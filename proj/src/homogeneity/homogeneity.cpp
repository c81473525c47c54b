#include "geodiff/homogeneity/homogeneity.hpp"

#include <cmath>

#include "geodiff/error.hpp"

namespace geodiff::homogeneity {
namespace {

std::vector<D> lift(std::span<const double> point, std::size_t active) {
  std::vector<D> v(point.begin(), point.end());
  if (active < v.size()) v[active] = D::variable(point[active]);
  return v;
}

void check_arity(const FormulaDescriptor& fd, std::span<const double> point) {
  if (point.size() != fd.arity()) {
    throw Error(ErrorKind::Domain, fd.name + ": expected " + std::to_string(fd.arity()) + " inputs");
  }
}

}  // namespace

double FormulaDescriptor::value(std::span<const double> point) const {
  const auto v = lift(point, point.size());
  return evaluate(v).val;
}

double FormulaDescriptor::partial(std::span<const double> point, std::size_t i) const {
  const auto v = lift(point, i);
  return evaluate(v).der;
}

double scale_residual(const FormulaDescriptor& fd, std::span<const double> point) {
  check_arity(fd, point);
  fd.check_domain(point);
  const double fval = fd.value(point);
  double sum = 0.0, magnitude = 0.0;
  for (std::size_t i = 0; i < fd.arity(); ++i) {
    if (fd.dims[i] == 0) continue;
    const double term = fd.dims[i] * point[i] * fd.partial(point, i);
    sum += term;
    magnitude += std::abs(term);
  }
  if (fd.n == 0) return std::abs(sum) / std::max(magnitude, 1e-30);
  return std::abs(fd.n * fval - sum) / std::max(fd.n * std::abs(fval), 1e-30);
}

double scaling_error(const FormulaDescriptor& fd, std::span<const double> point, double lambda) {
  check_arity(fd, point);
  fd.check_domain(point);
  std::vector<double> scaled(point.begin(), point.end());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (fd.dims[i] == 1) scaled[i] *= lambda;
  }
  fd.check_domain(scaled);
  const double expected = std::pow(lambda, fd.n) * fd.value(point);
  const double gap = std::abs(fd.value(scaled) - expected);
  return expected == 0.0 ? gap : gap / std::abs(expected);
}

}  // namespace geodiff::homogeneity
