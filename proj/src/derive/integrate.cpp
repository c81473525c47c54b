#include <cmath>
#include <sstream>

#include "geodiff/derive/derive.hpp"
#include "geodiff/error.hpp"

namespace geodiff::derive {
namespace {

Real checked_rhs(const OdeProblem& p, Real s, Real f) {
  const Real v = p.rhs(s, f);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << p.name << ": rhs not finite at s=" << static_cast<double>(s);
    throw Error(ErrorKind::Singularity, msg.str());
  }
  return v;
}

}  // namespace

Real integrate(const OdeProblem& p, Real h) {
  if (!(h > 0)) throw Error(ErrorKind::Domain, "step size must be positive");
  if (!p.anchored) throw Error(ErrorKind::Domain, p.name + " has no anchor; use residual mode");

  const Real span = p.s_end - p.s_begin;
  const auto steps = static_cast<long>(std::ceil(std::abs(span) / h));
  const Real dh = span / static_cast<Real>(steps);
  Real f = p.anchor_value;
  for (long i = 0; i < steps; ++i) {
    // Recompute s from the index so that no drift accumulates.
    const Real s = p.s_begin + dh * static_cast<Real>(i);
    const Real k1 = checked_rhs(p, s, f);
    const Real k2 = checked_rhs(p, s + dh / 2, f + dh / 2 * k1);
    const Real k3 = checked_rhs(p, s + dh / 2, f + dh / 2 * k2);
    const Real k4 = checked_rhs(p, s + dh, f + dh * k3);
    f += dh / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return f;
}

ResidualReport residual(const OdeProblem& p, std::size_t samples) {
  if (samples < 2) throw Error(ErrorKind::Domain, "residual mode needs at least two samples");
  ResidualReport rep;
  const Real width = (p.s_end - p.s_begin) / static_cast<Real>(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const Real s = p.s_begin + width * (static_cast<Real>(i) + Real(0.5));
    const DualR cf = p.closed_form(DualR::variable(s));
    const Real rhs = p.rhs(s, cf.val);
    if (!std::isfinite(cf.val) || !std::isfinite(cf.der) || !std::isfinite(rhs)) {
      rep.skipped.push_back(s);
      continue;
    }
    const Real rel = std::abs(cf.der - rhs) / std::max(std::abs(rhs), Real(1e-30));
    rep.max_relative = std::max(rep.max_relative, rel);
    ++rep.evaluated;
  }
  return rep;
}

Real fit_order(const std::vector<Real>& h, const std::vector<Real>& errors) {
  const std::size_t n = h.size();
  Real mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(h[i]);
    my += std::log(errors[i]);
  }
  mx /= static_cast<Real>(n);
  my /= static_cast<Real>(n);
  Real sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Real dx = std::log(h[i]) - mx;
    sxy += dx * (std::log(errors[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

ConvergenceReport convergence(const OdeProblem& p, const std::vector<Real>& h_list, std::size_t residual_samples) {
  if (h_list.size() < 3) throw Error(ErrorKind::Domain, "convergence fit needs at least three step sizes");
  ConvergenceReport rep;
  rep.h = h_list;
  const Real exact = p.closed(p.s_end);
  for (Real h : h_list) rep.errors.push_back(std::abs(integrate(p, h) - exact));
  if (!p.rk4_exact) rep.order = fit_order(rep.h, rep.errors);
  rep.residual_max = residual(p, residual_samples).max_relative;
  return rep;
}

}  // namespace geodiff::derive
