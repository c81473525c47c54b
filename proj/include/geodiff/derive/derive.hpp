#pragma once

// The theorem catalog as initial-value problems. Each entry freezes all but
// one quantity, states dF/ds and an anchor value taken from a special or
// degenerate configuration, and carries the closed form it should integrate
// to. Everything here runs in long double: at h = 1e-3 the RK4 error of the
// smoother entries sits near 1e-14, too close to the double roundoff floor
// for a clean order fit.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geodiff/homogeneity/dual.hpp"

namespace geodiff::derive {

using Real = long double;
using DualR = homogeneity::Dual<Real>;

struct OdeProblem {
  int id = 0;
  std::string name;

  /// Anchored entries integrate from s_begin (the anchor) to s_end.
  /// Residual-only entries use [s_begin, s_end] as the sampling interval.
  bool anchored = true;
  Real s_begin = 0;
  Real s_end = 0;
  Real anchor_value = 0;
  std::string anchor_note;

  std::vector<std::pair<std::string, Real>> params;
  std::function<Real(Real s, Real f)> rhs;
  std::function<DualR(DualR s)> closed_form;

  /// rhs is a polynomial of degree <= 3 in s alone, so RK4 is exact up to
  /// roundoff and no convergence order can be observed.
  bool rk4_exact = false;

  Real closed(Real s) const { return closed_form(DualR(s)).val; }
};

/// The 21 entries, ids 1..21 in catalog order.
std::vector<OdeProblem> catalog();

/// Lookup by name; throws ErrorKind::Config for unknown names.
OdeProblem find(const std::string& name);

/// Fixed-step classical RK4 from the anchor to s_end with ceil(|L|/h) equal
/// steps (signed, so the direction may be downward). Throws
/// ErrorKind::Singularity if rhs turns non-finite, naming s.
Real integrate(const OdeProblem& p, Real h);

struct ResidualReport {
  Real max_relative = 0;
  std::size_t evaluated = 0;
  std::vector<Real> skipped;  // sample points where rhs or derivative was not finite
};

/// Compares the dual-number derivative of the closed form with rhs at
/// `samples` interval midpoints. Requires samples >= 2.
ResidualReport residual(const OdeProblem& p, std::size_t samples);

struct ConvergenceReport {
  std::vector<Real> h;
  std::vector<Real> errors;      // absolute endpoint errors, one per h
  std::optional<Real> order;     // least-squares slope of log err vs log h; empty for rk4_exact entries
  Real residual_max = 0;
};

/// Requires at least three step sizes.
ConvergenceReport convergence(const OdeProblem& p, const std::vector<Real>& h_list,
                              std::size_t residual_samples = 1000);

/// Least-squares slope of log(err) against log(h).
Real fit_order(const std::vector<Real>& h, const std::vector<Real>& errors);

}  // namespace geodiff::derive
