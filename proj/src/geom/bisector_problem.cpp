#include "geodiff/geom/bisector_problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "geodiff/geom/theorems.hpp"

namespace geodiff::geom {
namespace {

constexpr double kRoundTripTolerance = 1e-8;

double cubic(const std::array<double, 3>& k, double w) { return ((w + k[0]) * w + k[1]) * w + k[2]; }
double cubic_prime(const std::array<double, 3>& k, double w) { return (3.0 * w + 2.0 * k[0]) * w + k[1]; }

// Real roots of the monic cubic from the depressed form t^3 + P t + Q.
std::vector<double> closed_form_starts(const std::array<double, 3>& k) {
  const double B = k[0], C = k[1], D = k[2];
  const double shift = B / 3.0;
  const double P = C - B * B / 3.0;
  const double Q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
  std::vector<double> starts;
  if (P < 0.0) {
    const double m = 2.0 * std::sqrt(-P / 3.0);
    const double arg = 3.0 * Q / (P * m);
    if (std::abs(arg) <= 1.0) {
      const double phi = std::acos(arg) / 3.0;
      for (int j = 0; j < 3; ++j) starts.push_back(m * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0) - shift);
    } else {
      const double t = -std::copysign(1.0, Q) * m * std::cosh(std::acosh(std::abs(arg)) / 3.0);
      starts.push_back(t - shift);
    }
  } else if (P > 0.0) {
    const double m = 2.0 * std::sqrt(P / 3.0);
    const double t = -m * std::sinh(std::asinh(3.0 * Q / (P * m)) / 3.0);
    starts.push_back(t - shift);
  } else {
    starts.push_back(std::cbrt(-Q) - shift);
  }
  return starts;
}

std::optional<double> newton_polish(const std::array<double, 3>& k, double w) {
  for (int it = 0; it < 60; ++it) {
    const double df = cubic_prime(k, w);
    if (df == 0.0 || !std::isfinite(df)) return std::nullopt;
    const double step = cubic(k, w) / df;
    w -= step;
    if (!std::isfinite(w)) return std::nullopt;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) return w;
  }
  return w;
}

// Fallback on the admissible bracket, where the cubic increases strictly.
double bisect(const std::array<double, 3>& k, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 2.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cubic(k, mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

std::vector<double> bisector_admissible_roots(double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0) || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorKind::Domain, "bisector segments must be positive and finite");
  }
  const auto k = bisector_cubic(a, b, c);
  const double lo = a * a + b * b;
  const double hi = (a + b) * (a + b);

  std::vector<double> roots;
  for (double start : closed_form_starts(k)) {
    const auto w = newton_polish(k, start);
    if (!w || !(*w > lo && *w < hi)) continue;
    const bool seen = std::any_of(roots.begin(), roots.end(),
                                  [&](double r) { return relative_gap(r, *w) < 1e-10; });
    if (!seen) roots.push_back(*w);
  }
  if (roots.empty() && cubic(k, lo) < 0.0 && cubic(k, hi) > 0.0) roots.push_back(bisect(k, lo, hi));
  return roots;
}

Triangle bisector_problem_solve(double a, double b, double c) {
  const auto zs = bisector_admissible_roots(a, b, c);
  const auto xs = bisector_admissible_roots(b, c, a);
  const auto ys = bisector_admissible_roots(c, a, b);

  std::vector<Triangle> consistent;
  for (double wx : xs) {
    for (double wy : ys) {
      for (double wz : zs) {
        std::optional<Triangle> t;
        try {
          t.emplace(std::sqrt(wx), std::sqrt(wy), std::sqrt(wz));
        } catch (const Error&) {
          continue;
        }
        const auto seg = incenter_segments(*t);
        if (relative_gap(seg[0], a) < kRoundTripTolerance && relative_gap(seg[1], b) < kRoundTripTolerance &&
            relative_gap(seg[2], c) < kRoundTripTolerance) {
          consistent.push_back(*t);
        }
      }
    }
  }
  if (consistent.empty()) throw Error(ErrorKind::NoTriangle, "no triangle has these incenter segments");
  if (consistent.size() > 1) {
    throw Error(ErrorKind::Ambiguous, "several triangles reproduce these incenter segments");
  }
  return consistent.front();
}

}  // namespace geodiff::geom
