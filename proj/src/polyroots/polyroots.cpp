#include "geodiff/polyroots/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "geodiff/error.hpp"

namespace geodiff::polyroots {
namespace {

constexpr double kSingular = 1e-12;
constexpr double kFinalResidual = 1e-8;
constexpr int kNewtonMax = 5;

double residual_bound(double scale, cplx x, int degree) {
  return kFinalResidual * scale * std::pow(std::max(1.0, std::abs(x)), degree);
}

// P_t for a_k(t) = (1-t) gamma s_k + t g_k.
struct Homotopy {
  const std::vector<cplx>& s;
  const std::vector<cplx>& g;
  cplx gamma;

  cplx coeff(std::size_t k, double t) const { return (1.0 - t) * gamma * s[k] + t * g[k]; }
  cplx dcoeff(std::size_t k) const { return g[k] - gamma * s[k]; }

  double scale(double t) const {
    double m = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) m = std::max(m, std::abs(coeff(k, t)));
    return m;
  }

  // sum_k |a_k(t)| |x|^k
  double magnitude(cplx x, double t) const {
    const double ax = std::abs(x);
    double m = 0.0;
    for (std::size_t k = s.size(); k-- > 0;) m = m * ax + std::abs(coeff(k, t));
    return m;
  }

  // P_t(x), P_t'(x) and sum_k a_k'(t) x^k by Horner.
  void eval(cplx x, double t, cplx& p, cplx& dp, cplx& dt) const {
    p = dp = dt = 0.0;
    for (std::size_t k = s.size(); k-- > 0;) {
      dp = dp * x + p;
      p = p * x + coeff(k, t);
      dt = dt * x + dcoeff(k);
    }
  }
};

}  // namespace

Poly::Poly(std::vector<cplx> coeffs) : a_(std::move(coeffs)) {
  if (a_.size() < 2) throw Error(ErrorKind::Domain, "polynomial degree must be at least 1");
  for (const auto& c : a_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::Domain, "polynomial coefficients must be finite");
    }
  }
  if (!(std::abs(a_.back()) > 1e-12 * scale())) throw Error(ErrorKind::Domain, "leading coefficient vanishes");
}

Poly Poly::from_real(const std::vector<double>& coeffs) { return Poly(std::vector<cplx>(coeffs.begin(), coeffs.end())); }

double Poly::scale() const noexcept {
  double m = 0.0;
  for (const auto& c : a_) m = std::max(m, std::abs(c));
  return m;
}

bool Poly::is_real() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](cplx c) { return c.imag() == 0.0; });
}

cplx Poly::operator()(cplx x) const noexcept {
  cplx p = 0.0;
  for (auto it = a_.rbegin(); it != a_.rend(); ++it) p = p * x + *it;
  return p;
}

cplx Poly::derivative(cplx x) const noexcept {
  cplx p = 0.0, dp = 0.0;
  for (auto it = a_.rbegin(); it != a_.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
  return dp;
}

Poly roots_of_unity_system(int degree) {
  std::vector<cplx> a(static_cast<std::size_t>(degree) + 1, 0.0);
  a.front() = -1.0;
  a.back() = 1.0;
  return Poly(std::move(a));
}

std::vector<cplx> roots_of_unity(int degree) {
  std::vector<cplx> r;
  for (int k = 0; k < degree; ++k) r.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / degree));
  return r;
}

ContinuationPath::ContinuationPath(Poly start_, std::vector<cplx> start_roots_, Poly target_, int steps_, cplx gamma_)
    : start(std::move(start_)), start_roots(std::move(start_roots_)), target(std::move(target_)), steps(steps_),
      gamma(gamma_) {
  if (start.degree() != target.degree()) throw Error(ErrorKind::Domain, "start and target degrees differ");
  if (static_cast<int>(start_roots.size()) != start.degree()) {
    throw Error(ErrorKind::Domain, "need one start root per degree");
  }
  if (steps < 1) throw Error(ErrorKind::Domain, "continuation needs at least one step");
  if (std::abs(std::abs(gamma) - 1.0) > 1e-12) throw Error(ErrorKind::Domain, "gamma must have unit magnitude");
  for (const auto& r : start_roots) {
    if (std::abs(start(r)) > 1e-10 * start.scale() * std::pow(std::max(1.0, std::abs(r)), start.degree())) {
      throw Error(ErrorKind::Domain, "start root does not satisfy the start system");
    }
  }
}

cplx ContinuationPath::default_gamma() { return std::polar(1.0, 1.2345); }

ContinuationPath ContinuationPath::standard(const Poly& target, cplx gamma, int steps) {
  return {roots_of_unity_system(target.degree()), roots_of_unity(target.degree()), target, steps, gamma};
}

std::vector<cplx> track(const ContinuationPath& path) {
  const int n = path.target.degree();
  const Homotopy H{path.start.coeffs(), path.target.coeffs(), path.gamma};
  const double dt = 1.0 / path.steps;

  auto velocity = [&](cplx x, double t, int step) {
    cplx p, dp, da;
    H.eval(x, t, p, dp, da);
    if (std::abs(dp) < kSingular * H.scale(t)) {
      throw Error(ErrorKind::Singularity, "path singular at step " + std::to_string(step));
    }
    return -da / dp;
  };

  std::vector<cplx> out;
  out.reserve(path.start_roots.size());
  for (cplx x : path.start_roots) {
    for (int j = 0; j < path.steps; ++j) {
      const double t0 = j * dt;
      const double t1 = (j + 1 == path.steps) ? 1.0 : (j + 1) * dt;
      const double h = t1 - t0;
      const cplx k1 = velocity(x, t0, j);
      const cplx k2 = velocity(x + 0.5 * h * k1, t0 + 0.5 * h, j);
      const cplx k3 = velocity(x + 0.5 * h * k2, t0 + 0.5 * h, j);
      const cplx k4 = velocity(x + h * k3, t1, j);
      x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

      bool converged = false;
      for (int it = 0; it < kNewtonMax && !converged; ++it) {
        cplx p, dp, da;
        H.eval(x, t1, p, dp, da);
        if (std::abs(dp) < kSingular * H.scale(t1)) {
          throw Error(ErrorKind::Singularity, "path singular at step " + std::to_string(j));
        }
        const cplx delta = p / dp;
        x -= delta;
        // Below the Horner rounding bound the residual is noise.
        converged = std::abs(delta) <= 1e-13 * std::max(1.0, std::abs(x)) ||
                    std::abs(p) <= 2.0 * (n + 1) * std::numeric_limits<double>::epsilon() * H.magnitude(x, t1);
      }
      if (!converged) {
        throw Error(ErrorKind::TrackingFailure, "corrector did not converge at step " + std::to_string(j));
      }
    }
    if (std::abs(path.target(x)) >= residual_bound(path.target.scale(), x, n)) {
      throw Error(ErrorKind::TrackingFailure, "final residual too large");
    }
    out.push_back(x);
  }

  // Two paths ending on the same simple root means one of them jumped.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const double sep = std::abs(out[i] - out[j]);
      if (sep < 1e-7 * std::max(1.0, std::abs(out[i])) &&
          std::abs(path.target.derivative(out[i])) > 1e-6 * path.target.scale()) {
        throw Error(ErrorKind::TrackingFailure, "two paths converged to the same root");
      }
    }
  }
  return out;
}

SolveResult solve(const Poly& target, const SolveOptions& opt) {
  if (opt.max_attempts < 1) throw Error(ErrorKind::Domain, "need at least one attempt");
  for (int attempt = 1;; ++attempt) {
    Rng rng = Rng::for_case(opt.seed, 0x67616d6d61ULL, static_cast<std::uint64_t>(attempt));
    const cplx gamma = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const int steps = opt.steps << (attempt - 1);
    try {
      return {track(ContinuationPath::standard(target, gamma, steps)), attempt, steps};
    } catch (const Error& e) {
      if (attempt >= opt.max_attempts ||
          (e.kind() != ErrorKind::TrackingFailure && e.kind() != ErrorKind::Singularity)) {
        throw;
      }
    }
  }
}

std::array<double, 3> quadratic_sensitivities(double a, double b, double c, double x) {
  const double d = 2.0 * a * x + b;
  const double scale = std::max({std::abs(a) * std::max(1.0, std::abs(x)), std::abs(b), std::abs(c)});
  if (std::abs(d) <= 1e-12 * scale) throw Error(ErrorKind::Singularity, "repeated root: 2ax + b vanishes");
  return {-x * x / d, -x / d, -1.0 / d};
}

std::vector<cplx> oracle_roots(const Poly& p) {
  const int n = p.degree();
  std::vector<cplx> a(p.coeffs());
  const cplx lead = a.back();
  for (auto& c : a) c /= lead;
  const Poly monic(a);

  // Start on the circle whose radius is the geometric mean of the root moduli.
  double radius = std::pow(std::abs(a.front()), 1.0 / n);
  if (!(radius > 1e-6)) radius = 1.0;
  std::vector<cplx> z;
  for (int k = 0; k < n; ++k) z.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4));

  for (int it = 0; it < 1000; ++it) {
    double max_update = 0.0, max_mod = 1.0;
    for (int i = 0; i < n; ++i) {
      cplx denom = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const cplx update = monic(z[i]) / denom;
      z[i] -= update;
      max_update = std::max(max_update, std::abs(update));
      max_mod = std::max(max_mod, std::abs(z[i]));
    }
    if (max_update < 1e-12 * max_mod) return z;
  }
  throw Error(ErrorKind::OracleFailure, "simultaneous iteration did not converge in 1000 iterations");
}

std::vector<std::size_t> optimal_matching(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::Domain, "root lists differ in length");
  if (n > 20) throw Error(ErrorKind::Domain, "matching supports at most 20 roots");

  // best[mask]: smallest achievable max distance assigning a[0..popcount) to
  // the b entries in mask.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<double> best(full + 1, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> choice(full + 1, 0);
  best[0] = 0.0;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (best[mask] == std::numeric_limits<double>::infinity()) continue;
    const auto i = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t next = mask | (std::size_t{1} << j);
      const double cost = std::max(best[mask], std::abs(a[i] - b[j]));
      if (cost < best[next]) {
        best[next] = cost;
        choice[next] = j;
      }
    }
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t mask = full, i = n; i-- > 0;) {
    perm[i] = choice[mask];
    mask &= ~(std::size_t{1} << choice[mask]);
  }
  return perm;
}

double matching_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const auto perm = optimal_matching(a, b);
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[perm[i]]));
  return d;
}

Poly random_real_poly(Rng& rng, int degree) {
  std::vector<double> a(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k < degree; ++k) a[static_cast<std::size_t>(k)] = rng.uniform(-5.0, 5.0);
  a.back() = 1.0;
  return Poly::from_real(a);
}

}  // namespace geodiff::polyroots
