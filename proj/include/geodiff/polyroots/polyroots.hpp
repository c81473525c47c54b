#pragma once

// Root tracking by continuation. Along a coefficient path a_k(t) each simple
// root obeys dx/da_k = -x^k / P'(x); chaining through da_k/dt gives an ODE in
// t, integrated by RK4 with a Newton corrector after every step.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "geodiff/sampling.hpp"

namespace geodiff::polyroots {

using cplx = std::complex<double>;

class Poly {
 public:
  /// Coefficients a_0..a_n. Throws ErrorKind::Domain if n < 1 or
  /// |a_n| <= 1e-12 max|a_k|.
  explicit Poly(std::vector<cplx> coeffs);
  static Poly from_real(const std::vector<double>& coeffs);

  int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
  const std::vector<cplx>& coeffs() const noexcept { return a_; }
  /// max_k |a_k|
  double scale() const noexcept;
  bool is_real() const noexcept;

  cplx operator()(cplx x) const noexcept;
  cplx derivative(cplx x) const noexcept;

 private:
  std::vector<cplx> a_;
};

/// x^n - 1.
Poly roots_of_unity_system(int degree);
std::vector<cplx> roots_of_unity(int degree);

struct ContinuationPath {
  /// Checks equal degrees, |gamma| = 1, steps >= 1, and that every start
  /// root satisfies the start system to 1e-10 (scaled). Throws
  /// ErrorKind::Domain otherwise.
  ContinuationPath(Poly start, std::vector<cplx> start_roots, Poly target, int steps, cplx gamma);

  /// Start system x^n - 1 with the roots of unity.
  static ContinuationPath standard(const Poly& target, cplx gamma = default_gamma(), int steps = 64);
  static cplx default_gamma();

  Poly start;
  std::vector<cplx> start_roots;
  Poly target;
  int steps;
  cplx gamma;
};

/// Roots of the target, one per start root, in start-root order. Throws
/// ErrorKind::Singularity when |P'_t(x)| < 1e-12 scale_t (message carries the
/// step index) and ErrorKind::TrackingFailure when the corrector stalls, a
/// final residual is too large, or two paths land on the same simple root.
std::vector<cplx> track(const ContinuationPath& path);

struct SolveOptions {
  int steps = 64;
  int max_attempts = 6;
  std::uint64_t seed = 0;  // drives the gamma of each attempt
};

struct SolveResult {
  std::vector<cplx> roots;
  int attempts = 1;
  int steps = 64;  // step count of the successful attempt
};

/// Tracks from x^n - 1. A failed path is not repaired step by step; the whole
/// run restarts with a fresh gamma and twice the steps, up to max_attempts.
/// A fresh gamma moves the near-singular points off the path, and the extra
/// steps cover targets with nearly repeated roots. The last error propagates.
SolveResult solve(const Poly& target, const SolveOptions& opt = {});

/// (dx/da, dx/db, dx/dc) for a root x of a x^2 + b x + c. Throws
/// ErrorKind::Singularity when 2ax + b vanishes (repeated root).
std::array<double, 3> quadratic_sensitivities(double a, double b, double c, double x);

/// Durand-Kerner iteration from perturbed roots-of-unity starts. Throws
/// ErrorKind::OracleFailure after 1000 iterations without convergence.
std::vector<cplx> oracle_roots(const Poly& p);

/// Permutation perm minimizing max_i |a[i] - b[perm[i]]| (bottleneck
/// assignment, exact for the small degrees used here).
std::vector<std::size_t> optimal_matching(const std::vector<cplx>& a, const std::vector<cplx>& b);
double matching_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Monic real polynomial with the other coefficients uniform in [-5, 5].
Poly random_real_poly(Rng& rng, int degree);

}  // namespace geodiff::polyroots
