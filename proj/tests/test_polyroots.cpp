#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "geodiff/error.hpp"
#include "geodiff/polyroots/polyroots.hpp"

using namespace geodiff;
using namespace geodiff::polyroots;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no geodiff::Error thrown");
  return ErrorKind::InvariantViolation;
}

// Roots of a x^2 + b x + c without cancellation, both real.
std::array<double, 2> stable_quadratic(double a, double b, double c) {
  const double q = -0.5 * (b + std::copysign(std::sqrt(b * b - 4 * a * c), b));
  return {q / a, c / q};
}

double nearest(const std::array<double, 2>& r, double x) {
  return std::abs(r[0] - x) < std::abs(r[1] - x) ? r[0] : r[1];
}

}  // namespace

TEST_CASE("poly basics") {
  const Poly p = Poly::from_real({-6, 11, -6, 1});
  CHECK(p.degree() == 3);
  CHECK(p.is_real());
  CHECK(std::abs(p(2.0)) == 0.0);
  CHECK(std::abs(p.derivative(1.0) - cplx(2.0)) < 1e-15);
  CHECK(kind_of([] { Poly::from_real({1}); }) == ErrorKind::Domain);
  CHECK(kind_of([] { Poly::from_real({1, 2, 0}); }) == ErrorKind::Domain);
  const auto w = roots_of_unity(5);
  for (auto z : w) CHECK(std::abs(roots_of_unity_system(5)(z)) < 1e-14);
}

TEST_CASE("tracking examples") {
  const Poly target = Poly::from_real({-4, 0, 1});
  const ContinuationPath path(Poly::from_real({-1, 0, 1}), {1.0, -1.0}, target, 64, ContinuationPath::default_gamma());
  const auto r = track(path);
  CHECK(matching_distance(r, {-2.0, 2.0}) < 1e-12);

  const auto r3 = track(ContinuationPath::standard(Poly::from_real({-6, 11, -6, 1})));
  CHECK(matching_distance(r3, {1.0, 2.0, 3.0}) < 1e-8);
  CHECK(matching_distance(oracle_roots(Poly::from_real({-6, 11, -6, 1})), r3) < 1e-8);
}

TEST_CASE("identity path keeps the roots") {
  const Poly start = roots_of_unity_system(4);
  const auto w = roots_of_unity(4);
  const auto r = track(ContinuationPath(start, w, start, 16, ContinuationPath::default_gamma()));
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(r[i] - w[i]) < 1e-12);
}

TEST_CASE("path validation") {
  const Poly p = Poly::from_real({-4, 0, 1});
  CHECK(kind_of([&] { ContinuationPath(roots_of_unity_system(3), roots_of_unity(3), p, 64, 1.0); }) ==
        ErrorKind::Domain);
  CHECK(kind_of([&] { ContinuationPath(roots_of_unity_system(2), {1.0, 0.5}, p, 64, 1.0); }) ==
        ErrorKind::Domain);
  CHECK(kind_of([&] { ContinuationPath(roots_of_unity_system(2), roots_of_unity(2), p, 64, 2.0); }) ==
        ErrorKind::Domain);
  CHECK(kind_of([&] { ContinuationPath(roots_of_unity_system(2), roots_of_unity(2), p, 0, 1.0); }) ==
        ErrorKind::Domain);
}

TEST_CASE("a path through a repeated root is reported") {
  // Untwisted real path from x^2 - 1 to x^2 + 1 passes through x^2 = 0 at t = 1/2.
  const ContinuationPath path(roots_of_unity_system(2), roots_of_unity(2), Poly::from_real({1, 0, 1}), 64, 1.0);
  const auto k = kind_of([&] { track(path); });
  CHECK((k == ErrorKind::Singularity || k == ErrorKind::TrackingFailure));
}

TEST_CASE("quadratic sensitivities") {
  auto s = quadratic_sensitivities(1, 0, -1, 1);
  CHECK(s[0] == doctest::Approx(-0.5));
  CHECK(s[1] == doctest::Approx(-0.5));
  CHECK(s[2] == doctest::Approx(-0.5));
  s = quadratic_sensitivities(1, 0, -1, -1);
  CHECK(s[0] == doctest::Approx(0.5));
  CHECK(s[1] == doctest::Approx(-0.5));
  CHECK(s[2] == doctest::Approx(0.5));
  s = quadratic_sensitivities(1, -3, 2, 2);
  CHECK(s[0] == doctest::Approx(-4));
  CHECK(s[1] == doctest::Approx(-2));
  CHECK(s[2] == doctest::Approx(-1));
  CHECK(kind_of([] { quadratic_sensitivities(1, -2, 1, 1); }) == ErrorKind::Singularity);
}

TEST_CASE("sensitivities match central differences") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_case(31, 0, i);
    const double a = rng.uniform(0.5, 2), b = rng.uniform(-5, 5), c = rng.uniform(-5, -0.5);
    const double x = stable_quadratic(a, b, c)[0];
    const auto s = quadratic_sensitivities(a, b, c, x);
    const double h = 1e-7;
    std::array<double, 3> coef{a, b, c};
    for (int k = 0; k < 3; ++k) {
      auto up = coef, dn = coef;
      up[k] += h;
      dn[k] -= h;
      const double d = (nearest(stable_quadratic(up[0], up[1], up[2]), x) -
                        nearest(stable_quadratic(dn[0], dn[1], dn[2]), x)) / (2 * h);
      CHECK(std::abs(d - s[k]) <= 1e-5 * std::abs(s[k]));
    }
  }
}

TEST_CASE("oracle examples") {
  CHECK(matching_distance(oracle_roots(Poly::from_real({-4, 0, 1})), {-2.0, 2.0}) < 1e-12);
  CHECK(matching_distance(oracle_roots(Poly::from_real({-6, 11, -6, 1})), {1.0, 2.0, 3.0}) < 1e-10);
  CHECK(matching_distance(oracle_roots(Poly::from_real({1, 0, 1})), {cplx(0, 1), cplx(0, -1)}) < 1e-12);
}

TEST_CASE("optimal matching is a bottleneck assignment") {
  const std::vector<cplx> a{0.0, 1.0, 2.0};
  const std::vector<cplx> b{2.1, 0.1, 1.1};
  const auto perm = optimal_matching(a, b);
  CHECK(perm == std::vector<std::size_t>{1, 2, 0});
  CHECK(matching_distance(a, b) == doctest::Approx(0.1));
}

TEST_CASE("random real polynomials: oracle agreement, residual, conjugate symmetry") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::for_case(32, 0, i);
    const int degree = 2 + static_cast<int>(rng.next() % 7);
    const Poly p = random_real_poly(rng, degree);
    CHECK(std::abs(p.coeffs().back() - cplx(1.0)) == 0.0);
    const auto res = solve(p, {.seed = i});
    CHECK(matching_distance(res.roots, oracle_roots(p)) < 1e-6);
    std::vector<cplx> conj;
    for (auto z : res.roots) {
      CHECK(std::abs(p(z)) < 1e-8 * p.scale() * std::pow(std::max(1.0, std::abs(z)), degree));
      conj.push_back(std::conj(z));
    }
    CHECK(matching_distance(res.roots, conj) < 1e-8);
  }
}

TEST_CASE("solve is deterministic") {
  Rng rng = Rng::for_case(33, 0, 0);
  const Poly p = random_real_poly(rng, 6);
  const auto a = solve(p, {.seed = 4});
  const auto b = solve(p, {.seed = 4});
  CHECK(a.roots == b.roots);
  CHECK(a.attempts == b.attempts);
}
