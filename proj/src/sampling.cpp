#include "geodiff/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace geodiff {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_case(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t mixed = splitmix64(state);
  state = mixed ^ (stream * 0xd1b54a32d192ed03ULL);
  mixed = splitmix64(state);
  state = mixed ^ index;
  return Rng(splitmix64(state));
}

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

double Rng::log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

geom::Triangle random_triangle(Rng& rng, const TriangleSampling& cfg) {
  for (;;) {
    const double x = rng.log_uniform(cfg.lo, cfg.hi);
    const double y = rng.log_uniform(cfg.lo, cfg.hi);
    const double z = rng.log_uniform(cfg.lo, cfg.hi);
    const double p = x + y + z;
    if (x + y - z > cfg.margin * p && y + z - x > cfg.margin * p && z + x - y > cfg.margin * p) {
      return geom::Triangle(x, y, z);
    }
  }
}

geom::CyclicQuad random_cyclic_quad(Rng& rng) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (;;) {
    std::array<double, 4> w{};
    double sum = 0.0;
    for (auto& wi : w) sum += (wi = rng.uniform(0.05, 1.0));
    bool ok = true;
    std::array<double, 4> sides{};
    const double R = rng.log_uniform(0.5, 5.0);
    for (std::size_t i = 0; i < 4; ++i) {
      const double theta = kTwoPi * w[i] / sum;
      if (theta < 0.15 || theta > 0.9 * std::numbers::pi) ok = false;
      sides[i] = 2.0 * R * std::sin(0.5 * theta);
    }
    if (ok) return geom::CyclicQuad(sides[0], sides[1], sides[2], sides[3]);
  }
}

geom::TrirectTetra random_trirect(Rng& rng, double lo, double hi) {
  return geom::TrirectTetra(rng.log_uniform(lo, hi), rng.log_uniform(lo, hi), rng.log_uniform(lo, hi));
}

}  // namespace geodiff
