#pragma once

// Seeded random instance generation. Every case draws from its own stream
// derived from (seed, stream, index), so results do not depend on the order
// in which cases are evaluated.

#include <cstdint>
#include <random>

#include "geodiff/geom/types.hpp"

namespace geodiff {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one case of one suite.
  static Rng for_case(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  /// Uniform in [lo, hi), built from the top 53 bits of one engine draw so
  /// the sequence is identical across standard libraries.
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct TriangleSampling {
  double lo = 0.1;       // side range, log-uniform
  double hi = 10.0;
  double margin = 1e-3;  // relative degeneracy margin for rejection
};

geom::Triangle random_triangle(Rng& rng, const TriangleSampling& cfg = {});

/// Cyclic quadrilateral with the circumcenter strictly inside: central angles
/// drawn on the simplex with every angle in [0.15, 0.9 pi], radius
/// log-uniform in [0.5, 5].
geom::CyclicQuad random_cyclic_quad(Rng& rng);

geom::TrirectTetra random_trirect(Rng& rng, double lo = 0.1, double hi = 10.0);

}  // namespace geodiff
