#include <doctest.h>

#include <cstring>
#include <vector>

#include "geodiff/error.hpp"
#include "geodiff/geom/batch.hpp"
#include "geodiff/geom/theorems.hpp"
#include "geodiff/sampling.hpp"

using namespace geodiff;
using namespace geodiff::geom;

namespace {

double scalar_op(batch::Op op, const Triangle& t) {
  switch (op) {
    case batch::Op::Hypotenuse: return hypotenuse(t.x(), t.y());
    case batch::Op::Median: return median(t);
    case batch::Op::TriangleArea: return triangle_area(t);
    case batch::Op::BisectorFull: return bisector_full(t);
    case batch::Op::BisectorToIncenter: return bisector_to_incenter(t);
    case batch::Op::Circumradius: return circumradius(t);
    case batch::Op::Inradius: return inradius(t);
  }
  return 0;
}

std::vector<Triangle> sample(std::size_t n) {
  std::vector<Triangle> ts;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = Rng::for_case(5, 9, i);
    ts.push_back(random_triangle(rng));
  }
  return ts;
}

}  // namespace

TEST_CASE("scalar kernels match the scalar ops bitwise") {
  // 1003 exercises the vector tails.
  const auto ts = sample(1003);
  const batch::TriangleSoA soa(ts);
  std::vector<double> out(ts.size());
  for (auto op : batch::kAllOps) {
    batch::evaluate(op, soa, out, batch::Isa::Scalar);
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(out[i] == scalar_op(op, ts[i]));
  }
}

TEST_CASE("every available variant matches the scalar reference bitwise") {
  const auto ts = sample(1003);
  const batch::TriangleSoA soa(ts);
  std::vector<double> ref(ts.size()), out(ts.size());
  for (auto isa : {batch::Isa::Avx2, batch::Isa::Neon}) {
    if (!batch::isa_available(isa)) continue;
    for (auto op : batch::kAllOps) {
      batch::evaluate(op, soa, ref, batch::Isa::Scalar);
      batch::evaluate(op, soa, out, isa);
      CAPTURE(batch::isa_name(isa));
      CAPTURE(batch::op_name(op));
      CHECK(std::memcmp(ref.data(), out.data(), ref.size() * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("short inputs and dispatch") {
  CHECK(batch::isa_available(batch::Isa::Scalar));
  CHECK(batch::isa_available(batch::best_isa()));
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u}) {
    const auto ts = sample(n);
    const batch::TriangleSoA soa(ts);
    std::vector<double> out(n);
    batch::evaluate(batch::Op::Median, soa, out);
    for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == median(ts[i]));
  }
}

TEST_CASE("length mismatch is a domain error") {
  std::vector<double> x{1, 2}, y{1, 2}, z{1}, out(2);
  CHECK_THROWS_AS(batch::evaluate(batch::Op::Median, x, y, z, out, batch::Isa::Scalar), Error);
}
