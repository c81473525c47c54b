#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "geodiff/cli/cli.hpp"
#include "geodiff/derive/derive.hpp"
#include "geodiff/error.hpp"
#include "geodiff/geom/batch.hpp"
#include "geodiff/geom/bisector_problem.hpp"
#include "geodiff/geom/theorems.hpp"
#include "geodiff/homogeneity/homogeneity.hpp"
#include "geodiff/oracle/oracle.hpp"
#include "geodiff/polyroots/polyroots.hpp"
#include "geodiff/sampling.hpp"

namespace geodiff::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Random streams, one per suite (scale adds the registry index).
constexpr std::uint64_t kStreamTheorems = 1;
constexpr std::uint64_t kStreamScale = 0x300;
constexpr std::uint64_t kStreamRoots = 4;

double rel(double actual, double expected) {
  const double gap = std::abs(actual - expected);
  return expected == 0.0 ? gap : gap / std::abs(expected);
}

Record make(const char* suite, std::uint64_t id, std::string op, std::initializer_list<double> in, double expected,
            double actual, double err, bool pass) {
  Record r;
  r.suite = suite;
  r.case_id = id;
  r.op = std::move(op);
  std::size_t k = 0;
  for (double v : in) {
    if (k < r.in.size()) r.in[k++] = v;
  }
  r.expected = expected;
  r.actual = actual;
  r.rel_err = err;
  r.pass = pass && std::isfinite(err);
  return r;
}

// Runs fn; a geodiff::Error becomes a failing record with NaN results.
template <typename Fn>
Record guarded(const char* suite, std::uint64_t id, const std::string& op, Fn fn) {
  try {
    return fn();
  } catch (const Error&) {
    return make(suite, id, op, {}, kNaN, kNaN, kNaN, false);
  }
}

struct TheoremCase {
  geom::Triangle tri;
  double split;   // m as a fraction of z
  geom::TrirectTetra trirect;
  double theta;
  double leg, beta, gamma;
  geom::CyclicQuad quad;
};

TheoremCase draw_theorem_case(Rng& rng) {
  const auto tri = random_triangle(rng);
  const double split = rng.uniform(0.05, 0.95);
  const auto tt = random_trirect(rng);
  const double theta = rng.uniform(0.01, 2.0 * std::numbers::pi - 0.01);
  const double leg = rng.log_uniform(0.1, 10.0);
  double beta = 0.0, gamma = 0.0;
  do {
    beta = rng.uniform(0.05, 3.0);
    gamma = rng.uniform(0.05, 3.0);
  } while (!(beta + gamma < std::numbers::pi - 0.05));
  const auto quad = random_cyclic_quad(rng);
  return {tri, split, tt, theta, leg, beta, gamma, quad};
}

}  // namespace

void run_theorems(const RunConfig& cfg, std::vector<Record>& out) {
  namespace o = oracle;
  namespace q = oracle::quantity;
  namespace batch = geom::batch;
  const char* S = "theorems";
  const double tol = cfg.tol.value_or(1e-9);
  const double round_trip_tol = 1e-8;

  std::vector<TheoremCase> cases;
  std::vector<geom::Triangle> tris;
  cases.reserve(cfg.cases);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    Rng rng = Rng::for_case(cfg.seed, kStreamTheorems, i);
    cases.push_back(draw_theorem_case(rng));
    tris.push_back(cases.back().tri);
  }

  // Square-root theorems go through the dispatched SIMD kernels; each value
  // must equal the scalar op bit for bit and match the oracle.
  const batch::TriangleSoA soa(tris);
  std::vector<std::vector<double>> batched;
  for (batch::Op op : batch::kAllOps) {
    batched.emplace_back(soa.size());
    batch::evaluate(op, soa, batched.back());
  }
  auto batched_value = [&](batch::Op op, std::size_t i) { return batched[static_cast<std::size_t>(op)][i]; };

  for (std::uint64_t id = 0; id < cfg.cases; ++id) {
    const auto& c = cases[id];
    const auto& t = c.tri;
    const double x = t.x(), y = t.y(), z = t.z();
    const auto e = o::embed_triangle(t);

    auto oracle_record = [&](const std::string& op, std::initializer_list<double> in, double expected,
                             double actual) {
      const double err = rel(actual, expected);
      return make(S, id, op, in, expected, actual, err, err < tol);
    };
    auto batch_record = [&](batch::Op op, std::initializer_list<double> in, double scalar, double expected) {
      const double v = batched_value(op, id);
      const double err = rel(v, expected);
      return make(S, id, std::string(batch::op_name(op)), in, expected, v, err, err < tol && v == scalar);
    };

    out.push_back(guarded(S, id, "hypotenuse", [&] {
      return batch_record(batch::Op::Hypotenuse, {x, y}, geom::hypotenuse(x, y), o::right_triangle_hypotenuse(x, y));
    }));
    out.push_back(guarded(S, id, "median", [&] {
      return batch_record(batch::Op::Median, {x, y, z}, geom::median(t), o::measure(e, q::Median{}));
    }));
    out.push_back(guarded(S, id, "cevian", [&] {
      const double m = c.split * z, n = z - m;
      return oracle_record("cevian", {x, y, m, n}, o::measure(e, q::Cevian{m, n}),
                           geom::cevian(t, geom::CevianSplit(m, n)));
    }));
    out.push_back(guarded(S, id, "triangle_area", [&] {
      return batch_record(batch::Op::TriangleArea, {x, y, z}, geom::triangle_area(t), o::measure(e, q::Area{}));
    }));
    out.push_back(guarded(S, id, "angle_from_sides", [&] {
      return oracle_record("angle_from_sides", {x, y, z}, o::measure(e, q::AngleGamma{}), geom::angle_from_sides(t));
    }));
    out.push_back(guarded(S, id, "bisector_full", [&] {
      return batch_record(batch::Op::BisectorFull, {x, y, z}, geom::bisector_full(t),
                          o::measure(e, q::BisectorFull{}));
    }));
    out.push_back(guarded(S, id, "bisector_to_incenter", [&] {
      return batch_record(batch::Op::BisectorToIncenter, {x, y, z}, geom::bisector_to_incenter(t),
                          o::measure(e, q::BisectorToIncenter{}));
    }));
    out.push_back(guarded(S, id, "incenter_ratio", [&] {
      const double ratio = o::measure(e, q::BisectorToIncenter{}) / o::measure(e, q::BisectorFull{});
      return oracle_record("incenter_ratio", {x, y, z}, ratio, geom::incenter_ratio(t));
    }));
    out.push_back(guarded(S, id, "trirect_face_area", [&] {
      const auto& tt = c.trirect;
      return oracle_record("trirect_face_area", {tt.x, tt.y, tt.z}, o::measure_trirect(tt),
                           geom::trirect_face_area(tt));
    }));
    out.push_back(guarded(S, id, "inscribed_angle", [&] {
      return oracle_record("inscribed_angle", {c.theta}, o::inscribed_angle_on_circle(c.theta),
                           geom::inscribed_angle(c.theta));
    }));
    out.push_back(guarded(S, id, "circumradius", [&] {
      return batch_record(batch::Op::Circumradius, {x, y, z}, geom::circumradius(t),
                          o::measure(e, q::Circumradius{}));
    }));
    out.push_back(guarded(S, id, "inradius", [&] {
      return batch_record(batch::Op::Inradius, {x, y, z}, geom::inradius(t), o::measure(e, q::Inradius{}));
    }));
    out.push_back(guarded(S, id, "euler_distance", [&] {
      const geom::IncirclePair p(geom::inradius(t), geom::circumradius(t));
      return oracle_record("euler_distance", {p.r, p.R}, o::measure(e, q::EulerDistance{}), geom::euler_distance(p));
    }));
    out.push_back(guarded(S, id, "third_side", [&] {
      return oracle_record("third_side", {c.leg, c.beta, c.gamma},
                           o::third_side_by_construction(c.leg, c.beta, c.gamma),
                           geom::third_side(c.leg, c.beta, c.gamma));
    }));
    const auto& qd = c.quad;
    out.push_back(guarded(S, id, "ptolemy_diagonal", [&] {
      return oracle_record("ptolemy_diagonal", {qd.x(), qd.y(), qd.u(), qd.v()},
                           o::cyclic_diagonal(o::embed_cyclic(qd)), geom::ptolemy_diagonal(qd));
    }));
    out.push_back(guarded(S, id, "cyclic_quad_area", [&] {
      return oracle_record("cyclic_quad_area", {qd.x(), qd.y(), qd.u(), qd.v()}, o::cyclic_area(o::embed_cyclic(qd)),
                           geom::cyclic_quad_area(qd));
    }));
    out.push_back(guarded(S, id, "bisector_problem_solve", [&] {
      const auto seg = geom::incenter_segments(t);
      const auto back = geom::bisector_problem_solve(seg[0], seg[1], seg[2]);
      const double err = std::max({rel(back.x(), x), rel(back.y(), y), rel(back.z(), z)});
      return make(S, id, "bisector_problem_solve", {seg[0], seg[1], seg[2]}, z, back.z(), err,
                  err < cfg.tol.value_or(round_trip_tol));
    }));
  }
}

void run_derive(const RunConfig& cfg, std::vector<Record>& out,
                std::map<std::string, std::optional<double>>& orders) {
  const char* S = "derive";
  const double endpoint_tol = cfg.tol.value_or(1e-7);
  const double residual_tol = 1e-8;
  const double exact_tol = 1e-12;
  const std::size_t samples = std::max<std::uint64_t>(2, cfg.cases);
  const std::vector<derive::Real> hs(cfg.h_values.begin(), cfg.h_values.end());

  derive::Real pyth_end = 0, pyth_alt_end = 0;
  for (const auto& p : derive::catalog()) {
    const auto id = static_cast<std::uint64_t>(p.id);
    if (p.anchored) {
      out.push_back(guarded(S, id, p.name, [&] {
        const auto rep = derive::convergence(p, hs, samples);
        const double expected = static_cast<double>(p.closed(p.s_end));
        const double actual = static_cast<double>(integrate(p, hs.back()));
        const double abs_err = static_cast<double>(rep.errors.back());
        bool ok = abs_err < endpoint_tol;
        std::optional<double> order;
        if (rep.order) {
          order = static_cast<double>(*rep.order);
          ok = ok && *order >= 3.5 && *order <= 4.5;
        } else {
          for (auto err : rep.errors) ok = ok && err <= exact_tol;
        }
        orders[p.name] = order;
        Record r = make(S, id, p.name, {}, expected, actual, rel(actual, expected), ok);
        r.in = {order, static_cast<double>(hs.back()), abs_err, std::nullopt, std::nullopt};
        return r;
      }));
      if (p.name == "pythagoras") pyth_end = derive::integrate(p, hs.back());
      if (p.name == "pyth_alt") pyth_alt_end = derive::integrate(p, hs.back());
    }
    out.push_back(guarded(S, id, p.name + ":residual", [&] {
      const auto rep = derive::residual(p, samples);
      const double r = static_cast<double>(rep.max_relative);
      return make(S, id, p.name + ":residual",
                  {static_cast<double>(rep.evaluated), static_cast<double>(rep.skipped.size())}, 0.0, r, r,
                  r < residual_tol && rep.evaluated > 0);
    }));
  }
  {
    const double e = static_cast<double>(pyth_end), a = static_cast<double>(pyth_alt_end);
    const double err = rel(a, e);
    out.push_back(make(S, 22, "pyth_alt~pythagoras", {static_cast<double>(hs.back())}, e, a, err, err < 1e-8));
  }
}

void run_scale(const RunConfig& cfg, std::vector<Record>& out) {
  const char* S = "scale";
  const double tol = cfg.tol.value_or(1e-10);
  const double lambda_tol = 1e-12;
  const auto reg = homogeneity::registry();
  for (std::uint64_t id = 0; id < cfg.cases; ++id) {
    for (std::size_t k = 0; k < reg.size(); ++k) {
      const auto& fd = reg[k];
      Rng rng = Rng::for_case(cfg.seed, kStreamScale + k, id);
      const auto point = fd.sample(rng);
      Record r;
      r.in = {};
      for (std::size_t j = 0; j < point.size() && j < r.in.size(); ++j) r.in[j] = point[j];

      out.push_back(guarded(S, id, fd.name, [&] {
        const double f = fd.value(point);
        double sum = 0.0;
        for (std::size_t j = 0; j < fd.arity(); ++j) sum += fd.dims[j] * point[j] * fd.partial(point, j);
        const double res = homogeneity::scale_residual(fd, point);
        Record x = make(S, id, fd.name, {}, fd.n * f, sum, res, res < tol);
        x.in = r.in;
        return x;
      }));
      out.push_back(guarded(S, id, fd.name + ":scaling", [&] {
        double worst = 0.0, lam = 0.5;
        for (double l : {0.5, 2.0}) {
          const double err = homogeneity::scaling_error(fd, point, l);
          if (err >= worst) worst = err, lam = l;
        }
        std::vector<double> scaled(point);
        for (std::size_t j = 0; j < scaled.size(); ++j) {
          if (fd.dims[j] == 1) scaled[j] *= lam;
        }
        Record x = make(S, id, fd.name + ":scaling", {}, std::pow(lam, fd.n) * fd.value(point), fd.value(scaled),
                        worst, worst < lambda_tol);
        x.in = r.in;
        return x;
      }));
    }
  }
}

void run_roots(const RunConfig& cfg, std::vector<Record>& out) {
  namespace pr = polyroots;
  const char* S = "roots";
  const double tol = cfg.tol.value_or(1e-6);
  const double residual_tol = 1e-8;
  const double conj_tol = 1e-8;
  const double fd_tol = 1e-5;

  for (std::uint64_t id = 0; id < cfg.cases; ++id) {
    Rng rng = Rng::for_case(cfg.seed, kStreamRoots, id);
    const int degree = 2 + static_cast<int>(rng.next() % 7);
    const auto poly = pr::random_real_poly(rng, degree);
    const std::uint64_t path_seed = rng.next();

    out.push_back(guarded(S, id, "track", [&] {
      const auto res = pr::solve(poly, {.steps = 64, .max_attempts = 6, .seed = path_seed});
      const double dist = pr::matching_distance(res.roots, pr::oracle_roots(poly));
      double worst_residual = 0.0;
      std::vector<pr::cplx> conj;
      for (const auto& x : res.roots) {
        const double bound = poly.scale() * std::pow(std::max(1.0, std::abs(x)), degree);
        worst_residual = std::max(worst_residual, std::abs(poly(x)) / bound);
        conj.push_back(std::conj(x));
      }
      const double conj_gap = pr::matching_distance(res.roots, conj);
      return make(S, id, "track",
                  {static_cast<double>(degree), static_cast<double>(res.attempts), static_cast<double>(res.steps),
                   conj_gap, worst_residual},
                  0.0, dist, dist, dist < tol && worst_residual < residual_tol && conj_gap < conj_tol);
    }));

    // Quadratic with well separated real roots r1, r2; sensitivities at r1.
    const double a = rng.uniform(0.5, 2.0);
    double r1 = 0.0, r2 = 0.0;
    do {
      r1 = rng.uniform(-5.0, 5.0);
      r2 = rng.uniform(-5.0, 5.0);
    } while (std::abs(r1 - r2) < 0.5);
    const double b = -a * (r1 + r2), c = a * r1 * r2;
    out.push_back(guarded(S, id, "quadratic_sensitivities", [&] {
      const auto an = pr::quadratic_sensitivities(a, b, c, r1);
      // Root of the perturbed quadratic nearest r1, by the cancellation-free formula.
      auto nearest = [&](double aa, double bb, double cc) {
        const double disc = std::sqrt(bb * bb - 4.0 * aa * cc);
        const double qv = -0.5 * (bb + std::copysign(disc, bb));
        const double s1 = qv / aa, s2 = cc / qv;
        return std::abs(s1 - r1) < std::abs(s2 - r1) ? s1 : s2;
      };
      constexpr double h = 1e-7;
      const std::array<double, 3> fd{(nearest(a + h, b, c) - nearest(a - h, b, c)) / (2 * h),
                                     (nearest(a, b + h, c) - nearest(a, b - h, c)) / (2 * h),
                                     (nearest(a, b, c + h) - nearest(a, b, c - h)) / (2 * h)};
      double worst = 0.0;
      for (int k = 0; k < 3; ++k) worst = std::max(worst, rel(an[k], fd[k]));
      return make(S, id, "quadratic_sensitivities", {a, b, c, r1}, fd[2], an[2], worst, worst < fd_tol);
    }));
  }
}

}  // namespace geodiff::cli
