#include <cmath>
#include <numbers>

#include "geodiff/derive/derive.hpp"
#include "geodiff/error.hpp"
#include "geodiff/geom/bisector_problem.hpp"
#include "geodiff/geom/formulas.hpp"

namespace geodiff::derive {
namespace {

namespace f = geom::formulas;

constexpr Real kPi = std::numbers::pi_v<Real>;

Real sq(Real v) { return v * v; }

// 2(y^2 z^2 + x^2 z^2 + x^2 y^2) - x^4 - y^4 - z^4, i.e. 16 A^2.
Real heron_quartic(Real x, Real y, Real z) {
  const Real x2 = x * x, y2 = y * y, z2 = z * z;
  return 2 * (y2 * z2 + x2 * z2 + x2 * y2) - x2 * x2 - y2 * y2 - z2 * z2;
}

}  // namespace

std::vector<OdeProblem> catalog() {
  std::vector<OdeProblem> out;
  auto add = [&](OdeProblem p) {
    p.id = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(p));
  };

  {
    const Real k = 0.75L;
    OdeProblem p;
    p.name = "thales";
    p.s_begin = 0, p.s_end = 4, p.anchor_value = 0;
    p.anchor_note = "y(0)=0: the two lines meet at the apex";
    p.params = {{"k", k}};
    p.rhs = [k](Real, Real) { return k; };
    p.closed_form = [k](DualR x) { return DualR(k) * x; };
    p.rk4_exact = true;
    add(p);
  }
  {
    const Real y = 3;
    OdeProblem p;
    p.name = "pythagoras";
    p.s_begin = 0, p.s_end = 4, p.anchor_value = y;
    p.anchor_note = "x=0: the triangle collapses onto the leg y";
    p.params = {{"y", y}};
    p.rhs = [](Real x, Real z) { return x / z; };
    p.closed_form = [y](DualR x) { return f::hypotenuse(x, DualR(y)); };
    add(p);
  }
  {
    const Real y = 4, z = 4;
    OdeProblem p;
    p.name = "apollonius";
    p.s_begin = 0, p.s_end = 3, p.anchor_value = z / 2;
    p.anchor_note = "x=0 with y=z: the median is half the z-side";
    p.params = {{"y", y}, {"z", z}};
    p.rhs = [](Real x, Real d) { return x / (2 * d); };
    p.closed_form = [y, z](DualR x) { return f::median(x, DualR(y), DualR(z)); };
    add(p);
  }
  {
    const Real m = 2, n = 3, y = 5;
    OdeProblem p;
    p.name = "stewart";
    p.s_begin = 0, p.s_end = 4, p.anchor_value = m;
    p.anchor_note = "x=0 with y=m+n: the gamma vertex sits on the x-side vertex, d=m";
    p.params = {{"m", m}, {"n", n}, {"y", y}};
    p.rhs = [m, n](Real x, Real d) { return n * x / ((m + n) * d); };
    p.closed_form = [m, n, y](DualR x) { return f::cevian(x, DualR(y), DualR(m), DualR(n)); };
    add(p);
  }
  {
    // A=0 at x=y+z is a singular anchor; start from the right triangle.
    const Real y = 4, z = 5;
    OdeProblem p;
    p.name = "heron";
    p.s_begin = std::sqrt(y * y + z * z), p.s_end = 3, p.anchor_value = y * z / 2;
    p.anchor_note = "right angle between y and z: A=yz/2";
    p.params = {{"y", y}, {"z", z}};
    p.rhs = [y, z](Real x, Real a) { return (x * (y * y + z * z) - x * x * x) / (8 * a); };
    p.closed_form = [y, z](DualR x) { return f::triangle_area(x, DualR(y), DualR(z)); };
    add(p);
  }
  {
    const Real x = 3, y = 4;
    OdeProblem p;
    p.name = "alkashi";
    p.s_begin = std::sqrt(x * x + y * y), p.s_end = 3, p.anchor_value = kPi / 2;
    p.anchor_note = "z^2=x^2+y^2: gamma is a right angle";
    p.params = {{"x", x}, {"y", y}};
    p.rhs = [x, y](Real z, Real g) { return z / (x * y * std::sin(g)); };
    p.closed_form = [x, y](DualR z) {
      using std::acos;
      return acos(f::cos_gamma(DualR(x), DualR(y), z));
    };
    add(p);
  }
  {
    const Real x = 3, y = 4;
    OdeProblem p;
    p.name = "terquem";
    p.s_begin = std::sqrt(x * x + y * y), p.s_end = 2;
    p.anchor_value = std::sqrt(Real(2)) * x * y / (x + y);
    p.anchor_note = "right angle at gamma: the bisector is the diagonal of the inscribed square";
    p.params = {{"x", x}, {"y", y}};
    p.rhs = [x, y](Real z, Real d) { return -z * d / (sq(x + y) - z * z); };
    p.closed_form = [x, y](DualR z) { return f::bisector_full(DualR(x), DualR(y), z); };
    add(p);
  }
  {
    const Real y = 3, z = 4;
    OdeProblem p;
    p.name = "degua";
    p.s_begin = 0, p.s_end = 2, p.anchor_value = y * z / 2;
    p.anchor_note = "x=0: the face is the right triangle with legs y, z";
    p.params = {{"y", y}, {"z", z}};
    p.rhs = [y, z](Real x, Real a) { return (y * y + z * z) * x / (4 * a); };
    p.closed_form = [y, z](DualR x) { return f::trirect_face_area(x, DualR(y), DualR(z)); };
    add(p);
  }
  {
    OdeProblem p;
    p.name = "inscribed";
    p.s_begin = 0, p.s_end = kPi, p.anchor_value = 0;
    p.anchor_note = "theta=0: both angles vanish";
    p.rhs = [](Real, Real) { return Real(0.5); };
    p.closed_form = [](DualR theta) { return f::inscribed_angle(theta); };
    p.rk4_exact = true;
    add(p);
  }
  {
    const Real y = 3, z = 4;
    OdeProblem p;
    p.name = "circumradius";
    p.s_begin = std::sqrt(y * y + z * z), p.s_end = 4, p.anchor_value = p.s_begin / 2;
    p.anchor_note = "right angle opposite x: the circumcenter is the midpoint of x";
    p.params = {{"y", y}, {"z", z}};
    p.rhs = [y, z](Real x, Real r) {
      const Real x4 = sq(x * x), y4 = sq(y * y), z4 = sq(z * z);
      return r * (x4 - y4 - z4 + 2 * y * y * z * z) / (x * heron_quartic(x, y, z));
    };
    p.closed_form = [y, z](DualR x) { return f::circumradius(x, DualR(y), DualR(z)); };
    add(p);
  }
  {
    const Real x = 2, beta = 0.7L;
    OdeProblem p;
    p.name = "sines";
    p.s_begin = kPi / 2 - beta, p.s_end = 1.1L, p.anchor_value = x * std::sin(beta);
    p.anchor_note = "beta+gamma=pi/2: right angle opposite x, y=x sin(beta)";
    p.params = {{"x", x}, {"beta", beta}};
    p.rhs = [beta](Real g, Real y) { return -y / std::tan(beta + g); };
    p.closed_form = [x, beta](DualR g) { return f::third_side(DualR(x), DualR(beta), g); };
    add(p);
  }
  {
    // The rhs is 0/0 at x=0, so there is no usable anchor.
    const Real y = 2, u = 1.5L, v = 1.8L;
    OdeProblem p;
    p.name = "ptolemy";
    p.anchored = false;
    p.s_begin = 0.5L, p.s_end = 2;
    p.anchor_note = "residual only: rhs is 0/0 at the degenerate anchor x=0";
    p.params = {{"y", y}, {"u", u}, {"v", v}};
    p.rhs = [y, u, v](Real x, Real z) {
      return u * v * (x * x - y * y + z * z) / (2 * z * (u * v + x * y) * x);
    };
    p.closed_form = [y, u, v](DualR x) { return f::ptolemy_diagonal(x, DualR(y), DualR(u), DualR(v)); };
    add(p);
  }
  {
    const Real y = 2, u = 1.5L, v = 1.8L;
    OdeProblem p;
    p.name = "brahmagupta";
    p.s_begin = 0, p.s_end = 1;
    p.anchor_value = f::triangle_area(y, u, v);
    p.anchor_note = "x=0: the quadrilateral degenerates to the triangle (y,u,v)";
    p.params = {{"y", y}, {"u", u}, {"v", v}};
    p.rhs = [y, u, v](Real x, Real a) {
      return (-x * x * x + (y * y + u * u + v * v) * x + 2 * y * u * v) / (8 * a);
    };
    p.closed_form = [y, u, v](DualR x) { return f::cyclic_quad_area(x, DualR(y), DualR(u), DualR(v)); };
    add(p);
  }
  {
    // d=0 at r=R/2 is singular; integrate upward from r=0 and stop short.
    const Real R = 1;
    OdeProblem p;
    p.name = "euler";
    p.s_begin = 0, p.s_end = 0.3L, p.anchor_value = R;
    p.anchor_note = "r->0: the incenter approaches the circle, d=R";
    p.params = {{"R", R}};
    p.rhs = [R](Real, Real d) { return -R / d; };
    p.closed_form = [R](DualR r) { return f::euler_distance(r, DualR(R)); };
    add(p);
  }
  {
    const Real x = 3, y = 4;
    OdeProblem p;
    p.name = "bispart";
    p.s_begin = std::sqrt(x * x + y * y), p.s_end = 3;
    p.anchor_value = std::sqrt(Real(2)) * x * y / (x + y + p.s_begin);
    p.anchor_note = "right angle at gamma: c = sqrt(2) r with r = xy/(x+y+z)";
    p.params = {{"x", x}, {"y", y}};
    // Sign follows from differentiating sqrt((x+y-z)/(x+y+z)).
    p.rhs = [x, y](Real z, Real c) { return -c * (x + y) / ((x + y + z) * (x + y - z)); };
    p.closed_form = [x, y](DualR z) { return f::bisector_to_incenter(DualR(x), DualR(y), z); };
    add(p);
  }
  {
    const Real y = 3, z = 4;
    OdeProblem p;
    p.name = "inradius";
    p.anchored = false;
    p.s_begin = 1.2L, p.s_end = 6.8L;
    p.anchor_note = "residual only: linear ODE, the constant is fixed by symmetry rather than an anchor";
    p.params = {{"y", y}, {"z", z}};
    p.rhs = [y, z](Real x, Real r) {
      const Real d = heron_quartic(x, y, z);
      const Real a = x * x - y * y + z * z;  // 2xz cos(beta)
      const Real b = x * x + y * y - z * z;  // 2xy cos(gamma)
      const Real coef = a * b / (x * d);
      const Real src = ((y - x) * b + (z - x) * a) / (2 * x * std::sqrt(d));
      return coef * r + src;
    };
    p.closed_form = [y, z](DualR x) { return f::inradius(x, DualR(y), DualR(z)); };
    add(p);
  }
  {
    const Real a = 1, b = 1.3L;
    OdeProblem p;
    p.name = "bisprob";
    p.anchored = false;
    p.s_begin = 0.3L, p.s_end = 2.5L;
    p.anchor_note = "residual only: z(c) is an implicit cubic root";
    p.params = {{"a", a}, {"b", b}};
    p.rhs = [a, b](Real c, Real z) {
      const Real w = z * z, s = a * a + b * b, d2 = sq(a * a - b * b);
      const Real num = z * (w - s) * (-w * w + 2 * s * w - d2);
      const Real den = w * w * w - 3 * s * w * w + 3 * d2 * w - s * d2;
      return num / (den * c);
    };
    p.closed_form = [a, b](DualR c) {
      using std::sqrt;
      return sqrt(geom::bisector_side_squared<DualR>(DualR(a), DualR(b), c));
    };
    add(p);
  }
  {
    const Real y = 3;
    OdeProblem p;
    p.name = "pyth_alt";
    p.s_begin = 0, p.s_end = 4, p.anchor_value = y;
    p.anchor_note = "x=0: the triangle collapses onto the leg y";
    p.params = {{"y", y}};
    p.rhs = [y](Real x, Real z) { return z * x / (x * x + y * y); };
    p.closed_form = [y](DualR x) { return f::hypotenuse(x, DualR(y)); };
    add(p);
  }
  {
    const Real y = 4, z = 5;
    OdeProblem p;
    p.name = "heron_alt";
    p.anchored = false;
    p.s_begin = 1.2L, p.s_end = 8.8L;
    p.anchor_note = "residual only: the constant comes from symmetry and A(1,1,sqrt 2)";
    p.params = {{"y", y}, {"z", z}};
    p.rhs = [y, z](Real x, Real a) {
      return a * (-4 * x * x * x + 4 * x * (y * y + z * z)) / (2 * heron_quartic(x, y, z));
    };
    p.closed_form = [y, z](DualR x) { return f::triangle_area(x, DualR(y), DualR(z)); };
    add(p);
  }
  {
    OdeProblem p;
    p.name = "circle_area";
    p.s_begin = 0, p.s_end = 1, p.anchor_value = 0;
    p.anchor_note = "r=0: empty disc";
    p.rhs = [](Real r, Real) { return 2 * kPi * r; };
    p.closed_form = [](DualR r) { return DualR(kPi) * r * r; };
    p.rk4_exact = true;
    add(p);
  }
  {
    OdeProblem p;
    p.name = "sphere_volume";
    p.s_begin = 0, p.s_end = 1, p.anchor_value = 0;
    p.anchor_note = "r=0: empty ball";
    p.rhs = [](Real r, Real) { return 4 * kPi * r * r; };
    p.closed_form = [](DualR r) { return DualR(4 * kPi / 3) * r * r * r; };
    p.rk4_exact = true;
    add(p);
  }
  return out;
}

OdeProblem find(const std::string& name) {
  for (auto& p : catalog()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorKind::Config, "unknown catalog entry: " + name);
}

}  // namespace geodiff::derive
