#pragma once

// Forward-mode dual numbers: a value and its derivative with respect to one
// designated input. Every closed form in geom/formulas.hpp is a template over
// its scalar type, so evaluating it on Dual<T> yields the partial derivative
// alongside the value.

#include <cmath>
#include <ostream>

namespace geodiff::homogeneity {

template <typename T>
struct Dual {
  T val{};
  T der{};

  constexpr Dual() = default;
  constexpr Dual(T v) : val(v), der(T(0)) {}  // NOLINT: implicit lift of constants
  constexpr Dual(T v, T d) : val(v), der(d) {}

  static constexpr Dual variable(T v) { return {v, T(1)}; }

  constexpr Dual operator-() const { return {-val, -der}; }
  constexpr Dual& operator+=(const Dual& o) { val += o.val; der += o.der; return *this; }
  constexpr Dual& operator-=(const Dual& o) { val -= o.val; der -= o.der; return *this; }
  constexpr Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
  constexpr Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

  friend constexpr Dual operator+(const Dual& a, const Dual& b) { return {a.val + b.val, a.der + b.der}; }
  friend constexpr Dual operator-(const Dual& a, const Dual& b) { return {a.val - b.val, a.der - b.der}; }
  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.val * b.val, a.der * b.val + a.val * b.der};
  }
  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    const T q = a.val / b.val;
    return {q, (a.der - q * b.der) / b.val};
  }

  friend constexpr bool operator<(const Dual& a, const Dual& b) { return a.val < b.val; }
  friend constexpr bool operator>(const Dual& a, const Dual& b) { return a.val > b.val; }
  friend constexpr bool operator<=(const Dual& a, const Dual& b) { return a.val <= b.val; }
  friend constexpr bool operator>=(const Dual& a, const Dual& b) { return a.val >= b.val; }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << d.val << " + " << d.der << "e";
  }
};

template <typename T>
Dual<T> sqrt(const Dual<T>& a) {
  using std::sqrt;
  const T r = sqrt(a.val);
  return {r, a.der / (T(2) * r)};
}

template <typename T>
Dual<T> sin(const Dual<T>& a) {
  using std::cos, std::sin;
  return {sin(a.val), a.der * cos(a.val)};
}

template <typename T>
Dual<T> cos(const Dual<T>& a) {
  using std::cos, std::sin;
  return {cos(a.val), -a.der * sin(a.val)};
}

template <typename T>
Dual<T> tan(const Dual<T>& a) {
  using std::tan;
  const T t = tan(a.val);
  return {t, a.der * (T(1) + t * t)};
}

template <typename T>
Dual<T> acos(const Dual<T>& a) {
  using std::acos, std::sqrt;
  return {acos(a.val), -a.der / sqrt(T(1) - a.val * a.val)};
}

template <typename T>
Dual<T> asin(const Dual<T>& a) {
  using std::asin, std::sqrt;
  return {asin(a.val), a.der / sqrt(T(1) - a.val * a.val)};
}

template <typename T>
Dual<T> abs(const Dual<T>& a) {
  return a.val < T(0) ? -a : a;
}

template <typename T>
bool isfinite(const Dual<T>& a) {
  using std::isfinite;
  return isfinite(a.val) && isfinite(a.der);
}

/// Plain value of a scalar or dual.
template <typename T>
constexpr T value_of(const T& v) { return v; }
template <typename T>
constexpr T value_of(const Dual<T>& v) { return v.val; }

}  // namespace geodiff::homogeneity
