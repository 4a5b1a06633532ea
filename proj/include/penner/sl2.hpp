#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <array>

#include "penner/errors.hpp"

namespace penner {

// Exact backend used as oracle for all purely rational identities.
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

template <class S>
constexpr bool is_exact_v = !std::is_floating_point_v<S>;

}  // namespace detail

// 2x2 unimodular matrix over an abstract scalar (double or Rational).
template <class S>
struct Mat2 {
  S a{}, b{}, c{}, d{};

  static Mat2 identity() { return {S(1), S(0), S(0), S(1)}; }

  S det() const { return a * d - b * c; }
  S trace() const { return a + d; }

  // Inverse assuming det = 1.
  Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }

  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }

  friend bool operator==(const Mat2& l, const Mat2& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
};

using Mat2d = Mat2<double>;
using Mat2q = Mat2<Rational>;

template <class S>
Mat2<S> mat_u(const S& x) {
  return {S(1), x, S(0), S(1)};
}

template <class S>
Mat2<S> mat_v(const S& x) {
  return {S(1), S(0), x, S(1)};
}

// w(e) = [[0, -1/e], [e, 0]], e > 0; has order two in PSL(2,R), so it serves
// as the transport along an edge remnant for either traversal direction.
template <class S>
Mat2<S> mat_w(const S& e) {
  if (!(e > S(0))) throw std::domain_error("mat_w: argument must be positive");
  return {S(0), S(-1) / e, e, S(0)};
}

inline Mat2d mat_u(double x) { return mat_u<double>(x); }
inline Mat2d mat_v(double x) { return mat_v<double>(x); }
inline Mat2d mat_w(double e) { return mat_w<double>(e); }

inline double frobenius_norm(const Mat2d& m) {
  return std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
}

// Equality in PSL(2,R): representatives agree up to global sign.
inline bool proj_equal(const Mat2d& l, const Mat2d& r, double rel_tol = 1e-9) {
  const double scale = std::max(frobenius_norm(l), frobenius_norm(r));
  auto dist = [&](const Mat2d& x, const Mat2d& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                     std::abs(x.c - y.c), std::abs(x.d - y.d)});
  };
  return std::min(dist(l, r), dist(l, -r)) <= rel_tol * std::max(scale, 1.0);
}

template <class S>
bool proj_equal_exact(const Mat2<S>& l, const Mat2<S>& r) {
  return l == r || l == -r;
}

template <class S>
struct UvuFactorization {
  S x, y, z;  // g = u(x) v(y) u(z)
};

// Unique factorization g = u(x) v(y) u(z) for c(g) != 0:
//   x = (a-1)/c, y = c, z = (d-1)/c.
template <class S>
UvuFactorization<S> factor_uvu(const Mat2<S>& g) {
  if constexpr (detail::is_exact_v<S>) {
    if (g.c == S(0)) throw NotFactorizable("factor_uvu: c = 0");
  } else {
    // Hard error rather than a best-effort result: downstream winding sums
    // are integers and must not absorb noise.
    if (std::abs(detail::to_double(g.c)) <= 1e-12)
      throw NotFactorizable("factor_uvu: |c| below 1e-12");
  }
  return {(g.a - S(1)) / g.c, g.c, (g.d - S(1)) / g.c};
}

template <class S>
struct Triple {
  S x, y, z;
};

// Star-triangle move: the unique positive triple with
//   v(x) u(y) v(z) = u(z') v(y') u(x').
// It is an involution and satisfies the set-theoretical tetrahedron equation.
template <class S>
Triple<S> star_triangle(const S& x, const S& y, const S& z) {
  if (!(x > S(0) && y > S(0) && z > S(0)))
    throw std::domain_error("star_triangle: inputs must be positive");
  const S n = x + z + x * y * z;
  return {x * y / n, n, y * z / n};
}

// Apply star_triangle to positions (i,j,k) of a 6-tuple, 0-based.
template <class S>
std::array<S, 6> star_triangle_at(std::array<S, 6> t, int i, int j, int k) {
  const Triple<S> r = star_triangle(t[i], t[j], t[k]);
  t[i] = r.x;
  t[j] = r.y;
  t[k] = r.z;
  return t;
}

// Translation length of a hyperbolic element: l = 2 arccosh(|tr|/2).
inline double translation_length(const Mat2d& g) {
  const double half_tr = std::abs(g.trace()) / 2.0;
  if (half_tr <= 1.0 + 5e-10)
    throw NotHyperbolic("translation_length: |trace| <= 2");
  return 2.0 * std::acosh(half_tr);
}

}  // namespace penner
