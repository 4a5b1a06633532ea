#pragma once

#include "penner/sl2.hpp"

namespace penner {

// Decoration model: a horocycle is a nonzero 2-vector up to sign, based at
// the projective class [x : y] on the boundary circle.
struct Horocycle {
  double x = 1.0;
  double y = 0.0;
};

// lambda-distance in the vector model: |det of the column pair|.
// Zero exactly when the base points coincide.
inline double lambda_distance(const Horocycle& h1, const Horocycle& h2) {
  return std::abs(h1.x * h2.y - h1.y * h2.x);
}

inline Horocycle apply(const Mat2d& g, const Horocycle& h) {
  return {g.a * h.x + g.b * h.y, g.c * h.x + g.d * h.y};
}

// Upper-half-plane description: either the horizontal line Im = size, or the
// circle tangent to the real axis at `base` with Euclidean diameter `size`.
struct UhpHorocycle {
  bool at_infinity = false;
  double base = 0.0;
  double size = 1.0;
};

// Dictionary between the two models: (x, 0) is based at infinity with height
// x^2 (so (1,0) passes through i), and (x, y) with y != 0 is based at x/y
// with diameter 1/y^2.
UhpHorocycle to_uhp(const Horocycle& h);

// Geometric evaluation of the lambda-distance: construct a horocycle tangent
// to both inputs and measure the hyperbolic length of its arc between the two
// tangency points. Used as an independent oracle for lambda_distance.
// Requires distinct base points.
double lambda_tangent_oracle(const UhpHorocycle& h1, const UhpHorocycle& h2);

}  // namespace penner
