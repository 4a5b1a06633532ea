#pragma once

#include <vector>

#include "penner/teich.hpp"

namespace penner {

// A chart point on which a distinguished simple closed curve has vanishing
// lambda-length. The curve is carried by the quadrilateral around the
// distinguished edge `alpha`: it is the class of the opposite diagonal, so
// flipping at `alpha` is exactly the degenerate Ptolemy case. One of the two
// quadrilateral triangles is negative; labeling its two quadrilateral sides
// a, b and the other triangle's d (sharing a corner with a) and c (sharing
// one with b), the vanishing constraints force a = x d, b = x c for a ratio
// x in (0,1), and the diagonal value follows in closed form.
struct ZeroLocusPoint {
  CoordinatePoint point;
  EdgeId alpha = -1;
  TriangleId negative = -1;
  double x = 0.0;
  // Side roles relative to the negative triangle. In the coincident case one
  // opposite pair (side_b, side_d) is a single edge and carries x * f(c).
  EdgeId side_a = -1, side_b = -1, side_c = -1, side_d = -1;
  bool coincident = false;
};

// Builds the point from the ratio x and free positive values: `rest` is read
// for every edge outside the negative triangle (entries at alpha, a, b are
// ignored and derived). The negative triangle must be one of the two
// adjacent to alpha. Side coincidences beyond a single opposite pair raise
// ConventionMismatch.
ZeroLocusPoint build_zero_locus_point(const Triangulation& tri, EdgeId alpha,
                                      TriangleId negative, double x,
                                      const std::vector<double>& rest);

// Loop word of the distinguished curve (the diagonal opposite to alpha).
EdgeWord alpha_curve_word(const ZeroLocusPoint& p);

// Checks that the curve holonomy is upper triangular with diagonal entries
// +-{x, 1/x} and returns the recovered ratio; throws ConventionMismatch with
// a diagnostic dump when the assertions fail.
double alpha_holonomy_check(const ZeroLocusPoint& p, double rel_tol = 1e-9);

// Geodesic length of the curve against the ratio: l = -2 ln x.
double length_from_x(double x);
double x_from_length(double length);

// Coordinates of Theorem-type length charts: the geodesic length together
// with the edge values away from the negative triangle.
struct LCoordinates {
  double length = 0.0;
  std::vector<EdgeId> edges;
  std::vector<double> values;
};

LCoordinates l_coordinates(const ZeroLocusPoint& p);

// Explicit inverse: reconstructs the full point from (length, rest).
ZeroLocusPoint from_l_coordinates(const Triangulation& tri, EdgeId alpha,
                                  TriangleId negative, const LCoordinates& lc);

struct FiberCheck {
  bool equivalent = false;
  double ratio = 0.0;
};

// Two points with equal length project to the same unmarked structure
// exactly when their restricted coordinate vectors are proportional; the
// proportionality factor is the decoration rescale between them.
FiberCheck fiber_equivalent(const ZeroLocusPoint& p, const ZeroLocusPoint& q,
                            double rel_tol = 1e-9);

}  // namespace penner
