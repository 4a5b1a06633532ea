#include "penner/horocycle.hpp"

#include <cmath>

namespace penner {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Signed arc-length coordinate along a horocycle circle, measured from the
// topmost point. phi is the angle of the point around the circle center.
// Valid away from the bottom point phi = -pi/2, which is the base on the
// real axis (infinite distance). Monotone in phi on (-pi/2, 3pi/2), and the
// metric ds = dphi / (1 + sin phi) does not depend on the circle size.
double arc_coord_from_top(double phi) {
  if (phi <= -kPi / 2.0) phi += 2.0 * kPi;
  const double t = std::tan(phi / 2.0);
  return -2.0 / (1.0 + t);
}

double angle_on_circle(double px, double py, double cx, double cy) {
  return std::atan2(py - cy, px - cx);
}

}  // namespace

UhpHorocycle to_uhp(const Horocycle& h) {
  if (h.x == 0.0 && h.y == 0.0)
    throw std::domain_error("to_uhp: zero vector is not a horocycle");
  if (h.y == 0.0) return {true, 0.0, h.x * h.x};
  return {false, h.x / h.y, 1.0 / (h.y * h.y)};
}

double lambda_tangent_oracle(const UhpHorocycle& h1, const UhpHorocycle& h2) {
  if (h1.at_infinity && h2.at_infinity)
    throw std::domain_error("lambda_tangent_oracle: both based at infinity");
  if (!(h1.size > 0.0) || !(h2.size > 0.0))
    throw std::domain_error("lambda_tangent_oracle: sizes must be positive");

  if (h1.at_infinity || h2.at_infinity) {
    const UhpHorocycle& line = h1.at_infinity ? h1 : h2;
    const UhpHorocycle& circ = h1.at_infinity ? h2 : h1;
    const double y = line.size;  // tangent horocycle has diameter y
    const double xi = circ.base + std::sqrt(y * circ.size);
    const double r = y / 2.0;
    const double cx = xi, cy = r;
    // Tangency with the line is the top point; tangency with the circle lies
    // on the segment of centers.
    const double hx = circ.base, hy = circ.size / 2.0;
    const double dist = std::hypot(hx - cx, hy - cy);
    const double tx = cx + r * (hx - cx) / dist;
    const double ty = cy + r * (hy - cy) / dist;
    const double phi = angle_on_circle(tx, ty, cx, cy);
    return std::abs(arc_coord_from_top(phi) - arc_coord_from_top(kPi / 2.0));
  }

  const double p = h1.base, s = h1.size;
  const double q = h2.base, sp = h2.size;
  if (p == q)
    throw std::domain_error("lambda_tangent_oracle: equal base points");

  // Tangent horocycle based between the two inputs: solving the pair of
  // external-tangency conditions (xi-p)^2 = sigma*s, (xi-q)^2 = sigma*sp.
  const double rs = std::sqrt(s), rsp = std::sqrt(sp);
  const double xi = (p * rsp + q * rs) / (rs + rsp);
  const double sigma = (xi - p) * (xi - p) / s;
  const double r = sigma / 2.0;
  const double cx = xi, cy = r;

  auto tangency_angle = [&](double hbase, double hsize) {
    const double hx = hbase, hy = hsize / 2.0;
    const double dist = std::hypot(hx - cx, hy - cy);
    const double tx = cx + r * (hx - cx) / dist;
    const double ty = cy + r * (hy - cy) / dist;
    return angle_on_circle(tx, ty, cx, cy);
  };

  const double phi1 = tangency_angle(p, s);
  const double phi2 = tangency_angle(q, sp);
  return std::abs(arc_coord_from_top(phi1) - arc_coord_from_top(phi2));
}

}  // namespace penner
