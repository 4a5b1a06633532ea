#include "penner/curves.hpp"

#include <cmath>
#include <sstream>

namespace penner {

namespace {

struct QuadRoles {
  EdgeId a, b, c, d;
  TriangleId other;
  bool coincident;  // edge(b) == edge(d)
};

// Side roles relative to the chosen negative triangle: a, b are its two
// quadrilateral sides, d shares a corner with a and c with b. The opposite
// pairs are (a, c) and (b, d); a single coincident opposite pair is allowed
// and normalized to (b, d) by mirroring the labels.
QuadRoles quad_roles(const Triangulation& tri, EdgeId alpha, TriangleId negative) {
  const Quadrilateral q = quad_around(tri, alpha);
  if (negative != q.tri_a && negative != q.tri_b)
    throw std::domain_error("quad_roles: triangle is not adjacent to the edge");

  QuadRoles r{};
  if (negative == q.tri_a) {
    r.a = tri.edge_of(q.a1);
    r.b = tri.edge_of(q.a2);
    r.c = tri.edge_of(q.b1);
    r.d = tri.edge_of(q.b2);
    r.other = q.tri_b;
  } else {
    r.a = tri.edge_of(q.b1);
    r.b = tri.edge_of(q.b2);
    r.c = tri.edge_of(q.a1);
    r.d = tri.edge_of(q.a2);
    r.other = q.tri_a;
  }

  const bool ac = r.a == r.c, bd = r.b == r.d;
  if (ac && bd)
    throw ConventionMismatch("zero locus: both opposite side pairs coincide");
  if (ac) {
    std::swap(r.a, r.b);
    std::swap(r.c, r.d);
  }
  r.coincident = r.b == r.d;

  // Any remaining coincidence pattern is outside the supported labeling.
  if (r.a == r.b || r.c == r.d || r.a == r.d || r.b == r.c)
    throw ConventionMismatch("zero locus: unsupported side coincidence pattern");
  return r;
}

}  // namespace

ZeroLocusPoint build_zero_locus_point(const Triangulation& tri, EdgeId alpha,
                                      TriangleId negative, double x,
                                      const std::vector<double>& rest) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("build_zero_locus_point: x must lie in (0,1)");
  if (static_cast<int>(rest.size()) != tri.num_edges())
    throw std::domain_error("build_zero_locus_point: rest must list every edge");

  const QuadRoles r = quad_roles(tri, alpha, negative);

  std::vector<double> f(tri.num_edges(), 0.0);
  for (EdgeId e = 0; e < tri.num_edges(); ++e) {
    if (e == alpha || e == r.a || e == r.b) continue;
    if (!(rest[e] > 0.0))
      throw std::domain_error("build_zero_locus_point: free edge values must be positive");
    f[e] = rest[e];
  }
  if (r.coincident) {
    f[r.b] = x * f[r.c];        // b = d = x c
    f[r.a] = x * x * f[r.c];    // a = x^2 c
  } else {
    f[r.a] = x * f[r.d];
    f[r.b] = x * f[r.c];
  }

  // Vanishing chart constraint at the negative triangle, solved for the
  // diagonal: its own triangle terms cancel down to a single multiple of
  // 1/(c d), and the remaining triangles do not contain the diagonal.
  double outside = 0.0;
  for (TriangleId s = 0; s < tri.num_triangles(); ++s) {
    if (s == negative || s == r.other) continue;
    const auto& ts = tri.triangle(s);
    const double sa = f[tri.edge_of(ts[0])];
    const double sb = f[tri.edge_of(ts[1])];
    const double sc = f[tri.edge_of(ts[2])];
    outside += (sa * sa + sb * sb + sc * sc) / (sa * sb * sc);
  }
  f[alpha] = f[r.c] * f[r.d] / (1.0 / (x * x) - 1.0) * outside;

  std::vector<int> eps(tri.num_triangles(), +1);
  eps[negative] = -1;

  ZeroLocusPoint p;
  p.point = CoordinatePoint{tri, std::move(f), std::move(eps)};
  p.alpha = alpha;
  p.negative = negative;
  p.x = x;
  p.side_a = r.a;
  p.side_b = r.b;
  p.side_c = r.c;
  p.side_d = r.d;
  p.coincident = r.coincident;
  return p;
}

EdgeWord alpha_curve_word(const ZeroLocusPoint& p) {
  return flipped_edge_loop_word(p.point.tri, p.alpha);
}

double alpha_holonomy_check(const ZeroLocusPoint& p, double rel_tol) {
  const DecoratedRep rep = build_transports(p.point);
  const Mat2d g = holonomy(rep, alpha_curve_word(p));
  const double scale = frobenius_norm(g);

  std::ostringstream diag;
  diag << "alpha holonomy [[" << g.a << ", " << g.b << "], [" << g.c << ", "
       << g.d << "]] for x = " << p.x;

  if (std::abs(g.c) > rel_tol * scale)
    throw ConventionMismatch("alpha_holonomy_check: lower-left entry is not zero; " +
                             diag.str());
  const double lo = std::min(std::abs(g.a), std::abs(g.d));
  const double hi = std::max(std::abs(g.a), std::abs(g.d));
  if (std::abs(lo - p.x) > rel_tol * (1.0 + p.x) ||
      std::abs(hi - 1.0 / p.x) > rel_tol * (1.0 + 1.0 / p.x))
    throw ConventionMismatch("alpha_holonomy_check: diagonal is not {x, 1/x}; " +
                             diag.str());
  return lo;
}

double length_from_x(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("length_from_x: x must lie in (0,1)");
  return -2.0 * std::log(x);
}

double x_from_length(double length) {
  if (!(length > 0.0)) throw std::domain_error("x_from_length: length must be positive");
  return std::exp(-length / 2.0);
}

LCoordinates l_coordinates(const ZeroLocusPoint& p) {
  LCoordinates lc;
  lc.length = length_from_x(p.x);
  const Triangulation& tri = p.point.tri;
  for (EdgeId e = 0; e < tri.num_edges(); ++e) {
    if (e == p.alpha || e == p.side_a || e == p.side_b) continue;
    lc.edges.push_back(e);
    lc.values.push_back(p.point.f[e]);
  }
  return lc;
}

ZeroLocusPoint from_l_coordinates(const Triangulation& tri, EdgeId alpha,
                                  TriangleId negative, const LCoordinates& lc) {
  std::vector<double> rest(tri.num_edges(), 1.0);
  for (size_t i = 0; i < lc.edges.size(); ++i) rest[lc.edges[i]] = lc.values[i];
  return build_zero_locus_point(tri, alpha, negative, x_from_length(lc.length), rest);
}

FiberCheck fiber_equivalent(const ZeroLocusPoint& p, const ZeroLocusPoint& q,
                            double rel_tol) {
  if (p.alpha != q.alpha || p.negative != q.negative)
    throw std::domain_error("fiber_equivalent: points live on different loci");
  const LCoordinates lp = l_coordinates(p), lq = l_coordinates(q);
  if (std::abs(lp.length - lq.length) > 1e-9 * (1.0 + lp.length))
    throw std::domain_error("fiber_equivalent: lengths differ");

  const double ratio = lq.values.front() / lp.values.front();
  for (size_t i = 0; i < lp.values.size(); ++i) {
    const double expect = ratio * lp.values[i];
    if (std::abs(lq.values[i] - expect) > rel_tol * std::abs(expect))
      return {false, 0.0};
  }
  return {true, ratio};
}

}  // namespace penner
