#pragma once

#include <random>
#include <string>
#include <vector>

#include "penner/combinatorics.hpp"
#include "penner/horocycle.hpp"
#include "penner/lifting.hpp"
#include "penner/sl2.hpp"

namespace penner {

// Chart datum: positive value per edge (lambda-lengths) and a sign per
// triangle. Signs are stored unconstrained; membership in the coordinate
// chart (exactly one negative triangle and vanishing constraint there) is a
// checked predicate, not a type invariant, because the Euler-number analysis
// deliberately evaluates the holonomy construction off-chart.
struct CoordinatePoint {
  Triangulation tri;
  std::vector<double> f;    // indexed by EdgeId
  std::vector<int> eps;     // indexed by TriangleId, values +-1
};

// Signed transport parameter of the short edge s(k) in its canonical
// direction: eps(t) * a / (b c) with a the edge value opposite the corner and
// b, c the values of the two corner sides.
template <class S>
S short_transport_param(const Triangulation& tri, const std::vector<S>& f,
                        const std::vector<int>& eps, HalfEdge k) {
  const S& a = f[tri.edge_of(tri.next(k))];
  const S& b = f[tri.edge_of(tri.prev(k))];
  const S& c = f[tri.edge_of(k)];
  return S(eps[tri.triangle_of(k)]) * a / (b * c);
}

// Parallel transports over the truncated complex: w(f(e)) along every edge
// remnant and u(short_transport_param) along every boundary arc, plus the
// base decoration (the horocycle (1,0), fixed by all boundary transports).
struct DecoratedRep {
  Triangulation tri;
  std::vector<double> long_param;   // per edge: f(e)
  std::vector<double> short_param;  // per half-edge k: canonical direction
  HalfEdge base = 0;
  Horocycle h0{1.0, 0.0};
};

DecoratedRep build_transports(const CoordinatePoint& point);

// Holonomy of a loop word in the corner graph, transports composed
// left-to-right along the path. Throws NotALoop for open words.
Mat2d holonomy(const DecoratedRep& rep, const EdgeWord& word);

// lambda-length of the loop class: distance between the base horocycle and
// its image, which is the |c| entry of the holonomy in the (1,0) decoration.
double lambda_length(const DecoratedRep& rep, const EdgeWord& word);

// Counterclockwise relator of a truncated triangle with side values a, b, c
// and sign, as an exact matrix product; equals sign * identity.
template <class S>
Mat2<S> truncated_triangle_relator(const S& a, const S& b, const S& c, int sign) {
  const S e(sign);
  return mat_w(a) * mat_u(-e * c / (a * b)) * mat_w(b) * mat_u(-e * a / (b * c)) *
         mat_w(c) * mat_u(-e * b / (c * a));
}

Mat2d hexagon_relator(const DecoratedRep& rep, TriangleId t);

// Signed chart constraint: -p_t/q_t + sum over the other triangles of
// p_s/q_s, with p = sum of squared side values and q their product; repeated
// edges contribute with multiplicity. Its zero locus is the image of the
// coordinate chart with negative triangle t.
template <class S>
S chart_constraint(const Triangulation& tri, TriangleId t, const std::vector<S>& f) {
  S total(0);
  for (TriangleId s = 0; s < tri.num_triangles(); ++s) {
    const auto& tr = tri.triangle(s);
    const S& a = f[tri.edge_of(tr[0])];
    const S& b = f[tri.edge_of(tr[1])];
    const S& c = f[tri.edge_of(tr[2])];
    const S term = (a * a + b * b + c * c) / (a * b * c);
    total += (s == t) ? -term : term;
  }
  return total;
}

// Scale of the constraint terms, for relative tolerances.
double chart_constraint_scale(const Triangulation& tri, const std::vector<double>& f);

bool is_on_chart(const CoordinatePoint& point, double rel_tol = 1e-10);

// Product of the short transports around the boundary cycle; always of the
// form +-u(sum of signed p_t/q_t), and trivial in PSL(2,R) exactly on chart
// points.
Mat2d boundary_holonomy(const CoordinatePoint& point);

// The scalar the boundary holonomy wraps: sum over triangles of
// eps(t) * p_t / q_t.
double boundary_parameter_sum(const CoordinatePoint& point);

// Euler number from the face count: 1 + N_minus - 2g.
int euler_number_formula(int genus, int n_minus);

// Euler number as the sum of lift classes over the faces of the subdivided
// complex: one rectangle per edge and one hexagon per triangle. Must agree
// with euler_number_formula for every input; this single identity exercises
// the winding kernel, the subdivision and all sign conventions end to end.
int euler_number_via_lifts(const CoordinatePoint& point);

// Face words of the subdivided complex, built from the transport data.
GeneratorWord rectangle_face_word(const DecoratedRep& rep, EdgeId e);
GeneratorWord hexagon_face_word(const DecoratedRep& rep, TriangleId t);

// Draws positive edge values and solves the chart constraint for one edge of
// the designated negative triangle (a quadratic in that value). Retries with
// adjusted draws until a positive root exists.
CoordinatePoint sample_chart_point(const Triangulation& tri, TriangleId negative,
                                   std::mt19937_64& rng, int budget = 50);

struct RecoveredCoordinates {
  std::vector<double> f;
  std::vector<int> eps;
};

// Reads the coordinates back from the holonomy: edge values as
// lambda-lengths of the edge loops, triangle signs as the sign of the cyclic
// product of the counterclockwise side holonomies normalized to positive
// lower-left entries. Exact inverse of build_transports on chart points.
RecoveredCoordinates recover_coordinates(const DecoratedRep& rep);

// Signed Ptolemy flip of the coordinate datum at a flippable edge. The new
// diagonal value and the two new triangle signs are determined by matching
// the corner transports of the two triangulations; all other edge values and
// signs are unchanged, so the result describes the same decorated
// representation in the chart of the flipped triangulation.
template <class S>
struct PtolemyFlipResult {
  Triangulation tri;
  std::vector<S> f;
  std::vector<int> eps;
  EdgeId flipped_edge;
};

template <class S>
PtolemyFlipResult<S> ptolemy_flip(const Triangulation& tri, EdgeId e,
                                  const std::vector<S>& f, const std::vector<int>& eps) {
  const Quadrilateral q = quad_around(tri, e);
  const S& fe = f[e];
  const S fa1 = f[tri.edge_of(q.a1)], fa2 = f[tri.edge_of(q.a2)];
  const S fb1 = f[tri.edge_of(q.b1)], fb2 = f[tri.edge_of(q.b2)];
  const int ea = eps[q.tri_a], eb = eps[q.tri_b];

  // Corner transport matching at the corner shared by a2 and b1:
  //   gamma * f' * e = eps_a * f(a1) f(b1) + eps_b * f(a2) f(b2).
  const S num = S(ea) * fa1 * fb1 + S(eb) * fa2 * fb2;
  bool degenerate;
  if constexpr (detail::is_exact_v<S>) {
    degenerate = num == S(0);
  } else {
    degenerate = std::abs(detail::to_double(num)) <=
                 1e-12 * (std::abs(detail::to_double(fa1 * fb1)) +
                          std::abs(detail::to_double(fa2 * fb2)));
  }
  if (degenerate)
    throw FlipDegenerate("ptolemy_flip: flipped edge has zero lambda-length");

  const int gamma = num > S(0) ? +1 : -1;
  const S fnew = (gamma > 0 ? num : -num) / fe;
  const int delta = ea * eb * gamma;

  FlipResult fr = flip(tri, e);
  PtolemyFlipResult<S> out;
  out.tri = std::move(fr.tri);
  out.flipped_edge = fr.flipped_edge;
  out.f = f;
  out.f[fr.flipped_edge] = fnew;
  out.eps = eps;
  out.eps[q.tri_a] = gamma;  // new triangle (a2, b1, diagonal)
  out.eps[q.tri_b] = delta;  // new triangle (b2, a1, diagonal)
  return out;
}

PtolemyFlipResult<double> ptolemy_flip(const CoordinatePoint& point, EdgeId e);

// Loop word of the flipped diagonal's curve class, expressed in the corner
// graph of the original triangulation: it enters the quadrilateral at the
// corner between a1 and a2, crosses the old diagonal once, and leaves at the
// corner between b1 and b2. Used to read the post-flip coordinate directly
// from the holonomy.
EdgeWord flipped_edge_loop_word(const Triangulation& tri, EdgeId e, HalfEdge base = 0);

// Coordinates of the decorated representation read in the chart of the
// flipped triangulation, computed entirely from holonomies over the original
// transports. Independent route against ptolemy_flip.
RecoveredCoordinates recover_over_flip(const DecoratedRep& rep, EdgeId e);

// Decoration rescale f -> c f; the underlying representation only moves by a
// diagonal conjugation, so all loop holonomy traces are unchanged.
std::vector<double> rescale_decoration(const std::vector<double>& f, double c);

// JSON form {"triangulation": <inline object or file path>, "f": {...},
// "eps": {...}} with edge and triangle ids as keys.
std::string to_json(const CoordinatePoint& point);
CoordinatePoint coordinate_point_from_json(const std::string& text);

}  // namespace penner
