#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "penner/errors.hpp"

namespace penner {

using HalfEdge = int;
using EdgeId = int;
using TriangleId = int;

class Triangulation;
struct FlipResult;
FlipResult flip(const Triangulation& tri, EdgeId e);

// One-vertex triangulation of a closed oriented surface of genus g >= 2,
// stored as a rotation system: 3*(4g-2) half-edges grouped into
// counterclockwise triangles, with a fixed-point-free pairing involution
// identifying opposite half-edges of each geometric edge.
//
// A half-edge h is a directed side of its triangle (face on the left). Its
// origin end and head end are the two points where the edge remnant meets the
// boundary of the truncated surface; the head end of h is the origin end of
// opp(h). Values are immutable after construction.
class Triangulation {
 public:
  // Empty placeholder; fill via canonical/from_parts/flip.
  Triangulation() = default;

  // Fan of the 4g-gon with the standard a1 b1 a1^-1 b1^-1 ... side
  // identification. Triangle i is (v0, v_{i+1}, v_{i+2}); half-edge 3i+s is
  // its slot s. Deterministic, so tests and CLI runs are reproducible.
  static Triangulation canonical(int genus);

  // Builds from raw parts and validates every invariant.
  static Triangulation from_parts(int genus,
                                  std::vector<std::array<HalfEdge, 3>> triangles,
                                  std::vector<HalfEdge> pairing);

  int genus() const { return genus_; }
  int num_half_edges() const { return static_cast<int>(pairing_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_edges() const { return static_cast<int>(edge_rep_.size()); }

  HalfEdge next(HalfEdge h) const { return next_[h]; }
  HalfEdge prev(HalfEdge h) const { return prev_[h]; }
  HalfEdge opp(HalfEdge h) const { return pairing_[h]; }

  TriangleId triangle_of(HalfEdge h) const { return tri_of_[h]; }
  EdgeId edge_of(HalfEdge h) const { return edge_of_[h]; }
  const std::array<HalfEdge, 3>& triangle(TriangleId t) const { return triangles_[t]; }

  // Canonical representative: the smaller half-edge index of the pair.
  HalfEdge half_edge(EdgeId e) const { return edge_rep_[e]; }

  // Next origin end counterclockwise around the single vertex; equivalently
  // the successor along the boundary cycle of the truncated surface.
  HalfEdge rotate_ccw(HalfEdge h) const { return pairing_[prev_[h]]; }

  // An edge is flippable when its two sides lie in distinct triangles.
  bool is_flippable(EdgeId e) const;

  // Empty string if all invariants hold, otherwise a diagnostic naming the
  // violated invariant.
  std::string validate() const;

  int count_vertices() const;

 private:
  void build_tables();

  int genus_ = 0;
  std::vector<std::array<HalfEdge, 3>> triangles_;
  std::vector<HalfEdge> pairing_;

  // Derived tables.
  std::vector<HalfEdge> next_, prev_;
  std::vector<TriangleId> tri_of_;
  std::vector<EdgeId> edge_of_;
  std::vector<HalfEdge> edge_rep_;

  friend FlipResult flip(const Triangulation&, EdgeId);
};

// Half-edge indices and the pairing are preserved by a flip, so every edge
// keeps its id; the returned id marks the edge whose role changed (the new
// diagonal of the quadrilateral). Triangle ids are reused in place.
struct FlipResult {
  Triangulation tri;
  EdgeId flipped_edge;
};

// The quadrilateral around a flippable edge. With h the representative
// half-edge of the diagonal, the triangle of h is (h, a1, a2) and the
// triangle of opp(h) is (opp(h), b1, b2); the cyclic boundary order is
// a1, a2, b1, b2. Sides a1/b2 share one corner of the quadrilateral and
// a2/b1 the other, so the opposite side pairs are (a1, b1) and (a2, b2).
struct Quadrilateral {
  EdgeId diagonal;
  HalfEdge h;
  HalfEdge a1, a2, b1, b2;
  TriangleId tri_a, tri_b;
  bool coincide_a1_b1;  // edge(a1) == edge(b1) geometrically
  bool coincide_a2_b2;
};

Quadrilateral quad_around(const Triangulation& tri, EdgeId e);

// Truncated complex: each triangle becomes a hexagon whose long sides are the
// edge remnants and whose short sides are boundary arcs of the removed disk.
// The short edge s(k) spans the corner at the origin of half-edge k, between
// sides prev(k) and k; its canonical orientation runs from the k-side end
// O(k) to the prev(k)-side end, which is the counterclockwise direction along
// the boundary of the removed disk. Short edges are indexed by k itself.
class TruncatedComplex {
 public:
  explicit TruncatedComplex(Triangulation tri) : tri_(std::move(tri)) {}

  const Triangulation& base() const { return tri_; }

  int num_hexagons() const { return tri_.num_triangles(); }
  int num_short_edges() const { return tri_.num_half_edges(); }

  // Successor of a short edge along the boundary cycle (canonical direction).
  HalfEdge boundary_next(HalfEdge k) const { return tri_.rotate_ccw(k); }

  // The full boundary cycle starting from a given short edge.
  std::vector<HalfEdge> boundary_cycle(HalfEdge start = 0) const;

  // Counterclockwise side sequence of the hexagon of triangle t, as pairs
  // (is_long, half-edge). Short sides appear against their canonical
  // orientation in this traversal.
  std::vector<std::pair<bool, HalfEdge>> hexagon_sides(TriangleId t) const;

 private:
  Triangulation tri_;
};

inline TruncatedComplex truncate(const Triangulation& tri) {
  return TruncatedComplex(tri);
}

// A loop in the corner graph of the truncated surface, based at the origin
// end of a fixed half-edge. Steps are boundary arcs or longitudinal
// traversals of edge remnants.
struct WordStep {
  enum class Kind : std::uint8_t { ShortArc, LongCross };
  Kind kind;
  HalfEdge h;
  // ShortArc: +1 traverses s(h) canonically from O(h), -1 the reverse.
  // LongCross direction is carried by h itself (O(h) -> O(opp h)).
  int dir = +1;

  friend bool operator==(const WordStep&, const WordStep&) = default;
};

struct EdgeWord {
  HalfEdge base = 0;
  std::vector<WordStep> steps;
};

// Loop class of a directed edge: boundary arcs from the base corner to O(h),
// one traversal of the remnant of h, boundary arcs back. Reversing the
// crossing direction (passing opp(h)) gives the inverse class.
EdgeWord edge_loop_word(const Triangulation& tri, HalfEdge h, HalfEdge base = 0);

bool word_is_closed(const Triangulation& tri, const EdgeWord& word);

EdgeWord inverse_word(const EdgeWord& word);
EdgeWord concat_words(const EdgeWord& a, const EdgeWord& b);

// Free reduction: cancels adjacent mutually inverse steps.
std::vector<WordStep> reduce_steps(const Triangulation& tri, std::vector<WordStep> steps);

// JSON form {"genus": g, "triangles": [[h,h,h],...], "pairing": [h,...]}
// with 0-based half-edges. The loader validates all invariants and throws
// InvalidFormat with a diagnostic naming the violated one.
std::string to_json(const Triangulation& tri);
Triangulation triangulation_from_json(const std::string& text);

}  // namespace penner
