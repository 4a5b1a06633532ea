#include "penner/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace penner {

void Triangulation::build_tables() {
  const int n = num_half_edges();
  next_.assign(n, -1);
  prev_.assign(n, -1);
  tri_of_.assign(n, -1);
  for (TriangleId t = 0; t < num_triangles(); ++t) {
    const auto& tr = triangles_[t];
    for (int s = 0; s < 3; ++s) {
      next_[tr[s]] = tr[(s + 1) % 3];
      prev_[tr[s]] = tr[(s + 2) % 3];
      tri_of_[tr[s]] = t;
    }
  }
  edge_of_.assign(n, -1);
  edge_rep_.clear();
  for (HalfEdge h = 0; h < n; ++h) {
    if (edge_of_[h] >= 0) continue;
    const EdgeId e = static_cast<EdgeId>(edge_rep_.size());
    edge_of_[h] = e;
    edge_of_[pairing_[h]] = e;
    edge_rep_.push_back(h);
  }
}

Triangulation Triangulation::canonical(int genus) {
  if (genus < 2) throw std::domain_error("canonical: genus must be >= 2");
  const int n = 4 * genus;          // polygon sides
  const int num_tris = n - 2;       // fan triangles (v0, v_{i+1}, v_{i+2})

  Triangulation tri;
  tri.genus_ = genus;
  tri.triangles_.resize(num_tris);
  for (int i = 0; i < num_tris; ++i)
    tri.triangles_[i] = {3 * i, 3 * i + 1, 3 * i + 2};

  tri.pairing_.assign(3 * num_tris, -1);
  auto pair_up = [&](HalfEdge x, HalfEdge y) {
    tri.pairing_[x] = y;
    tri.pairing_[y] = x;
  };

  // Fan diagonals v0 -- v_{k+2}: slot 2 of triangle k against slot 0 of k+1.
  for (int k = 0; k + 1 < num_tris; ++k) pair_up(3 * k + 2, 3 * (k + 1));

  // Polygon side k = (v_k, v_{k+1}) as a half-edge of its fan triangle.
  auto side = [&](int k) -> HalfEdge {
    if (k == 0) return 0;                       // triangle 0, slot 0
    if (k == n - 1) return 3 * (num_tris - 1) + 2;  // last triangle, slot 2
    return 3 * (k - 1) + 1;                     // triangle k-1, slot 1
  };

  // Standard identification a1 b1 a1^-1 b1^-1 a2 b2 ...: side 4j with 4j+2,
  // side 4j+1 with 4j+3. Both are traversed counterclockwise along the
  // polygon boundary, so the glued pair is automatically opposite.
  for (int j = 0; j < genus; ++j) {
    pair_up(side(4 * j), side(4 * j + 2));
    pair_up(side(4 * j + 1), side(4 * j + 3));
  }

  tri.build_tables();
  return tri;
}

Triangulation Triangulation::from_parts(int genus,
                                        std::vector<std::array<HalfEdge, 3>> triangles,
                                        std::vector<HalfEdge> pairing) {
  Triangulation tri;
  tri.genus_ = genus;
  tri.triangles_ = std::move(triangles);
  tri.pairing_ = std::move(pairing);
  if (genus < 2) throw InvalidFormat("triangulation: genus must be >= 2");
  const int expected_tris = 4 * genus - 2;
  if (static_cast<int>(tri.triangles_.size()) != expected_tris)
    throw InvalidFormat("triangulation: expected 4g-2 triangles");
  const int n = 3 * expected_tris;
  if (static_cast<int>(tri.pairing_.size()) != n)
    throw InvalidFormat("triangulation: pairing size must be 3*(4g-2)");

  std::vector<int> seen(n, 0);
  for (const auto& tr : tri.triangles_)
    for (HalfEdge h : tr) {
      if (h < 0 || h >= n) throw InvalidFormat("triangulation: half-edge index out of range");
      seen[h]++;
    }
  for (int c : seen)
    if (c != 1) throw InvalidFormat("triangulation: every half-edge must lie in exactly one triangle");

  for (HalfEdge h = 0; h < n; ++h) {
    const HalfEdge o = tri.pairing_[h];
    if (o < 0 || o >= n) throw InvalidFormat("triangulation: pairing index out of range");
    if (o == h) throw InvalidFormat("triangulation: pairing has a fixed point");
    if (tri.pairing_[o] != h) throw InvalidFormat("triangulation: pairing is not an involution");
  }

  tri.build_tables();
  if (tri.count_vertices() != 1)
    throw InvalidFormat("triangulation: corner rotation must have a single orbit (one vertex)");
  return tri;
}

int Triangulation::count_vertices() const {
  const int n = num_half_edges();
  std::vector<char> visited(n, 0);
  int orbits = 0;
  for (HalfEdge h = 0; h < n; ++h) {
    if (visited[h]) continue;
    ++orbits;
    HalfEdge cur = h;
    do {
      visited[cur] = 1;
      cur = rotate_ccw(cur);
    } while (cur != h);
  }
  return orbits;
}

std::string Triangulation::validate() const {
  const int nt = num_triangles();
  if (nt != 4 * genus_ - 2) return "triangle count is not 4g-2";
  if (num_edges() != 6 * genus_ - 3) return "edge count is not 6g-3";
  const int n = num_half_edges();
  for (HalfEdge h = 0; h < n; ++h) {
    if (pairing_[h] == h) return "pairing has a fixed point";
    if (pairing_[pairing_[h]] != h) return "pairing is not an involution";
  }
  if (count_vertices() != 1) return "more than one vertex orbit";
  return {};
}

bool Triangulation::is_flippable(EdgeId e) const {
  const HalfEdge h = edge_rep_[e];
  return tri_of_[h] != tri_of_[pairing_[h]];
}

FlipResult flip(const Triangulation& tri, EdgeId e) {
  const HalfEdge h = tri.half_edge(e);
  const HalfEdge hp = tri.opp(h);
  const TriangleId ta = tri.triangle_of(h);
  const TriangleId tb = tri.triangle_of(hp);
  if (ta == tb)
    throw FlipNotDefined("flip: both sides of the edge lie in one triangle");

  const HalfEdge a1 = tri.next(h), a2 = tri.prev(h);
  const HalfEdge b1 = tri.next(hp), b2 = tri.prev(hp);

  // The diagonal turns inside its quadrilateral: the new triangles are
  // (h, a2, b1) and (opp h, b2, a1), counterclockwise. The pairing is
  // untouched, so edge ids carry over unchanged.
  Triangulation out = tri;
  out.triangles_[ta] = {h, a2, b1};
  out.triangles_[tb] = {hp, b2, a1};
  out.build_tables();
  return {std::move(out), tri.edge_of(h)};
}

Quadrilateral quad_around(const Triangulation& tri, EdgeId e) {
  const HalfEdge h = tri.half_edge(e);
  const HalfEdge hp = tri.opp(h);
  if (tri.triangle_of(h) == tri.triangle_of(hp))
    throw FlipNotDefined("quad_around: edge is not flippable");
  Quadrilateral q;
  q.diagonal = e;
  q.h = h;
  q.a1 = tri.next(h);
  q.a2 = tri.prev(h);
  q.b1 = tri.next(hp);
  q.b2 = tri.prev(hp);
  q.tri_a = tri.triangle_of(h);
  q.tri_b = tri.triangle_of(hp);
  q.coincide_a1_b1 = tri.edge_of(q.a1) == tri.edge_of(q.b1);
  q.coincide_a2_b2 = tri.edge_of(q.a2) == tri.edge_of(q.b2);
  return q;
}

std::vector<HalfEdge> TruncatedComplex::boundary_cycle(HalfEdge start) const {
  std::vector<HalfEdge> cycle;
  cycle.reserve(num_short_edges());
  HalfEdge cur = start;
  do {
    cycle.push_back(cur);
    cur = boundary_next(cur);
  } while (cur != start && static_cast<int>(cycle.size()) <= num_short_edges());
  return cycle;
}

std::vector<std::pair<bool, HalfEdge>> TruncatedComplex::hexagon_sides(TriangleId t) const {
  const auto& tr = tri_.triangle(t);
  const HalfEdge h = tr[0];
  const HalfEdge hn = tri_.next(h), hpv = tri_.prev(h);
  return {{true, h},   {false, hn},  {true, hn},
          {false, hpv}, {true, hpv}, {false, h}};
}

EdgeWord edge_loop_word(const Triangulation& tri, HalfEdge h, HalfEdge base) {
  EdgeWord word;
  word.base = base;
  HalfEdge cur = base;
  while (cur != h) {
    word.steps.push_back({WordStep::Kind::ShortArc, cur, +1});
    cur = tri.rotate_ccw(cur);
  }
  word.steps.push_back({WordStep::Kind::LongCross, h, +1});
  cur = tri.opp(h);
  while (cur != base) {
    word.steps.push_back({WordStep::Kind::ShortArc, cur, +1});
    cur = tri.rotate_ccw(cur);
  }
  return word;
}

bool word_is_closed(const Triangulation& tri, const EdgeWord& word) {
  HalfEdge cur = word.base;
  for (const auto& st : word.steps) {
    if (st.kind == WordStep::Kind::ShortArc) {
      if (st.dir > 0) {
        if (cur != st.h) return false;
        cur = tri.rotate_ccw(st.h);
      } else {
        if (cur != tri.rotate_ccw(st.h)) return false;
        cur = st.h;
      }
    } else {
      if (cur != st.h) return false;
      cur = tri.opp(st.h);
    }
  }
  return cur == word.base;
}

EdgeWord inverse_word(const EdgeWord& word) {
  EdgeWord inv;
  inv.base = word.base;
  inv.steps.reserve(word.steps.size());
  for (auto it = word.steps.rbegin(); it != word.steps.rend(); ++it) {
    if (it->kind == WordStep::Kind::ShortArc)
      inv.steps.push_back({WordStep::Kind::ShortArc, it->h, -it->dir});
    else
      inv.steps.push_back({WordStep::Kind::LongCross, it->h, +1});
  }
  return inv;
}

EdgeWord concat_words(const EdgeWord& a, const EdgeWord& b) {
  EdgeWord out = a;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

std::vector<WordStep> reduce_steps(const Triangulation& tri, std::vector<WordStep> steps) {
  std::vector<WordStep> out;
  out.reserve(steps.size());
  for (const auto& st : steps) {
    bool cancelled = false;
    if (!out.empty()) {
      const WordStep& top = out.back();
      if (st.kind == WordStep::Kind::ShortArc && top.kind == WordStep::Kind::ShortArc)
        cancelled = top.h == st.h && top.dir == -st.dir;
      // Crossing h and then crossing back through opp(h) retraces the remnant.
      if (st.kind == WordStep::Kind::LongCross && top.kind == WordStep::Kind::LongCross)
        cancelled = tri.opp(top.h) == st.h;
    }
    if (cancelled) {
      out.pop_back();
    } else {
      out.push_back(st);
    }
  }
  return out;
}

std::string to_json(const Triangulation& tri) {
  nlohmann::json j;
  j["genus"] = tri.genus();
  auto tris = nlohmann::json::array();
  for (TriangleId t = 0; t < tri.num_triangles(); ++t) {
    const auto& tr = tri.triangle(t);
    tris.push_back({tr[0], tr[1], tr[2]});
  }
  j["triangles"] = std::move(tris);
  auto pairing = nlohmann::json::array();
  for (HalfEdge h = 0; h < tri.num_half_edges(); ++h) pairing.push_back(tri.opp(h));
  j["pairing"] = std::move(pairing);
  return j.dump();
}

Triangulation triangulation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw InvalidFormat(std::string("triangulation: invalid JSON: ") + err.what());
  }
  if (!j.contains("genus") || !j["genus"].is_number_integer())
    throw InvalidFormat("triangulation: missing integer field 'genus'");
  if (!j.contains("triangles") || !j["triangles"].is_array())
    throw InvalidFormat("triangulation: missing array field 'triangles'");
  if (!j.contains("pairing") || !j["pairing"].is_array())
    throw InvalidFormat("triangulation: missing array field 'pairing'");

  const int genus = j["genus"].get<int>();
  std::vector<std::array<HalfEdge, 3>> triangles;
  for (const auto& item : j["triangles"]) {
    if (!item.is_array() || item.size() != 3)
      throw InvalidFormat("triangulation: each triangle must list 3 half-edges");
    triangles.push_back({item[0].get<HalfEdge>(), item[1].get<HalfEdge>(), item[2].get<HalfEdge>()});
  }
  std::vector<HalfEdge> pairing;
  for (const auto& item : j["pairing"]) pairing.push_back(item.get<HalfEdge>());
  return Triangulation::from_parts(genus, std::move(triangles), std::move(pairing));
}

}  // namespace penner
