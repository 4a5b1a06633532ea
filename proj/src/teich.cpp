#include "penner/teich.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "penner/random.hpp"

namespace penner {

DecoratedRep build_transports(const CoordinatePoint& point) {
  const Triangulation& tri = point.tri;
  DecoratedRep rep;
  rep.tri = tri;
  rep.long_param = point.f;
  rep.short_param.resize(tri.num_half_edges());
  for (HalfEdge k = 0; k < tri.num_half_edges(); ++k)
    rep.short_param[k] = short_transport_param(tri, point.f, point.eps, k);
  return rep;
}

Mat2d holonomy(const DecoratedRep& rep, const EdgeWord& word) {
  if (!word_is_closed(rep.tri, word))
    throw NotALoop("holonomy: word is not a loop in the corner graph");
  Mat2d g = Mat2d::identity();
  for (const WordStep& st : word.steps) {
    if (st.kind == WordStep::Kind::ShortArc)
      g = g * mat_u(st.dir * rep.short_param[st.h]);
    else
      g = g * mat_w(rep.long_param[rep.tri.edge_of(st.h)]);
  }
  return g;
}

double lambda_length(const DecoratedRep& rep, const EdgeWord& word) {
  const Mat2d g = holonomy(rep, word);
  return lambda_distance(apply(g, rep.h0), rep.h0);
}

Mat2d hexagon_relator(const DecoratedRep& rep, TriangleId t) {
  // Counterclockwise around the hexagon; short sides run against their
  // canonical orientation in this traversal.
  const auto& tr = rep.tri.triangle(t);
  const HalfEdge h = tr[0], hn = rep.tri.next(h), hp = rep.tri.prev(h);
  auto w_of = [&](HalfEdge k) { return mat_w(rep.long_param[rep.tri.edge_of(k)]); };
  return w_of(h) * mat_u(-rep.short_param[hn]) * w_of(hn) *
         mat_u(-rep.short_param[hp]) * w_of(hp) * mat_u(-rep.short_param[h]);
}

double chart_constraint_scale(const Triangulation& tri, const std::vector<double>& f) {
  double scale = 0.0;
  for (TriangleId s = 0; s < tri.num_triangles(); ++s) {
    const auto& tr = tri.triangle(s);
    const double a = f[tri.edge_of(tr[0])];
    const double b = f[tri.edge_of(tr[1])];
    const double c = f[tri.edge_of(tr[2])];
    scale += (a * a + b * b + c * c) / (a * b * c);
  }
  return scale;
}

bool is_on_chart(const CoordinatePoint& point, double rel_tol) {
  int negatives = 0;
  TriangleId neg = -1;
  for (TriangleId t = 0; t < point.tri.num_triangles(); ++t) {
    if (point.eps[t] == -1) {
      ++negatives;
      neg = t;
    }
  }
  if (negatives != 1) return false;
  const double psi = chart_constraint(point.tri, neg, point.f);
  return std::abs(psi) <= rel_tol * chart_constraint_scale(point.tri, point.f);
}

Mat2d boundary_holonomy(const CoordinatePoint& point) {
  const DecoratedRep rep = build_transports(point);
  const TruncatedComplex complex(point.tri);
  Mat2d g = Mat2d::identity();
  for (HalfEdge k : complex.boundary_cycle(rep.base)) g = g * mat_u(rep.short_param[k]);
  return g;
}

double boundary_parameter_sum(const CoordinatePoint& point) {
  double total = 0.0;
  for (TriangleId t = 0; t < point.tri.num_triangles(); ++t) {
    const auto& tr = point.tri.triangle(t);
    const double a = point.f[point.tri.edge_of(tr[0])];
    const double b = point.f[point.tri.edge_of(tr[1])];
    const double c = point.f[point.tri.edge_of(tr[2])];
    total += point.eps[t] * (a * a + b * b + c * c) / (a * b * c);
  }
  return total;
}

int euler_number_formula(int genus, int n_minus) {
  if (genus < 2) throw std::domain_error("euler_number_formula: genus must be >= 2");
  if (n_minus < 0 || n_minus > 4 * genus - 2)
    throw std::domain_error("euler_number_formula: N_minus out of range");
  return 1 + n_minus - 2 * genus;
}

GeneratorWord rectangle_face_word(const DecoratedRep& rep, EdgeId e) {
  // Counterclockwise boundary of the rectangle glued from the two corner
  // cells along the erased remnant: both secondary sides appear reversed and
  // each boundary-arc end piece contributes u(1/x).
  const double x = rep.long_param[e];
  const double piece = 1.0 / x;
  return {{{Atom::Kind::V, -x},
           {Atom::Kind::U, piece},
           {Atom::Kind::U, piece},
           {Atom::Kind::V, -x},
           {Atom::Kind::U, piece},
           {Atom::Kind::U, piece}}};
}

GeneratorWord hexagon_face_word(const DecoratedRep& rep, TriangleId t) {
  // Counterclockwise boundary of the inner hexagon: secondary sides carry
  // v(x) forward; the middle piece of the short edge s(k) carries, in its
  // canonical direction, the full short parameter minus the two end pieces
  // u(-1/x) absorbed by the adjacent rectangles, and appears reversed here.
  const Triangulation& tri = rep.tri;
  const auto& tr = tri.triangle(t);
  const HalfEdge h = tr[0], hn = tri.next(h), hp = tri.prev(h);
  auto long_of = [&](HalfEdge k) { return rep.long_param[tri.edge_of(k)]; };
  auto middle = [&](HalfEdge k) {
    return rep.short_param[k] + 1.0 / long_of(k) + 1.0 / long_of(tri.prev(k));
  };
  return {{{Atom::Kind::V, long_of(h)},
           {Atom::Kind::U, -middle(hn)},
           {Atom::Kind::V, long_of(hn)},
           {Atom::Kind::U, -middle(hp)},
           {Atom::Kind::V, long_of(hp)},
           {Atom::Kind::U, -middle(h)}}};
}

int euler_number_via_lifts(const CoordinatePoint& point) {
  const DecoratedRep rep = build_transports(point);
  int total = 0;
  for (EdgeId e = 0; e < point.tri.num_edges(); ++e)
    total += winding(rectangle_face_word(rep, e)).n;
  for (TriangleId t = 0; t < point.tri.num_triangles(); ++t)
    total += winding(hexagon_face_word(rep, t)).n;
  return total;
}

namespace {

// Positive roots of A y^2 + K y + B = 0; K > 0.
bool positive_root(double A, double K, double B, double* root) {
  if (std::abs(A) < 1e-300) {
    if (B < 0.0) {
      *root = -B / K;
      return true;
    }
    return false;
  }
  const double disc = K * K - 4.0 * A * B;
  if (disc < 0.0) return false;
  const double sq = std::sqrt(disc);
  const double r1 = (-K + sq) / (2.0 * A);
  const double r2 = (-K - sq) / (2.0 * A);
  double best = -1.0;
  for (double r : {r1, r2})
    if (r > 0.0 && (best < 0.0 || r > best)) best = r;
  if (best <= 0.0) return false;
  *root = best;
  return true;
}

}  // namespace

CoordinatePoint sample_chart_point(const Triangulation& tri, TriangleId negative,
                                   std::mt19937_64& rng, int budget) {
  if (negative < 0 || negative >= tri.num_triangles())
    throw std::domain_error("sample_chart_point: triangle id out of range");

  // Solve for a side of the negative triangle whose opposite half-edge lies
  // in another triangle; at least one of the three slots qualifies (the
  // pairing cannot match all three within one triangle).
  const auto& tr = tri.triangle(negative);
  HalfEdge solve_h = -1;
  for (HalfEdge k : tr) {
    if (tri.triangle_of(tri.opp(k)) != negative) {
      solve_h = k;
      break;
    }
  }
  const EdgeId solve_e = tri.edge_of(solve_h);
  const TriangleId other = tri.triangle_of(tri.opp(solve_h));

  // Free values of the negative triangle, adjusted between retries.
  const EdgeId tb = tri.edge_of(tri.next(solve_h));
  const EdgeId tc = tri.edge_of(tri.prev(solve_h));

  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<double> f(tri.num_edges());
    for (EdgeId e = 0; e < tri.num_edges(); ++e) f[e] = log_uniform(rng);

    for (int adjust = 0; adjust < 14; ++adjust) {
      const double b = f[tb], c = f[tc];
      const HalfEdge oh = tri.opp(solve_h);
      const double m = f[tri.edge_of(tri.next(oh))];
      const double n = f[tri.edge_of(tri.prev(oh))];

      const double A = 1.0 / (m * n) - 1.0 / (b * c);
      const double B = (m * m + n * n) / (m * n) - (b * b + c * c) / (b * c);
      double K = 0.0;
      for (TriangleId s = 0; s < tri.num_triangles(); ++s) {
        if (s == negative || s == other) continue;
        const auto& ts = tri.triangle(s);
        const double sa = f[tri.edge_of(ts[0])];
        const double sb = f[tri.edge_of(ts[1])];
        const double sc = f[tri.edge_of(ts[2])];
        K += (sa * sa + sb * sb + sc * sc) / (sa * sb * sc);
      }

      double root;
      if (positive_root(A, K, B, &root)) {
        f[solve_e] = root;
        std::vector<int> eps(tri.num_triangles(), +1);
        eps[negative] = -1;
        CoordinatePoint point{tri, std::move(f), std::move(eps)};
        if (is_on_chart(point)) return point;
        break;  // root too inaccurate; redraw
      }

      // No positive root: push the coefficient A to the helpful sign. The
      // constant B is invariant under the joint rescale of b and c.
      const double factor = B > 0.0 ? 0.5 : 2.0;
      f[tb] *= factor;
      if (tc != tb) f[tc] *= factor;
    }
  }
  throw SamplerFailed("sample_chart_point: retry budget exhausted");
}

RecoveredCoordinates recover_coordinates(const DecoratedRep& rep) {
  const Triangulation& tri = rep.tri;
  RecoveredCoordinates out;
  out.f.resize(tri.num_edges());
  std::vector<Mat2d> side_holonomy(tri.num_half_edges());
  for (HalfEdge h = 0; h < tri.num_half_edges(); ++h)
    side_holonomy[h] = holonomy(rep, edge_loop_word(tri, h, rep.base));

  for (EdgeId e = 0; e < tri.num_edges(); ++e) {
    const Mat2d& g = side_holonomy[tri.half_edge(e)];
    out.f[e] = std::abs(g.c);
  }

  out.eps.resize(tri.num_triangles());
  for (TriangleId t = 0; t < tri.num_triangles(); ++t) {
    const auto& tr = tri.triangle(t);
    Mat2d product = Mat2d::identity();
    for (HalfEdge h : tr) {
      Mat2d g = side_holonomy[h];
      const double scale = frobenius_norm(g);
      if (std::abs(g.c) <= 1e-12 * scale)
        throw EdgeDegenerate("recover_coordinates: side holonomy has c = 0");
      if (g.c < 0.0) g = -g;
      product = product * g;
    }
    if (!proj_equal(product, Mat2d::identity(), 1e-7))
      throw ConventionMismatch(
          "recover_coordinates: triangle side product is not +-identity");
    out.eps[t] = product.trace() > 0.0 ? +1 : -1;
  }
  return out;
}

PtolemyFlipResult<double> ptolemy_flip(const CoordinatePoint& point, EdgeId e) {
  return ptolemy_flip<double>(point.tri, e, point.f, point.eps);
}

EdgeWord flipped_edge_loop_word(const Triangulation& tri, EdgeId e, HalfEdge base) {
  const Quadrilateral q = quad_around(tri, e);
  const HalfEdge h = q.h, hp = tri.opp(h);
  EdgeWord word;
  word.base = base;
  HalfEdge cur = base;
  while (cur != q.a2) {
    word.steps.push_back({WordStep::Kind::ShortArc, cur, +1});
    cur = tri.rotate_ccw(cur);
  }
  // Across the quadrilateral: along the remnant of a2, around the corner of
  // the old diagonal, across it, and out along the remnant of b2.
  word.steps.push_back({WordStep::Kind::LongCross, q.a2, +1});
  word.steps.push_back({WordStep::Kind::ShortArc, h, -1});
  word.steps.push_back({WordStep::Kind::LongCross, h, +1});
  word.steps.push_back({WordStep::Kind::ShortArc, hp, +1});
  word.steps.push_back({WordStep::Kind::LongCross, tri.opp(q.b2), +1});
  cur = q.b2;
  while (cur != base) {
    word.steps.push_back({WordStep::Kind::ShortArc, cur, +1});
    cur = tri.rotate_ccw(cur);
  }
  return word;
}

std::vector<double> rescale_decoration(const std::vector<double>& f, double c) {
  if (!(c > 0.0)) throw std::domain_error("rescale_decoration: factor must be positive");
  std::vector<double> out = f;
  for (double& v : out) v *= c;
  return out;
}

std::string to_json(const CoordinatePoint& point) {
  nlohmann::json j;
  j["triangulation"] = nlohmann::json::parse(to_json(point.tri));
  nlohmann::json jf = nlohmann::json::object();
  for (EdgeId e = 0; e < point.tri.num_edges(); ++e) jf[std::to_string(e)] = point.f[e];
  j["f"] = std::move(jf);
  nlohmann::json je = nlohmann::json::object();
  for (TriangleId t = 0; t < point.tri.num_triangles(); ++t)
    je[std::to_string(t)] = point.eps[t];
  j["eps"] = std::move(je);
  return j.dump();
}

CoordinatePoint coordinate_point_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw InvalidFormat(std::string("coordinates: invalid JSON: ") + err.what());
  }
  if (!j.contains("triangulation"))
    throw InvalidFormat("coordinates: missing field 'triangulation'");

  CoordinatePoint point;
  if (j["triangulation"].is_string()) {
    std::ifstream in(j["triangulation"].get<std::string>());
    if (!in) throw InvalidFormat("coordinates: cannot open triangulation file");
    std::stringstream buf;
    buf << in.rdbuf();
    point.tri = triangulation_from_json(buf.str());
  } else {
    point.tri = triangulation_from_json(j["triangulation"].dump());
  }

  if (!j.contains("f") || !j["f"].is_object())
    throw InvalidFormat("coordinates: missing object field 'f'");
  if (!j.contains("eps") || !j["eps"].is_object())
    throw InvalidFormat("coordinates: missing object field 'eps'");

  point.f.assign(point.tri.num_edges(), 0.0);
  for (const auto& [key, value] : j["f"].items()) {
    const int e = std::stoi(key);
    if (e < 0 || e >= point.tri.num_edges())
      throw InvalidFormat("coordinates: edge id out of range in 'f'");
    const double v = value.get<double>();
    if (!(v > 0.0)) throw InvalidFormat("coordinates: edge values must be positive");
    point.f[e] = v;
  }
  for (double v : point.f)
    if (v == 0.0) throw InvalidFormat("coordinates: missing edge value in 'f'");

  point.eps.assign(point.tri.num_triangles(), 0);
  for (const auto& [key, value] : j["eps"].items()) {
    const int t = std::stoi(key);
    if (t < 0 || t >= point.tri.num_triangles())
      throw InvalidFormat("coordinates: triangle id out of range in 'eps'");
    const int s = value.get<int>();
    if (s != 1 && s != -1) throw InvalidFormat("coordinates: signs must be +-1");
    point.eps[t] = s;
  }
  for (int s : point.eps)
    if (s == 0) throw InvalidFormat("coordinates: missing triangle sign in 'eps'");
  return point;
}

}  // namespace penner
