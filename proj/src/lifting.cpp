#include "penner/lifting.hpp"

#include <cmath>

namespace penner {

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat2d atom_endpoint(const Atom& a) {
  return a.kind == Atom::Kind::U ? mat_u(a.x) : mat_v(a.x);
}

Mat2d atom_at(const Atom& a, double t) {
  return a.kind == Atom::Kind::U ? mat_u(a.x * t) : mat_v(a.x * t);
}

double wrap_half_turn(double delta) {
  delta = std::fmod(delta, kPi);
  if (delta > kPi / 2.0) delta -= kPi;
  if (delta <= -kPi / 2.0) delta += kPi;
  return delta;
}

struct Tracker {
  double dx, dy;       // fixed start direction
  double theta = 0.0;  // accumulated projective angle
  double cur_angle = 0.0;

  explicit Tracker(double angle0) : dx(std::cos(angle0)), dy(std::sin(angle0)) {}

  double angle_at(const Mat2d& m) const {
    return std::atan2(m.c * dx + m.d * dy, m.a * dx + m.b * dy);
  }
};

// Along a single atom the tracked direction rotates strictly monotonically:
// u(xt) moves it with angular speed of sign -sign(x) (zero only when the
// start direction has no second component), v(xt) with sign +sign(x). The
// prefix acts as an orientation-preserving circle map, so the sign survives.
int atom_rotation_sign(const Tracker& tr, const Atom& a) {
  if (a.kind == Atom::Kind::U) {
    if (tr.dy == 0.0) return 0;
    return a.x > 0.0 ? -1 : +1;
  }
  if (tr.dx == 0.0) return 0;
  return a.x > 0.0 ? +1 : -1;
}

// Bisect until each step is both small and consistent with the analytic
// rotation sign; a fast sweep through more than half a turn shows up as a
// sign mismatch and forces further subdivision.
bool track_atom(Tracker& tr, const Mat2d& prefix, const Atom& atom, int sign,
                double t0, double t1, double max_step, int depth) {
  const double a1 = tr.angle_at(prefix * atom_at(atom, t1));
  const double step = wrap_half_turn(a1 - tr.cur_angle);
  const bool sign_ok =
      std::abs(step) <= 1e-13 || (sign > 0 ? step > 0.0 : step < 0.0);
  if (std::abs(step) < max_step && sign_ok) {
    tr.theta += step;
    tr.cur_angle = a1;
    return true;
  }
  if (depth <= 0) return false;
  const double tm = 0.5 * (t0 + t1);
  return track_atom(tr, prefix, atom, sign, t0, tm, max_step, depth - 1) &&
         track_atom(tr, prefix, atom, sign, tm, t1, max_step, depth - 1);
}

}  // namespace

Mat2d word_endpoint(const GeneratorWord& word) {
  Mat2d g = Mat2d::identity();
  for (const Atom& a : word.atoms) g = g * atom_endpoint(a);
  return g;
}

LiftClass winding(const GeneratorWord& word, const WindingOptions& opts) {
  const Mat2d end = word_endpoint(word);
  if (!proj_equal(end, Mat2d::identity(), 1e-9))
    throw NotALoop("winding: endpoint is not +-identity");

  // Three distinct start directions; the class must not depend on the choice.
  const double starts[3] = {0.0, 1.0472, 2.0944};
  int n_out = 0;
  double worst_residual = 0.0;
  for (int si = 0; si < 3; ++si) {
    Tracker tr(starts[si]);
    tr.cur_angle = starts[si];
    Mat2d prefix = Mat2d::identity();
    for (const Atom& a : word.atoms) {
      if (a.x == 0.0) continue;  // identity path
      const int sign = atom_rotation_sign(tr, a);
      if (sign == 0) {
        // Direction is fixed by the whole atom.
        prefix = prefix * atom_endpoint(a);
        tr.cur_angle = tr.angle_at(prefix);
        continue;
      }
      if (!track_atom(tr, prefix, a, sign, 0.0, 1.0, opts.max_step, opts.max_depth))
        throw StepTooCoarse("winding: subdivision depth exhausted");
      prefix = prefix * atom_endpoint(a);
    }

    // The standard rotation loop of class n turns the tracked direction by
    // -n*pi in the counterclockwise angle convention used here.
    const int n = static_cast<int>(std::lround(-tr.theta / kPi));
    const double residual = std::abs(tr.theta + n * kPi);
    if (residual >= opts.residual_gate)
      throw StepTooCoarse("winding: residual gate not met");
    if (si == 0)
      n_out = n;
    else if (n != n_out)
      throw StepTooCoarse("winding: start directions disagree");
    worst_residual = std::max(worst_residual, residual);
  }
  return {n_out, worst_residual};
}

GeneratorWord rectangle_word(double x) {
  if (!(x > 0.0)) throw std::domain_error("rectangle_word: edge value must be positive");
  const double half = 1.0 / x;
  return {{{Atom::Kind::V, -x},
           {Atom::Kind::U, half},
           {Atom::Kind::U, half},
           {Atom::Kind::V, -x},
           {Atom::Kind::U, half},
           {Atom::Kind::U, half}}};
}

GeneratorWord hexagon_word(double x1, double x2, double x3, int sign) {
  const Triple<double> y = solve_hexagon<double>(x1, x2, x3, sign);
  return {{{Atom::Kind::V, x1},
           {Atom::Kind::U, -y.z},
           {Atom::Kind::V, x2},
           {Atom::Kind::U, -y.x},
           {Atom::Kind::V, x3},
           {Atom::Kind::U, -y.y}}};
}

GeneratorWord vuv_closure_word(double x1, double x2, double x3) {
  const Triple<double> p = vuv_factorization<double>(x1, x2, x3);
  return {{{Atom::Kind::V, x1},
           {Atom::Kind::U, x2},
           {Atom::Kind::V, x3},
           {Atom::Kind::U, -p.z},
           {Atom::Kind::V, -p.y},
           {Atom::Kind::U, -p.x}}};
}

LiftClass hexagon_lift_class(double x1, double x2, double x3, int sign) {
  return winding(hexagon_word(x1, x2, x3, sign));
}

}  // namespace penner
