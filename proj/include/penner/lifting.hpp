#pragma once

#include <vector>

#include "penner/sl2.hpp"

namespace penner {

// A word in the one-parameter subgroups u and v. Each atom stands for the
// path t -> u(x t) or t -> v(x t) on [0,1]; the canonical lift of the whole
// word is the concatenation of these paths in the universal cover.
struct Atom {
  enum class Kind : int { U, V };
  Kind kind;
  double x;
};

struct GeneratorWord {
  std::vector<Atom> atoms;
};

inline GeneratorWord operator+(const GeneratorWord& a, const GeneratorWord& b) {
  GeneratorWord out = a;
  out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
  return out;
}

// Homotopy class of a loop word: the integer n such that the lift ends at
// the deck translate matching a half-turn count of n, plus the angular
// residual diagnostic (distance of the tracked total from n*pi).
struct LiftClass {
  int n;
  double residual;
};

struct WindingOptions {
  // Bisect each atom until every step turns the tracked direction by less
  // than this bound.
  double max_step = 0.785398163397448;  // pi/4
  int max_depth = 40;
  double residual_gate = 0.0314159265358979 * 1.0;  // 0.01 * pi
};

// Endpoint matrix of the word (product of atom endpoints).
Mat2d word_endpoint(const GeneratorWord& word);

// Winding integer of a loop word (endpoint must be +-identity). Computed by
// continuous unwrapping of the projective angle of the partial-product path
// acting on a start direction; the result is checked against three distinct
// start directions. Positive one full half-turn matches the class of the
// standard clockwise rotation loop.
LiftClass winding(const GeneratorWord& word, const WindingOptions& opts = {});

// Unique positive triple (x1', x2', x3') with
//   v(x1) u(x2) v(x3) u(-x3') v(-x2') u(-x1') = 1,
// i.e. v(x1) u(x2) v(x3) = u(x1') v(x2') u(x3'). Same move as star_triangle
// up to relabeling of the outer outputs.
template <class S>
Triple<S> vuv_factorization(const S& x1, const S& x2, const S& x3) {
  if (!(x1 > S(0) && x2 > S(0) && x3 > S(0)))
    throw std::domain_error("vuv_factorization: inputs must be positive");
  const S n = x1 + x3 + x1 * x2 * x3;
  return {x2 * x3 / n, n, x1 * x2 / n};
}

// Unique real triple with
//   v(x1) u(-y3) v(x2) u(-y1) v(x3) u(-y2) = sign,
// given by y_i = (x_j + x_k + sign * x_i) / (x_j x_k). The closed form is
// validated by an exact product check in the test suite.
template <class S>
Triple<S> solve_hexagon(const S& x1, const S& x2, const S& x3, int sign) {
  if (!(x1 > S(0) && x2 > S(0) && x3 > S(0)))
    throw std::domain_error("solve_hexagon: inputs must be positive");
  if (sign != 1 && sign != -1) throw std::domain_error("solve_hexagon: sign must be +-1");
  const S e(sign);
  return {(x2 + x3 + e * x1) / (x2 * x3),
          (x3 + x1 + e * x2) / (x3 * x1),
          (x1 + x2 + e * x3) / (x1 * x2)};
}

// Loop words of the two face relations of the subdivided complex.
// rectangle_word(x): (v(-x) u(2/x))^2 = -1, emitted with the boundary arcs
// split in two as they appear around a rectangular face; winding 1.
GeneratorWord rectangle_word(double x);

// hexagon_word(x, sign): v(x1) u(-y3) v(x2) u(-y1) v(x3) u(-y2) = sign with
// y = solve_hexagon(x, sign); winding -(3+sign)/2.
GeneratorWord hexagon_word(double x1, double x2, double x3, int sign);

// Closure word of vuv_factorization; winding 0.
GeneratorWord vuv_closure_word(double x1, double x2, double x3);

// Winding of hexagon_word(x, sign); the expected table is -2 for sign = +1
// and -1 for sign = -1.
LiftClass hexagon_lift_class(double x1, double x2, double x3, int sign);

}  // namespace penner
