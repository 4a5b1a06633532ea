#pragma once

#include <stdexcept>
#include <string>

namespace penner {

// Factorization g = u(x) v(y) u(z) needs a nonzero lower-left entry.
struct NotFactorizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Translation length is defined for hyperbolic elements only (|tr| > 2).
struct NotHyperbolic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagonal flip requires the two sides of the edge to lie in distinct triangles.
struct FlipNotDefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signed Ptolemy flip hit a vanishing numerator: the flipped edge has zero
// lambda-length and the point leaves the target chart.
struct FlipDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Winding is defined for words whose endpoint is +-identity.
struct NotALoop : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Angle tracking failed to settle within the residual gate at maximum depth.
struct StepTooCoarse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplerFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An edge holonomy has |c| below tolerance, so lambda = 0 and sign recovery
// is undefined there.
struct EdgeDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs violate the orientation/labeling assumptions of the zero-locus
// construction (e.g. unsupported side coincidences in the quadrilateral).
struct ConventionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidFormat : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace penner
