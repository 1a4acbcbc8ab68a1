#pragma once

// Full claim-check run for one family: functional-equation residuals,
// continuity bound, line verification per tau, trajectories and pairing,
// values at the trivial-factor ordinates and the series quotient.

#include "dz/io.hpp"

namespace dz {

struct HarnessReport {
  io::json json;
  bool all_pass = true;
};

inline constexpr double kResidualTolerance = 1e-8;

// Standard sweep box [-1, 2] x [1, 30], 20 x 20 points.
inline constexpr Rect kStandardBox{-1.0, 2.0, 1.0, 30.0};
inline constexpr int kStandardGrid = 20;

HarnessReport deformation_report(int q, const DirichletCharacter& chi, double t_max,
                               int tau_steps = kDefaultTauSteps);

}  // namespace dz
