#pragma once

// Zeros on the critical line (sign changes of the Hardy-type signal refined by
// bisection) and zero counts in rectangles by the argument principle.

#include <optional>
#include <string>
#include <vector>

#include "dz/funceq.hpp"

namespace dz {

enum class ZeroKind { TrivialFactor, Nontrivial, Unclassified };

std::string to_string(ZeroKind kind);

struct ZeroRecord {
  double t = 0.0;
  double sigma = 0.5;
  std::string source;
  double residual = 0.0;    // |f(sigma + it)|
  double half_width = 0.0;  // final bracket radius
  ZeroKind kind = ZeroKind::Unclassified;
};

inline constexpr double kDefaultScanStep = 0.05;
// Ordinates within this distance of (2k+1) pi / ln q are tagged trivial_factor.
inline constexpr double kTrivialMatchTolerance = 1e-6;

// Refines a sign change of Z on [a, b] by bisection; same-sign ends are a domain error.
ZeroRecord refine_line_zero(const FunctionSpec& f, const FunctionalEquation& fe, double a, double b, double z_a,
                            double z_b);

std::vector<ZeroRecord> scan_line_zeros(const FunctionSpec& f, const FunctionalEquation& fe, Interval range,
                                        double step = kDefaultScanStep);

// Zeros of 1 + q^{1/2-s}: s = 1/2 + i (2k+1) pi / ln q, restricted to range.
std::vector<ZeroRecord> trivial_zeros(int q, Interval range);

struct BoxCountReport {
  Rect rect;                 // rectangle actually integrated (after any perturbation)
  int winding_count = 0;
  int line_count = -1;       // -1 when not computed
  double boundary_min_modulus = 0.0;
  int perturbations = 0;
};

// Winding number of f around the rectangle. When fe is given and the critical
// line crosses the box, line_count holds the number of scanned line zeros.
BoxCountReport count_zeros_box(const FunctionSpec& f, const Rect& rect, const FunctionalEquation* fe = nullptr);

struct LineVerification {
  BoxCountReport report;
  bool pass = false;
  // On failure: a sub-box of height < 0.1 where the winding exceeds the line count.
  std::optional<BoxCountReport> discrepancy;
};

LineVerification verify_on_line(const FunctionSpec& f, const FunctionalEquation& fe, const Rect& rect);

}  // namespace dz
