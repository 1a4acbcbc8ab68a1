#include "dz/zerofind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dz/errors.hpp"

namespace dz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectionWidth = 2e-12;
constexpr double kContourSpacing = 0.05;
constexpr double kMinContourSegment = 1e-9;
constexpr double kBoundaryModulusFloor = 1e-6;
constexpr double kPerturbation = 1e-4;
constexpr int kMaxPerturbations = 3;
constexpr double kLocalizationHeight = 0.1;

ZeroKind classify_line_zero(const FunctionSpec& f, double t) {
  if (const auto q = f.trivial_factor_modulus(); q && *q >= 2) {
    const double spacing = 2.0 * kPi / std::log(static_cast<double>(*q));
    const double k = std::round(t / spacing - 0.5);
    if (std::abs(t - (k + 0.5) * spacing) <= kTrivialMatchTolerance) return ZeroKind::TrivialFactor;
  }
  return f.zeros_classifiable() ? ZeroKind::Nontrivial : ZeroKind::Unclassified;
}

struct Accumulation {
  double total_arg = 0.0;
  double min_modulus = 0.0;
  bool near_zero = false;  // contour passed within the modulus floor of a zero
};

// Adds arg(f(b)/f(a)) along [a, b], splitting while a jump reaches pi/2.
void accumulate_segment(const FunctionSpec& f, cplx a, cplx b, cplx fa, cplx fb, Accumulation& acc) {
  const double jump = std::arg(fb / fa);
  if (std::abs(jump) < 0.5 * kPi) {
    acc.total_arg += jump;
    return;
  }
  if (std::abs(b - a) < kMinContourSegment)
    throw PrecisionError("count_zeros_box: argument jump unresolved near s = (" + std::to_string(a.real()) + ", " +
                         std::to_string(a.imag()) + ")");
  const cplx m = 0.5 * (a + b);
  const cplx fm = f(m);
  acc.min_modulus = std::min(acc.min_modulus, std::abs(fm));
  if (acc.min_modulus < kBoundaryModulusFloor) {
    acc.near_zero = true;
    return;
  }
  accumulate_segment(f, a, m, fa, fm, acc);
  if (acc.near_zero) return;
  accumulate_segment(f, m, b, fm, fb, acc);
}

Accumulation wind(const FunctionSpec& f, const Rect& r) {
  const cplx corners[5] = {{r.sigma_lo, r.t_lo}, {r.sigma_hi, r.t_lo}, {r.sigma_hi, r.t_hi}, {r.sigma_lo, r.t_hi},
                           {r.sigma_lo, r.t_lo}};
  Accumulation acc{0.0, std::numeric_limits<double>::infinity()};
  cplx prev_s = corners[0];
  cplx prev_f = f(prev_s);
  acc.min_modulus = std::abs(prev_f);
  for (int e = 0; e < 4; ++e) {
    const cplx a = corners[e];
    const cplx b = corners[e + 1];
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / kContourSpacing)));
    for (int i = 1; i <= n; ++i) {
      const cplx s = i == n ? b : a + (b - a) * (static_cast<double>(i) / n);
      const cplx fs = f(s);
      acc.min_modulus = std::min(acc.min_modulus, std::abs(fs));
      if (acc.min_modulus < kBoundaryModulusFloor) {
        acc.near_zero = true;
        return acc;
      }
      accumulate_segment(f, prev_s, s, prev_f, fs, acc);
      if (acc.near_zero) return acc;
      prev_s = s;
      prev_f = fs;
    }
  }
  return acc;
}

void validate_rect(const Rect& r) {
  if (!(r.sigma_hi > r.sigma_lo) || !(r.t_hi > r.t_lo)) throw DomainError("rectangle has zero width or height");
}

}  // namespace

std::string to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::TrivialFactor: return "trivial_factor";
    case ZeroKind::Nontrivial: return "nontrivial";
    default: return "unclassified";
  }
}

ZeroRecord refine_line_zero(const FunctionSpec& f, const FunctionalEquation& fe, double a, double b, double z_a,
                            double z_b) {
  if ((z_a < 0.0 && z_b < 0.0) || (z_a > 0.0 && z_b > 0.0))
    throw DomainError("refine_line_zero: no sign change on the bracket");
  if (z_a == 0.0) b = a;
  if (z_b == 0.0) a = b;
  while (b - a > kBisectionWidth) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double z_m = hardy_z(f, fe, m).z;
    if (z_m == 0.0) {
      a = b = m;
      break;
    }
    if ((z_m < 0.0) == (z_a < 0.0)) {
      a = m;
      z_a = z_m;
    } else {
      b = m;
    }
  }
  ZeroRecord rec;
  rec.t = 0.5 * (a + b);
  rec.sigma = 0.5;
  rec.source = f.describe();
  rec.half_width = 0.5 * (b - a);
  rec.residual = std::abs(f(cplx{0.5, rec.t}));
  rec.kind = classify_line_zero(f, rec.t);
  return rec;
}

std::vector<ZeroRecord> scan_line_zeros(const FunctionSpec& f, const FunctionalEquation& fe, Interval range,
                                        double step) {
  if (!(step > 0.0)) throw DomainError("scan_line_zeros: step must be positive");
  if (!(range.hi > range.lo)) throw DomainError("scan_line_zeros: empty range");
  const int n = static_cast<int>(std::ceil(range.length() / step)) + 1;
  const auto samples = hardy_signal(f, fe, range, n);
  std::vector<ZeroRecord> out;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto& lo = samples[i];
    const auto& hi = samples[i + 1];
    if (lo.z == 0.0) {
      if (i > 0) out.push_back(refine_line_zero(f, fe, lo.t, lo.t, 0.0, 0.0));
      continue;
    }
    if ((lo.z < 0.0) != (hi.z < 0.0) && hi.z != 0.0) out.push_back(refine_line_zero(f, fe, lo.t, hi.t, lo.z, hi.z));
  }
  return out;
}

std::vector<ZeroRecord> trivial_zeros(int q, Interval range) {
  if (q < 2) throw DomainError("trivial_zeros: q must be at least 2");
  const double spacing = 2.0 * kPi / std::log(static_cast<double>(q));
  std::vector<ZeroRecord> out;
  // Ordinates (k + 1/2) spacing for integer k, including negative ones.
  const long k_lo = static_cast<long>(std::ceil(range.lo / spacing - 0.5));
  const long k_hi = static_cast<long>(std::floor(range.hi / spacing - 0.5));
  for (long k = k_lo; k <= k_hi; ++k) {
    ZeroRecord rec;
    rec.t = (static_cast<double>(k) + 0.5) * spacing;
    rec.source = "1+" + std::to_string(q) + "^(1/2-s)";
    rec.kind = ZeroKind::TrivialFactor;
    out.push_back(rec);
  }
  return out;
}

BoxCountReport count_zeros_box(const FunctionSpec& f, const Rect& rect, const FunctionalEquation* fe) {
  validate_rect(rect);
  if (f.has_pole_at_one() && rect.sigma_lo <= 1.0 && rect.sigma_hi >= 1.0 && rect.t_lo <= 0.0 && rect.t_hi >= 0.0)
    throw PoleError("count_zeros_box: rectangle contains the pole at s = 1");

  for (int attempt = 0; attempt <= kMaxPerturbations; ++attempt) {
    const double d = kPerturbation * attempt;
    const Rect r{rect.sigma_lo - d, rect.sigma_hi + d, rect.t_lo - d, rect.t_hi + d};
    const auto acc = wind(f, r);
    if (acc.near_zero) continue;

    const double winding = acc.total_arg / (2.0 * kPi);
    const double rounded = std::round(winding);
    if (std::abs(winding - rounded) > 1e-3)
      throw PrecisionError("count_zeros_box: non-integer winding " + std::to_string(winding));

    BoxCountReport report;
    report.rect = r;
    report.winding_count = static_cast<int>(rounded);
    report.boundary_min_modulus = acc.min_modulus;
    report.perturbations = attempt;
    if (fe != nullptr && r.sigma_lo < 0.5 && r.sigma_hi > 0.5)
      report.line_count = static_cast<int>(scan_line_zeros(f, *fe, {r.t_lo, r.t_hi}).size());
    return report;
  }
  throw BoundaryError("count_zeros_box: zero on the contour after " + std::to_string(kMaxPerturbations) +
                      " perturbations");
}

LineVerification verify_on_line(const FunctionSpec& f, const FunctionalEquation& fe, const Rect& rect) {
  validate_rect(rect);
  if (!(rect.sigma_lo < 0.5 && rect.sigma_hi > 0.5))
    throw DomainError("verify_on_line: rectangle must straddle the critical line");
  LineVerification out;
  out.report = count_zeros_box(f, rect, &fe);
  out.pass = out.report.winding_count == out.report.line_count;
  if (out.pass) return out;

  // Localize by repeated halving in t.
  BoxCountReport current = out.report;
  while (current.rect.t_hi - current.rect.t_lo >= kLocalizationHeight) {
    const Rect& r = current.rect;
    const double mid = 0.5 * (r.t_lo + r.t_hi);
    const auto lower = count_zeros_box(f, {r.sigma_lo, r.sigma_hi, r.t_lo, mid}, &fe);
    const auto upper = count_zeros_box(f, {r.sigma_lo, r.sigma_hi, mid, r.t_hi}, &fe);
    if (lower.winding_count > lower.line_count)
      current = lower;
    else if (upper.winding_count > upper.line_count)
      current = upper;
    else if (lower.winding_count != lower.line_count)
      current = lower;
    else if (upper.winding_count != upper.line_count)
      current = upper;
    else
      break;  // discrepancy sat on the split line; keep the last box
  }
  out.discrepancy = current;
  return out;
}

}  // namespace dz
