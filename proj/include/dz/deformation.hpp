#pragma once

// The family phi_tau = (1 - tau) f0 + tau f1 of two solutions of one
// functional equation, zero trajectories in tau, pairing of endpoint zeros,
// and the quotient of a periodic series by the factor 1 + sqrt(q) q^{-s}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dz/zerofind.hpp"

namespace dz {

struct DeformationFamily {
  FunctionSpec f0;
  FunctionSpec f1;
  FunctionalEquation shared_fe;
  int q = 1;
  int parity = 0;
  // f0 coincides with f1 (no complex primitive character of the parity mod q).
  bool degenerate = false;

  FunctionSpec at(double tau) const { return FunctionSpec::deformation(tau, f0, f1); }
};

// Even: f0 = (1 + q^{1/2-s}) zeta(s). Odd: f0 = dh_construct of the first
// complex primitive odd character mod q, or L(s, chi) itself when none exists.
// f1 = L(s, chi) for the given real primitive chi.
DeformationFamily make_family(const DirichletCharacter& chi);
// Same, with chi the real primitive character of that parity mod q.
DeformationFamily make_family(int q, int parity);

cplx phi_tau(cplx s, double tau, const DeformationFamily& fam);

// |phi_tau(s) - phi_tau'(s)| <= 2 M |tau - tau'| on an n x n grid of K for
// tau, tau' in {0, 1/4, 1/2, 3/4, 1}.
struct ContinuityCheck {
  double sup_modulus = 0.0;  // M
  double worst_ratio = 0.0;  // max |difference| / (2 M |tau - tau'|)
  double identity_defect = 0.0;  // max | |difference| - |tau - tau'| |f0 - f1| |
  bool pass = false;
};
ContinuityCheck continuity_check(const DeformationFamily& fam, const Rect& k, int n = 7);

enum class TrajectoryStatus { Completed, Merged, Lost };
std::string to_string(TrajectoryStatus status);

struct TrajectorySample {
  double tau;
  double t;
  double abs_phi;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  ZeroRecord start_zero;
  std::optional<ZeroRecord> end_zero;
  TrajectoryStatus status = TrajectoryStatus::Lost;
  int reversals = 0;  // sign changes of dt along the path
  int halvings = 0;   // tau-step halvings used
  double max_step = 0.0;  // largest |dt| between consecutive samples
};

inline constexpr int kDefaultTauSteps = 64;
inline constexpr double kStepBudget = 0.05;

// Predictor-corrector march in tau starting from a zero of f0.
Trajectory track_zero(const ZeroRecord& z0, const DeformationFamily& fam, int tau_steps = kDefaultTauSteps);

struct PairingReport {
  Interval interval;
  Interval extended;
  std::vector<Trajectory> trajectories;  // sorted by start ordinate
  std::vector<std::pair<ZeroRecord, ZeroRecord>> pairs;
  std::vector<ZeroRecord> f0_zeros;  // in the extended interval
  std::vector<ZeroRecord> f1_zeros;
  std::vector<ZeroRecord> unmatched_f1;
  int n0 = 0;
  int n1 = 0;
  int merged = 0;
  int lost = 0;
  bool counts_within_one() const { return std::abs(n0 - n1) <= 1; }
};

PairingReport pair_zeros(const DeformationFamily& fam, Interval interval, int tau_steps = kDefaultTauSteps);

// Coefficients b_n of sum c_n n^{-s} / (1 + sqrt(q) q^{-s}):
// b_n = c_n - sqrt(q) b_{n/q}, with b_{n/q} = 0 unless q | n.
class TrivialFactorQuotient {
 public:
  TrivialFactorQuotient(PeriodicSeries c, int q);

  int q() const { return q_; }
  const PeriodicSeries& dividend() const { return c_; }
  QuadraticInteger coefficient(std::int64_t n) const;
  std::vector<QuadraticInteger> coefficients(std::int64_t n_max) const;

  // Checks (1 + sqrt(q) [n = q]) * b = c exactly for n <= n_max.
  bool convolution_identity_holds(std::int64_t n_max) const;

  // Direct summation; only for Re s >= 2.
  Evaluation evaluate(cplx s, std::int64_t terms = 200000) const;

  // max over N in [sqrt(n_max), n_max] of log|sum_{n<=N} b_n| / log N.
  double partial_sum_exponent(std::int64_t n_max) const;

 private:
  PeriodicSeries c_;
  int q_;
  QuadraticInteger sqrt_q_;
};

TrivialFactorQuotient divide_by_trivial_factor(const PeriodicSeries& c, int q);

// Same growth measure for a periodic series.
double partial_sum_exponent(const PeriodicSeries& c, std::int64_t n_max);

struct DHConstruction {
  FunctionSpec f;
  double theta = 0.0;  // arg(eps(chi)) / 2
  bool degenerate = false;
};

DHConstruction dh_construct(const DirichletCharacter& chi);

}  // namespace dz
