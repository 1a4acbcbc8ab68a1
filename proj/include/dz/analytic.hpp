#pragma once

// Complex-plane evaluation of log-Gamma, Hurwitz/Riemann zeta, Dirichlet
// L-functions and periodic Dirichlet series.
//
// Every periodic series sum c_n n^{-s} with period q is continued through
//   L(s, c) = q^{-s} sum_{a=1}^{q} c_a zeta(s, a/q),
// with zeta(s, a) from Euler-Maclaurin summation. The pole of zeta(s, a) at
// s = 1 is split off (zeta(s, a) = 1/(s-1) + regular part), so zero-mean
// combinations evaluate cleanly at s = 1 itself.

#include <complex>
#include <span>
#include <vector>

#include "dz/characters.hpp"
#include "dz/quadratic_integer.hpp"

namespace dz {

using cplx = std::complex<double>;

// Closed interval [lo, hi] of ordinates.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

// Rectangle [sigma_lo, sigma_hi] x [t_lo, t_hi] in the s-plane.
struct Rect {
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
};

// Value plus an estimate of the absolute truncation error.
struct Evaluation {
  cplx value;
  double error_estimate = 0.0;
};

// Evaluations this close to s = 1 are rejected when a pole is present.
inline constexpr double kPoleExclusion = 1e-8;

// Principal branch of log Gamma(s) (continuous off the non-positive reals).
cplx log_gamma(cplx s);

// zeta(s, a) for 0 < a <= 1, s != 1.
Evaluation hurwitz_zeta(cplx s, double a);

// zeta(s, a) - 1/(s - 1); entire in s.
Evaluation hurwitz_zeta_regular(cplx s, double a);

Evaluation riemann_zeta(cplx s);

Evaluation dirichlet_l(cplx s, const DirichletCharacter& chi);

// Coefficients c_1..c_q of a q-periodic Dirichlet series over Z[sqrt(d)].
class PeriodicSeries {
 public:
  explicit PeriodicSeries(std::vector<QuadraticInteger> coefficients);
  // Integer coefficients (d = 1).
  static PeriodicSeries from_integers(const std::vector<std::int64_t>& coefficients);

  int period() const { return static_cast<int>(exact_.size()); }
  std::int64_t radicand() const;
  // c_n for any n >= 1 (periodic extension).
  const QuadraticInteger& coefficient(std::int64_t n) const;
  const std::vector<QuadraticInteger>& exact() const { return exact_; }
  const std::vector<cplx>& rendered() const { return rendered_; }
  // Exact sum over one period; zero iff the continuation is entire.
  QuadraticInteger period_sum() const;
  double mean() const;

 private:
  std::vector<QuadraticInteger> exact_;
  std::vector<cplx> rendered_;
};

// Continuation of sum c_n n^{-s} for complex coefficients c_1..c_q.
Evaluation periodic_l(cplx s, std::span<const cplx> coefficients);
Evaluation periodic_l(cplx s, const PeriodicSeries& c);

// (1 + q^{1/2 - s}) zeta(s)
Evaluation eval_f0(cplx s, int q);

// 0 for zero-mean coefficients (bounded partial sums), 1 otherwise.
double abscissa_of_convergence(const PeriodicSeries& c);

// sum_{n=1}^{terms} coefficient(n) n^{-s}, for cross-checks in Re s > 1.
template <class Coefficients>
cplx direct_dirichlet_sum(cplx s, const Coefficients& coefficient, long terms) {
  cplx sum{};
  for (long n = terms; n >= 1; --n) {
    const double logn = std::log(static_cast<double>(n));
    sum += coefficient(n) * std::exp(-s * logn);
  }
  return sum;
}

}  // namespace dz
