#pragma once

// Riemann-type functional equations f(s) = eps W(s) conj(f(1 - conj(s))) with
//
//   W(s) = 2^s q^{1/2-s} pi^{s-1} Gamma(1-s) sin(pi (s + kappa) / 2),
//
// plus the residual checker and the real-valued rotation Z(t) of f on the
// critical line.

#include <optional>
#include <vector>

#include "dz/function.hpp"

namespace dz {

enum class EquationKind { ZetaType, DirichletType };

// Sign of the exponent in the power factor q^{+-(1/2 - s)}.
enum class PowerExponent {
  Decreasing,  // q^{1/2 - s}
  Increasing,  // q^{s - 1/2}; fails for (1 + q^{1/2-s}) zeta(s), kept as a negative control
};

struct FunctionalEquation {
  int modulus = 1;
  int parity = 0;
  cplx epsilon{1.0, 0.0};
  EquationKind kind = EquationKind::ZetaType;
  PowerExponent power = PowerExponent::Decreasing;

  // kappa = 0, eps = 1: the equation shared by zeta(s) (q = 1) and (1 + q^{1/2-s}) zeta(s).
  static FunctionalEquation zeta_type(int q);
  // The equation of L(s, chi) for primitive chi.
  static FunctionalEquation dirichlet_type(const DirichletCharacter& chi);
  static FunctionalEquation general(int q, int parity, cplx epsilon);
};

cplx w_factor(cplx s, const FunctionalEquation& fe);

// |f(s) - eps W(s) conj(f(1 - conj s))| / (1 + |f(s)|)
double fe_residual(const FunctionSpec& f, const FunctionalEquation& fe, cplx s);

// The equation a function is known to satisfy, if any.
std::optional<FunctionalEquation> natural_equation(const FunctionSpec& f);

struct ResidualPoint {
  cplx s;
  double residual;
};

struct ResidualSweep {
  std::vector<ResidualPoint> points;
  std::vector<cplx> skipped;  // grid points at poles
  double max_residual = 0.0;
};

// n_sigma x n_t uniform grid over the rectangle, endpoints included.
ResidualSweep residual_sweep(const FunctionSpec& f, const FunctionalEquation& fe, const Rect& box, int n_sigma,
                             int n_t);

// Continuous branch of arg(eps W(1/2 + it)).
double hardy_phase(double t, const FunctionalEquation& fe);

struct HardySample {
  double t;
  double z;          // f(1/2 + it) exp(-i phase / 2), real part
  double imag;       // leftover imaginary part, zero up to rounding
  double error_estimate;
};

HardySample hardy_z(const FunctionSpec& f, const FunctionalEquation& fe, double t);

// n_points uniform samples on [range.lo, range.hi]; intervals whose half-phase
// increment exceeds pi/2 are halved (up to 8 times) before BranchError.
std::vector<HardySample> hardy_signal(const FunctionSpec& f, const FunctionalEquation& fe, Interval range,
                                      int n_points);

}  // namespace dz
