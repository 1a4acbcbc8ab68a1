#include "dz/funceq.hpp"

#include <cmath>
#include <numbers>

#include "dz/errors.hpp"

namespace dz {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi z / 2) for the trig factors of W.
cplx sin_half_pi(cplx z) { return std::sin(0.5 * kPi * z); }

bool same_equation(const FunctionalEquation& a, const FunctionalEquation& b) {
  return a.modulus == b.modulus && a.parity == b.parity && a.power == b.power && std::abs(a.epsilon - b.epsilon) < 1e-9;
}

}  // namespace

FunctionalEquation FunctionalEquation::zeta_type(int q) {
  if (q < 1) throw DomainError("FunctionalEquation: modulus must be positive");
  return {q, 0, {1.0, 0.0}, EquationKind::ZetaType, PowerExponent::Decreasing};
}

FunctionalEquation FunctionalEquation::dirichlet_type(const DirichletCharacter& chi) {
  const auto c = classify(chi);
  if (!c.is_primitive) throw DomainError("FunctionalEquation: character is not primitive");
  return {chi.modulus(), c.parity, root_number(chi).epsilon, EquationKind::DirichletType, PowerExponent::Decreasing};
}

FunctionalEquation FunctionalEquation::general(int q, int parity, cplx epsilon) {
  if (q < 1) throw DomainError("FunctionalEquation: modulus must be positive");
  if (parity != 0 && parity != 1) throw DomainError("FunctionalEquation: parity must be 0 or 1");
  if (std::abs(std::abs(epsilon) - 1.0) > 1e-9) throw DomainError("FunctionalEquation: |epsilon| must be 1");
  return {q, parity, epsilon, parity == 0 && epsilon == cplx{1.0, 0.0} ? EquationKind::ZetaType : EquationKind::DirichletType,
          PowerExponent::Decreasing};
}

cplx w_factor(cplx s, const FunctionalEquation& fe) {
  const double logq = std::log(static_cast<double>(fe.modulus));
  const cplx power = fe.power == PowerExponent::Decreasing ? (0.5 - s) : (s - 0.5);
  const cplx log_elementary = power * logq + std::log(2.0) + (s - 1.0) * std::log(2.0 * kPi);
  const double kappa = fe.parity;

  if (s.real() <= 0.5) return std::exp(log_elementary + log_gamma(1.0 - s)) * sin_half_pi(s + kappa);

  // Gamma(1-s) sin(pi(s+kappa)/2) = pi / (2 Gamma(s) sin(pi(s+1-kappa)/2)); finite where the
  // sine cancels a pole of Gamma(1-s).
  if (s.imag() == 0.0 && std::nearbyint(s.real()) == s.real()) {
    const long k = std::lround(s.real());
    if ((k + 1 - fe.parity) % 2 == 0) throw PoleError("w_factor: pole of Gamma(1-s) not cancelled");
  }
  const cplx partner = sin_half_pi(s + 1.0 - kappa);
  return std::exp(log_elementary - log_gamma(s)) * kPi / (2.0 * partner);
}

double fe_residual(const FunctionSpec& f, const FunctionalEquation& fe, cplx s) {
  const cplx lhs = f(s);
  const cplx reflected = std::conj(f(1.0 - std::conj(s)));
  const cplx rhs = fe.epsilon * w_factor(s, fe) * reflected;
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

std::optional<FunctionalEquation> natural_equation(const FunctionSpec& f) {
  using V = FunctionSpec;
  const auto& v = f.variant();
  if (std::holds_alternative<V::Zeta>(v)) return FunctionalEquation::zeta_type(1);
  if (const auto* z = std::get_if<V::ScaledZeta>(&v)) return FunctionalEquation::zeta_type(z->q);
  if (const auto* d = std::get_if<V::DirichletL>(&v)) {
    if (!classify(d->chi).is_primitive) return std::nullopt;
    return FunctionalEquation::dirichlet_type(d->chi);
  }
  if (const auto* d = std::get_if<V::DHCombination>(&v)) {
    const auto c = classify(d->chi);
    if (!c.is_primitive) return std::nullopt;
    return FunctionalEquation::general(d->chi.modulus(), c.parity, {1.0, 0.0});
  }
  if (const auto* d = std::get_if<V::Deformation>(&v)) {
    auto a = natural_equation(*d->f0);
    auto b = natural_equation(*d->f1);
    if (a && b && same_equation(*a, *b)) return a;
    if (d->tau == 0.0) return a;
    if (d->tau == 1.0) return b;
    return std::nullopt;
  }
  return std::nullopt;
}

ResidualSweep residual_sweep(const FunctionSpec& f, const FunctionalEquation& fe, const Rect& box, int n_sigma,
                             int n_t) {
  if (n_sigma < 2 || n_t < 2) throw DomainError("residual_sweep: need at least 2 points per axis");
  ResidualSweep out;
  for (int i = 0; i < n_sigma; ++i) {
    const double sigma = box.sigma_lo + (box.sigma_hi - box.sigma_lo) * i / (n_sigma - 1);
    for (int j = 0; j < n_t; ++j) {
      const double t = box.t_lo + (box.t_hi - box.t_lo) * j / (n_t - 1);
      const cplx s{sigma, t};
      try {
        const double r = fe_residual(f, fe, s);
        out.points.push_back({s, r});
        out.max_residual = std::max(out.max_residual, r);
      } catch (const PoleError&) {
        out.skipped.push_back(s);
      }
    }
  }
  return out;
}

double hardy_phase(double t, const FunctionalEquation& fe) {
  const double logq = std::log(static_cast<double>(fe.modulus));
  const double power = fe.power == PowerExponent::Decreasing ? -t * logq : t * logq;
  const double gamma_arg = log_gamma(cplx{0.5, -t}).imag();
  // Re sin(pi/4 + pi kappa/2 + i pi t/2) > 0, so the principal arg is continuous in t.
  const double trig_arg = std::arg(sin_half_pi(cplx{0.5 + fe.parity, t}));
  return std::arg(fe.epsilon) + power + t * std::log(2.0 * kPi) + gamma_arg + trig_arg;
}

HardySample hardy_z(const FunctionSpec& f, const FunctionalEquation& fe, double t) {
  const auto e = f.evaluate({0.5, t});
  const double half = 0.5 * hardy_phase(t, fe);
  const cplx z = e.value * cplx{std::cos(half), -std::sin(half)};
  return {t, z.real(), z.imag(), e.error_estimate + std::abs(z.imag())};
}

namespace {

void refine_segment(const FunctionSpec& f, const FunctionalEquation& fe, double a, double b, double phase_a,
                    double phase_b, int depth, std::vector<HardySample>& out) {
  constexpr int kMaxHalvings = 8;
  if (0.5 * std::abs(phase_b - phase_a) > 0.5 * std::numbers::pi) {
    if (depth >= kMaxHalvings)
      throw BranchError("hardy_signal: phase step too coarse near t = " + std::to_string(a) + "; use more points");
    const double m = 0.5 * (a + b);
    const double phase_m = hardy_phase(m, fe);
    refine_segment(f, fe, a, m, phase_a, phase_m, depth + 1, out);
    refine_segment(f, fe, m, b, phase_m, phase_b, depth + 1, out);
    return;
  }
  out.push_back(hardy_z(f, fe, b));
}

}  // namespace

std::vector<HardySample> hardy_signal(const FunctionSpec& f, const FunctionalEquation& fe, Interval range,
                                      int n_points) {
  if (n_points < 2) throw DomainError("hardy_signal: need at least 2 points");
  if (!(range.hi > range.lo)) throw DomainError("hardy_signal: empty range");
  std::vector<HardySample> out;
  out.reserve(static_cast<std::size_t>(n_points));
  const double h = range.length() / (n_points - 1);
  double prev_t = range.lo;
  double prev_phase = hardy_phase(range.lo, fe);
  out.push_back(hardy_z(f, fe, range.lo));
  for (int i = 1; i < n_points; ++i) {
    const double t = i == n_points - 1 ? range.hi : range.lo + h * i;
    const double phase = hardy_phase(t, fe);
    refine_segment(f, fe, prev_t, t, prev_phase, phase, 0, out);
    prev_t = t;
    prev_phase = phase;
  }
  return out;
}

}  // namespace dz
