#include "dz/function.hpp"

#include <cmath>
#include <sstream>

#include "dz/errors.hpp"

namespace dz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

FunctionSpec FunctionSpec::zeta() { return FunctionSpec(Zeta{}); }

FunctionSpec FunctionSpec::hurwitz(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz: a must lie in (0, 1]");
  return FunctionSpec(HurwitzZeta{a});
}

FunctionSpec FunctionSpec::dirichlet(DirichletCharacter chi) { return FunctionSpec(DirichletL{std::move(chi)}); }

FunctionSpec FunctionSpec::periodic(PeriodicSeries series) { return FunctionSpec(PeriodicL{std::move(series)}); }

FunctionSpec FunctionSpec::scaled_zeta(int q) {
  if (q < 1) throw DomainError("scaled_zeta: q must be positive");
  return FunctionSpec(ScaledZeta{q});
}

FunctionSpec FunctionSpec::deformation(double tau, FunctionSpec f0, FunctionSpec f1) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("deformation: tau must lie in [0, 1]");
  return FunctionSpec(Deformation{tau, std::make_shared<const FunctionSpec>(std::move(f0)),
                                  std::make_shared<const FunctionSpec>(std::move(f1))});
}

FunctionSpec FunctionSpec::dh_combination(DirichletCharacter chi, double theta) {
  return FunctionSpec(DHCombination{std::move(chi), theta});
}

Evaluation FunctionSpec::evaluate(cplx s) const {
  return std::visit(
      overloaded{
          [&](const Zeta&) { return riemann_zeta(s); },
          [&](const HurwitzZeta& h) { return hurwitz_zeta(s, h.a); },
          [&](const DirichletL& d) { return dirichlet_l(s, d.chi); },
          [&](const PeriodicL& p) { return periodic_l(s, p.series); },
          [&](const ScaledZeta& z) { return eval_f0(s, z.q); },
          [&](const Deformation& d) {
            // Skip an endpoint whose weight is exactly zero so tau = 1 has no pole.
            Evaluation out{};
            if (d.tau < 1.0) {
              const auto a = d.f0->evaluate(s);
              out.value += (1.0 - d.tau) * a.value;
              out.error_estimate += (1.0 - d.tau) * a.error_estimate;
            }
            if (d.tau > 0.0) {
              const auto b = d.f1->evaluate(s);
              out.value += d.tau * b.value;
              out.error_estimate += d.tau * b.error_estimate;
            }
            return out;
          },
          [&](const DHCombination& d) {
            const auto l = dirichlet_l(s, d.chi);
            const auto lbar = dirichlet_l(s, d.chi.conjugate());
            const cplx it{0.0, std::tan(d.theta)};
            return Evaluation{0.5 * ((1.0 - it) * l.value + (1.0 + it) * lbar.value),
                              0.5 * std::abs(1.0 + it) * (l.error_estimate + lbar.error_estimate)};
          },
      },
      variant_);
}

bool FunctionSpec::has_pole_at_one() const {
  return std::visit(overloaded{
                        [](const Zeta&) { return true; },
                        [](const HurwitzZeta&) { return true; },
                        [](const DirichletL& d) { return classify(d.chi).is_principal; },
                        [](const PeriodicL& p) { return !p.series.period_sum().is_zero(); },
                        [](const ScaledZeta&) { return true; },
                        [](const Deformation& d) {
                          return (d.tau < 1.0 && d.f0->has_pole_at_one()) || (d.tau > 0.0 && d.f1->has_pole_at_one());
                        },
                        [](const DHCombination& d) { return classify(d.chi).is_principal; },
                    },
                    variant_);
}

std::optional<int> FunctionSpec::trivial_factor_modulus() const {
  if (const auto* z = std::get_if<ScaledZeta>(&variant_)) return z->q;
  if (const auto* d = std::get_if<Deformation>(&variant_)) {
    // A factor survives the combination only when both endpoints carry it.
    const auto a = d->f0->trivial_factor_modulus();
    const auto b = d->f1->trivial_factor_modulus();
    if (d->tau == 0.0) return a;
    if (d->tau == 1.0) return b;
    if (a && b && *a == *b) return a;
  }
  return std::nullopt;
}

bool FunctionSpec::zeros_classifiable() const {
  return std::visit(overloaded{
                        [](const Zeta&) { return true; },
                        [](const HurwitzZeta&) { return false; },
                        [](const DirichletL& d) { return classify(d.chi).is_primitive; },
                        [](const PeriodicL&) { return false; },
                        [](const ScaledZeta&) { return true; },
                        [](const Deformation& d) { return d.f0->zeros_classifiable() && d.f1->zeros_classifiable(); },
                        [](const DHCombination& d) { return classify(d.chi).is_primitive; },
                    },
                    variant_);
}

std::string FunctionSpec::describe() const {
  return std::visit(
      overloaded{
          [](const Zeta&) { return std::string("zeta"); },
          [](const HurwitzZeta& h) { return "hurwitz(a=" + fmt(h.a) + ")"; },
          [](const DirichletL& d) {
            return "L(chi_" + std::to_string(d.chi.label()) + " mod " + std::to_string(d.chi.modulus()) + ")";
          },
          [](const PeriodicL& p) { return "periodic(q=" + std::to_string(p.series.period()) + ")"; },
          [](const ScaledZeta& z) { return "f0(q=" + std::to_string(z.q) + ")"; },
          [](const Deformation& d) {
            return "phi(tau=" + fmt(d.tau) + ";" + d.f0->describe() + "->" + d.f1->describe() + ")";
          },
          [](const DHCombination& d) {
            return "dh(chi_" + std::to_string(d.chi.label()) + " mod " + std::to_string(d.chi.modulus()) +
                   ",theta=" + fmt(d.theta) + ")";
          },
      },
      variant_);
}

}  // namespace dz
