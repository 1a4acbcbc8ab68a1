#pragma once

// Evaluable analytic functions as immutable values.

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "dz/analytic.hpp"
#include "dz/characters.hpp"

namespace dz {

class FunctionSpec {
 public:
  struct Zeta {};
  struct HurwitzZeta {
    double a;
  };
  struct DirichletL {
    DirichletCharacter chi;
  };
  struct PeriodicL {
    PeriodicSeries series;
  };
  // (1 + q^{1/2-s}) zeta(s)
  struct ScaledZeta {
    int q;
  };
  // (1 - tau) f0 + tau f1
  struct Deformation {
    double tau;
    std::shared_ptr<const FunctionSpec> f0;
    std::shared_ptr<const FunctionSpec> f1;
  };
  // 1/2 [(1 - i tan theta) L(s, chi) + (1 + i tan theta) L(s, conj chi)]
  struct DHCombination {
    DirichletCharacter chi;
    double theta;
  };
  using Variant = std::variant<Zeta, HurwitzZeta, DirichletL, PeriodicL, ScaledZeta, Deformation, DHCombination>;

  static FunctionSpec zeta();
  static FunctionSpec hurwitz(double a);
  static FunctionSpec dirichlet(DirichletCharacter chi);
  static FunctionSpec periodic(PeriodicSeries series);
  static FunctionSpec scaled_zeta(int q);
  static FunctionSpec deformation(double tau, FunctionSpec f0, FunctionSpec f1);
  static FunctionSpec dh_combination(DirichletCharacter chi, double theta);

  const Variant& variant() const { return variant_; }

  Evaluation evaluate(cplx s) const;
  cplx operator()(cplx s) const { return evaluate(s).value; }

  // True when the continuation has a simple pole at s = 1.
  bool has_pole_at_one() const;
  // q when the function carries the elementary factor 1 + q^{1/2-s}.
  std::optional<int> trivial_factor_modulus() const;
  // Whether every line zero not explained by a trivial factor is nontrivial
  // (false for series whose Euler factors may add imaginary zeros).
  bool zeros_classifiable() const;
  std::string describe() const;

 private:
  explicit FunctionSpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

}  // namespace dz
