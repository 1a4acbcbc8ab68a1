#include "dz/harness.hpp"

#include <cmath>

#include "dz/errors.hpp"

namespace dz {

namespace {

using io::json;
using io::number_json;

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

constexpr double kTaus[] = {0.0, 0.25, 0.5, 0.75, 1.0};

}  // namespace

HarnessReport deformation_report(int q, const DirichletCharacter& chi, double t_max, int tau_steps) {
  if (chi.modulus() != q) throw DomainError("deformation_report: character modulus differs from q");
  if (!(t_max > 1.0 && t_max <= 60.0)) throw DomainError("deformation_report: t_max must lie in (1, 60]");
  const auto fam = make_family(chi);
  const auto c = classify(chi);
  HarnessReport out;
  json& j = out.json;

  j["q"] = q;
  j["parity"] = c.parity;
  j["character"] = {{"label", chi.label()},
                    {"conductor", c.conductor},
                    {"primitive", c.is_primitive},
                    {"epsilon_re", number_json(root_number(chi).epsilon.real())},
                    {"epsilon_im", number_json(root_number(chi).epsilon.imag())}};
  j["family"] = {{"f0", fam.f0.describe()},
                 {"f1", fam.f1.describe()},
                 {"trig_factor", fam.parity == 0 ? "sin" : "cos"},
                 {"degenerate", fam.degenerate}};
  j["t_max"] = number_json(t_max);
  j["tau_steps"] = tau_steps;

  // Functional equation for both endpoints and the sampled deformations.
  {
    json fe;
    bool pass = true;
    const auto sweep = [&](const FunctionSpec& f) {
      const auto r = residual_sweep(f, fam.shared_fe, kStandardBox, kStandardGrid, kStandardGrid);
      pass = pass && r.max_residual < kResidualTolerance;
      return number_json(r.max_residual);
    };
    fe["box"] = io::to_json(kStandardBox);
    fe["tolerance"] = number_json(kResidualTolerance);
    fe["f0"] = sweep(fam.f0);
    fe["f1"] = sweep(fam.f1);
    json per_tau = json::array();
    for (double tau : kTaus) per_tau.push_back({{"tau", number_json(tau)}, {"max_residual", sweep(fam.at(tau))}});
    fe["phi"] = per_tau;
    fe["verdict"] = verdict(pass);
    out.all_pass = out.all_pass && pass;
    j["functional_equation"] = fe;
  }

  {
    const auto cc = continuity_check(fam, kStandardBox);
    j["continuity"] = {{"sup_modulus", number_json(cc.sup_modulus)},
                       {"worst_ratio", number_json(cc.worst_ratio)},
                       {"identity_defect", number_json(cc.identity_defect)},
                       {"verdict", verdict(cc.pass)}};
    out.all_pass = out.all_pass && cc.pass;
  }

  {
    json lines = json::array();
    bool pass = true;
    const Rect box{kStandardBox.sigma_lo, kStandardBox.sigma_hi, 1.0, t_max};
    for (double tau : kTaus) {
      const auto v = verify_on_line(fam.at(tau), fam.shared_fe, box);
      json entry = io::to_json(v);
      entry["tau"] = number_json(tau);
      lines.push_back(entry);
      pass = pass && v.pass;
    }
    j["line_verification"] = {{"per_tau", lines}, {"verdict", verdict(pass)}};
    out.all_pass = out.all_pass && pass;
  }

  {
    const auto pairing = pair_zeros(fam, {1.0, t_max}, tau_steps);
    json p = io::to_json(pairing);
    json trajectories = json::array();
    bool all_completed = true;
    for (std::size_t id = 0; id < pairing.trajectories.size(); ++id) {
      json tr = io::to_json(pairing.trajectories[id]);
      tr["id"] = id;
      trajectories.push_back(tr);
      all_completed = all_completed && pairing.trajectories[id].status == TrajectoryStatus::Completed;
    }
    j["pairing"] = p;
    j["trajectories"] = {{"paths", trajectories}, {"verdict", verdict(all_completed)}};
    out.all_pass = out.all_pass && pairing.counts_within_one() && all_completed;

    // Whether the elementary factor's zeros stay put along the deformation.
    if (fam.parity == 0) {
      json values = json::array();
      bool vanish = true;
      const auto ordinates = trivial_zeros(q, {0.0, t_max});
      for (std::size_t k = 0; k < ordinates.size(); ++k) {
        const double t = ordinates[k].t;
        const double v = std::abs(fam.f1({0.5, t}));
        vanish = vanish && v < 1e-6;
        values.push_back({{"k", k}, {"t", number_json(t)}, {"abs_f1", number_json(v)}});
      }
      json drift = json::array();
      for (const auto& tr : pairing.trajectories) {
        if (tr.start_zero.kind != ZeroKind::TrivialFactor) continue;
        double d = 0.0;
        for (const auto& s : tr.samples) d = std::max(d, std::abs(s.t - tr.start_zero.t));
        drift.push_back({{"start_t", number_json(tr.start_zero.t)}, {"max_drift", number_json(d)}});
      }
      j["trivial_factor_zeros"] = {{"f1_values", values}, {"drift", drift}, {"verdict", verdict(vanish)}};
      out.all_pass = out.all_pass && vanish;

      std::vector<std::int64_t> cs;
      for (int n = 1; n <= q; ++n) cs.push_back(chi.exponent(n) < 0 ? 0 : std::lround(chi(n).real()));
      const auto series = PeriodicSeries::from_integers(cs);
      const auto quotient = divide_by_trivial_factor(series, q);
      json b = json::array();
      for (const auto& v : quotient.coefficients(10)) b.push_back(v.to_string());
      j["series_quotient"] = {{"b_1_to_10", b},
                              {"b_q_squared", quotient.coefficient(static_cast<std::int64_t>(q) * q).to_string()},
                              {"convolution_exact_to_10000", quotient.convolution_identity_holds(10000)},
                              {"dividend_growth_exponent", number_json(partial_sum_exponent(series, 100000))},
                              {"quotient_growth_exponent", number_json(quotient.partial_sum_exponent(100000))}};
    }
  }

  j["gauss_sum_collisions"] = gauss_sum_collisions(q);
  j["verdict"] = verdict(out.all_pass);
  return out;
}

}  // namespace dz
