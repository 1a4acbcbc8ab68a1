#include "dz/deformation.hpp"

#include <algorithm>
#include <cmath>

#include "dz/errors.hpp"

namespace dz {

namespace {

constexpr double kWindowResolution = 0.005;
constexpr int kWindowDoublings = 3;
constexpr int kMaxTauHalvings = 8;
constexpr double kGapGrid = 0.01;
constexpr double kMaxOrdinate = 60.0;
constexpr double kMatchTolerance = 1e-6;

const CatalogEntry* find_real_primitive(const std::vector<CatalogEntry>& catalog, int q) {
  for (const auto& e : catalog)
    if (e.q == q && e.classification.is_primitive) return &e;
  return nullptr;
}

// Nearest sign change of Z(phi_tau) to t_prev, searched in growing windows.
std::optional<ZeroRecord> correct(const FunctionSpec& f, const FunctionalEquation& fe, double t_prev,
                                  double last_dt) {
  double w = 3.0 * (std::abs(last_dt) + kStepBudget);
  for (int d = 0; d <= kWindowDoublings; ++d, w *= 2.0) {
    const Interval window{t_prev - w, t_prev + w};
    const int n = std::max(16, static_cast<int>(std::ceil(window.length() / kWindowResolution)) + 1);
    const auto z = hardy_signal(f, fe, window, n);
    std::optional<std::size_t> best;
    double best_distance = 0.0;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
      const bool change = z[i].z == 0.0 || (z[i].z < 0.0) != (z[i + 1].z < 0.0);
      if (!change) continue;
      const double distance = std::abs(0.5 * (z[i].t + z[i + 1].t) - t_prev);
      if (!best || distance < best_distance) {
        best = i;
        best_distance = distance;
      }
    }
    if (best) {
      const auto& a = z[*best];
      const auto& b = z[*best + 1];
      return refine_line_zero(f, fe, a.t, b.t, a.z, b.z);
    }
  }
  return std::nullopt;
}

// min(|f0|, |f1|) on the critical line.
double gap_measure(const DeformationFamily& fam, double t) {
  const cplx s{0.5, t};
  return std::min(std::abs(fam.f0(s)), std::abs(fam.f1(s)));
}

// First local maximum of the gap measure strictly beyond `from` in `direction`.
double next_gap(const DeformationFamily& fam, double from, int direction) {
  double prev = gap_measure(fam, from);
  double t = from + direction * kGapGrid;
  double cur = gap_measure(fam, t);
  while (t > 0.0 && t < kMaxOrdinate) {
    const double next_t = t + direction * kGapGrid;
    const double next = gap_measure(fam, next_t);
    if (cur > prev && cur >= next) return t;
    prev = cur;
    cur = next;
    t = next_t;
  }
  return std::clamp(t, 0.0, kMaxOrdinate);
}

}  // namespace

DHConstruction dh_construct(const DirichletCharacter& chi) {
  const auto c = classify(chi);
  if (!c.is_primitive || c.is_principal) throw DomainError("dh_construct: character must be primitive");
  if (c.is_real) return {FunctionSpec::dirichlet(chi), 0.0, true};
  const double theta = 0.5 * std::arg(root_number(chi).epsilon);
  return {FunctionSpec::dh_combination(chi, theta), theta, false};
}

DeformationFamily make_family(const DirichletCharacter& chi) {
  const auto c = classify(chi);
  if (!c.is_real || c.is_principal) throw DomainError("make_family: need a real non-principal character");
  if (!c.is_primitive)
    throw DomainError("make_family: character mod " + std::to_string(chi.modulus()) +
                      " is not primitive, so L(s, chi) has no functional equation of that modulus");
  const int q = chi.modulus();
  const auto fe1 = FunctionalEquation::dirichlet_type(chi);
  if (std::abs(fe1.epsilon - cplx{1.0, 0.0}) > 1e-9) throw DomainError("make_family: root number is not 1");

  if (c.parity == 0)
    return {FunctionSpec::scaled_zeta(q), FunctionSpec::dirichlet(chi), FunctionalEquation::zeta_type(q), q, 0, false};

  for (const auto& psi : enumerate_characters(q)) {
    const auto pc = classify(psi);
    if (pc.parity == 1 && pc.is_primitive && !pc.is_real) {
      return {dh_construct(psi).f, FunctionSpec::dirichlet(chi), FunctionalEquation::general(q, 1, {1.0, 0.0}), q, 1,
              false};
    }
  }
  return {FunctionSpec::dirichlet(chi), FunctionSpec::dirichlet(chi), FunctionalEquation::general(q, 1, {1.0, 0.0}), q,
          1, true};
}

DeformationFamily make_family(int q, int parity) {
  if (q < 3) throw DomainError("make_family: q must be at least 3");
  if (parity != 0 && parity != 1) throw DomainError("make_family: parity must be 0 or 1");
  const auto catalog = catalog_self_dual(q, parity);
  const auto* entry = find_real_primitive(catalog, q);
  if (entry == nullptr)
    throw DomainError("make_family: no real primitive " + std::string(parity == 0 ? "even" : "odd") +
                      " character mod " + std::to_string(q));
  return make_family(entry->character);
}

cplx phi_tau(cplx s, double tau, const DeformationFamily& fam) { return fam.at(tau)(s); }

ContinuityCheck continuity_check(const DeformationFamily& fam, const Rect& k, int n) {
  if (n < 2) throw DomainError("continuity_check: need at least 2 points per axis");
  constexpr double taus[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  ContinuityCheck out;
  std::vector<std::pair<cplx, cplx>> values;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx s{k.sigma_lo + (k.sigma_hi - k.sigma_lo) * i / (n - 1), k.t_lo + (k.t_hi - k.t_lo) * j / (n - 1)};
      const cplx a = fam.f0(s);
      const cplx b = fam.f1(s);
      out.sup_modulus = std::max({out.sup_modulus, std::abs(a), std::abs(b)});
      values.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : values) {
    for (double t1 : taus) {
      for (double t2 : taus) {
        if (t2 <= t1) continue;
        const cplx p1 = (1.0 - t1) * a + t1 * b;
        const cplx p2 = (1.0 - t2) * a + t2 * b;
        const double diff = std::abs(p1 - p2);
        out.worst_ratio = std::max(out.worst_ratio, diff / (2.0 * out.sup_modulus * (t2 - t1)));
        out.identity_defect = std::max(out.identity_defect, std::abs(diff - (t2 - t1) * std::abs(a - b)));
      }
    }
  }
  out.pass = out.worst_ratio <= 1.0;
  return out;
}

std::string to_string(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::Completed: return "completed";
    case TrajectoryStatus::Merged: return "merged";
    default: return "lost";
  }
}

Trajectory track_zero(const ZeroRecord& z0, const DeformationFamily& fam, int tau_steps) {
  if (tau_steps < 10) throw DomainError("track_zero: need at least 10 tau steps");
  const double h0 = 1.0 / tau_steps;
  const double h_min = h0 / (1 << kMaxTauHalvings);
  const auto& fe = fam.shared_fe;

  Trajectory out;
  out.start_zero = z0;
  double tau = 0.0;
  double t = z0.t;
  double last_dt = 0.0;
  double step = h0;
  out.samples.push_back({0.0, t, std::abs(fam.f0({0.5, t}))});

  while (tau < 1.0) {
    const double next_tau = std::min(1.0, tau + step);
    const auto f = fam.at(next_tau);
    const auto z = correct(f, fe, t, last_dt);
    if (!z) {
      if (step > h_min) {
        step *= 0.5;
        ++out.halvings;
        continue;
      }
      // A zero near t = 0 meets its mirror image at -t and leaves the line.
      out.status = std::abs(t) < 3.0 * kStepBudget ? TrajectoryStatus::Merged : TrajectoryStatus::Lost;
      return out;
    }
    if (z->t * t < 0.0) {
      out.status = TrajectoryStatus::Merged;
      return out;
    }
    // Movements below the bisection width are noise, not a direction.
    const double dt = z->t - t;
    const bool moved = std::abs(dt) > 1e-9;
    if (moved && last_dt != 0.0 && (dt < 0.0) != (last_dt < 0.0)) ++out.reversals;
    out.max_step = std::max(out.max_step, std::abs(dt));
    if (moved) last_dt = dt;
    tau = next_tau;
    t = z->t;
    out.samples.push_back({tau, t, z->residual});
    step = std::min(h0, 2.0 * step);
  }

  ZeroRecord end;
  end.t = t;
  end.sigma = 0.5;
  end.source = fam.f1.describe();
  end.residual = std::abs(fam.f1({0.5, t}));
  end.kind = fam.f1.zeros_classifiable() ? ZeroKind::Nontrivial : ZeroKind::Unclassified;
  out.end_zero = end;
  out.status = TrajectoryStatus::Completed;
  return out;
}

PairingReport pair_zeros(const DeformationFamily& fam, Interval interval, int tau_steps) {
  if (!(interval.hi > interval.lo)) throw DomainError("pair_zeros: empty interval");
  if (interval.lo < 0.0 || interval.hi > kMaxOrdinate) throw DomainError("pair_zeros: interval outside [0, 60]");
  PairingReport out;
  out.interval = interval;
  Interval ext = interval;
  // Rescans of a grown interval find the same zeros up to bisection width.
  std::vector<Trajectory> tracked;
  const auto already_tracked = [&](double t) {
    return std::any_of(tracked.begin(), tracked.end(),
                       [&](const Trajectory& tr) { return std::abs(tr.start_zero.t - t) < kMatchTolerance; });
  };

  for (int iter = 0; iter < 64; ++iter) {
    out.f0_zeros = scan_line_zeros(fam.f0, fam.shared_fe, ext);
    out.f1_zeros = scan_line_zeros(fam.f1, fam.shared_fe, ext);
    for (const auto& z : out.f0_zeros)
      if (!already_tracked(z.t)) tracked.push_back(track_zero(z, fam, tau_steps));

    double lower_reach = ext.lo;
    double upper_reach = ext.hi;
    std::vector<double> ends;
    for (const auto& tr : tracked) {
      if (tr.status != TrajectoryStatus::Completed) continue;
      const double t1 = tr.end_zero->t;
      ends.push_back(t1);
      lower_reach = std::min(lower_reach, t1);
      upper_reach = std::max(upper_reach, t1);
    }
    bool extend_lo = lower_reach < ext.lo;
    bool extend_hi = upper_reach > ext.hi;
    for (const auto& z : out.f1_zeros) {
      const bool hit = std::any_of(ends.begin(), ends.end(), [&](double e) { return std::abs(e - z.t) < kMatchTolerance; });
      if (hit) continue;
      // An unmatched f1 zero came in from beyond the nearer end.
      if (z.t - ext.lo < ext.hi - z.t && ext.lo > 0.0)
        extend_lo = true;
      else
        extend_hi = true;
    }
    if (!extend_lo && !extend_hi) break;

    Interval grown = ext;
    if (extend_lo && ext.lo > 0.0) grown.lo = next_gap(fam, lower_reach, -1);
    if (extend_hi && ext.hi < kMaxOrdinate) grown.hi = next_gap(fam, upper_reach, +1);
    if (grown.lo == ext.lo && grown.hi == ext.hi) break;
    ext = grown;
  }
  out.extended = ext;

  std::sort(tracked.begin(), tracked.end(),
            [](const Trajectory& a, const Trajectory& b) { return a.start_zero.t < b.start_zero.t; });
  for (auto& tr : tracked)
    if (ext.contains(tr.start_zero.t)) out.trajectories.push_back(std::move(tr));

  // Two completed paths landing on one zero count as merged.
  for (std::size_t i = 0; i < out.trajectories.size(); ++i) {
    for (std::size_t j = i + 1; j < out.trajectories.size(); ++j) {
      auto& a = out.trajectories[i];
      auto& b = out.trajectories[j];
      if (a.end_zero && b.end_zero && std::abs(a.end_zero->t - b.end_zero->t) < kMatchTolerance) {
        a.status = TrajectoryStatus::Merged;
        b.status = TrajectoryStatus::Merged;
      }
    }
  }

  std::vector<double> ends;
  for (const auto& tr : out.trajectories) {
    if (tr.status == TrajectoryStatus::Merged) ++out.merged;
    if (tr.status == TrajectoryStatus::Lost) ++out.lost;
    if (tr.status == TrajectoryStatus::Completed && ext.contains(tr.end_zero->t)) {
      out.pairs.emplace_back(tr.start_zero, *tr.end_zero);
      ends.push_back(tr.end_zero->t);
    }
  }
  for (const auto& z : out.f1_zeros) {
    const bool hit = std::any_of(ends.begin(), ends.end(), [&](double e) { return std::abs(e - z.t) < kMatchTolerance; });
    if (!hit) out.unmatched_f1.push_back(z);
  }
  out.n0 = static_cast<int>(out.f0_zeros.size());
  out.n1 = static_cast<int>(out.f1_zeros.size());
  return out;
}

TrivialFactorQuotient::TrivialFactorQuotient(PeriodicSeries c, int q)
    : c_(std::move(c)), q_(q), sqrt_q_(square_root_of(q)) {
  if (q < 2) throw DomainError("divide_by_trivial_factor: q must be at least 2");
  if (c_.radicand() != 1 && c_.radicand() != sqrt_q_.radicand())
    throw DomainError("divide_by_trivial_factor: coefficients must lie in Z[sqrt(q)]");
}

QuadraticInteger TrivialFactorQuotient::coefficient(std::int64_t n) const {
  if (n < 1) throw DomainError("TrivialFactorQuotient: index must be positive");
  QuadraticInteger b = c_.coefficient(n);
  if (n % q_ == 0) b = b - sqrt_q_ * coefficient(n / q_);
  return b;
}

std::vector<QuadraticInteger> TrivialFactorQuotient::coefficients(std::int64_t n_max) const {
  std::vector<QuadraticInteger> b;
  b.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    QuadraticInteger v = c_.coefficient(n);
    if (n % q_ == 0) v = v - sqrt_q_ * b[static_cast<std::size_t>(n / q_ - 1)];
    b.push_back(v);
  }
  return b;
}

bool TrivialFactorQuotient::convolution_identity_holds(std::int64_t n_max) const {
  const auto b = coefficients(n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    QuadraticInteger a = b[static_cast<std::size_t>(n - 1)];
    if (n % q_ == 0) a = a + sqrt_q_ * b[static_cast<std::size_t>(n / q_ - 1)];
    if (!(a == c_.coefficient(n))) return false;
  }
  return true;
}

Evaluation TrivialFactorQuotient::evaluate(cplx s, std::int64_t terms) const {
  if (s.real() < 2.0) throw DomainError("TrivialFactorQuotient: direct summation needs Re s >= 2");
  const auto b = coefficients(terms);
  const cplx sum = direct_dirichlet_sum(s, [&](long n) { return b[static_cast<std::size_t>(n - 1)].to_double(); }, terms);
  // |b_n| <= C sqrt(n) with C the largest |c|, so the tail is below C N^{3/2-sigma} / (sigma - 3/2).
  double c_max = 0.0;
  for (const auto& c : c_.exact()) c_max = std::max(c_max, std::abs(c.to_double()));
  const double sigma = s.real();
  const double tail = 2.0 * c_max * std::pow(static_cast<double>(terms), 1.5 - sigma) / (sigma - 1.5);
  return {sum, tail};
}

namespace {

template <class Coefficient>
double growth_exponent(const Coefficient& coefficient, std::int64_t n_max) {
  if (n_max < 16) throw DomainError("partial_sum_exponent: n_max must be at least 16");
  const auto n_lo = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n_max)));
  double sum = 0.0;
  double best = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    sum += coefficient(n);
    if (n >= n_lo) best = std::max(best, std::log(std::max(std::abs(sum), 1.0)) / std::log(static_cast<double>(n)));
  }
  return best;
}

}  // namespace

double TrivialFactorQuotient::partial_sum_exponent(std::int64_t n_max) const {
  const auto b = coefficients(n_max);
  return growth_exponent([&](std::int64_t n) { return b[static_cast<std::size_t>(n - 1)].to_double(); }, n_max);
}

double partial_sum_exponent(const PeriodicSeries& c, std::int64_t n_max) {
  return growth_exponent([&](std::int64_t n) { return c.coefficient(n).to_double(); }, n_max);
}

TrivialFactorQuotient divide_by_trivial_factor(const PeriodicSeries& c, int q) { return TrivialFactorQuotient(c, q); }

}  // namespace dz
