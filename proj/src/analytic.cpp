#include "dz/analytic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "dz/errors.hpp"

namespace dz {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2j} for j = 1..13.
constexpr std::array<double, 13> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,           1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,       7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,     854513.0 / 138.0,    -236364091.0 / 2730.0,
    8553103.0 / 6.0};

// Number of Euler-Maclaurin correction terms; term 13 is the error estimate.
constexpr int kEulerMaclaurinTerms = 12;

// B_{2j} / (2j)! for j = 1..13.
const std::array<double, 13>& bernoulli_over_factorial() {
  static const std::array<double, 13> table = [] {
    std::array<double, 13> t{};
    double fact = 1.0;
    for (int j = 1; j <= 13; ++j) {
      fact *= static_cast<double>((2 * j - 1) * (2 * j));
      t[j - 1] = kBernoulliEven[j - 1] / fact;
    }
    return t;
  }();
  return table;
}

void require_finite(cplx s, const char* who) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError(std::string(who) + ": non-finite argument");
}

// (e^u - 1) / u, stable near u = 0.
cplx expm1_over(cplx u) {
  if (std::abs(u) < 1e-3) {
    return 1.0 + u * (0.5 + u * (1.0 / 6.0 + u * (1.0 / 24.0 + u * (1.0 / 120.0 + u / 720.0))));
  }
  return (std::exp(u) - 1.0) / u;
}

cplx stirling(cplx z) {
  const auto& b = kBernoulliEven;
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series{};
  cplx pw = inv;
  for (int k = 1; k <= 10; ++k) {
    series += b[k - 1] / static_cast<double>(2 * k * (2 * k - 1)) * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && std::nearbyint(s.real()) == s.real();
}

}  // namespace

cplx log_gamma(cplx s) {
  require_finite(s, "log_gamma");
  if (is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at a non-positive integer");
  cplx z = s;
  cplx shift{};
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

Evaluation hurwitz_zeta_regular(cplx s, double a) {
  require_finite(s, "hurwitz_zeta");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");

  // Shift so that |s + N + a| comfortably exceeds max(10, |Im s|).
  const double target = std::max(10.0, std::abs(s));
  long n_shift = static_cast<long>(std::ceil(target));
  if (s.real() < 0.0) n_shift += static_cast<long>(std::ceil(-s.real()));

  // Rounding in (k+a)^{-s} grows with |s| log(k+a); errors are summed in quadrature.
  cplx head{};
  double rounding_sq = 0.0;
  for (long k = n_shift - 1; k >= 0; --k) {
    const double logk = std::log(static_cast<double>(k) + a);
    const cplx term = std::exp(-s * logk);
    head += term;
    const double r = std::abs(term) * (1.0 + std::abs(s) * std::abs(logk));
    rounding_sq += r * r;
  }

  const double x = static_cast<double>(n_shift) + a;
  const double logx = std::log(x);
  const cplx x_minus_s = std::exp(-s * logx);
  // ((x^{1-s}) - 1) / (s - 1)
  const cplx tail_integral = -logx * expm1_over((1.0 - s) * logx);

  const auto& coef = bernoulli_over_factorial();
  cplx correction{};
  cplx rising = s;                 // s (s+1) ... (s + 2j - 2)
  cplx power = x_minus_s / x;      // x^{-s-2j+1}
  const double inv_x2 = 1.0 / (x * x);
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    correction += coef[j - 1] * rising * power;
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    power *= inv_x2;
  }
  const double omitted = std::abs(coef[kEulerMaclaurinTerms] * rising * power);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  return {head + tail_integral + 0.5 * x_minus_s + correction,
          omitted + eps * (std::sqrt(rounding_sq) + std::abs(head))};
}

Evaluation hurwitz_zeta(cplx s, double a) {
  if (std::abs(s - 1.0) < kPoleExclusion) throw PoleError("hurwitz_zeta: pole at s = 1");
  auto r = hurwitz_zeta_regular(s, a);
  r.value += 1.0 / (s - 1.0);
  return r;
}

Evaluation riemann_zeta(cplx s) {
  if (std::abs(s - 1.0) < kPoleExclusion) throw PoleError("riemann_zeta: pole at s = 1");
  return hurwitz_zeta(s, 1.0);
}

Evaluation periodic_l(cplx s, std::span<const cplx> coefficients) {
  require_finite(s, "periodic_l");
  const std::size_t q = coefficients.size();
  if (q == 0) throw DomainError("periodic_l: empty coefficient vector");
  cplx total{};
  for (const cplx& c : coefficients) total += c;
  const bool has_pole = std::abs(total) > 1e-12 * static_cast<double>(q);
  if (has_pole && std::abs(s - 1.0) < kPoleExclusion) throw PoleError("periodic_l: pole at s = 1");

  const double qd = static_cast<double>(q);
  cplx regular{};
  double err = 0.0;
  for (std::size_t a = 1; a <= q; ++a) {
    const cplx c = coefficients[a - 1];
    if (c == cplx{}) continue;
    const auto h = hurwitz_zeta_regular(s, static_cast<double>(a) / qd);
    regular += c * h.value;
    err += std::abs(c) * h.error_estimate;
  }
  cplx inner = regular;
  if (has_pole) inner += total / (s - 1.0);
  const cplx scale = std::exp(-s * std::log(qd));
  return {scale * inner, std::abs(scale) * err};
}

Evaluation dirichlet_l(cplx s, const DirichletCharacter& chi) {
  // values() is indexed by n mod q; the series wants c_1..c_q.
  std::vector<cplx> c(chi.values().begin() + 1, chi.values().end());
  c.push_back(chi.values().front());
  return periodic_l(s, std::span<const cplx>(c));
}

PeriodicSeries::PeriodicSeries(std::vector<QuadraticInteger> coefficients) : exact_(std::move(coefficients)) {
  if (exact_.empty()) throw DomainError("PeriodicSeries: empty coefficient vector");
  bool all_zero = true;
  for (const auto& c : exact_) all_zero = all_zero && c.is_zero();
  if (all_zero) throw DomainError("PeriodicSeries: coefficients are all zero");
  (void)period_sum();  // rejects mixed radicands
  rendered_.reserve(exact_.size());
  for (const auto& c : exact_) rendered_.emplace_back(c.to_double(), 0.0);
}

PeriodicSeries PeriodicSeries::from_integers(const std::vector<std::int64_t>& coefficients) {
  std::vector<QuadraticInteger> exact;
  exact.reserve(coefficients.size());
  for (auto c : coefficients) exact.push_back(QuadraticInteger::integer(c, 1));
  return PeriodicSeries(std::move(exact));
}

std::int64_t PeriodicSeries::radicand() const { return period_sum().radicand(); }

const QuadraticInteger& PeriodicSeries::coefficient(std::int64_t n) const {
  if (n < 1) throw DomainError("PeriodicSeries: index must be >= 1");
  return exact_[static_cast<std::size_t>((n - 1) % period())];
}

QuadraticInteger PeriodicSeries::period_sum() const {
  QuadraticInteger sum;
  for (const auto& c : exact_) sum = sum + c;
  return sum;
}

double PeriodicSeries::mean() const { return period_sum().to_double() / period(); }

Evaluation periodic_l(cplx s, const PeriodicSeries& c) {
  if (!c.period_sum().is_zero() && std::abs(s - 1.0) < kPoleExclusion)
    throw PoleError("periodic_l: pole at s = 1");
  if (c.period_sum().is_zero()) {
    // Exact zero mean: evaluate the regular parts only, no pole term.
    const double qd = static_cast<double>(c.period());
    cplx regular{};
    double err = 0.0;
    for (int a = 1; a <= c.period(); ++a) {
      const cplx coef = c.rendered()[a - 1];
      if (coef == cplx{}) continue;
      const auto h = hurwitz_zeta_regular(s, a / qd);
      regular += coef * h.value;
      err += std::abs(coef) * h.error_estimate;
    }
    const cplx scale = std::exp(-s * std::log(qd));
    return {scale * regular, std::abs(scale) * err};
  }
  return periodic_l(s, std::span<const cplx>(c.rendered()));
}

Evaluation eval_f0(cplx s, int q) {
  if (q < 1) throw DomainError("eval_f0: q must be positive");
  if (std::abs(s - 1.0) < kPoleExclusion) throw PoleError("eval_f0: pole at s = 1");
  const auto z = riemann_zeta(s);
  const cplx factor = 1.0 + std::exp((0.5 - s) * std::log(static_cast<double>(q)));
  return {factor * z.value, std::abs(factor) * z.error_estimate};
}

double abscissa_of_convergence(const PeriodicSeries& c) { return c.period_sum().is_zero() ? 0.0 : 1.0; }

}  // namespace dz
