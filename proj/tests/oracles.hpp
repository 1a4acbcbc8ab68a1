#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

// zeta(s) = eta(s) / (1 - 2^{1-s}) with Borwein's acceleration of the
// alternating series; good to ~1e-13 relative for Re s > 0, |t| <= 30.
inline cplx zeta_borwein(cplx s, int n = 80) {
  std::vector<long double> d(n + 1);
  long double term = 1.0L;  // n (n+i-1)! 4^i / ((n-i)! (2i)!)
  long double sum = term;
  d[0] = sum;
  for (int i = 1; i <= n; ++i) {
    term *= static_cast<long double>(n + i - 1) * 4.0L * (n - i + 1) / ((2.0L * i - 1) * (2.0L * i));
    sum += term;
    d[i] = sum;
  }
  std::complex<long double> eta{};
  const std::complex<long double> ls{s.real(), s.imag()};
  for (int k = 0; k < n; ++k) {
    const long double sign = k % 2 == 0 ? 1.0L : -1.0L;
    eta += sign * (d[k] - d[n]) * std::exp(-ls * std::log(static_cast<long double>(k + 1)));
  }
  eta /= -d[n];
  const auto denom = 1.0L - std::exp((1.0L - ls) * std::log(2.0L));
  const auto z = eta / denom;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// sum_{n <= terms} c(n) n^{-s}, smallest terms first.
template <class C>
cplx direct_sum(cplx s, const C& c, long terms) {
  cplx sum{};
  for (long n = terms; n >= 1; --n) sum += c(n) * std::exp(-s * std::log(static_cast<double>(n)));
  return sum;
}

inline double gauss_sum_abs_sq(const std::vector<cplx>& values) {
  const int q = static_cast<int>(values.size());
  cplx g{};
  for (int k = 1; k <= q; ++k) g += values[k % q] * std::polar(1.0, 2.0 * pi * k / q);
  return std::norm(g);
}

// Legendre / Kronecker symbol (d / n) for odd prime n via Euler's criterion.
inline int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1;
  long b = a;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace oracle
