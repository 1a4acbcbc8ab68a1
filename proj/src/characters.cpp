#include "dz/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "dz/errors.hpp"

namespace dz {

namespace {

constexpr int kMaxModulus = 10000;

// exp(2 pi i num / den), exact on the quarter turns.
cplx unit_root(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  if ((4 * num) % den == 0) {
    switch ((4 * num) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int multiplicative_order(int g, int m) {
  int x = g % m;
  int k = 1;
  while (x != 1) {
    x = static_cast<int>(static_cast<std::int64_t>(x) * g % m);
    ++k;
  }
  return k;
}

// One cyclic factor of (Z/q)^*: a generator of order `order` inside the
// prime-power modulus `pe`, with discrete logs of every residue mod pe.
struct CyclicFactor {
  int pe;
  int order;
  std::vector<int> log;  // size pe, -1 for non-units and for residues outside <g> x others
};

// Cyclic factors of (Z/p^e)^*. For p = 2, e >= 3 the group is <-1> x <5>
// and each residue gets one log per factor.
std::vector<CyclicFactor> prime_power_factors(int p, int e) {
  int pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  std::vector<CyclicFactor> out;
  if (p == 2) {
    if (e == 1) return out;
    if (e == 2) {
      CyclicFactor f{pe, 2, std::vector<int>(pe, -1)};
      f.log[1] = 0;
      f.log[3] = 1;
      out.push_back(std::move(f));
      return out;
    }
    const int ord5 = pe / 4;
    CyclicFactor sign{pe, 2, std::vector<int>(pe, -1)};
    CyclicFactor five{pe, ord5, std::vector<int>(pe, -1)};
    std::int64_t x = 1;
    for (int b = 0; b < ord5; ++b) {
      sign.log[x] = 0;
      five.log[x] = b;
      sign.log[pe - x] = 1;
      five.log[pe - x] = b;
      x = x * 5 % pe;
    }
    out.push_back(std::move(sign));
    out.push_back(std::move(five));
    return out;
  }
  const int phi = pe / p * (p - 1);
  int g = 2;
  while (std::gcd(g, pe) != 1 || multiplicative_order(g, pe) != phi) ++g;
  CyclicFactor f{pe, phi, std::vector<int>(pe, -1)};
  std::int64_t x = 1;
  for (int k = 0; k < phi; ++k) {
    f.log[x] = k;
    x = x * g % pe;
  }
  out.push_back(std::move(f));
  return out;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  int result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

DirichletCharacter::DirichletCharacter(int modulus, int order, std::vector<int> exponents, int label)
    : modulus_(modulus), order_(order), label_(label), exponents_(std::move(exponents)) {
  if (modulus_ < 1 || order_ < 1 || static_cast<int>(exponents_.size()) != modulus_)
    throw DomainError("DirichletCharacter: inconsistent modulus/order/value table");
  values_.reserve(exponents_.size());
  for (int k : exponents_) {
    if (k >= order_) throw DomainError("DirichletCharacter: exponent out of range");
    values_.push_back(k < 0 ? cplx{} : unit_root(k, order_));
  }
}

int DirichletCharacter::exponent(std::int64_t n) const {
  std::int64_t r = n % modulus_;
  if (r < 0) r += modulus_;
  return exponents_[static_cast<std::size_t>(r)];
}

cplx DirichletCharacter::operator()(std::int64_t n) const {
  std::int64_t r = n % modulus_;
  if (r < 0) r += modulus_;
  return values_[static_cast<std::size_t>(r)];
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<int> e(exponents_);
  for (int& k : e)
    if (k > 0) k = order_ - k;
  return {modulus_, order_, std::move(e), 0};
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
  if (modulus_ != other.modulus_) return false;
  // Compare the exact fractions k / L.
  for (int n = 0; n < modulus_; ++n) {
    const int a = exponents_[n];
    const int b = other.exponents_[n];
    if ((a < 0) != (b < 0)) return false;
    if (a >= 0 && static_cast<std::int64_t>(a) * other.order_ != static_cast<std::int64_t>(b) * order_)
      return false;
  }
  return true;
}

std::vector<DirichletCharacter> enumerate_characters(int q) {
  if (q < 1) throw DomainError("enumerate_characters: modulus must be positive");
  if (q > kMaxModulus) throw DomainError("enumerate_characters: modulus above 10^4 not supported");

  std::vector<CyclicFactor> factors;
  for (auto [p, e] : factorize(q))
    for (auto& f : prime_power_factors(p, e)) factors.push_back(std::move(f));

  int exponent_l = 1;
  for (const auto& f : factors) exponent_l = std::lcm(exponent_l, f.order);

  // logs[n][j]: discrete log of n in factor j (n a unit mod q).
  std::vector<std::vector<int>> logs(q);
  for (int n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    logs[n].reserve(factors.size());
    for (const auto& f : factors) logs[n].push_back(f.log[n % f.pe]);
  }

  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(euler_phi(q)));
  std::vector<int> a(factors.size(), 0);
  int label = 0;
  while (true) {
    std::vector<int> e(q, -1);
    for (int n = 0; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      std::int64_t k = 0;
      for (std::size_t j = 0; j < factors.size(); ++j)
        k += static_cast<std::int64_t>(a[j]) * logs[n][j] * (exponent_l / factors[j].order);
      e[n] = static_cast<int>(k % exponent_l);
    }
    out.emplace_back(q, exponent_l, std::move(e), ++label);

    // Lexicographic increment, first factor most significant.
    int j = static_cast<int>(factors.size()) - 1;
    while (j >= 0 && ++a[j] == factors[j].order) a[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

CharacterClassification classify(const DirichletCharacter& chi) {
  const int q = chi.modulus();
  const int l = chi.order();
  CharacterClassification c;
  c.parity = chi.exponent(q - 1) == 0 ? 0 : 1;
  c.is_real = std::all_of(chi.exponents().begin(), chi.exponents().end(),
                          [l](int k) { return k < 0 || (2 * k) % l == 0; });
  c.is_principal = std::all_of(chi.exponents().begin(), chi.exponents().end(),
                               [](int k) { return k <= 0; });
  for (int d = 1; d <= q; ++d) {
    if (q % d) continue;
    bool induced = true;
    for (int n = 1; n < q && induced; n += d)
      if (std::gcd(n, q) == 1 && chi.exponent(n) != 0) induced = false;
    if (induced) {
      c.conductor = d;
      break;
    }
  }
  c.is_primitive = c.conductor == q;
  return c;
}

cplx gauss_sum(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  const std::int64_t l = chi.order();
  cplx sum{};
  for (std::int64_t k = 1; k <= q; ++k) {
    const int e = chi.exponent(k);
    if (e < 0) continue;
    sum += unit_root(e * q + k * l, l * q);
  }
  return sum;
}

RootNumberData root_number(const DirichletCharacter& chi) {
  const auto c = classify(chi);
  RootNumberData r;
  r.gauss_sum = gauss_sum(chi);
  const cplx i_kappa = c.parity == 0 ? cplx{1.0, 0.0} : cplx{0.0, 1.0};
  r.epsilon = r.gauss_sum / (i_kappa * std::sqrt(static_cast<double>(chi.modulus())));
  r.non_primitive = !c.is_primitive;
  return r;
}

DirichletCharacter primitive_inducing(const DirichletCharacter& chi) {
  const int q = chi.modulus();
  const int f = classify(chi).conductor;
  std::vector<int> e(f, -1);
  for (int r = 0; r < f; ++r) {
    if (std::gcd(r, f) != 1) continue;
    for (int n = r; n < q + f; n += f) {
      if (std::gcd(n, q) == 1) {
        e[r] = chi.exponent(n);
        break;
      }
    }
  }
  DirichletCharacter induced(f, chi.order(), std::move(e));
  for (const auto& cand : enumerate_characters(f))
    if (cand == induced) return cand;
  return induced;
}

std::vector<CatalogEntry> catalog_self_dual(int q_max, int parity) {
  if (parity != 0 && parity != 1) throw DomainError("catalog_self_dual: parity must be 0 or 1");
  if (q_max > kMaxModulus) throw DomainError("catalog_self_dual: q_max above 10^4 not supported");
  std::vector<CatalogEntry> out;
  for (int q = 3; q <= q_max; ++q) {
    for (const auto& chi : enumerate_characters(q)) {
      const auto c = classify(chi);
      if (!c.is_real || c.is_principal || c.parity != parity) continue;
      const auto root = root_number(primitive_inducing(chi));
      if (std::abs(root.epsilon - 1.0) >= 1e-9) continue;
      out.push_back(CatalogEntry{q, chi, c, root, root_number(chi)});
    }
  }
  return out;
}

int gauss_sum_collisions(int q, double tol) {
  const auto chars = enumerate_characters(q);
  std::vector<cplx> taus;
  taus.reserve(chars.size());
  for (const auto& chi : chars) taus.push_back(gauss_sum(chi));
  int collisions = 0;
  for (std::size_t i = 0; i < taus.size(); ++i)
    for (std::size_t j = i + 1; j < taus.size(); ++j)
      if (std::abs(taus[i] - taus[j]) < tol) ++collisions;
  return collisions;
}

bool satisfies_character_axioms(const DirichletCharacter& chi) {
  const int q = chi.modulus();
  for (int n = 0; n < q; ++n) {
    const bool unit = std::gcd(n, q) == 1;
    if (unit != (chi.exponent(n) >= 0)) return false;
    if (chi.exponent(n) != chi.exponent(n + q)) return false;
  }
  if (chi.exponent(1) != 0) return false;
  const int l = chi.order();
  for (int m = 1; m < q; ++m) {
    if (std::gcd(m, q) != 1) continue;
    for (int n = 1; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      const int lhs = chi.exponent(static_cast<std::int64_t>(m) * n);
      if (lhs != (chi.exponent(m) + chi.exponent(n)) % l) return false;
    }
  }
  return true;
}

}  // namespace dz
