#pragma once

// Dirichlet characters modulo q with exact root-of-unity values.
//
// A character is stored as a table of exponents: chi(n) = exp(2 pi i k_n / L)
// where L is the exponent of (Z/q)^* and k_n = -1 marks gcd(n, q) > 1.
// Enumeration follows the exponent vectors on a fixed generator set of
// (Z/q)^* (prime powers ascending; for 2^e, e >= 3, the pair -1, 5),
// ordered lexicographically, so the principal character comes first.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace dz {

using cplx = std::complex<double>;

class DirichletCharacter {
 public:
  // exponents[n] in [0, order) for units, -1 otherwise; size == modulus.
  DirichletCharacter(int modulus, int order, std::vector<int> exponents, int label = 0);

  int modulus() const { return modulus_; }
  // Common denominator L of the value exponents.
  int order() const { return order_; }
  // 1-based position in enumerate_characters(modulus()); 0 if unknown.
  int label() const { return label_; }

  // Exponent of chi(n mod q) over order(), or -1 when chi(n) = 0.
  int exponent(std::int64_t n) const;
  cplx operator()(std::int64_t n) const;
  const std::vector<cplx>& values() const { return values_; }
  const std::vector<int>& exponents() const { return exponents_; }

  DirichletCharacter conjugate() const;
  bool operator==(const DirichletCharacter& other) const;

 private:
  int modulus_;
  int order_;
  int label_;
  std::vector<int> exponents_;
  std::vector<cplx> values_;
};

struct CharacterClassification {
  int parity = 0;  // kappa: 0 even, 1 odd
  int conductor = 1;
  bool is_primitive = false;
  bool is_real = false;
  bool is_principal = false;
};

struct RootNumberData {
  cplx gauss_sum;
  cplx epsilon;
  // Set when the character is not primitive; |epsilon| may differ from 1.
  bool non_primitive = false;
};

struct CatalogEntry {
  int q = 0;
  DirichletCharacter character;
  CharacterClassification classification;
  // Root number of the L-function, i.e. of the primitive character inducing chi.
  RootNumberData root;
  // tau(chi) / (i^kappa sqrt(q)) taken literally at modulus q.
  RootNumberData modulus_root;
};

std::vector<DirichletCharacter> enumerate_characters(int q);

CharacterClassification classify(const DirichletCharacter& chi);

// sum_{k=1}^{q} chi(k) exp(2 pi i k / q)
cplx gauss_sum(const DirichletCharacter& chi);

// epsilon = tau(chi) / (i^kappa sqrt(q))
RootNumberData root_number(const DirichletCharacter& chi);

// The primitive character modulo the conductor that induces chi.
DirichletCharacter primitive_inducing(const DirichletCharacter& chi);

// Real non-principal characters of the given parity whose L-function root
// number equals 1 (within 1e-9), for 3 <= q <= q_max, sorted by (q, label).
// q_max < 3 yields an empty catalog.
std::vector<CatalogEntry> catalog_self_dual(int q_max, int parity);

// Number of unordered pairs k != k' mod q with |tau(chi_k) - tau(chi_k')| < tol.
int gauss_sum_collisions(int q, double tol = 1e-9);

// Checks the structural invariants (zero pattern, chi(1) = 1, periodicity,
// complete multiplicativity on units). O(q^2).
bool satisfies_character_axioms(const DirichletCharacter& chi);

int euler_phi(int n);

}  // namespace dz
