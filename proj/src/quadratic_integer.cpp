#include "dz/quadratic_integer.hpp"

namespace dz {

SquareRootSplit split_square_root(std::int64_t n) {
  if (n < 1) throw DomainError("split_square_root: n must be positive");
  std::int64_t m = 1;
  std::int64_t d = n;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      m *= p;
    }
  }
  return {m, d};
}

QuadraticInteger square_root_of(std::int64_t n) {
  const auto [m, d] = split_square_root(n);
  if (d == 1) return QuadraticInteger::integer(m, 1);
  return {0, m, d};
}

std::string QuadraticInteger::to_string() const {
  if (b_ == 0) return std::to_string(a_);
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string irr;
  if (b_ == 1)
    irr = root;
  else if (b_ == -1)
    irr = "-" + root;
  else
    irr = std::to_string(b_) + "*" + root;
  if (a_ == 0) return irr;
  return std::to_string(a_) + (b_ > 0 ? "+" : "") + irr;
}

}  // namespace dz
