#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "dz/errors.hpp"

namespace dz {

// a + b sqrt(d) in Z[sqrt(d)] for a square-free radicand d >= 1.
// With d == 1 the ring collapses to Z and b is kept at zero.
class QuadraticInteger {
 public:
  constexpr QuadraticInteger() = default;
  constexpr QuadraticInteger(std::int64_t a, std::int64_t b, std::int64_t d) : a_(a), b_(b), d_(d) {
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  static constexpr QuadraticInteger integer(std::int64_t a, std::int64_t d) { return {a, 0, d}; }

  constexpr std::int64_t rational() const { return a_; }
  constexpr std::int64_t irrational() const { return b_; }
  constexpr std::int64_t radicand() const { return d_; }

  double to_double() const { return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_)); }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend constexpr bool operator==(const QuadraticInteger& x, const QuadraticInteger& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }

  friend QuadraticInteger operator+(const QuadraticInteger& x, const QuadraticInteger& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, common(x, y)};
  }
  friend QuadraticInteger operator-(const QuadraticInteger& x, const QuadraticInteger& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, common(x, y)};
  }
  friend QuadraticInteger operator*(const QuadraticInteger& x, const QuadraticInteger& y) {
    const std::int64_t d = common(x, y);
    return {x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d};
  }
  QuadraticInteger operator-() const { return {-a_, -b_, d_}; }

  // "a", "b*sqrt(d)", "a+b*sqrt(d)"; "sqrt(d)" for b == 1.
  std::string to_string() const;

 private:
  static std::int64_t common(const QuadraticInteger& x, const QuadraticInteger& y) {
    if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_) throw DomainError("QuadraticInteger: mixed radicands");
    if (x.b_ != 0) return x.d_;
    if (y.b_ != 0) return y.d_;
    return x.d_ != 1 ? x.d_ : y.d_;
  }

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t d_ = 1;
};

// sqrt(n) = m sqrt(d) with d square-free.
struct SquareRootSplit {
  std::int64_t multiplier;
  std::int64_t radicand;
};
SquareRootSplit split_square_root(std::int64_t n);

// sqrt(n) as an element of Z[sqrt(squarefree part of n)].
QuadraticInteger square_root_of(std::int64_t n);

}  // namespace dz
