#pragma once

// Exact arithmetic on quadratic surds a + b*sqrt(d). These are the only
// irrationals the rotation engine ever meets, and every comparison it needs
// reduces to integer sign tests after at most two squarings. No floating
// point is consulted anywhere in this module.

#include <compare>
#include <cstdint>

#include "hingerot/bigint.hpp"

namespace hingerot {

struct SurdValue {
  BigInt a;  // rational part
  BigInt b;  // coefficient of sqrt(d)
  BigInt d;  // radicand, must be >= 0

  SurdValue() = default;
  SurdValue(BigInt a_, BigInt b_, BigInt d_);  // throws std::domain_error if d_ < 0
};

// floor(sqrt(n)) by Newton descent on integers; exact for any n >= 0.
// Throws std::domain_error for negative input.
BigInt isqrt(const BigInt& n);
std::int64_t isqrt64(std::int64_t n);

bool is_perfect_square(const BigInt& n);

// Sign of a + b*sqrt(d): -1, 0 or +1.
int surd_sign(const SurdValue& v);

// Value ordering of two surds whose radicands may differ.
std::strong_ordering surd_compare(const SurdValue& x, const SurdValue& y);

}  // namespace hingerot
