#include "hingerot/surd.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hingerot {

SurdValue::SurdValue(BigInt a_, BigInt b_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
  if (d < 0) throw std::domain_error("surd radicand must be non-negative");
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  if (n == 0) return 0;
  // Start above sqrt(n), then Newton steps descend monotonically to the floor.
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt s = isqrt(n);
  return s * s == n;
}

int surd_sign(const SurdValue& v) {
  const bool has_radical = v.b != 0 && v.d != 0;
  if (!has_radical) return sign_of(v.a);
  if (v.a == 0) return sign_of(v.b);
  const int sa = sign_of(v.a);
  const int sb = sign_of(v.b);
  if (sa == sb) return sa;
  // Opposite signs: one squaring decides which magnitude dominates.
  const BigInt lhs = v.a * v.a;
  const BigInt rhs = v.b * v.b * v.d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

namespace {

// Sign of a + b*sqrt(d1) + c*sqrt(d2).
int two_radical_sign(const BigInt& a, const BigInt& b, const BigInt& d1,
                     const BigInt& c, const BigInt& d2) {
  const bool t1 = b != 0 && d1 != 0;
  const bool t2 = c != 0 && d2 != 0;
  if (!t1 && !t2) return sign_of(a);
  if (!t2) return surd_sign(SurdValue(a, b, d1));
  if (!t1) return surd_sign(SurdValue(a, c, d2));
  // Split as L = a + b*sqrt(d1) versus R = -c*sqrt(d2).
  const int sl = surd_sign(SurdValue(a, b, d1));
  const int sr = -sign_of(c);
  if (sl != sr) return sl > sr ? 1 : -1;
  if (sl == 0) return 0;
  // Same nonzero sign: square both sides. L^2 - R^2 is again a single surd
  // in sqrt(d1); for negative pairs the magnitude order flips back.
  const int sq =
      surd_sign(SurdValue(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1));
  return sl > 0 ? sq : -sq;
}

}  // namespace

std::strong_ordering surd_compare(const SurdValue& x, const SurdValue& y) {
  const int s = two_radical_sign(x.a - y.a, x.b, x.d, -y.b, y.d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hingerot
