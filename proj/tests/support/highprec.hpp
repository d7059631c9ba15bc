#pragma once

// 200-bit floating point reference path for the tests. Everything here is
// deliberately computed from first principles (no SurdValue, no
// exact_functions) so it can serve as an independent oracle for the exact
// kernel.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

#include <hingerot/hinge.hpp>

namespace testsupport {

using Float200 = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<
        200, boost::multiprecision::backends::digit_base_2>>;
using Int = boost::multiprecision::cpp_int;

inline const Float200& pi200() {
  static const Float200 pi = 4 * atan(Float200(1));
  return pi;
}

// Angle of a generating triple, straight from the defining geometry:
// e^{i*alpha}(p+qi) = (k+1/2) + lambda*i. Normalized into [0, 2*pi).
inline Float200 triple_angle(const hingerot::Triple& t) {
  const Float200 p = t.p, q = t.q;
  const Float200 khalf = Float200(t.k) + Float200(1) / 2;
  const Float200 r2 = p * p + q * q;
  const Float200 lambda = sqrt(r2 - khalf * khalf);
  // e^{i*alpha} = ((k+1/2) + lambda*i) * (p - qi) / r^2
  const Float200 c = (khalf * p + lambda * q) / r2;
  const Float200 s = (lambda * p - khalf * q) / r2;
  Float200 a = atan2(s, c);
  if (a < 0) a += 2 * pi200();
  return a;
}

// Sign of a + b*sqrt(d) decided numerically, with an exact integer fallback
// for the zero case. For the coefficient ranges the tests use, any nonzero
// value is astronomically larger than the 200-bit evaluation error, so the
// dichotomy is sound.
inline int numeric_surd_sign(const Int& a, const Int& b, const Int& d) {
  const bool zero = (b == 0 || d == 0)
                        ? a == 0
                        : a.sign() * b.sign() <= 0 && a * a == b * b * d;
  if (zero) return 0;
  const Float200 v = Float200(a) + Float200(b) * sqrt(Float200(d));
  if (v > 1e-40) return 1;
  if (v < -1e-40) return -1;
  // Nonzero but numerically tiny would mean the test pushed coefficients far
  // beyond its stated ranges; make that loud.
  throw std::logic_error("numeric surd sign: value too close to zero to trust");
}

}  // namespace testsupport
