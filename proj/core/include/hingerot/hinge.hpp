#pragma once

// Hinge angles: the discontinuities of alpha -> round(e^{i*alpha} * z) over
// Gaussian integers z. Each one is encoded by an integer triple (p, q, k)
// through e^{i*alpha} * (p + q*i) = (k + 1/2) + lambda*i with lambda > 0.
// Canonical triples give every such angle exactly one representative, and the
// exact comparator below orders them totally around the circle.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hingerot/surd.hpp"

namespace hingerot {

struct Triple {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t k = 0;
  friend constexpr bool operator==(const Triple&, const Triple&) = default;
};

// True iff (p, q) != (0, 0) and 4(p^2 + q^2) > (2k+1)^2, i.e. lambda is a
// real positive number and the triple generates an angle.
bool validate(const Triple& t) noexcept;

// A hinge angle held in canonical (primary) form: no odd factor divides
// p, q and 2k+1 jointly. Construct only through canonical().
class HingeAngle {
 public:
  // Reduces any valid triple to its primary form by dividing out
  // g = gcd(gcd(|p|, |q|), |2k+1|), which is necessarily odd.
  // Throws std::invalid_argument when validate() fails.
  static HingeAngle canonical(const Triple& t);

  const Triple& triple() const { return t_; }
  std::int64_t p() const { return t_.p; }
  std::int64_t q() const { return t_.q; }
  std::int64_t k() const { return t_.k; }

  std::int64_t order() const;         // p^2 + q^2
  std::int64_t discriminant() const;  // 4(p^2+q^2) - (2k+1)^2 = (2*lambda)^2

  friend bool operator==(const HingeAngle& a, const HingeAngle& b) {
    return a.t_ == b.t_;
  }

 private:
  explicit HingeAngle(Triple t) : t_(t) {}
  Triple t_;
};

// cos(alpha) = cos_num / denom and sin(alpha) = sin_num / denom, exactly,
// with denom = 2 * (p^2 + q^2) and both numerators surds over sqrt(D).
struct ExactAngleFunctions {
  SurdValue cos_num;
  SurdValue sin_num;
  BigInt denom;
};

ExactAngleFunctions exact_functions(const HingeAngle& h);

// Quadrant index q with alpha in [q*90, (q+1)*90) degrees. A valid triple
// never lands cos or sin exactly on zero, so the boundary convention is
// unreachable in practice; it is still implemented half-open as stated.
int quadrant(const ExactAngleFunctions& f);
int quadrant(const HingeAngle& h);

// Total order of the two angles inside [0, 2pi), decided exactly: quadrant
// first, then cos within the quadrant (strictly monotone there). EQ occurs
// exactly for structurally equal canonical triples.
std::strong_ordering compare(const HingeAngle& a, const HingeAngle& b);

// Same ordering from precomputed parts; lets batch sorts skip recomputing
// the surd numerators for every probe.
std::strong_ordering compare_prepared(const ExactAngleFunctions& fa, int qa,
                                      const ExactAngleFunctions& fb, int qb);

// Double-precision angle in [0, 2pi). Diagnostic output only; never feeds
// back into exact decisions.
double angle_radians(const HingeAngle& h);

std::string to_string(const Triple& t);                  // "p q k"
std::optional<Triple> parse_triple(std::string_view s);  // strict inverse

}  // namespace hingerot
