#include "hingerot/hinge.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hingerot {

namespace {

using Wide = __int128;

Wide wide_order(const Triple& t) {
  return Wide(t.p) * t.p + Wide(t.q) * t.q;
}

Wide wide_odd(const Triple& t) { return 2 * Wide(t.k) + 1; }

std::uint64_t abs64(Wide v) {
  return static_cast<std::uint64_t>(v < 0 ? -v : v);
}

}  // namespace

bool validate(const Triple& t) noexcept {
  if (t.p == 0 && t.q == 0) return false;
  const Wide o = wide_odd(t);
  return 4 * wide_order(t) > o * o;
}

HingeAngle HingeAngle::canonical(const Triple& t) {
  if (!validate(t)) {
    throw std::invalid_argument("not a generating triple: " + to_string(t));
  }
  const std::uint64_t g =
      std::gcd(std::gcd(abs64(t.p), abs64(t.q)), abs64(wide_odd(t)));
  // g divides the odd number 2k+1, so it is odd and the reduced triple keeps
  // lambda > 0: the whole odd-multiple family collapses onto one primary.
  const auto d = static_cast<std::int64_t>(g);
  const Wide odd = wide_odd(t) / d;
  return HingeAngle(
      Triple{t.p / d, t.q / d, static_cast<std::int64_t>((odd - 1) / 2)});
}

std::int64_t HingeAngle::order() const {
  return static_cast<std::int64_t>(wide_order(t_));
}

std::int64_t HingeAngle::discriminant() const {
  const Wide o = wide_odd(t_);
  return static_cast<std::int64_t>(4 * wide_order(t_) - o * o);
}

ExactAngleFunctions exact_functions(const HingeAngle& h) {
  const BigInt odd = 2 * BigInt(h.k()) + 1;
  const BigInt r2 = BigInt(h.p()) * h.p() + BigInt(h.q()) * h.q();
  const BigInt disc = 4 * r2 - odd * odd;
  return ExactAngleFunctions{
      SurdValue(BigInt(h.p()) * odd, BigInt(h.q()), disc),
      SurdValue(-BigInt(h.q()) * odd, BigInt(h.p()), disc),
      2 * r2,
  };
}

int quadrant(const ExactAngleFunctions& f) {
  const int c = surd_sign(f.cos_num);
  const int s = surd_sign(f.sin_num);
  if (s > 0) return c > 0 ? 0 : 1;
  if (s < 0) return c < 0 ? 2 : 3;
  return c >= 0 ? 0 : 2;
}

int quadrant(const HingeAngle& h) { return quadrant(exact_functions(h)); }

std::strong_ordering compare_prepared(const ExactAngleFunctions& fa, int qa,
                                      const ExactAngleFunctions& fb, int qb) {
  if (qa != qb) return qa <=> qb;
  // cos is strictly monotone on each quadrant: decreasing on 0 and 1,
  // increasing on 2 and 3. Clear the (positive) denominators and compare.
  const SurdValue lhs(fa.cos_num.a * fb.denom, fa.cos_num.b * fb.denom,
                      fa.cos_num.d);
  const SurdValue rhs(fb.cos_num.a * fa.denom, fb.cos_num.b * fa.denom,
                      fb.cos_num.d);
  const auto c = surd_compare(lhs, rhs);
  if (c == std::strong_ordering::equal) return c;
  const bool cos_descending = qa < 2;
  if (!cos_descending) return c;
  return c == std::strong_ordering::less ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
}

std::strong_ordering compare(const HingeAngle& a, const HingeAngle& b) {
  if (a.triple() == b.triple()) return std::strong_ordering::equal;
  return compare_prepared(exact_functions(a), quadrant(a), exact_functions(b),
                          quadrant(b));
}

double angle_radians(const HingeAngle& h) {
  const auto f = exact_functions(h);
  const double den = f.denom.convert_to<double>();
  const double root = std::sqrt(f.cos_num.d.convert_to<double>());
  const double c =
      (f.cos_num.a.convert_to<double>() + f.cos_num.b.convert_to<double>() * root) /
      den;
  const double s =
      (f.sin_num.a.convert_to<double>() + f.sin_num.b.convert_to<double>() * root) /
      den;
  constexpr double two_pi = 2 * std::numbers::pi_v<double>;
  double a = std::atan2(s, c);
  if (a < 0) a += two_pi;
  if (a >= two_pi) a = 0;
  return a;
}

std::string to_string(const Triple& t) {
  std::string s = std::to_string(t.p);
  s += ' ';
  s += std::to_string(t.q);
  s += ' ';
  s += std::to_string(t.k);
  return s;
}

std::optional<Triple> parse_triple(std::string_view s) {
  Triple t;
  const char* const end = s.data() + s.size();
  auto r = std::from_chars(s.data(), end, t.p);
  if (r.ec != std::errc{} || r.ptr == end || *r.ptr != ' ') return std::nullopt;
  r = std::from_chars(r.ptr + 1, end, t.q);
  if (r.ec != std::errc{} || r.ptr == end || *r.ptr != ' ') return std::nullopt;
  r = std::from_chars(r.ptr + 1, end, t.k);
  if (r.ec != std::errc{} || r.ptr != end) return std::nullopt;
  // from_chars admits leading zeros and minus-zero spellings; requiring the
  // round trip pins one byte representation per triple.
  if (to_string(t) != s) return std::nullopt;
  return t;
}

}  // namespace hingerot
