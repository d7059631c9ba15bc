#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <hingerot/hinge.hpp>
#include <hingerot/table.hpp>

#include "support/highprec.hpp"

using namespace hingerot;
using testsupport::Float200;
using testsupport::pi200;
using testsupport::triple_angle;

TEST_CASE("validate accepts generating triples and rejects the rest") {
  CHECK(validate({1, 0, 0}));
  CHECK(validate({0, 1, -1}));
  CHECK(validate({2, 1, 1}));
  CHECK(validate({9, -4, 7}));    // 4*97 = 388 > 15^2
  CHECK(validate({1, 0, -1}));
  CHECK_FALSE(validate({0, 0, 0}));
  CHECK_FALSE(validate({0, 0, 5}));
  CHECK_FALSE(validate({1, 0, 1}));   // 4 < 9: lambda imaginary
  CHECK_FALSE(validate({1, 0, -2}));  // 4 < 9 on the negative side
  CHECK_FALSE(validate({3, 4, 5}));   // 100 < 121
  CHECK(validate({3, 4, 4}));         // 100 > 81
}

TEST_CASE("canonical divides out the joint odd factor") {
  CHECK(HingeAngle::canonical({3, 0, 1}).triple() == Triple{1, 0, 0});
  CHECK(HingeAngle::canonical({5, 0, 2}).triple() == Triple{1, 0, 0});
  CHECK(HingeAngle::canonical({-3, 3, -2}).triple() == Triple{-1, 1, -1});
  CHECK(HingeAngle::canonical({9, -4, 7}).triple() == Triple{9, -4, 7});
  CHECK(HingeAngle::canonical({0, 3, -2}).triple() == Triple{0, 1, -1});
  CHECK_THROWS_AS(HingeAngle::canonical({1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HingeAngle::canonical({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("canonical is idempotent and collapses each odd-multiple family") {
  const HingeTable t = HingeTable::build(4);
  for (const HingeAngle& h : t) {
    const HingeAngle again = HingeAngle::canonical(h.triple());
    CHECK(again == h);
    for (std::int64_t j : {3, 5, 9}) {
      // (jp, jq, jk + (j-1)/2) has odd part j*(2k+1): the same angle.
      const Triple scaled{j * h.p(), j * h.q(), j * h.k() + (j - 1) / 2};
      CHECK(HingeAngle::canonical(scaled) == h);
    }
  }
}

TEST_CASE("order and discriminant") {
  const HingeAngle h = HingeAngle::canonical({9, -4, 7});
  CHECK(h.order() == 97);
  CHECK(h.discriminant() == 4 * 97 - 15 * 15);  // 163
  const HingeAngle e = HingeAngle::canonical({1, 0, 0});
  CHECK(e.order() == 1);
  CHECK(e.discriminant() == 3);
}

TEST_CASE("discriminant is 3 mod 4 and never a perfect square") {
  // Raw enumeration, not just canonical survivors: the property holds for
  // every valid triple because the joint odd factor scales D by an odd
  // square.
  for (std::int64_t p = -6; p <= 6; ++p) {
    for (std::int64_t q = -6; q <= 6; ++q) {
      const std::int64_t s = p * p + q * q;
      if (s == 0 || s > 36) continue;
      for (std::int64_t k = -10; k <= 10; ++k) {
        const Triple t{p, q, k};
        if (!validate(t)) continue;
        const std::int64_t odd = 2 * k + 1;
        const std::int64_t disc = 4 * s - odd * odd;
        CHECK(disc % 4 == 3);
        CHECK_FALSE(is_perfect_square(BigInt(disc)));
        const HingeAngle h = HingeAngle::canonical(t);
        CHECK(h.discriminant() % 4 == 3);
        CHECK_FALSE(is_perfect_square(BigInt(h.discriminant())));
      }
    }
  }
}

TEST_CASE("exact cosine and sine numerators over the shared denominator") {
  {
    // 60 degrees: cos = 1/2 and sin = sqrt(3)/2 exactly.
    const auto f = exact_functions(HingeAngle::canonical({1, 0, 0}));
    CHECK(f.cos_num.a == 1);
    CHECK(f.cos_num.b == 0);
    CHECK(f.sin_num.a == 0);
    CHECK(f.sin_num.b == 1);
    CHECK(f.sin_num.d == 3);
    CHECK(f.denom == 2);
  }
  {
    const auto f = exact_functions(HingeAngle::canonical({2, 1, 1}));
    CHECK(f.cos_num.a == 6);
    CHECK(f.cos_num.b == 1);
    CHECK(f.cos_num.d == 11);
    CHECK(f.sin_num.a == -3);
    CHECK(f.sin_num.b == 2);
    CHECK(f.sin_num.d == 11);
    CHECK(f.denom == 10);
  }
  {
    const auto f = exact_functions(HingeAngle::canonical({9, -4, 7}));
    CHECK(f.cos_num.a == 135);
    CHECK(f.cos_num.b == -4);
    CHECK(f.cos_num.d == 163);
    CHECK(f.sin_num.a == 60);
    CHECK(f.sin_num.b == 9);
    CHECK(f.sin_num.d == 163);
    CHECK(f.denom == 194);
  }
}

TEST_CASE("cos^2 + sin^2 == 1 exactly for every table angle") {
  for (const HingeAngle& h : HingeTable::build(5)) {
    const auto f = exact_functions(h);
    const BigInt rational = f.cos_num.a * f.cos_num.a +
                            f.cos_num.b * f.cos_num.b * f.cos_num.d +
                            f.sin_num.a * f.sin_num.a +
                            f.sin_num.b * f.sin_num.b * f.sin_num.d;
    const BigInt radical =
        f.cos_num.a * f.cos_num.b + f.sin_num.a * f.sin_num.b;
    CHECK(rational == f.denom * f.denom);
    CHECK(radical == 0);
  }
}

TEST_CASE("quadrant classification") {
  CHECK(quadrant(HingeAngle::canonical({1, 0, 0})) == 0);   // 60 deg
  CHECK(quadrant(HingeAngle::canonical({1, 0, -1})) == 1);  // 120 deg
  CHECK(quadrant(HingeAngle::canonical({0, -1, -1})) == 2); // 210 deg
  CHECK(quadrant(HingeAngle::canonical({0, 1, 0})) == 3);   // 330 deg
  CHECK(quadrant(HingeAngle::canonical({9, -4, 7})) == 0);  // 64.4 deg

  for (const HingeAngle& h : HingeTable::build(6)) {
    const Float200 a = triple_angle(h.triple());
    const int expected = static_cast<int>(a / (pi200() / 2));
    CHECK(quadrant(h) == expected);
  }
}

TEST_CASE("compare orders angles counterclockwise from zero") {
  const auto lt = [](Triple a, Triple b) {
    return compare(HingeAngle::canonical(a), HingeAngle::canonical(b)) ==
           std::strong_ordering::less;
  };
  CHECK(lt({0, 1, -1}, {1, 0, 0}));    // 30 < 60
  CHECK(lt({2, 1, 1}, {0, 1, -1}));    // 21.3 < 30
  CHECK(lt({1, 0, 0}, {0, 1, 0}));     // 60 < 330
  CHECK(lt({0, -1, -1}, {0, 1, 0}));   // 210 < 330
  CHECK_FALSE(lt({0, 1, 0}, {1, 0, 0}));
  CHECK(compare(HingeAngle::canonical({3, 0, 1}),
                HingeAngle::canonical({1, 0, 0})) == std::strong_ordering::equal);
}

TEST_CASE("compare is a strict total order matching the reference angles") {
  const HingeTable t = HingeTable::build(4);
  std::vector<HingeAngle> v(t.begin(), t.end());
  // The table is sorted ascending; every ordered pair must agree with the
  // index order, and equality must coincide with structural identity.
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto c = compare(v[i], v[j]);
      if (i < j) CHECK(c == std::strong_ordering::less);
      if (i > j) CHECK(c == std::strong_ordering::greater);
      if (i == j) CHECK(c == std::strong_ordering::equal);
    }
  }
}

TEST_CASE("compare matches high-precision angles on random pairs") {
  const HingeTable t = HingeTable::build(8);
  std::vector<HingeAngle> v(t.begin(), t.end());
  std::vector<Float200> angle;
  angle.reserve(v.size());
  for (const HingeAngle& h : v) angle.push_back(triple_angle(h.triple()));

  std::mt19937_64 rng(20240904);
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    const auto c = compare(v[a], v[b]);
    if (a == b) {
      CHECK(c == std::strong_ordering::equal);
    } else {
      CHECK(c == (angle[a] < angle[b] ? std::strong_ordering::less
                                      : std::strong_ordering::greater));
    }
  }
}

TEST_CASE("angle_radians matches the reference evaluation") {
  const auto rad = [](Triple t) { return angle_radians(HingeAngle::canonical(t)); };
  CHECK(std::abs(rad({0, 1, -1}) - std::numbers::pi / 6) < 1e-12);
  CHECK(std::abs(rad({1, 0, 0}) - std::numbers::pi / 3) < 1e-12);
  CHECK(std::abs(rad({0, 1, 0}) - 11 * std::numbers::pi / 6) < 1e-12);
  CHECK(std::abs(rad({2, 1, 1}) - 0.37183426497742211) < 1e-12);
  CHECK(std::abs(rad({9, -4, 7}) - 1.1233816029937014) < 1e-12);

  for (const HingeAngle& h : HingeTable::build(6)) {
    const double reference =
        static_cast<double>(triple_angle(h.triple()));
    CHECK(std::abs(angle_radians(h) - reference) < 1e-12);
  }
}

TEST_CASE("to_string and parse_triple invert each other") {
  CHECK(to_string({9, -4, 7}) == "9 -4 7");
  CHECK(to_string({0, 1, -1}) == "0 1 -1");
  CHECK(parse_triple("9 -4 7") == Triple{9, -4, 7});
  CHECK(parse_triple("0 1 -1") == Triple{0, 1, -1});

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const Triple t{d(rng), d(rng), d(rng)};
    CHECK(parse_triple(to_string(t)) == t);
  }
}

TEST_CASE("parse_triple rejects anything but the canonical rendering") {
  CHECK_FALSE(parse_triple("").has_value());
  CHECK_FALSE(parse_triple("1 2").has_value());
  CHECK_FALSE(parse_triple("1 2 3 4").has_value());
  CHECK_FALSE(parse_triple("+1 2 3").has_value());
  CHECK_FALSE(parse_triple("01 2 3").has_value());
  CHECK_FALSE(parse_triple("1  2 3").has_value());
  CHECK_FALSE(parse_triple(" 1 2 3").has_value());
  CHECK_FALSE(parse_triple("1 2 3 ").has_value());
  CHECK_FALSE(parse_triple("1 2 3\n").has_value());
  CHECK_FALSE(parse_triple("1 2 3\r").has_value());
  CHECK_FALSE(parse_triple("a b c").has_value());
  CHECK_FALSE(parse_triple("1 -0 3").has_value());
  CHECK_FALSE(parse_triple("1 2.0 3").has_value());
  CHECK_FALSE(parse_triple("99999999999999999999 0 0").has_value());
}
