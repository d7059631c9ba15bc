#include "hingerot/rotation_map.hpp"

#include <cmath>
#include <stdexcept>

#include "hingerot/surd.hpp"

namespace hingerot {

AnglePosition initial_position(const HingeTable& t) {
  if (t.empty()) throw std::logic_error("empty hinge table");
  return {AnglePosition::Kind::InInterval, t.size() - 1};
}

AnglePosition advanced(const HingeTable& t, AnglePosition pos) {
  if (pos.index >= t.size()) throw std::out_of_range("position index out of range");
  if (pos.kind == AnglePosition::Kind::InInterval) {
    return {AnglePosition::Kind::AtHinge, t.successor(pos.index)};
  }
  return {AnglePosition::Kind::InInterval, pos.index};
}

RayUpdate make_update(const HingeTable& t, AnglePosition pos) {
  if (t.empty()) throw std::logic_error("empty hinge table");
  if (pos.index >= t.size()) throw std::out_of_range("position index out of range");

  const bool entering = pos.kind == AnglePosition::Kind::InInterval;
  const std::size_t hinge_index = entering ? t.successor(pos.index) : pos.index;
  RayUpdate u{t[hinge_index],
              entering ? Phase::AtHinge : Phase::AfterHinge,
              {}};

  const Gaussian source{u.hinge.p(), u.hinge.q()};
  const std::int64_t order = u.hinge.order();
  const std::int64_t m2 = t.m() * t.m();
  const int q_first = entering ? 2 : 0;
  for (int qi = 0; qi < 2; ++qi) {
    const int q = q_first + qi;
    const Gaussian base = source.rotated_quarter_turns(q);
    const Gaussian delta = Gaussian::unit(q + 2);
    for (std::int64_t mul = 1; mul * mul * order <= m2; mul += 2) {
      u.touched.push_back(TouchedPoint{mul * base, delta});
    }
  }
  return u;
}

RotationMap::RotationMap(const HingeTable& t)
    : m_(t.m()), pos_(initial_position(t)), map_(t.m()) {
  map_.for_each_point([this](Gaussian z) { map_[z] = z; });
}

RayUpdate RotationMap::step(const HingeTable& t) {
  if (t.m() != m_) {
    throw std::invalid_argument("table radius does not match rotation map");
  }
  RayUpdate u = make_update(t, pos_);
  for (const TouchedPoint& tp : u.touched) map_[tp.point] += tp.delta;
  pos_ = advanced(t, pos_);
  return u;
}

void sweep(const HingeTable& t,
           const std::function<void(const RotationMap&, const HingeAngle&,
                                    Phase)>& observer) {
  RotationMap r(t);
  const std::size_t phases = 2 * t.size();
  for (std::size_t i = 0; i < phases; ++i) {
    const RayUpdate u = r.step(t);
    if (observer) observer(r, u.hinge, u.phase);
  }
}

namespace {

struct ExactImage {
  // Both coordinates of e^{i*alpha} * z, scaled by denom = 2(p^2+q^2):
  // coordinate = (a + b*sqrt(disc)) / denom.
  BigInt re_a, re_b;
  BigInt im_a, im_b;
  BigInt disc;
  BigInt denom;
};

ExactImage exact_image(Gaussian z, const HingeAngle& h) {
  const BigInt odd = 2 * BigInt(h.k()) + 1;
  const BigInt r2 = BigInt(h.p()) * h.p() + BigInt(h.q()) * h.q();
  // dot = Re(z * conj(z_s)), cross = Im(z * conj(z_s)) up to sign; products
  // kept in BigInt so arbitrary input points stay exact.
  const BigInt dot = BigInt(z.re) * h.p() + BigInt(z.im) * h.q();
  const BigInt cross = BigInt(z.re) * h.q() - BigInt(z.im) * h.p();
  ExactImage w;
  w.re_a = odd * dot;
  w.re_b = cross;
  w.im_a = -odd * cross;
  w.im_b = dot;
  w.disc = 4 * r2 - odd * odd;
  w.denom = 2 * r2;
  return w;
}

// round(x + 1/2) of the coordinate (a + b*sqrt(disc)) / denom, plus whether
// the coordinate sits exactly on the lower half-integer boundary n - 1/2.
struct RoundedCoord {
  std::int64_t n;
  bool on_boundary;
};

RoundedCoord round_coord(const BigInt& a, const BigInt& b, const BigInt& disc,
                         const BigInt& denom) {
  const double est = (a.convert_to<double>() +
                      b.convert_to<double>() *
                          std::sqrt(disc.convert_to<double>())) /
                     denom.convert_to<double>();
  // n is the unique integer with (2n-1)*denom/2 <= a + b*sqrt(disc) <
  // (2n+1)*denom/2; the float seed is off by at most a few units and the
  // exact sign tests walk it home.
  std::int64_t n = static_cast<std::int64_t>(std::llround(est));
  auto rel_to = [&](std::int64_t bound2) {
    // sign of (a + b*sqrt(disc)) - bound2 * denom / 2
    return surd_sign(SurdValue(2 * a - bound2 * denom, 2 * b, disc));
  };
  while (rel_to(2 * n + 1) >= 0) ++n;
  while (rel_to(2 * n - 1) < 0) --n;
  return {n, rel_to(2 * n - 1) == 0};
}

}  // namespace

Gaussian rotate_point_exact(Gaussian z, const HingeAngle& h, Side side) {
  const ExactImage w = exact_image(z, h);
  RoundedCoord re = round_coord(w.re_a, w.re_b, w.disc, w.denom);
  RoundedCoord im = round_coord(w.im_a, w.im_b, w.disc, w.denom);

  if (side != Side::At && (re.on_boundary || im.on_boundary)) {
    // On a boundary the one-sided value depends on the travel direction of
    // that coordinate: d/dalpha Re = -Im and d/dalpha Im = +Re. A coordinate
    // moving up through n - 1/2 was below it just before; one moving down is
    // below it just after. Both derivatives are nonzero (z = 0 never lands
    // on a boundary).
    if (re.on_boundary) {
      const int deriv = -surd_sign(SurdValue(w.im_a, w.im_b, w.disc));
      if ((side == Side::JustAfter && deriv < 0) ||
          (side == Side::JustBefore && deriv > 0)) {
        --re.n;
      }
    }
    if (im.on_boundary) {
      const int deriv = surd_sign(SurdValue(w.re_a, w.re_b, w.disc));
      if ((side == Side::JustAfter && deriv < 0) ||
          (side == Side::JustBefore && deriv > 0)) {
        --im.n;
      }
    }
  }
  return Gaussian{re.n, im.n};
}

DiskGrid<Gaussian> full_map_exact(std::int64_t m, const HingeAngle& h, Side side) {
  DiskGrid<Gaussian> g(m);
  g.for_each_point([&](Gaussian z) { g[z] = rotate_point_exact(z, h, side); });
  return g;
}

bool within_half_of(Gaussian n, Gaussian z, const HingeAngle& h) {
  const ExactImage w = exact_image(z, h);
  const auto coord_ok = [&](const BigInt& a, const BigInt& b, std::int64_t nc) {
    // |(a + b*sqrt(disc))/denom - nc| <= 1/2, i.e. the value lies in
    // [(2nc-1)denom/2, (2nc+1)denom/2].
    const int lo = surd_sign(SurdValue(2 * a - (2 * nc - 1) * w.denom, 2 * b, w.disc));
    const int hi = surd_sign(SurdValue(2 * a - (2 * nc + 1) * w.denom, 2 * b, w.disc));
    return lo >= 0 && hi <= 0;
  };
  return coord_ok(w.re_a, w.re_b, n.re) && coord_ok(w.im_a, w.im_b, n.im);
}

}  // namespace hingerot
