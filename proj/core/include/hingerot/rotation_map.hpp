#pragma once

// Incremental discretized rotation. A RotationMap holds round(e^{i*alpha}*z)
// for every |z| <= m at the current angle position and advances through the
// hinge table in half-steps: crossing onto a hinge updates the two rays whose
// coordinate jumps exactly at the hinge, leaving it updates the other two.
// Each step touches only the O(m / |z_s|) points on those rays, never the
// whole disk.

#include <cstdint>
#include <functional>
#include <vector>

#include "hingerot/disk_grid.hpp"
#include "hingerot/gaussian.hpp"
#include "hingerot/table.hpp"

namespace hingerot {

enum class Phase {
  AtHinge,     // advanced from the preceding interval onto the hinge
  AfterHinge,  // advanced off the hinge into the following interval
};

struct TouchedPoint {
  Gaussian point;
  Gaussian delta;  // always a unit: one coordinate moves by exactly one
};

struct RayUpdate {
  HingeAngle hinge;
  Phase phase;
  std::vector<TouchedPoint> touched;  // ray Q ascending, then multiple ascending
};

// The distinguished start: angle 0, inside the cyclic interval that precedes
// the first table entry. Throws std::logic_error on an empty table.
AnglePosition initial_position(const HingeTable& t);

AnglePosition advanced(const HingeTable& t, AnglePosition pos);

// The update that moves a map at `pos` one phase forward. Phase AtHinge
// applies delta i^(Q+2) on rays Q in {2,3} of the next hinge (their crossing
// coordinate is increasing, so the rounded value jumps at the hinge); phase
// AfterHinge applies i^(Q+2) on rays Q in {0,1} (decreasing coordinate, the
// jump lands just past the hinge). Rays stop at norm m^2.
RayUpdate make_update(const HingeTable& t, AnglePosition pos);

class RotationMap {
 public:
  // Identity assignment at angle 0.
  explicit RotationMap(const HingeTable& t);

  std::int64_t m() const { return m_; }
  AnglePosition position() const { return pos_; }
  const DiskGrid<Gaussian>& targets() const { return map_; }
  Gaussian operator()(Gaussian z) const { return map_[z]; }

  // Advances one phase and reports exactly what moved. Rejects a table whose
  // radius disagrees with this map.
  RayUpdate step(const HingeTable& t);

 private:
  std::int64_t m_;
  AnglePosition pos_;
  DiskGrid<Gaussian> map_;
};

// One full counterclockwise turn: 2 * size() phases from the identity, with
// the observer called after every phase. The final configuration is again the
// identity; observer exceptions propagate and abandon the local sweep state.
void sweep(const HingeTable& t,
           const std::function<void(const RotationMap&, const HingeAngle&,
                                    Phase)>& observer);

// Reference semantics, computed pointwise from the exact angle functions with
// surd arithmetic only. `At` evaluates round(e^{i*alpha}*z) exactly on the
// hinge; JustAfter/JustBefore evaluate the one-sided limits, which differ
// from At only when a coordinate of the image sits exactly on a half-integer
// (then the angular derivative decides which side rounds down).
enum class Side { At, JustAfter, JustBefore };

Gaussian rotate_point_exact(Gaussian z, const HingeAngle& h, Side side);

DiskGrid<Gaussian> full_map_exact(std::int64_t m, const HingeAngle& h, Side side);

// True iff both coordinates of e^{i*alpha}*z differ from n by at most 1/2,
// checked in surd arithmetic. Used to certify the rounding bound.
bool within_half_of(Gaussian n, Gaussian z, const HingeAngle& h);

}  // namespace hingerot
