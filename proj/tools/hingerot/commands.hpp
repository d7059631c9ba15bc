#pragma once

// Command implementations behind the hingerot binary, split from main() so
// the test binary can drive the pure pieces (target resolution, rectangle
// embedding) directly instead of re-deriving them.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <hingerot/table.hpp>

namespace hingerot::cli {

// Invalid flags, unreadable inputs, out-of-range targets: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// How a width x height pixel rectangle sits in the rotation disk: pixel
// (x, y) becomes the Gaussian integer (x - cx, cy - y) (image rows grow
// downward, the imaginary axis grows upward), and required_m is the smallest
// disk radius containing every pixel.
struct Embedding {
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  std::int64_t required_m = 0;
};

Embedding embedding_for(std::int64_t width, std::int64_t height);

// Number of sweep phases from the identity to the given position: 2j+1 lands
// on hinge j, 2j+2 lands in the interval after it, and the start interval
// needs no phases at all.
std::size_t phases_for(const HingeTable& t, AnglePosition pos);

// Target selectors for the rotate command. hinge-index n stops on hinge
// (n mod N); a positive multiple of N instead runs the full turn, restoring
// the input. degrees picks the position containing the angle and refuses
// angles within 1e-9 rad of a hinge (the float comparison could not be
// trusted there); a triple is located exactly.
std::size_t phases_for_hinge_index(const HingeTable& t, std::uint64_t n);
std::size_t phases_for_degrees(const HingeTable& t, double degrees);
std::size_t phases_for_triple(const HingeTable& t, const Triple& triple);

int run(int argc, const char* const* argv);

}  // namespace hingerot::cli
