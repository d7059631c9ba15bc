#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hingerot/gaussian.hpp"

namespace hingerot {

// Dense storage for values attached to the Gaussian integers of norm at most
// radius^2, indexed directly by the point. Cells of the bounding square that
// fall outside the disk keep the fill value and never participate.
template <class T>
class DiskGrid {
 public:
  explicit DiskGrid(std::int64_t radius, const T& fill = T{})
      : radius_(radius < 0 ? throw std::invalid_argument("negative radius") : radius),
        side_(2 * radius + 1),
        cells_(static_cast<std::size_t>(side_ * side_), fill) {}

  std::int64_t radius() const { return radius_; }

  bool contains(Gaussian z) const {
    if (z.re < -radius_ || z.re > radius_ || z.im < -radius_ || z.im > radius_)
      return false;
    return z.norm() <= radius_ * radius_;
  }

  T& operator[](Gaussian z) { return cells_[index_of(z)]; }
  const T& operator[](Gaussian z) const { return cells_[index_of(z)]; }

  // Visits every disk point in a fixed row-major order (Im outer, Re inner).
  template <class F>
  void for_each_point(F&& f) const {
    for (std::int64_t im = -radius_; im <= radius_; ++im) {
      for (std::int64_t re = -radius_; re <= radius_; ++re) {
        const Gaussian z{re, im};
        if (z.norm() <= radius_ * radius_) f(z);
      }
    }
  }

  friend bool operator==(const DiskGrid&, const DiskGrid&) = default;

 private:
  std::size_t index_of(Gaussian z) const {
    if (!contains(z)) throw std::out_of_range("point outside disk");
    return static_cast<std::size_t>((z.im + radius_) * side_ + (z.re + radius_));
  }

  std::int64_t radius_;
  std::int64_t side_;
  std::vector<T> cells_;
};

inline std::int64_t disk_point_count(std::int64_t radius) {
  std::int64_t n = 0;
  for (std::int64_t im = -radius; im <= radius; ++im)
    for (std::int64_t re = -radius; re <= radius; ++re)
      if (re * re + im * im <= radius * radius) ++n;
  return n;
}

}  // namespace hingerot
