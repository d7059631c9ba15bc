#pragma once

// The hinge table: every canonical hinge angle of order at most m^2, sorted
// ascending around [0, 2pi) by the exact comparator. This is the complete,
// finite schedule of discontinuities the rotation engine sweeps through.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hingerot/hinge.hpp"

namespace hingerot {

struct AnglePosition {
  enum class Kind { AtHinge, InInterval };
  Kind kind = Kind::InInterval;
  std::size_t index = 0;
  friend bool operator==(const AnglePosition&, const AnglePosition&) = default;
};

class TableError : public std::runtime_error {
 public:
  enum class Kind {
    BadHeader,
    BadCount,
    BadEntry,
    InvalidTriple,
    NonCanonical,
    OutOfRange,
    Unsorted,
    Duplicate,
    TrailingData,
  };

  TableError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class HingeTable {
 public:
  // Enumerates all valid triples with p^2 + q^2 <= m^2 (p outer, q inner, k
  // innermost), canonicalizes, sorts with the exact comparator and drops
  // adjacent structural duplicates. m = 0 yields the empty table.
  static HingeTable build(std::int64_t m);

  std::int64_t m() const { return m_; }
  std::size_t size() const { return angles_.size(); }
  bool empty() const { return angles_.empty(); }
  const HingeAngle& operator[](std::size_t j) const { return angles_.at(j); }
  auto begin() const { return angles_.begin(); }
  auto end() const { return angles_.end(); }

  // Next index counterclockwise, wrapping at the top.
  std::size_t successor(std::size_t j) const;

  // Where an arbitrary canonical angle sits relative to this table: at a
  // member hinge, or inside the open interval following one. The interval
  // before the first entry and the one after the last are the same cyclic
  // interval, index size()-1.
  AnglePosition locate(const HingeAngle& h) const;

  void save(std::ostream& out) const;
  static HingeTable load(std::istream& in);

 private:
  std::int64_t m_ = 0;
  std::vector<HingeAngle> angles_;
};

// Size of the raw enumeration before canonicalization collapses duplicates;
// an exact upper bound for size() and the sharper of the two count bounds.
std::uint64_t candidate_triple_count(std::int64_t m);

}  // namespace hingerot
