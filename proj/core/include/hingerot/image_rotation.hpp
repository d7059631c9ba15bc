#pragma once

// Lossless image rotation on top of the ray updates. The discretized
// rotation is not injective: up to two sources can land on one target. Two
// pixel layers absorb that deficiency, an explicit per-source layer
// assignment keeps reconstruction exact, and the layering is canonical (the
// lexicographically smaller source of a colliding pair holds layer 1, a sole
// preimage always holds layer 1), so the whole state is a pure function of
// the current rotation position.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hingerot/disk_grid.hpp"
#include "hingerot/gaussian.hpp"
#include "hingerot/rotation_map.hpp"
#include "hingerot/table.hpp"

namespace hingerot {

// Pixel values are opaque here; the engine only stores and moves them.
template <class Pixel>
class ImageRotation {
 public:
  struct SourcePixel {
    Gaussian source;
    Pixel value;
  };

  // Sources must be distinct points with norm <= m^2; they may cover only
  // part of the disk (a rectangle embedded in it, say). Missing sources are
  // absent, not background: they never occupy a layer cell.
  ImageRotation(const HingeTable& table, std::span<const SourcePixel> image,
                Pixel background)
      : table_(&table),
        m_(table.m()),
        // An empty table (m = 0) is a valid degenerate state: the lone
        // origin pixel never moves and step() refuses to run.
        pos_(table.empty() ? AnglePosition{} : initial_position(table)),
        background_(background),
        targets_(m_),
        layer_of_(m_, 0),
        layer1_(m_ + 1, background),
        layer2_(m_ + 1, background),
        occupants_(m_ + 1) {
    for (const SourcePixel& sp : image) {
      if (!targets_.contains(sp.source)) {
        throw std::invalid_argument("source outside image disk");
      }
      if (layer_of_[sp.source] != 0) {
        throw std::invalid_argument("duplicate source pixel");
      }
      targets_[sp.source] = sp.source;
      layer_of_[sp.source] = 1;
      layer1_[sp.source] = sp.value;
      occupants_[sp.source].add(sp.source);
      ++source_count_;
    }
  }

  std::int64_t m() const { return m_; }
  AnglePosition position() const { return pos_; }
  std::size_t source_count() const { return source_count_; }
  Pixel background() const { return background_; }

  bool has_source(Gaussian z) const {
    return targets_.contains(z) && layer_of_[z] != 0;
  }
  Gaussian target_of(Gaussian z) const {
    require_source(z);
    return targets_[z];
  }
  int layer_of(Gaussian z) const {
    require_source(z);
    return layer_of_[z];
  }
  Pixel value_of(Gaussian z) const {
    require_source(z);
    return layer_of_[z] == 1 ? layer1_[targets_[z]] : layer2_[targets_[z]];
  }

  // Applies one phase worth of ray moves. The update must be the one the
  // engine produces for the current position; anything else is rejected.
  void apply_phase(const RayUpdate& u) {
    const bool entering = pos_.kind == AnglePosition::Kind::InInterval;
    const std::size_t expected_hinge =
        entering ? table_->successor(pos_.index) : pos_.index;
    const Phase expected_phase = entering ? Phase::AtHinge : Phase::AfterHinge;
    if (u.phase != expected_phase ||
        !((*table_)[expected_hinge] == u.hinge)) {
      throw std::invalid_argument("ray update inconsistent with current position");
    }

    // Remove every moving pixel first, then reinsert at the new targets.
    // The final layer state is forced by the invariants, so any order that
    // re-establishes them gives the same bytes; two passes additionally keep
    // cell occupancy from ever exceeding two mid-flight unless the bound is
    // genuinely violated.
    moving_.clear();
    for (const TouchedPoint& tp : u.touched) {
      const Gaussian z = tp.point;
      if (!has_source(z)) continue;
      const Gaussian from = targets_[z];
      moving_.push_back(Move{z, from + tp.delta, take_pixel(z, from)});
    }
    for (const Move& mv : moving_) {
      place_pixel(mv.source, mv.to, mv.value);
      targets_[mv.source] = mv.to;
    }
    pos_ = advanced(*table_, pos_);
  }

  // Convenience: derive the update for the current position and apply it.
  RayUpdate step() {
    RayUpdate u = make_update(*table_, pos_);
    apply_phase(u);
    return u;
  }

  // Original pixel of every source, via its layer cell. Sources come back in
  // (Re, Im)-lexicographic order.
  std::vector<SourcePixel> reconstruct() const {
    std::vector<SourcePixel> out;
    out.reserve(source_count_);
    for (std::int64_t re = -m_; re <= m_; ++re) {
      for (std::int64_t im = -m_; im <= m_; ++im) {
        const Gaussian z{re, im};
        if (targets_.contains(z) && layer_of_[z] != 0) {
          out.push_back(SourcePixel{z, value_of(z)});
        }
      }
    }
    return out;
  }

  // The displayable result: layer 1 over the padded disk. Collisions show
  // the lexicographically smaller source's pixel; empty cells show
  // background.
  const DiskGrid<Pixel>& render() const { return layer1_; }

  const DiskGrid<Pixel>& layer2() const { return layer2_; }

  // Cross-checks every structural invariant; tests and the verify command
  // call this after each phase. Throws std::logic_error on the first breach.
  void validate_invariants() const {
    for (std::int64_t re = -m_; re <= m_; ++re) {
      for (std::int64_t im = -m_; im <= m_; ++im) {
        const Gaussian z{re, im};
        if (!targets_.contains(z) || layer_of_[z] == 0) continue;
        const Gaussian tgt = targets_[z];
        const OccupantSet& occ = occupants_[tgt];
        if (occ.find(z) < 0) fail("source missing from its target's occupants");
        if (occ.count == 1 && layer_of_[z] != 1) fail("sole preimage not on layer 1");
        if (occ.count == 2) {
          const bool smaller = lex_less(z, occ.at(1 - occ.find(z)));
          if (smaller != (layer_of_[z] == 1)) fail("layering not canonical");
        }
      }
    }
    for (std::int64_t re = -(m_ + 1); re <= m_ + 1; ++re) {
      for (std::int64_t im = -(m_ + 1); im <= m_ + 1; ++im) {
        const Gaussian w{re, im};
        if (!layer1_.contains(w)) continue;
        const OccupantSet& occ = occupants_[w];
        for (int i = 0; i < occ.count; ++i) {
          const Gaussian src = occ.at(i);
          if (!has_source(src) || !(targets_[src] == w)) {
            fail("stale occupant entry");
          }
        }
        if (occ.count == 2 && layer_of_[occ.at(0)] == layer_of_[occ.at(1)]) {
          fail("colliding sources share a layer");
        }
        if (occ.count == 0 &&
            (!(layer1_[w] == background_) || !(layer2_[w] == background_))) {
          fail("unoccupied cell not background");
        }
        if (occ.count < 2 && !(layer2_[w] == background_)) {
          fail("layer 2 populated without a collision");
        }
      }
    }
  }

 private:
  struct Move {
    Gaussian source;
    Gaussian to;
    Pixel value;
  };

  // At most two sources may share a target; stored smallest-first.
  struct OccupantSet {
    std::int8_t count = 0;
    Gaussian src[2];

    Gaussian at(int i) const { return src[i]; }
    int find(Gaussian z) const {
      for (int i = 0; i < count; ++i)
        if (src[i] == z) return i;
      return -1;
    }
    void add(Gaussian z) {
      src[count++] = z;
      if (count == 2 && lex_less(src[1], src[0])) std::swap(src[0], src[1]);
    }
    void remove_at(int i) {
      if (i == 0 && count == 2) src[0] = src[1];
      --count;
    }
  };

  void require_source(Gaussian z) const {
    if (!has_source(z)) throw std::out_of_range("no source pixel at point");
  }

  [[noreturn]] static void fail(const char* what) {
    throw std::logic_error(what);
  }

  // Detach a source's pixel from its current target cell, promoting a left
  // behind layer-2 partner to layer 1.
  Pixel take_pixel(Gaussian z, Gaussian from) {
    OccupantSet& occ = occupants_[from];
    const int slot = occ.find(z);
    Pixel out;
    if (layer_of_[z] == 1) {
      out = layer1_[from];
      if (occ.count == 2) {
        layer1_[from] = layer2_[from];
        layer2_[from] = background_;
        const Gaussian partner = occ.at(1 - slot);
        layer_of_[partner] = 1;
      } else {
        layer1_[from] = background_;
      }
    } else {
      out = layer2_[from];
      layer2_[from] = background_;
    }
    occ.remove_at(slot);
    layer_of_[z] = 0;  // in flight
    return out;
  }

  void place_pixel(Gaussian z, Gaussian to, Pixel value) {
    OccupantSet& occ = occupants_[to];
    if (occ.count == 0) {
      occ.add(z);
      layer_of_[z] = 1;
      layer1_[to] = value;
      return;
    }
    if (occ.count == 2) {
      throw std::logic_error("more than two sources collide on one target");
    }
    const Gaussian other = occ.at(0);
    occ.add(z);
    if (lex_less(z, other)) {
      layer2_[to] = layer1_[to];
      layer_of_[other] = 2;
      layer1_[to] = value;
      layer_of_[z] = 1;
    } else {
      layer2_[to] = value;
      layer_of_[z] = 2;
    }
  }

  const HingeTable* table_;
  std::int64_t m_;
  AnglePosition pos_;
  Pixel background_;
  std::size_t source_count_ = 0;
  DiskGrid<Gaussian> targets_;       // R: source -> current target
  DiskGrid<std::int8_t> layer_of_;   // L: 0 absent, else 1 or 2
  DiskGrid<Pixel> layer1_;           // radius m+1 (drift bound sqrt(2)/2)
  DiskGrid<Pixel> layer2_;
  DiskGrid<OccupantSet> occupants_;  // inverse of R, per target
  std::vector<Move> moving_;         // scratch, reused across phases
};

}  // namespace hingerot
