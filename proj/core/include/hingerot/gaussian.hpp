#pragma once

#include <cstdint>
#include <ostream>

namespace hingerot {

// Gaussian integer with 64-bit components. Engine coordinates stay tiny
// (bounded by the disk radius plus one), so plain int64 arithmetic is exact.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend constexpr Gaussian operator+(Gaussian a, Gaussian b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr Gaussian operator-(Gaussian a, Gaussian b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr Gaussian operator*(std::int64_t s, Gaussian a) {
    return {s * a.re, s * a.im};
  }
  constexpr Gaussian& operator+=(Gaussian o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr Gaussian operator-() const { return {-re, -im}; }
  constexpr Gaussian conj() const { return {re, -im}; }
  constexpr std::int64_t norm() const { return re * re + im * im; }
  friend constexpr bool operator==(Gaussian, Gaussian) = default;

  // Multiplication by i^q for any integer q.
  constexpr Gaussian rotated_quarter_turns(int q) const {
    switch (((q % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return {-im, re};
      case 2: return {-re, -im};
      default: return {im, -re};
    }
  }
  static constexpr Gaussian unit(int q) {
    return Gaussian{1, 0}.rotated_quarter_turns(q);
  }
};

// (Re, Im)-lexicographic order; the tie-break used by the image layering.
constexpr bool lex_less(Gaussian a, Gaussian b) {
  return a.re != b.re ? a.re < b.re : a.im < b.im;
}

inline std::ostream& operator<<(std::ostream& os, Gaussian z) {
  return os << '(' << z.re << ',' << z.im << ')';
}

}  // namespace hingerot
