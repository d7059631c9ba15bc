#include "hingerot/table.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "hingerot/surd.hpp"

namespace hingerot {

namespace {

// Largest odd o with o^2 < 4s; k then runs over (j-1)/2 for odd j in [-o, o].
std::int64_t odd_cap(std::int64_t s) {
  std::int64_t o = isqrt64(4 * s - 1);
  if ((o & 1) == 0) --o;
  return o;
}

struct SortEntry {
  HingeAngle angle;
  ExactAngleFunctions funcs;
  std::int8_t quad;

  explicit SortEntry(HingeAngle h)
      : angle(h), funcs(exact_functions(h)),
        quad(static_cast<std::int8_t>(quadrant(funcs))) {}
};

}  // namespace

HingeTable HingeTable::build(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("table radius must be non-negative");
  HingeTable t;
  t.m_ = m;
  if (m == 0) return t;

  std::vector<SortEntry> entries;
  entries.reserve(static_cast<std::size_t>(candidate_triple_count(m)));
  const std::int64_t m2 = m * m;
  for (std::int64_t p = -m; p <= m; ++p) {
    for (std::int64_t q = -m; q <= m; ++q) {
      const std::int64_t s = p * p + q * q;
      if (s == 0 || s > m2) continue;
      const std::int64_t o = odd_cap(s);
      for (std::int64_t j = -o; j <= o; j += 2) {
        entries.emplace_back(HingeAngle::canonical(Triple{p, q, (j - 1) / 2}));
      }
    }
  }

  std::sort(entries.begin(), entries.end(),
            [](const SortEntry& a, const SortEntry& b) {
              if (a.angle.triple() == b.angle.triple()) return false;
              return compare_prepared(a.funcs, a.quad, b.funcs, b.quad) ==
                     std::strong_ordering::less;
            });

  t.angles_.reserve(entries.size());
  for (const SortEntry& e : entries) {
    if (t.angles_.empty() || !(t.angles_.back() == e.angle)) {
      t.angles_.push_back(e.angle);
    }
  }
  return t;
}

std::size_t HingeTable::successor(std::size_t j) const {
  if (empty()) throw std::logic_error("successor on empty hinge table");
  if (j >= size()) throw std::out_of_range("hinge index out of range");
  return (j + 1) % size();
}

AnglePosition HingeTable::locate(const HingeAngle& h) const {
  if (empty()) throw std::logic_error("locate on empty hinge table");
  const auto it = std::lower_bound(
      angles_.begin(), angles_.end(), h,
      [](const HingeAngle& a, const HingeAngle& b) {
        return compare(a, b) == std::strong_ordering::less;
      });
  if (it != angles_.end() && compare(*it, h) == std::strong_ordering::equal) {
    return {AnglePosition::Kind::AtHinge,
            static_cast<std::size_t>(it - angles_.begin())};
  }
  const std::size_t ip = static_cast<std::size_t>(it - angles_.begin());
  return {AnglePosition::Kind::InInterval, (ip + size() - 1) % size()};
}

void HingeTable::save(std::ostream& out) const {
  out << "HINGETABLE v1 m=" << m_ << " n=" << size() << '\n';
  for (const HingeAngle& h : angles_) out << to_string(h.triple()) << '\n';
}

namespace {

// Strict decimal: value parses fully and re-renders to the same bytes.
bool parse_exact_int(std::string_view s, std::int64_t& out) {
  const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) return false;
  return std::to_string(out) == s;
}

}  // namespace

HingeTable HingeTable::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw TableError(TableError::Kind::BadHeader, "missing table header");
  }
  constexpr std::string_view magic = "HINGETABLE v1 m=";
  if (line.rfind(magic, 0) != 0) {
    throw TableError(TableError::Kind::BadHeader, "bad table header: " + line);
  }
  std::string_view rest = std::string_view(line).substr(magic.size());
  const auto sep = rest.find(" n=");
  std::int64_t m = -1, n = -1;
  if (sep == std::string_view::npos || !parse_exact_int(rest.substr(0, sep), m) ||
      !parse_exact_int(rest.substr(sep + 3), n) || m < 0 || n < 0) {
    throw TableError(TableError::Kind::BadHeader, "bad table header: " + line);
  }
  if (m > (std::int64_t(1) << 30)) {
    throw TableError(TableError::Kind::BadHeader, "table radius too large");
  }

  HingeTable t;
  t.m_ = m;
  t.angles_.reserve(static_cast<std::size_t>(
      std::min<std::int64_t>(n, std::int64_t(1) << 20)));
  const std::int64_t m2 = m * m;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw TableError(TableError::Kind::BadCount,
                       "header promises " + std::to_string(n) +
                           " entries, file ends after " + std::to_string(i));
    }
    const auto tri = parse_triple(line);
    if (!tri) {
      throw TableError(TableError::Kind::BadEntry,
                       "malformed entry line: " + line);
    }
    if (!validate(*tri)) {
      throw TableError(TableError::Kind::InvalidTriple,
                       "not a generating triple: " + line);
    }
    const HingeAngle h = HingeAngle::canonical(*tri);
    if (!(h.triple() == *tri)) {
      throw TableError(TableError::Kind::NonCanonical,
                       "entry not in canonical form: " + line);
    }
    if (h.order() > m2) {
      throw TableError(TableError::Kind::OutOfRange,
                       "entry order exceeds table radius: " + line);
    }
    if (!t.angles_.empty()) {
      const auto c = compare(t.angles_.back(), h);
      if (c == std::strong_ordering::equal) {
        throw TableError(TableError::Kind::Duplicate, "duplicate entry: " + line);
      }
      if (c == std::strong_ordering::greater) {
        throw TableError(TableError::Kind::Unsorted,
                         "entries out of order at: " + line);
      }
    }
    t.angles_.push_back(h);
  }
  if (std::getline(in, line)) {
    throw TableError(TableError::Kind::TrailingData,
                     "trailing data after last entry");
  }
  return t;
}

std::uint64_t candidate_triple_count(std::int64_t m) {
  if (m <= 0) return 0;
  std::uint64_t count = 0;
  const std::int64_t m2 = m * m;
  for (std::int64_t p = -m; p <= m; ++p) {
    for (std::int64_t q = -m; q <= m; ++q) {
      const std::int64_t s = p * p + q * q;
      if (s == 0 || s > m2) continue;
      count += static_cast<std::uint64_t>(odd_cap(s) + 1);
    }
  }
  return count;
}

}  // namespace hingerot
