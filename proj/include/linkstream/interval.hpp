#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "linkstream/error.hpp"

namespace linkstream {

// Discrete time, in the dataset's native unit.
using TimePoint = std::int64_t;

// a + b, throwing on signed overflow.
inline TimePoint checked_add(TimePoint a, TimePoint b) {
  TimePoint out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error("timestamp overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline TimePoint checked_sub(TimePoint a, TimePoint b) {
  TimePoint out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error("timestamp overflow: " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

/// Closed time interval [begin, end]. Zero-length intervals are valid.
struct Interval {
  TimePoint begin = 0;
  TimePoint end = 0;

  static Interval make(TimePoint b, TimePoint e) {
    if (b > e) {
      throw Error("interval begin " + std::to_string(b) + " > end " + std::to_string(e));
    }
    return Interval{b, e};
  }

  [[nodiscard]] constexpr bool contains(TimePoint t) const noexcept {
    return begin <= t && t <= end;
  }
  [[nodiscard]] constexpr bool contains(const Interval& q) const noexcept {
    return begin <= q.begin && q.end <= end;
  }
  // Closed intervals sharing a single point intersect.
  [[nodiscard]] constexpr bool intersects(const Interval& o) const noexcept {
    return begin <= o.end && o.begin <= end;
  }
  [[nodiscard]] constexpr TimePoint length() const noexcept { return end - begin; }

  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& i) {
  return os << '[' << i.begin << ',' << i.end << ']';
}

inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) return std::nullopt;
  return Interval{std::max(a.begin, b.begin), std::min(a.end, b.end)};
}

/// Sorts and merges intervals in place so the result is sorted and pairwise
/// disjoint (consecutive [b,e], [b',e'] satisfy e < b'). Touching intervals merge.
inline void merge_intervals(std::vector<Interval>& v) {
  if (v.empty()) return;
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].begin <= v[out].end) {
      v[out].end = std::max(v[out].end, v[i].end);
    } else {
      v[++out] = v[i];
    }
  }
  v.resize(out + 1);
}

// True iff sorted by begin and strictly disjoint.
inline bool is_disjoint_sorted(std::span<const Interval> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1].end < v[i].begin)) return false;
  }
  return true;
}

/// Intersection of two sorted disjoint interval lists (two-pointer sweep).
inline std::vector<Interval> intersect_lists(std::span<const Interval> a,
                                             std::span<const Interval> b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (auto x = intersect(a[i], b[j])) out.push_back(*x);
    if (a[i].end < b[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

}  // namespace linkstream
