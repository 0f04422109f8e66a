#pragma once

// Exhaustive, definition-level enumerators used as ground truth on small
// instances. Nothing here shares code paths with enumerate.hpp or the
// transform beyond the stream containers themselves.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "linkstream/clique.hpp"
#include "linkstream/delta.hpp"
#include "linkstream/error.hpp"
#include "linkstream/interval.hpp"
#include "linkstream/link_stream.hpp"

namespace linkstream::oracle {

struct OracleLimits {
  std::size_t max_nodes = 12;
  std::size_t max_links = 64;
};

class LimitError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void check_limits(std::size_t n, std::size_t m, const OracleLimits& lim) {
  if (n > lim.max_nodes || n > 24) {
    throw LimitError("oracle: " + std::to_string(n) + " nodes exceeds limit " +
                     std::to_string(lim.max_nodes));
  }
  if (m > lim.max_links) {
    throw LimitError("oracle: " + std::to_string(m) + " links exceeds limit " +
                     std::to_string(lim.max_links));
  }
}

inline std::vector<NodeId> members(std::uint32_t mask) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

struct Candidate {
  std::uint32_t mask;
  Interval interval;
};

// Drops every candidate dominated by another with a superset node set and a
// superset interval.
inline std::vector<Clique> undominated(const std::vector<Candidate>& all) {
  std::vector<Clique> out;
  for (const auto& c : all) {
    bool dominated = false;
    for (const auto& d : all) {
      const bool superset = (d.mask & c.mask) == c.mask;
      if (superset && d.interval.contains(c.interval) &&
          (d.mask != c.mask || d.interval != c.interval)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(Clique{members(c.mask), c.interval});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Closed-form window test on sorted events scaled by `scale`: every window
// [s, s+d] inside [x, y] holds an event. Requires y - x >= d.
inline bool windows_hit(std::span<const TimePoint> events, TimePoint x, TimePoint y, TimePoint d,
                        TimePoint scale) {
  std::optional<TimePoint> prev;
  for (TimePoint raw : events) {
    const TimePoint t = raw * scale;
    if (t < x || t > y) continue;
    if (!prev && t > x + d) return false;
    if (prev && t - *prev > d) return false;
    prev = t;
  }
  return prev && *prev >= y - d;
}

}  // namespace detail

/// Maximal cliques by brute force: for every node subset X (|X| >= 2), the
/// maximal intervals of the intersection of its pairs' link sets are its
/// time-maximal cliques; keep those not dominated by any other.
inline std::vector<Clique> oracle_maximal_cliques(const LinkStream& s, const OracleLimits& lim = {}) {
  const std::size_t n = s.node_table_size();
  detail::check_limits(n, s.link_count(), lim);

  std::vector<detail::Candidate> all;
  const std::uint32_t full = n == 0 ? 0 : (1u << n);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    const auto xs = detail::members(mask);
    std::vector<Interval> common{s.horizon()};
    for (std::size_t i = 0; i < xs.size() && !common.empty(); ++i) {
      for (std::size_t j = i + 1; j < xs.size() && !common.empty(); ++j) {
        common = intersect_lists(common, s.intervals(xs[i], xs[j]));
      }
    }
    for (const auto& iv : common) all.push_back({mask, iv});
  }
  return detail::undominated(all);
}

/// Δ-clique test on the closed-form characterisation: within [x,y], each
/// pair's first event is <= x+Δ, its last is >= y-Δ, and consecutive events
/// are at most Δ apart. Requires y - x >= Δ.
inline bool is_delta_clique(const InstantStream& in, std::span<const NodeId> nodes,
                            const Interval& q, DeltaParam delta) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!detail::windows_hit(in.events(nodes[i], nodes[j]), q.begin, q.end, delta.value(), 1)) {
        return false;
      }
    }
  }
  return true;
}

/// Δ-clique test by scanning every window [s, s+Δ] ⊆ [x,y]. Window starts
/// are taken on a half-unit grid, which is exact for integer event times,
/// integer bounds and integer Δ (a bad window set, when non-empty, is an
/// interval with integer endpoints and so contains a half-integer).
inline bool is_delta_clique_scan(const InstantStream& in, std::span<const NodeId> nodes,
                                 const Interval& q, DeltaParam delta) {
  const TimePoint d2 = 2 * delta.value();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const auto ev = in.events(nodes[i], nodes[j]);
      for (TimePoint s2 = 2 * q.begin; s2 + d2 <= 2 * q.end; ++s2) {
        bool hit = false;
        for (TimePoint t : ev) {
          if (s2 <= 2 * t && 2 * t <= s2 + d2) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
    }
  }
  return true;
}

enum class CandidateSpace {
  derived,       // x from {t-Δ} ∪ {α}, y from {t+Δ} ∪ {ω}
  all_integers,  // every integer x <= y in the horizon (audit mode, tiny horizons only)
};

/// Maximal Δ-cliques by brute force over candidate intervals [x,y] with
/// y - x >= Δ. Time-maximality is probed half a unit outward on each side,
/// which is exact under integer data because the Δ-clique property only
/// weakens as the interval shrinks.
inline std::vector<Clique> oracle_maximal_delta_cliques(const InstantStream& in, DeltaParam delta,
                                                        const OracleLimits& lim = {},
                                                        CandidateSpace space = CandidateSpace::derived) {
  const std::size_t n = in.nodes().size();
  detail::check_limits(n, in.event_count(), lim);
  delta.check_against(in.horizon());
  const TimePoint d = delta.value();
  const Interval h = in.horizon();

  std::set<TimePoint> xs, ys;
  if (space == CandidateSpace::derived) {
    xs.insert(h.begin);
    ys.insert(h.end);
    for (const auto& pe : in.pairs()) {
      for (TimePoint t : pe.times) {
        xs.insert(std::max(t - d, h.begin));
        ys.insert(std::min(t + d, h.end));
      }
    }
  } else {
    for (TimePoint t = h.begin; t <= h.end; ++t) {
      xs.insert(t);
      ys.insert(t);
    }
  }

  // Evaluated on the doubled time grid so half-unit probes are integral.
  auto holds = [&](std::span<const NodeId> nodes, TimePoint x2, TimePoint y2) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (!detail::windows_hit(in.events(nodes[i], nodes[j]), x2, y2, 2 * d, 2)) return false;
      }
    }
    return true;
  };

  std::vector<Clique> out;
  const std::uint32_t full = n == 0 ? 0 : (1u << n);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    const auto nodes = detail::members(mask);
    for (TimePoint x : xs) {
      for (TimePoint y : ys) {
        if (y - x < d) continue;
        const TimePoint x2 = 2 * x, y2 = 2 * y;
        if (!holds(nodes, x2, y2)) continue;
        if (x > h.begin && holds(nodes, x2 - 1, y2)) continue;
        if (y < h.end && holds(nodes, x2, y2 + 1)) continue;
        bool grows = false;
        for (NodeId v = 0; v < n && !grows; ++v) {
          if (mask & (1u << v)) continue;
          auto bigger = nodes;
          bigger.push_back(v);
          std::sort(bigger.begin(), bigger.end());
          grows = holds(bigger, x2, y2);
        }
        if (!grows) out.push_back(Clique{nodes, Interval{x, y}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linkstream::oracle
