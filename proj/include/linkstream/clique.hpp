#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <vector>

#include "linkstream/interval.hpp"
#include "linkstream/node_table.hpp"

namespace linkstream {

/// A node set with a time interval. Nodes are kept strictly increasing.
struct Clique {
  std::vector<NodeId> nodes;
  Interval interval;

  static Clique make(std::vector<NodeId> nodes, Interval interval) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return Clique{std::move(nodes), interval};
  }

  // Ordered by (begin, end, nodes).
  friend std::strong_ordering operator<=>(const Clique& a, const Clique& b) {
    if (auto c = a.interval <=> b.interval; c != 0) return c;
    return a.nodes <=> b.nodes;
  }
  friend bool operator==(const Clique&, const Clique&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Clique& c) {
  os << '{';
  for (std::size_t i = 0; i < c.nodes.size(); ++i) os << (i ? "," : "") << c.nodes[i];
  return os << "}" << c.interval;
}

struct CliqueHash {
  std::size_t operator()(const Clique& c) const noexcept {
    std::size_t h = std::hash<TimePoint>{}(c.interval.begin);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(std::hash<TimePoint>{}(c.interval.end));
    for (NodeId n : c.nodes) mix(n);
    return h;
  }
};

// Sorted copy, for set comparisons.
inline std::vector<Clique> sorted(std::vector<Clique> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace linkstream
