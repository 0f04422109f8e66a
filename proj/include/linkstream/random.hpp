#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linkstream/delta.hpp"
#include "linkstream/error.hpp"
#include "linkstream/link_stream.hpp"

namespace linkstream {

struct GeneratorSpec {
  std::size_t n = 2;
  std::size_t m = 1;
  Interval horizon{0, 100};
  std::uint64_t seed = 0;
  // Upper bound on a link's length; negative means a fifth of the horizon span.
  TimePoint max_duration = -1;
};

namespace detail {

inline void validate(const GeneratorSpec& g) {
  if (g.n < 2) throw Error("generator needs n >= 2");
  if (g.m < 1) throw Error("generator needs m >= 1");
  if (g.horizon.begin > g.horizon.end) throw Error("generator horizon begin > end");
}

// Zero-padded so label order matches index order.
inline std::vector<std::string> node_labels(std::size_t n) {
  const std::size_t width = std::to_string(n - 1).size();
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = std::to_string(i);
    out.push_back("n" + std::string(width - s.size(), '0') + s);
  }
  return out;
}

template <typename Rng>
std::pair<std::size_t, std::size_t> random_pair(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t a = pick(rng);
  std::size_t b = pick(rng);
  while (b == a) b = pick(rng);
  return {a, b};
}

}  // namespace detail

/// m raw links: pairs uniform over unordered pairs, begin uniform over the
/// horizon, length uniform in [0, max_duration], end clipped to the horizon.
inline std::vector<RawLink> random_links(const GeneratorSpec& g) {
  detail::validate(g);
  std::mt19937_64 rng(g.seed);
  const auto labels = detail::node_labels(g.n);
  const TimePoint span = g.horizon.end - g.horizon.begin;
  const TimePoint max_len = g.max_duration >= 0 ? g.max_duration : std::max<TimePoint>(1, span / 5);
  std::uniform_int_distribution<TimePoint> when(g.horizon.begin, g.horizon.end);
  std::uniform_int_distribution<TimePoint> len(0, max_len);
  std::vector<RawLink> out;
  out.reserve(g.m);
  for (std::size_t i = 0; i < g.m; ++i) {
    auto [a, b] = detail::random_pair(rng, g.n);
    const TimePoint begin = when(rng);
    const TimePoint end = std::min(g.horizon.end, begin + len(rng));
    out.push_back({begin, end, labels[a], labels[b]});
  }
  return out;
}

/// m raw events: pairs uniform, times uniform over the horizon.
inline std::vector<RawEvent> random_events(const GeneratorSpec& g) {
  detail::validate(g);
  std::mt19937_64 rng(g.seed);
  const auto labels = detail::node_labels(g.n);
  std::uniform_int_distribution<TimePoint> when(g.horizon.begin, g.horizon.end);
  std::vector<RawEvent> out;
  out.reserve(g.m);
  for (std::size_t i = 0; i < g.m; ++i) {
    auto [a, b] = detail::random_pair(rng, g.n);
    out.push_back({when(rng), labels[a], labels[b]});
  }
  return out;
}

/// Random stream with durations; m may shrink after merging.
inline LinkStream generate_duration_stream(const GeneratorSpec& g) {
  return build_stream(random_links(g), g.horizon);
}

/// Random instantaneous stream; duplicate events are dropped.
inline InstantStream generate_instant_stream(const GeneratorSpec& g) {
  return build_instant_stream(random_events(g), g.horizon);
}

}  // namespace linkstream
