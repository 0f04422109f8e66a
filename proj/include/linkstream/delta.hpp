#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkstream/clique.hpp"
#include "linkstream/enumerate.hpp"
#include "linkstream/error.hpp"
#include "linkstream/interval.hpp"
#include "linkstream/link_stream.hpp"
#include "linkstream/node_table.hpp"

namespace linkstream {

/// One contact event (t, u, v) as read from input.
struct RawEvent {
  TimePoint t = 0;
  std::string u;
  std::string v;
};

/// Instantaneous link stream: per pair, strictly increasing event times.
class InstantStream {
 public:
  struct PairEvents {
    NodePair pair;
    std::vector<TimePoint> times;
  };

  InstantStream() = default;

  [[nodiscard]] const NodeTable& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const Interval& horizon() const noexcept { return horizon_; }
  [[nodiscard]] const std::vector<PairEvents>& pairs() const noexcept { return pairs_; }
  [[nodiscard]] std::size_t event_count() const noexcept { return events_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return active_nodes_; }

  // Empty when the pair has no events.
  [[nodiscard]] std::span<const TimePoint> events(NodeId a, NodeId b) const {
    const auto p = NodePair::make(a, b);
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p,
                               [](const PairEvents& e, const NodePair& q) { return e.pair < q; });
    if (it == pairs_.end() || it->pair != p) return {};
    return it->times;
  }

  friend InstantStream build_instant_stream(std::span<const RawEvent>, std::optional<Interval>);

 private:
  NodeTable nodes_;
  Interval horizon_;
  std::vector<PairEvents> pairs_;
  std::size_t events_ = 0;
  std::size_t active_nodes_ = 0;
};

/// Sorts events per pair and drops duplicate (t,u,v). Without an explicit
/// horizon it is [min t, max t], or [0,0] for no events.
inline InstantStream build_instant_stream(std::span<const RawEvent> raw,
                                          std::optional<Interval> horizon = std::nullopt) {
  std::vector<std::string_view> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& r : raw) {
    if (r.u == r.v) throw Error("self-loop event on node '" + r.u + "'");
    labels.push_back(r.u);
    labels.push_back(r.v);
  }
  Interval h{0, 0};
  if (horizon) {
    h = Interval::make(horizon->begin, horizon->end);
  } else if (!raw.empty()) {
    h = {raw.front().t, raw.front().t};
    for (const auto& r : raw) {
      h.begin = std::min(h.begin, r.t);
      h.end = std::max(h.end, r.t);
    }
  }

  InstantStream s;
  s.nodes_ = NodeTable::from_labels(labels);
  s.horizon_ = h;

  struct Flat {
    NodePair pair;
    TimePoint t;
    auto operator<=>(const Flat&) const = default;
  };
  std::vector<Flat> flat;
  flat.reserve(raw.size());
  for (const auto& r : raw) {
    if (!h.contains(r.t)) {
      throw Error("event at " + std::to_string(r.t) + " outside horizon [" +
                  std::to_string(h.begin) + "," + std::to_string(h.end) + "]");
    }
    flat.push_back({NodePair::make(s.nodes_.at(r.u), s.nodes_.at(r.v)), r.t});
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());

  std::vector<bool> active(s.nodes_.size(), false);
  for (const auto& f : flat) {
    if (s.pairs_.empty() || s.pairs_.back().pair != f.pair) {
      s.pairs_.push_back({f.pair, {}});
      active[f.pair.u] = active[f.pair.v] = true;
    }
    s.pairs_.back().times.push_back(f.t);
  }
  s.events_ = flat.size();
  s.active_nodes_ = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
  return s;
}

inline InstantStream build_instant_stream(const std::vector<RawEvent>& raw,
                                          std::optional<Interval> horizon = std::nullopt) {
  return build_instant_stream(std::span<const RawEvent>(raw), horizon);
}

/// Window length Δ, non-negative.
class DeltaParam {
 public:
  DeltaParam() = default;
  explicit DeltaParam(TimePoint d) : value_(d) {
    if (d < 0) throw Error("delta must be non-negative, got " + std::to_string(d));
  }
  [[nodiscard]] TimePoint value() const noexcept { return value_; }

  // Requires Δ <= ω - α.
  void check_against(const Interval& horizon) const {
    if (value_ > checked_sub(horizon.end, horizon.begin)) {
      throw Error("delta " + std::to_string(value_) + " exceeds horizon span " +
                  std::to_string(horizon.end - horizon.begin));
    }
  }

 private:
  TimePoint value_ = 0;
};

/// The union of [t, t+Δ] over sorted events, as maximal disjoint intervals.
/// t_{i+1} <= t_i + Δ joins consecutive windows (shared endpoint included).
inline std::vector<Interval> pair_availability(std::span<const TimePoint> events, DeltaParam delta) {
  std::vector<Interval> out;
  for (TimePoint t : events) {
    const TimePoint end = checked_add(t, delta.value());
    if (!out.empty() && t <= out.back().end) {
      out.back().end = std::max(out.back().end, end);
    } else {
      out.push_back({t, end});
    }
  }
  return out;
}

/// L_Δ: horizon [α+Δ, ω]; per pair, the maximal intervals of
/// [α+Δ, ω] ∩ ∪[t, t+Δ]. Pairs with an empty intersection are omitted.
inline LinkStream transform(const InstantStream& in, DeltaParam delta) {
  delta.check_against(in.horizon());
  const Interval window{checked_add(in.horizon().begin, delta.value()), in.horizon().end};
  std::vector<std::pair<NodePair, std::vector<Interval>>> pairs;
  pairs.reserve(in.pairs().size());
  for (const auto& pe : in.pairs()) {
    std::vector<Interval> clipped;
    for (const auto& i : pair_availability(pe.times, delta)) {
      if (auto x = intersect(i, window)) clipped.push_back(*x);
    }
    if (!clipped.empty()) pairs.emplace_back(pe.pair, std::move(clipped));
  }
  return LinkStream::from_pairs(in.nodes(), window, std::move(pairs));
}

enum class ShiftDirection { to_delta, to_stream };

/// to_delta: (X,[x,y]) -> (X,[x+Δ,y]); to_stream: (X,[x,y]) -> (X,[x-Δ,y]).
inline Clique shift_clique(const Clique& c, DeltaParam delta, ShiftDirection dir) {
  Clique out = c;
  out.interval.begin = dir == ShiftDirection::to_delta
                           ? checked_add(c.interval.begin, delta.value())
                           : checked_sub(c.interval.begin, delta.value());
  if (out.interval.begin > out.interval.end) {
    throw Error("shifted clique interval is empty: [" + std::to_string(out.interval.begin) + "," +
                std::to_string(out.interval.end) + "]");
  }
  return out;
}

/// Maximal Δ-cliques of `in`, in its own time frame: maximal cliques of L_Δ
/// shifted back by Δ. Callbacks in `opt` see shifted cliques too.
inline std::vector<Clique> enumerate_maximal_delta_cliques(const InstantStream& in, DeltaParam delta,
                                                           const EnumOptions& opt = {}) {
  const LinkStream ld = transform(in, delta);
  EnumOptions inner = opt;
  if (opt.on_maximal) {
    inner.on_maximal = [&](const Clique& c) {
      opt.on_maximal(shift_clique(c, delta, ShiftDirection::to_stream));
    };
  }
  auto cliques = enumerate_maximal_cliques(ld, inner);
  for (auto& c : cliques) c = shift_clique(c, delta, ShiftDirection::to_stream);
  return cliques;
}

}  // namespace linkstream
