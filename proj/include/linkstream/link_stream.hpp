#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkstream/error.hpp"
#include "linkstream/interval.hpp"
#include "linkstream/node_table.hpp"

namespace linkstream {

/// One link (b, e, u, v) as read from input, before simplification.
struct RawLink {
  TimePoint begin = 0;
  TimePoint end = 0;
  std::string u;
  std::string v;
};

struct Link {
  Interval interval;
  NodeId u = 0;
  NodeId v = 0;
};

struct StreamStats {
  std::size_t n = 0;              // nodes appearing in at least one link
  std::size_t m = 0;              // links after simplification
  Interval horizon;
  std::size_t pair_count = 0;     // pairs with at least one link
  std::int64_t total_link_duration = 0;
  std::size_t isolated = 0;       // declared nodes without links
};

/// Simple undirected link stream with durations. Immutable once built.
///
/// Links are grouped per node pair; each pair's intervals are sorted and
/// strictly disjoint, so the interval covering a query (if any) is unique and
/// found by binary search.
class LinkStream {
 public:
  // Per-pair slice of the flat interval array.
  struct PairSlot {
    NodePair pair;
    std::uint32_t offset = 0;
    std::uint32_t count = 0;
  };

  LinkStream() = default;

  /// Builds from per-pair interval lists that are already simple. Validates
  /// every invariant; throws Error on violation.
  static LinkStream from_pairs(NodeTable nodes, Interval horizon,
                               std::vector<std::pair<NodePair, std::vector<Interval>>> pairs);

  [[nodiscard]] const NodeTable& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const Interval& horizon() const noexcept { return horizon_; }
  [[nodiscard]] std::size_t link_count() const noexcept { return intervals_.size(); }
  [[nodiscard]] std::size_t node_count() const noexcept { return active_nodes_; }
  [[nodiscard]] std::size_t node_table_size() const noexcept { return nodes_.size(); }
  [[nodiscard]] std::span<const PairSlot> pairs() const noexcept { return slots_; }

  [[nodiscard]] std::span<const Interval> intervals(const PairSlot& s) const noexcept {
    return {intervals_.data() + s.offset, s.count};
  }
  // Empty span when the pair never links.
  [[nodiscard]] std::span<const Interval> intervals(NodeId a, NodeId b) const {
    if (a == b) return {};
    auto it = lookup_.find(NodePair::make(a, b).key());
    if (it == lookup_.end()) return {};
    return intervals(slots_[it->second]);
  }
  /// Nodes sharing at least one link with `u`, ascending.
  [[nodiscard]] std::span<const NodeId> neighbors(NodeId u) const noexcept {
    if (u >= neighbors_.size()) return {};
    return neighbors_[u];
  }

  /// All links in (u, v, begin) order.
  [[nodiscard]] std::vector<Link> links() const {
    std::vector<Link> out;
    out.reserve(intervals_.size());
    for (const auto& s : slots_) {
      for (const auto& i : intervals(s)) out.push_back({i, s.pair.u, s.pair.v});
    }
    return out;
  }

 private:
  NodeTable nodes_;
  Interval horizon_;
  std::vector<PairSlot> slots_;
  std::vector<Interval> intervals_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::vector<NodeId>> neighbors_;
  std::size_t active_nodes_ = 0;
};

inline LinkStream LinkStream::from_pairs(
    NodeTable nodes, Interval horizon,
    std::vector<std::pair<NodePair, std::vector<Interval>>> pairs) {
  if (horizon.begin > horizon.end) throw Error("horizon begin > end");
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  LinkStream s;
  s.horizon_ = horizon;
  s.neighbors_.resize(nodes.size());
  std::vector<bool> active(nodes.size(), false);
  for (auto& [pair, list] : pairs) {
    if (list.empty()) continue;
    if (pair.u >= pair.v || pair.v >= nodes.size()) throw Error("invalid node pair");
    if (!s.slots_.empty() && s.slots_.back().pair == pair) throw Error("duplicate node pair");
    if (!is_disjoint_sorted(list)) throw Error("pair intervals not sorted and disjoint");
    for (const auto& i : list) {
      if (i.begin > i.end) throw Error("link with begin > end");
      if (!horizon.contains(i)) throw Error("link outside horizon");
    }
    const auto index = static_cast<std::uint32_t>(s.slots_.size());
    s.slots_.push_back({pair, static_cast<std::uint32_t>(s.intervals_.size()),
                        static_cast<std::uint32_t>(list.size())});
    s.intervals_.insert(s.intervals_.end(), list.begin(), list.end());
    s.lookup_.emplace(pair.key(), index);
    s.neighbors_[pair.u].push_back(pair.v);
    s.neighbors_[pair.v].push_back(pair.u);
    active[pair.u] = active[pair.v] = true;
  }
  for (auto& nb : s.neighbors_) std::sort(nb.begin(), nb.end());
  s.active_nodes_ = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
  s.nodes_ = std::move(nodes);
  return s;
}

/// Builds a simple stream from raw links. Intersecting intervals of the same
/// pair (touching included) are replaced by their union. Without an explicit
/// horizon, it is [min begin, max end], or [0,0] for no links.
/// `extra_labels` declares nodes that may have no links.
inline LinkStream build_stream(std::span<const RawLink> raw,
                               std::optional<Interval> horizon = std::nullopt,
                               std::span<const std::string> extra_labels = {}) {
  std::vector<std::string_view> labels;
  labels.reserve(raw.size() * 2 + extra_labels.size());
  for (const auto& r : raw) {
    if (r.begin > r.end) {
      throw Error("link (" + std::to_string(r.begin) + "," + std::to_string(r.end) + "," + r.u +
                  "," + r.v + ") has begin > end");
    }
    if (r.u == r.v) throw Error("self-loop link on node '" + r.u + "'");
    labels.push_back(r.u);
    labels.push_back(r.v);
  }
  for (const auto& l : extra_labels) labels.push_back(l);

  Interval h{0, 0};
  if (horizon) {
    h = Interval::make(horizon->begin, horizon->end);
  } else if (!raw.empty()) {
    h = {raw.front().begin, raw.front().end};
    for (const auto& r : raw) {
      h.begin = std::min(h.begin, r.begin);
      h.end = std::max(h.end, r.end);
    }
  }

  NodeTable nodes = NodeTable::from_labels(labels);
  std::unordered_map<std::uint64_t, std::size_t> where;
  std::vector<std::pair<NodePair, std::vector<Interval>>> pairs;
  for (const auto& r : raw) {
    const Interval i{r.begin, r.end};
    if (!h.contains(i)) {
      throw Error("link (" + std::to_string(r.begin) + "," + std::to_string(r.end) + "," + r.u +
                  "," + r.v + ") outside horizon [" + std::to_string(h.begin) + "," +
                  std::to_string(h.end) + "]");
    }
    const auto p = NodePair::make(nodes.at(r.u), nodes.at(r.v));
    auto [it, fresh] = where.try_emplace(p.key(), pairs.size());
    if (fresh) pairs.emplace_back(p, std::vector<Interval>{});
    pairs[it->second].second.push_back(i);
  }
  for (auto& [p, list] : pairs) merge_intervals(list);
  return LinkStream::from_pairs(std::move(nodes), h, std::move(pairs));
}

inline LinkStream build_stream(const std::vector<RawLink>& raw,
                               std::optional<Interval> horizon = std::nullopt,
                               std::span<const std::string> extra_labels = {}) {
  return build_stream(std::span<const RawLink>(raw), horizon, extra_labels);
}

/// Raw links of a built stream, labels restored.
inline std::vector<RawLink> raw_links(const LinkStream& s) {
  std::vector<RawLink> out;
  out.reserve(s.link_count());
  for (const auto& l : s.links()) {
    out.push_back({l.interval.begin, l.interval.end, s.nodes().label(l.u), s.nodes().label(l.v)});
  }
  return out;
}

/// The unique indexed interval of pair {u,v} containing q, if any.
inline std::optional<Interval> covering_interval(const LinkStream& s, NodeId u, NodeId v,
                                                 const Interval& q) {
  const auto list = s.intervals(u, v);
  // Last interval with begin <= q.begin.
  auto it = std::upper_bound(list.begin(), list.end(), q.begin,
                             [](TimePoint t, const Interval& i) { return t < i.begin; });
  if (it == list.begin()) return std::nullopt;
  --it;
  if (it->contains(q)) return *it;
  return std::nullopt;
}

/// True iff every pair of `nodes` is linked continuously over q.
inline bool is_clique(const LinkStream& s, std::span<const NodeId> nodes, const Interval& q) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!covering_interval(s, nodes[i], nodes[j], q)) return false;
    }
  }
  return true;
}

inline StreamStats stream_stats(const LinkStream& s) {
  StreamStats st;
  st.n = s.node_count();
  st.m = s.link_count();
  st.horizon = s.horizon();
  st.pair_count = s.pairs().size();
  for (const auto& p : s.pairs()) {
    for (const auto& i : s.intervals(p)) st.total_link_duration += i.length();
  }
  st.isolated = s.node_table_size() - s.node_count();
  return st;
}

}  // namespace linkstream
