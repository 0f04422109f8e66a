#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <new>
#include <string>
#include <unordered_set>
#include <vector>

#include "linkstream/clique.hpp"
#include "linkstream/error.hpp"
#include "linkstream/link_stream.hpp"

namespace linkstream {

enum class WorkOrder { lifo, fifo };

struct EnumOptions {
  WorkOrder order = WorkOrder::lifo;
  // Called for each maximal clique as soon as it is found.
  std::function<void(const Clique&)> on_maximal;
  // Called for each clique entering the candidate set (tracing/tests).
  std::function<void(const Clique&)> on_candidate;
  // Keep results in the returned vector; turn off when streaming via on_maximal.
  bool keep_results = true;
  // Assert that no maximal clique is reported twice.
  bool check_duplicates = false;
};

struct EnumStats {
  std::size_t popped = 0;
  std::size_t pushed = 0;
  std::size_t maximal = 0;
};

/// Raised when enumeration runs out of memory; reports progress so far.
class EnumerationError : public Error {
 public:
  explicit EnumerationError(std::size_t emitted)
      : Error("out of memory after emitting " + std::to_string(emitted) + " maximal cliques"),
        emitted_(emitted) {}
  [[nodiscard]] std::size_t emitted() const noexcept { return emitted_; }

 private:
  std::size_t emitted_;
};

/// Candidate work list S, seen set M and result set R.
/// Every clique placed in S is also placed in M, and only if it was not in M.
struct EnumState {
  std::deque<Clique> candidates;
  std::unordered_set<Clique, CliqueHash> seen;
  std::vector<Clique> result;

  // Adds c to S and M unless already seen. Returns true if added.
  bool offer(Clique c) {
    auto [it, fresh] = seen.insert(std::move(c));
    if (!fresh) return false;
    candidates.push_back(*it);
    return true;
  }
};

/// S = M = { ({u,v},[b,b]) : (b,e,u,v) a link }, R empty.
inline EnumState init_candidates(const LinkStream& s) {
  EnumState st;
  st.seen.reserve(s.link_count() * 2);
  for (const auto& slot : s.pairs()) {
    for (const auto& i : s.intervals(slot)) {
      st.offer(Clique{{slot.pair.u, slot.pair.v}, Interval{i.begin, i.begin}});
    }
  }
  return st;
}

namespace detail {

inline bool links_to_all(const LinkStream& s, NodeId v, std::span<const NodeId> nodes,
                         const Interval& q) {
  for (NodeId u : nodes) {
    if (!covering_interval(s, u, v, q)) return false;
  }
  return true;
}

inline Clique with_node(const Clique& c, NodeId v) {
  Clique out{{}, c.interval};
  out.nodes.reserve(c.nodes.size() + 1);
  auto pos = std::lower_bound(c.nodes.begin(), c.nodes.end(), v);
  out.nodes.insert(out.nodes.end(), c.nodes.begin(), pos);
  out.nodes.push_back(v);
  out.nodes.insert(out.nodes.end(), pos, c.nodes.end());
  return out;
}

// Calls fn(v) for each v outside c.nodes such that (X+v, [x,y]) is a clique,
// in ascending node order. Only neighbours of the first node can qualify.
template <typename Fn>
void for_each_node_extension(const LinkStream& s, const Clique& c, Fn&& fn) {
  if (c.nodes.empty()) return;
  for (NodeId v : s.neighbors(c.nodes.front())) {
    if (std::binary_search(c.nodes.begin(), c.nodes.end(), v)) continue;
    if (links_to_all(s, v, c.nodes, c.interval)) fn(v);
  }
}

}  // namespace detail

/// Cliques (X+v, [x,y]) for every node v outside X that links to all of X
/// over [x,y], in canonical node order.
inline std::vector<Clique> node_extensions(const LinkStream& s, const Clique& c) {
  std::vector<Clique> out;
  detail::for_each_node_extension(s, c, [&](NodeId v) { out.push_back(detail::with_node(c, v)); });
  return out;
}

/// Smallest end among the intervals covering [x,y] for the pairs of X; (X,[x,l])
/// is a clique and l >= y. Aborts if c is not a clique.
inline TimePoint right_extension_bound(const LinkStream& s, const Clique& c) {
  LINKSTREAM_EXPECTS(c.nodes.size() >= 2);
  TimePoint bound = s.horizon().end;
  bool any = false;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < c.nodes.size(); ++j) {
      const auto cover = covering_interval(s, c.nodes[i], c.nodes[j], c.interval);
      LINKSTREAM_EXPECTS(cover.has_value());
      bound = any ? std::min(bound, cover->end) : cover->end;
      any = true;
    }
  }
  return bound;
}

/// All maximal cliques with at least two nodes.
///
/// Each candidate (X,[x,y]) popped from the work list is grown by one node
/// where possible and pushed to its right extension bound l; it is maximal
/// iff neither applies. Left extension never applies since every candidate's
/// x is the begin of one of its links.
inline std::vector<Clique> enumerate_maximal_cliques(const LinkStream& s,
                                                     const EnumOptions& opt = {},
                                                     EnumStats* stats = nullptr) {
  EnumStats local;
  EnumStats& st_out = stats ? *stats : local;
  st_out = {};
  std::unordered_set<Clique, CliqueHash> reported;

  try {
    EnumState st = init_candidates(s);
    st_out.pushed = st.candidates.size();
    if (opt.on_candidate) {
      for (const auto& c : st.candidates) opt.on_candidate(c);
    }
    auto offer = [&](Clique c) {
      if (opt.on_candidate && !st.seen.contains(c)) opt.on_candidate(c);
      if (st.offer(std::move(c))) ++st_out.pushed;
    };

    while (!st.candidates.empty()) {
      Clique c;
      if (opt.order == WorkOrder::lifo) {
        c = std::move(st.candidates.back());
        st.candidates.pop_back();
      } else {
        c = std::move(st.candidates.front());
        st.candidates.pop_front();
      }
      ++st_out.popped;

      bool is_max = true;
      detail::for_each_node_extension(s, c, [&](NodeId v) {
        is_max = false;
        offer(detail::with_node(c, v));
      });

      const TimePoint l = right_extension_bound(s, c);
      if (l != c.interval.end) {
        is_max = false;
        offer(Clique{c.nodes, Interval{c.interval.begin, l}});
      }

#ifdef LINKSTREAM_INJECT_FAULT
      is_max = true;
#endif
      if (is_max) {
        ++st_out.maximal;
        if (opt.check_duplicates) {
          LINKSTREAM_EXPECTS(reported.insert(c).second);
        }
        if (opt.on_maximal) opt.on_maximal(c);
        if (opt.keep_results) st.result.push_back(std::move(c));
      }
    }
    return std::move(st.result);
  } catch (const std::bad_alloc&) {
    throw EnumerationError(st_out.maximal);
  }
}

}  // namespace linkstream
