#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "linkstream/clique.hpp"
#include "linkstream/delta.hpp"
#include "linkstream/error.hpp"
#include "linkstream/link_stream.hpp"

namespace linkstream::io {

using RawDurationRecord = RawLink;
using RawInstantRecord = RawEvent;

struct DurationInput {
  std::vector<RawDurationRecord> records;
  std::optional<Interval> horizon;
};

struct InstantInput {
  std::vector<RawInstantRecord> records;
  std::optional<Interval> horizon;
};

enum class StreamKind { duration, instant };
enum class CliqueFormat { plain, json_lines };

namespace detail {

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline TimePoint parse_time(std::string_view tok, std::size_t line) {
  TimePoint v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "timestamp out of range: '" + std::string(tok) + "'");
  }
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer time, got '" + std::string(tok) + "'");
  }
  return v;
}

// Calls fn(tokens, line_no) for each data line; handles blanks, comments and
// the `#horizon a b` header.
template <typename Fn>
std::optional<Interval> scan_lines(std::istream& in, Fn&& fn) {
  std::optional<Interval> horizon;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto toks = split(line);
    if (toks.empty()) continue;
    if (toks.front().starts_with('#')) {
      if (toks.front() == "#horizon") {
        if (toks.size() != 3) throw ParseError(no, "expected '#horizon <begin> <end>'");
        if (horizon) throw ParseError(no, "duplicate #horizon header");
        const TimePoint a = parse_time(toks[1], no), b = parse_time(toks[2], no);
        if (a > b) throw ParseError(no, "horizon begin > end");
        horizon = Interval{a, b};
      }
      continue;
    }
    fn(toks, no);
  }
  if (in.bad()) throw Error("read failure");
  return horizon;
}

}  // namespace detail

/// Lines `b e u v`; optional `#horizon α ω`; other `#` lines are comments.
inline DurationInput parse_duration_stream(std::istream& in) {
  DurationInput out;
  out.horizon = detail::scan_lines(in, [&](const auto& toks, std::size_t no) {
    if (toks.size() != 4) {
      throw ParseError(no, "expected 'begin end u v', got " + std::to_string(toks.size()) + " fields");
    }
    RawDurationRecord r{detail::parse_time(toks[0], no), detail::parse_time(toks[1], no),
                        std::string(toks[2]), std::string(toks[3])};
    if (r.begin > r.end) throw ParseError(no, "begin > end");
    if (r.u == r.v) throw ParseError(no, "self-loop on '" + r.u + "'");
    out.records.push_back(std::move(r));
  });
  return out;
}

inline DurationInput parse_duration_stream(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_duration_stream(in);
}

/// Lines `t u v`; duplicates are dropped when the stream is built.
inline InstantInput parse_instant_stream(std::istream& in) {
  InstantInput out;
  out.horizon = detail::scan_lines(in, [&](const auto& toks, std::size_t no) {
    if (toks.size() != 3) {
      throw ParseError(no, "expected 't u v', got " + std::to_string(toks.size()) + " fields");
    }
    RawInstantRecord r{detail::parse_time(toks[0], no), std::string(toks[1]), std::string(toks[2])};
    if (r.u == r.v) throw ParseError(no, "self-loop on '" + r.u + "'");
    out.records.push_back(std::move(r));
  });
  return out;
}

inline InstantInput parse_instant_stream(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instant_stream(in);
}

/// Guesses the file kind from the first data line: 3 fields is instant,
/// anything else is treated as duration. Empty input is duration.
inline StreamKind detect_kind(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto toks = detail::split(line);
    if (toks.empty() || toks.front().starts_with('#')) continue;
    return toks.size() == 3 ? StreamKind::instant : StreamKind::duration;
  }
  return StreamKind::duration;
}

namespace detail {

struct LabelledClique {
  TimePoint begin;
  TimePoint end;
  std::vector<std::string> nodes;
  auto operator<=>(const LabelledClique&) const = default;
};

inline std::vector<LabelledClique> labelled(const std::vector<Clique>& cliques, const NodeTable& t) {
  std::vector<LabelledClique> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) {
    LabelledClique l{c.interval.begin, c.interval.end, {}};
    for (NodeId id : c.nodes) l.nodes.push_back(t.label(id));
    std::sort(l.nodes.begin(), l.nodes.end());
    out.push_back(std::move(l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Writes cliques with original labels, sorted by (x, y, labels).
/// plain: `x y u1 ... uk`; json_lines: {"begin":x,"end":y,"nodes":[...]}.
inline void write_cliques(const std::vector<Clique>& cliques, const NodeTable& nodes,
                          CliqueFormat format, std::ostream& out) {
  for (const auto& c : detail::labelled(cliques, nodes)) {
    if (format == CliqueFormat::plain) {
      out << c.begin << ' ' << c.end;
      for (const auto& l : c.nodes) out << ' ' << l;
      out << '\n';
    } else {
      nlohmann::ordered_json j;
      j["begin"] = c.begin;
      j["end"] = c.end;
      j["nodes"] = c.nodes;
      out << j.dump() << '\n';
    }
  }
  if (!out) throw Error("write failure");
}

inline std::string format_cliques(const std::vector<Clique>& cliques, const NodeTable& nodes,
                                  CliqueFormat format = CliqueFormat::plain) {
  std::ostringstream os;
  write_cliques(cliques, nodes, format, os);
  return os.str();
}

/// Plain clique lines back into cliques over `nodes`.
inline std::vector<Clique> parse_cliques(std::string_view text, const NodeTable& nodes) {
  std::vector<Clique> out;
  std::istringstream in{std::string(text)};
  detail::scan_lines(in, [&](const auto& toks, std::size_t no) {
    if (toks.size() < 4) throw ParseError(no, "expected 'x y u1 u2 ...'");
    const Interval iv{detail::parse_time(toks[0], no), detail::parse_time(toks[1], no)};
    if (iv.begin > iv.end) throw ParseError(no, "begin > end");
    std::vector<NodeId> ids;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      auto id = nodes.find(toks[i]);
      if (!id) throw ParseError(no, "unknown node '" + std::string(toks[i]) + "'");
      ids.push_back(*id);
    }
    out.push_back(Clique::make(std::move(ids), iv));
  });
  return out;
}

/// Duration-stream file: `#horizon α ω` then `b e u v` lines sorted by
/// (b, e, u, v).
inline void write_stream(const LinkStream& s, std::ostream& out) {
  out << "#horizon " << s.horizon().begin << ' ' << s.horizon().end << '\n';
  auto links = s.links();
  std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
    return std::tie(a.interval, a.u, a.v) < std::tie(b.interval, b.u, b.v);
  });
  for (const auto& l : links) {
    out << l.interval.begin << ' ' << l.interval.end << ' ' << s.nodes().label(l.u) << ' '
        << s.nodes().label(l.v) << '\n';
  }
  if (!out) throw Error("write failure");
}

/// Instant-stream file: `#horizon α ω` then `t u v` lines sorted by time.
inline void write_instant_stream(const InstantStream& s, std::ostream& out) {
  struct Row {
    TimePoint t;
    NodePair p;
    auto operator<=>(const Row&) const = default;
  };
  std::vector<Row> rows;
  for (const auto& pe : s.pairs()) {
    for (TimePoint t : pe.times) rows.push_back({t, pe.pair});
  }
  std::sort(rows.begin(), rows.end());
  out << "#horizon " << s.horizon().begin << ' ' << s.horizon().end << '\n';
  for (const auto& r : rows) {
    out << r.t << ' ' << s.nodes().label(r.p.u) << ' ' << s.nodes().label(r.p.v) << '\n';
  }
  if (!out) throw Error("write failure");
}

}  // namespace linkstream::io
