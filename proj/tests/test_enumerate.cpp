#include <gtest/gtest.h>

#include <set>
#include <unordered_set>

#include "test_support.hpp"

namespace linkstream {
namespace {

using testing::clique;
using testing::fig1_stream;

std::vector<Clique> fig1_expected(const NodeTable& t) {
  return sorted({clique(t, {"a", "b", "c"}, 6, 10), clique(t, {"b", "c", "d"}, 13, 16),
                 clique(t, {"a", "b"}, 2, 10), clique(t, {"b", "c"}, 4, 16),
                 clique(t, {"a", "c"}, 6, 12), clique(t, {"c", "d"}, 8, 16),
                 clique(t, {"b", "d"}, 13, 17)});
}

TEST(InitCandidates, Fig1) {
  const auto s = fig1_stream();
  const auto& t = s.nodes();
  const auto st = init_candidates(s);
  std::vector<Clique> got(st.candidates.begin(), st.candidates.end());
  EXPECT_EQ(sorted(got), sorted({clique(t, {"a", "b"}, 2, 2), clique(t, {"b", "c"}, 4, 4),
                                 clique(t, {"a", "c"}, 6, 6), clique(t, {"c", "d"}, 8, 8),
                                 clique(t, {"b", "d"}, 13, 13)}));
  EXPECT_EQ(st.seen.size(), 5u);
  EXPECT_TRUE(st.result.empty());
}

TEST(InitCandidates, EmptyAndMerged) {
  const auto empty = init_candidates(build_stream(std::vector<RawLink>{}, Interval{0, 0}));
  EXPECT_TRUE(empty.candidates.empty());
  EXPECT_TRUE(empty.result.empty());

  const auto s = build_stream({{0, 4, "a", "b"}, {4, 9, "a", "b"}});
  const auto st = init_candidates(s);
  ASSERT_EQ(st.candidates.size(), 1u);
  EXPECT_EQ(st.candidates.front(), clique(s.nodes(), {"a", "b"}, 0, 0));
}

TEST(NodeExtensions, Examples) {
  const auto s = fig1_stream();
  const auto& t = s.nodes();
  EXPECT_EQ(node_extensions(s, clique(t, {"a", "b"}, 6, 10)),
            (std::vector<Clique>{clique(t, {"a", "b", "c"}, 6, 10)}));
  EXPECT_TRUE(node_extensions(s, clique(t, {"a", "b", "c"}, 6, 10)).empty());

  const auto single = build_stream({{0, 5, "a", "b"}});
  EXPECT_TRUE(node_extensions(single, clique(single.nodes(), {"a", "b"}, 0, 0)).empty());
}

TEST(NodeExtensions, CanonicalOrder) {
  // Hub pair (h,k) with three candidate third nodes, all linked over [0,9].
  std::vector<RawLink> raw{{0, 9, "h", "k"}};
  for (const char* v : {"z", "b", "m"}) {
    raw.push_back({0, 9, "h", v});
    raw.push_back({0, 9, "k", v});
  }
  const auto s = build_stream(raw);
  const auto ext = node_extensions(s, clique(s.nodes(), {"h", "k"}, 0, 0));
  ASSERT_EQ(ext.size(), 3u);
  EXPECT_LT(ext[0].nodes, ext[1].nodes);
  EXPECT_LT(ext[1].nodes, ext[2].nodes);
}

TEST(RightExtensionBound, Examples) {
  const auto s = fig1_stream();
  const auto& t = s.nodes();
  EXPECT_EQ(right_extension_bound(s, clique(t, {"a", "b", "c"}, 6, 6)), 10);
  EXPECT_EQ(right_extension_bound(s, clique(t, {"b", "c"}, 4, 4)), 16);
  const auto single = build_stream({{0, 5, "a", "b"}});
  EXPECT_EQ(right_extension_bound(single, clique(single.nodes(), {"a", "b"}, 0, 0)), 5);
}

TEST(RightExtensionBoundDeathTest, NotACliqueAborts) {
  const auto s = fig1_stream();
  EXPECT_DEATH(right_extension_bound(s, clique(s.nodes(), {"a", "d"}, 8, 8)), "contract violated");
}

TEST(Enumerate, Fig1) {
  const auto s = fig1_stream();
  EXPECT_EQ(sorted(enumerate_maximal_cliques(s)), fig1_expected(s.nodes()));
  EXPECT_EQ(oracle::oracle_maximal_cliques(s), fig1_expected(s.nodes()));
}

TEST(Enumerate, SmallStreams) {
  const auto single = build_stream({{0, 5, "a", "b"}});
  EXPECT_EQ(enumerate_maximal_cliques(single),
            (std::vector<Clique>{clique(single.nodes(), {"a", "b"}, 0, 5)}));

  const auto tri = build_stream({{0, 10, "a", "b"}, {0, 10, "b", "c"}, {0, 10, "a", "c"}});
  EXPECT_EQ(enumerate_maximal_cliques(tri),
            (std::vector<Clique>{clique(tri.nodes(), {"a", "b", "c"}, 0, 10)}));
  EXPECT_EQ(oracle::oracle_maximal_cliques(tri), enumerate_maximal_cliques(tri));

  EXPECT_TRUE(enumerate_maximal_cliques(build_stream(std::vector<RawLink>{})).empty());
}

TEST(Enumerate, ZeroLengthLinks) {
  const auto s = build_stream({{3, 3, "a", "b"}, {3, 3, "b", "c"}, {3, 3, "a", "c"}, {3, 7, "c", "d"}});
  const auto& t = s.nodes();
  EXPECT_EQ(sorted(enumerate_maximal_cliques(s)),
            sorted({clique(t, {"a", "b", "c"}, 3, 3), clique(t, {"c", "d"}, 3, 7)}));
  EXPECT_EQ(sorted(enumerate_maximal_cliques(s)), oracle::oracle_maximal_cliques(s));
}

TEST(Enumerate, StreamingCallbackMatchesResult) {
  const auto s = fig1_stream();
  std::vector<Clique> streamed;
  EnumOptions opt;
  opt.keep_results = false;
  opt.on_maximal = [&](const Clique& c) { streamed.push_back(c); };
  EnumStats stats;
  EXPECT_TRUE(enumerate_maximal_cliques(s, opt, &stats).empty());
  EXPECT_EQ(sorted(streamed), fig1_expected(s.nodes()));
  EXPECT_EQ(stats.maximal, 7u);
  EXPECT_EQ(stats.popped, stats.pushed);
}

// Checks the structural properties of a result set against the stream.
void expect_sound(const LinkStream& s, const std::vector<Clique>& result) {
  std::set<Clique> unique(result.begin(), result.end());
  ASSERT_EQ(unique.size(), result.size()) << "duplicate maximal clique";
  for (const auto& c : result) {
    ASSERT_GE(c.nodes.size(), 2u);
    ASSERT_TRUE(std::is_sorted(c.nodes.begin(), c.nodes.end()));
    ASSERT_TRUE(is_clique(s, c.nodes, c.interval)) << c;
    ASSERT_TRUE(node_extensions(s, c).empty()) << c;
    TimePoint max_begin = std::numeric_limits<TimePoint>::min();
    TimePoint min_end = std::numeric_limits<TimePoint>::max();
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < c.nodes.size(); ++j) {
        const auto cover = covering_interval(s, c.nodes[i], c.nodes[j], c.interval);
        max_begin = std::max(max_begin, cover->begin);
        min_end = std::min(min_end, cover->end);
      }
    }
    // x is some pair's link begin; y is the smallest covering end.
    ASSERT_EQ(c.interval.begin, max_begin) << c;
    ASSERT_EQ(c.interval.end, min_end) << c;
  }
}

TEST(EnumerateProperty, MatchesOracleAndInvariants) {
  std::size_t big = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    GeneratorSpec g{.n = 2 + seed % 5, .m = 1 + seed % 30, .horizon = {0, 20 + static_cast<TimePoint>(seed % 80)},
                    .seed = seed};
    const auto s = generate_duration_stream(g);

    std::set<TimePoint> link_begins;
    for (const auto& l : s.links()) link_begins.insert(l.interval.begin);

    std::unordered_set<Clique, CliqueHash> pushed;
    EnumOptions lifo;
    lifo.check_duplicates = true;
    lifo.on_candidate = [&](const Clique& c) {
      ASSERT_TRUE(pushed.insert(c).second) << "pushed twice: " << c;
      ASSERT_TRUE(link_begins.contains(c.interval.begin)) << c;
      ASSERT_TRUE(is_clique(s, c.nodes, c.interval)) << c;
    };
    const auto r = sorted(enumerate_maximal_cliques(s, lifo));
    expect_sound(s, r);

    EnumOptions fifo;
    fifo.order = WorkOrder::fifo;
    ASSERT_EQ(sorted(enumerate_maximal_cliques(s, fifo)), r) << "seed " << seed;
    ASSERT_EQ(oracle::oracle_maximal_cliques(s), r) << "seed " << seed;
    big += std::count_if(r.begin(), r.end(), [](const Clique& c) { return c.nodes.size() >= 3; });
  }
  // The generator must exercise node growth, not only pairs.
  EXPECT_GT(big, 50u);
}

}  // namespace
}  // namespace linkstream
