#include <gtest/gtest.h>

#include <chrono>

#include "test_support.hpp"

namespace linkstream {
namespace {

using testing::clique;
using testing::instant;

using Intervals = std::vector<Interval>;

Intervals pair_list(const LinkStream& s, const char* a, const char* b) {
  auto span = s.intervals(s.nodes().at(a), s.nodes().at(b));
  return {span.begin(), span.end()};
}

TEST(PairAvailability, Examples) {
  const std::vector<TimePoint> e1{1, 3, 8};
  EXPECT_EQ(pair_availability(e1, DeltaParam(2)), (Intervals{{1, 5}, {8, 10}}));
  const std::vector<TimePoint> e2{5};
  EXPECT_EQ(pair_availability(e2, DeltaParam(0)), (Intervals{{5, 5}}));
  const std::vector<TimePoint> e3{0, 10};
  EXPECT_EQ(pair_availability(e3, DeltaParam(3)), (Intervals{{0, 3}, {10, 13}}));
  // t_{i+1} = t_i + Δ shares an endpoint and merges; one more unit does not.
  const std::vector<TimePoint> e4{0, 3, 7};
  EXPECT_EQ(pair_availability(e4, DeltaParam(3)), (Intervals{{0, 6}, {7, 10}}));
}

TEST(PairAvailability, Overflow) {
  const std::vector<TimePoint> e{std::numeric_limits<TimePoint>::max() - 1};
  EXPECT_THROW(pair_availability(e, DeltaParam(5)), Error);
  EXPECT_THROW(DeltaParam(-1), Error);
}

TEST(Transform, Examples) {
  const auto in = instant({{1, "u", "v"}, {3, "u", "v"}, {8, "u", "v"}}, {0, 10});
  const auto l2 = transform(in, DeltaParam(2));
  EXPECT_EQ(l2.horizon(), (Interval{2, 10}));
  EXPECT_EQ(pair_list(l2, "u", "v"), (Intervals{{2, 5}, {8, 10}}));

  const auto l0 = transform(in, DeltaParam(0));
  EXPECT_EQ(l0.horizon(), (Interval{0, 10}));
  EXPECT_EQ(pair_list(l0, "u", "v"), (Intervals{{1, 1}, {3, 3}, {8, 8}}));

  const auto one = instant({{0, "u", "v"}}, {0, 5});
  const auto l5 = transform(one, DeltaParam(5));
  EXPECT_EQ(l5.horizon(), (Interval{5, 5}));
  EXPECT_EQ(pair_list(l5, "u", "v"), (Intervals{{5, 5}}));
}

TEST(Transform, ClippingKeepsZeroLengthBoundaryLink) {
  // [0,3] meets T_Δ = [3,10] only at 3.
  const auto in = instant({{0, "u", "v"}, {9, "v", "w"}}, {0, 10});
  const auto l = transform(in, DeltaParam(3));
  EXPECT_EQ(pair_list(l, "u", "v"), (Intervals{{3, 3}}));
  EXPECT_EQ(pair_list(l, "v", "w"), (Intervals{{9, 10}}));
  EXPECT_EQ(l.link_count(), 2u);
}

TEST(Transform, DeltaOutOfRange) {
  const auto in = instant({{1, "u", "v"}}, {0, 10});
  EXPECT_THROW(transform(in, DeltaParam(11)), Error);
  EXPECT_NO_THROW(transform(in, DeltaParam(10)));
}

TEST(ShiftClique, Examples) {
  const Clique c{{0, 1}, {0, 9}};
  EXPECT_EQ(shift_clique(c, DeltaParam(2), ShiftDirection::to_delta), (Clique{{0, 1}, {2, 9}}));
  EXPECT_EQ(shift_clique(Clique{{0, 1}, {2, 9}}, DeltaParam(2), ShiftDirection::to_stream), c);
  EXPECT_EQ(shift_clique(c, DeltaParam(0), ShiftDirection::to_delta), c);
  EXPECT_EQ(shift_clique(c, DeltaParam(0), ShiftDirection::to_stream), c);
  EXPECT_THROW(shift_clique(Clique{{0, 1}, {0, 1}}, DeltaParam(2), ShiftDirection::to_delta), Error);
}

TEST(DeltaCliques, Examples) {
  const auto in = instant({{1, "u", "v"}, {3, "u", "v"}, {8, "u", "v"}}, {0, 10});
  const auto& t = in.nodes();
  EXPECT_EQ(sorted(enumerate_maximal_delta_cliques(in, DeltaParam(2))),
            sorted({clique(t, {"u", "v"}, 0, 5), clique(t, {"u", "v"}, 6, 10)}));

  const auto one = instant({{5, "u", "v"}}, {0, 10});
  EXPECT_EQ(enumerate_maximal_delta_cliques(one, DeltaParam(3)),
            (std::vector<Clique>{clique(one.nodes(), {"u", "v"}, 2, 8)}));
  EXPECT_EQ(enumerate_maximal_delta_cliques(one, DeltaParam(0)),
            (std::vector<Clique>{clique(one.nodes(), {"u", "v"}, 5, 5)}));
}

TEST(DeltaCliques, CallbackSeesStreamFrame) {
  const auto in = instant({{1, "u", "v"}, {3, "u", "v"}, {8, "u", "v"}}, {0, 10});
  std::vector<Clique> seen;
  EnumOptions opt;
  opt.on_maximal = [&](const Clique& c) { seen.push_back(c); };
  const auto got = enumerate_maximal_delta_cliques(in, DeltaParam(2), opt);
  EXPECT_EQ(sorted(seen), sorted(got));
}

// Pointwise definition: linked at t in L_Δ iff an event lies in [t-Δ, t].
// Checked on integer and half-integer t, so spurious merges across a gap of
// exactly one unit are caught too.
TEST(TransformProperty, PointwiseLinkPresence) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorSpec g{.n = 2 + seed % 4, .m = 1 + seed % 25, .horizon = {0, 40}, .seed = seed};
    const auto in = generate_instant_stream(g);
    for (TimePoint d : {0, 1, 2, 3, 7, 40}) {
      const auto l = transform(in, DeltaParam(d));
      ASSERT_EQ(l.horizon(), (Interval{d, 40}));
      for (const auto& pe : in.pairs()) {
        const auto list = l.intervals(pe.pair.u, pe.pair.v);
        ASSERT_TRUE(is_disjoint_sorted(list));
        for (TimePoint t2 = 2 * d; t2 <= 80; ++t2) {
          const bool linked = std::any_of(list.begin(), list.end(), [&](const Interval& i) {
            return 2 * i.begin <= t2 && t2 <= 2 * i.end;
          });
          const bool event = std::any_of(pe.times.begin(), pe.times.end(), [&](TimePoint e) {
            return t2 - 2 * d <= 2 * e && 2 * e <= t2;
          });
          ASSERT_EQ(linked, event) << "seed " << seed << " delta " << d << " t " << t2 / 2.0;
        }
      }
    }
  }
}

TEST(TransformProperty, AvailabilityMonotoneInDelta) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorSpec g{.n = 3, .m = 15, .horizon = {0, 50}, .seed = seed};
    const auto in = generate_instant_stream(g);
    for (const auto& pe : in.pairs()) {
      for (TimePoint d = 0; d < 8; ++d) {
        const auto small = pair_availability(pe.times, DeltaParam(d));
        const auto large = pair_availability(pe.times, DeltaParam(d + 1));
        for (const auto& i : small) {
          ASSERT_TRUE(std::any_of(large.begin(), large.end(),
                                  [&](const Interval& j) { return j.contains(i); }));
        }
      }
    }
  }
}

TEST(TransformProperty, LargeStreamIsFast) {
  GeneratorSpec g{.n = 100, .m = 100000, .horizon = {0, 604800}, .seed = 1};
  const auto in = generate_instant_stream(g);
  const auto t0 = std::chrono::steady_clock::now();
  const auto l = transform(in, DeltaParam(60));
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  EXPECT_GT(l.link_count(), 0u);
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 5.0);
}

}  // namespace
}  // namespace linkstream
