#include <deque>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "ctraffic/closed_form.hpp"
#include "ctraffic/intersect.hpp"
#include "ctraffic/traffic.hpp"
#include "oracle/frozen_values.hpp"
#include "oracle/traffic_oracle.hpp"

namespace ctraffic {
namespace {

std::vector<Move> moves(std::initializer_list<Move> list) { return list; }

TEST(Classify, Examples) {
    EXPECT_EQ(classify({0, 0}), Zone::Gate);
    EXPECT_EQ(classify({0, 1}), Zone::RoadBlock);
    EXPECT_EQ(classify({2, 1}), Zone::BeachForbidden);
    EXPECT_EQ(classify({-1, 0}), Zone::BelowLine);
    EXPECT_EQ(classify({1, 1}), Zone::AboveLine);
}

TEST(Classify, BeachDominatesLines) {
    // 2m + n = 1 and m > n
    EXPECT_EQ(classify({1, -1}), Zone::BeachForbidden);
    // 2m + n = 0 and m > n
    EXPECT_EQ(classify({1, -2}), Zone::BeachForbidden);
}

TEST(AllowedMoves, Examples) {
    EXPECT_EQ(allowed_moves({-1, 0}), moves({Move::North, Move::West}));
    EXPECT_EQ(allowed_moves({0, 0}), moves({Move::West, Move::NorthEast}));
    EXPECT_EQ(allowed_moves({1, 2}), moves({Move::East, Move::NorthEast}));
}

TEST(AllowedMoves, NeverLandOnInaccessiblePoints) {
    for (int n = -5; n <= 12; ++n)
        for (int m = -15; m <= n; ++m)
            if (is_accessible({m, n})) {
                for (const auto move : allowed_moves({m, n})) {
                    EXPECT_TRUE(is_accessible(step({m, n}, move)));
                }
            }
}

TEST(AllowedMoves, RejectsInaccessiblePoints) {
    EXPECT_THROW(allowed_moves({0, 1}), DomainError);
    EXPECT_THROW(allowed_moves({3, 2}), DomainError);
}

TEST(CountPaths, SmallWindow) {
    const auto grid = count_paths({-6, 2, 0, 2});
    EXPECT_EQ(grid.count({0, 0}), 1);
    EXPECT_EQ(grid.count({2, 2}), 2);
    EXPECT_EQ(grid.count({0, 2}), 1);
    EXPECT_EQ(grid.count({1, 2}), 1);
}

TEST(CountPaths, RejectsWindowWithoutOrigin) {
    EXPECT_THROW(count_paths({1, 4, 0, 4}), DomainError);
    EXPECT_THROW(count_paths({-4, 4, 1, 4}), DomainError);
}

TEST(CountPaths, NoEntriesOnBlocksOrBeach) {
    const auto grid = count_paths(sufficient_bounds(8));
    EXPECT_FALSE(grid.counts().empty());
    for (const auto& [p, c] : grid.counts()) {
        EXPECT_NE(classify(p), Zone::RoadBlock);
        EXPECT_NE(classify(p), Zone::BeachForbidden);
    }
    for (int n = 1; n <= 8; n += 2) EXPECT_FALSE(grid.has({(1 - n) / 2, n}));
}

TEST(CountPaths, MatchesKahnToposort) {
    for (const Bounds b : {Bounds{-6, 2, 0, 2}, Bounds{-10, 5, 0, 6}, Bounds{-3, 1, -2, 5},
                           sufficient_bounds(8)}) {
        const auto grid = count_paths(b);
        const auto reference = oracle::kahn_counts({b.m_lo, b.m_hi, b.n_lo, b.n_hi});
        for (const auto& [p, c] : grid.counts()) {
            const auto it = reference.find({p.m, p.n});
            const std::int64_t expected = it == reference.end() ? 0 : it->second;
            EXPECT_EQ(c, expected) << p.m << "," << p.n;
        }
        for (const auto& [p, c] : reference) EXPECT_TRUE(grid.has({p.first, p.second}));
    }
}

TEST(CountPaths, MatchesBruteForceEnumeration) {
    const Bounds b = sufficient_bounds(5);
    const auto grid = count_paths(b);
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n; ++m)
            EXPECT_EQ(grid.count({m, n}),
                      oracle::enumerate_paths({m, n}, {b.m_lo, b.m_hi, b.n_lo, b.n_hi}));
}

// Exhaustive search for a cycle in the move graph restricted to a window.
TEST(CountPaths, MoveGraphIsAcyclic) {
    for (const Bounds b : {Bounds{-12, 6, -3, 6}, Bounds{-20, 10, 0, 10}}) {
        std::vector<CityPoint> nodes;
        for (int n = b.n_lo; n <= b.n_hi; ++n)
            for (int m = b.m_lo; m <= b.m_hi; ++m)
                if (is_accessible({m, n})) nodes.push_back({m, n});
        for (const auto start : nodes) {
            std::set<CityPoint> seen;
            std::deque<CityPoint> queue;
            for (const auto move : allowed_moves(start)) queue.push_back(step(start, move));
            while (!queue.empty()) {
                const auto p = queue.front();
                queue.pop_front();
                ASSERT_NE(p, start) << "cycle through " << start.m << "," << start.n;
                if (!b.contains(p) || !seen.insert(p).second) continue;
                for (const auto move : allowed_moves(p)) queue.push_back(step(p, move));
            }
        }
    }
}

TEST(CountPaths, NarrowWindowMarksLeakingCountsUnreliable) {
    // Every path to (0, 4) passes the gate (-2, 4), west of this window.
    const auto narrow = count_paths({-1, 4, 0, 4});
    EXPECT_FALSE(narrow.is_reliable({-1, 4}));
    EXPECT_FALSE(narrow.is_reliable({0, 4}));
    EXPECT_TRUE(narrow.is_reliable({0, 0}));
    EXPECT_TRUE(narrow.is_reliable({1, 1}));
    EXPECT_TRUE(narrow.is_reliable({-1, 0}));
    // A window cut on the right only loses points no path returns from.
    const auto wide = count_paths(sufficient_bounds(4));
    EXPECT_TRUE(wide.is_reliable({0, 4}));
    EXPECT_LT(narrow.count({0, 4}), wide.count({0, 4}));
}

TEST(CountPaths, EnlargingWindowKeepsReliableCounts) {
    const std::vector<Bounds> windows{{-1, 0, 0, 0}, {-3, 2, 0, 3}, {-2, 8, 0, 8},
                                      {-6, 4, 0, 6}, {-9, 8, -1, 8}, sufficient_bounds(8),
                                      {-30, 12, -2, 8}};
    std::vector<PathCountGrid> grids;
    for (const auto& b : windows) grids.push_back(count_paths(b));
    for (std::size_t small = 0; small < grids.size(); ++small) {
        for (std::size_t large = 0; large < grids.size(); ++large) {
            const Bounds& s = windows[small];
            const Bounds& l = windows[large];
            const bool contained = l.m_lo <= s.m_lo && l.m_hi >= s.m_hi && l.n_lo <= s.n_lo &&
                                   l.n_hi >= s.n_hi;
            if (!contained) continue;
            for (const auto& [p, c] : grids[small].counts()) {
                if (!grids[small].is_reliable(p)) continue;
                EXPECT_TRUE(grids[large].is_reliable(p));
                EXPECT_EQ(grids[large].count(p), c) << p.m << "," << p.n;
            }
        }
    }
}

TEST(Upsilon, Examples) {
    EXPECT_EQ(upsilon(0, 0), 1);
    EXPECT_EQ(upsilon(4, 4), 14);
    EXPECT_EQ(upsilon(1, 2), 1);
    EXPECT_THROW(upsilon(3, 2), DomainError);
    EXPECT_THROW(upsilon(-1, 2), DomainError);
}

TEST(Upsilon, DiagonalIsCatalan) {
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(upsilon(n, n), catalan(n));
}

TEST(Upsilon, EqualsIntersectionNumbers) {
    const auto operator_table = k_table_operator(10);
    const auto traffic_table = k_table_traffic(10);
    for (int n = 0; n <= 10; ++n) {
        for (int m = 0; m <= n; ++m) {
            EXPECT_EQ(traffic_table.at(m, n), operator_table.at(m, n));
            EXPECT_EQ(traffic_table.at(m, n), oracle::kFrozenK[n][m]);
        }
    }
    EXPECT_EQ(upsilon(3, 7), k_of(3, 7));
}

}  // namespace
}  // namespace ctraffic
