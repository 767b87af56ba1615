/*
 * Copyright 2026 The Rendezvous Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rendezvous/engine.hpp"
#include "rendezvous/special.hpp"

namespace rendezvous {
namespace {

Graph
cycle(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 0; v < n; v++) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

TEST(Solve, TrivialTerminals)
{
    Graph g = cycle(5);
    for (unsigned k = 1; k <= 4; k++) {
        SolveReport adj = solve(make_instance(g, 0, 1, k));
        EXPECT_EQ(adj.winner(), Side::Facilitator);
        EXPECT_EQ(adj.min_rounds(), std::optional<unsigned>(1));
        SolveReport same = solve(make_instance(g, 2, 2, k));
        EXPECT_EQ(same.winner(), Side::Facilitator);
        EXPECT_EQ(same.min_rounds(), std::optional<unsigned>(0));
    }
}

TEST(Solve, FourCycle)
{
    SolveReport one = solve(make_instance(cycle(4), 0, 2, 1));
    EXPECT_EQ(one.winner(), Side::Facilitator);
    EXPECT_EQ(one.min_rounds(), std::optional<unsigned>(1));
    SolveReport two = solve(make_instance(cycle(4), 0, 2, 2));
    EXPECT_EQ(two.winner(), Side::Divider);
    EXPECT_FALSE(two.min_rounds().has_value());
    EXPECT_EQ(two.divider_placement().agents, (std::vector<Vertex>{1, 3}));
}

TEST(Solve, ThreeByThreeGrid)
{
    Graph g = make_grid(3, 3);
    EXPECT_EQ(solve(make_instance(g, 0, 8, 1)).winner(), Side::Facilitator);
    EXPECT_EQ(solve(make_instance(g, 0, 8, 2)).winner(), Side::Divider);
}

TEST(Solve, RejectsDisconnectedAndOversized)
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    EXPECT_THROW(solve(make_instance(g, 0, 2, 1)), DisconnectedGraph);
    EXPECT_THROW(solve(make_instance(make_grid(3, 3), 0, 8, 3), SolveOptions{1000}), CapacityExceeded);
}

TEST(Solve, AgreesWithNaiveValueIteration)
{
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 80; trial++) {
        Graph g = testing::random_connected(4 + trial % 4, 0.3, rng);
        auto pair = testing::random_far_pair(g, rng);
        if (!pair) continue;
        Instance inst = make_instance(g, pair->first, pair->second, 1 + trial % 2);
        SolveReport fast = solve(inst);
        testing::NaiveSolution slow = testing::naive_solve(inst);
        EXPECT_EQ(fast.winner(), slow.winner);
        EXPECT_EQ(fast.min_rounds(), slow.min_rounds);
        EXPECT_EQ(fast.stats().pairs, slow.pairs);
        checked++;
    }
    EXPECT_GT(checked, 50);
}

TEST(Solve, LevelsAreConsistentWithSuccessors)
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; trial++) {
        Graph g = testing::random_connected(5 + trial % 3, 0.35, rng);
        auto pair = testing::random_far_pair(g, rng);
        if (!pair) continue;
        SolveReport r = solve(make_instance(g, pair->first, pair->second, 1 + trial % 2));
        const PositionIndex& idx = r.index();
        for (std::uint64_t p = 0; p < idx.pairs(); p++) {
            for (Side side : {Side::Facilitator, Side::Divider}) {
                Position pos = idx.position(p, side);
                if (pos.f.met()) continue;
                std::optional<unsigned> lv = r.level(pos);
                std::vector<std::optional<unsigned>> next;
                for (const Position& q : successors(pos, g)) next.push_back(r.level(q));
                if (side == Side::Facilitator) {
                    // best successor is exactly one Facilitator move closer
                    std::optional<unsigned> best;
                    for (auto l : next) {
                        if (l && (!best || *l < *best)) best = l;
                    }
                    if (lv) {
                        ASSERT_TRUE(best.has_value());
                        ASSERT_EQ(*best + 1, *lv);
                    } else {
                        ASSERT_FALSE(best.has_value());
                    }
                } else {
                    bool escapes = std::any_of(next.begin(), next.end(), [](auto l) { return !l.has_value(); });
                    ASSERT_EQ(escapes, !lv.has_value());
                    if (lv) {
                        unsigned worst = 0;
                        for (auto l : next) worst = std::max(worst, *l);
                        ASSERT_EQ(worst, *lv);
                    }
                }
            }
        }
    }
}

TEST(SolveInTime, AdjacentAndCycle)
{
    TimedResult adj = solve_in_time(make_instance(cycle(6), 0, 1, 3), 1);
    EXPECT_TRUE(adj.facilitator_wins);
    EXPECT_EQ(adj.min_rounds, std::optional<unsigned>(1));
    TimedResult c4 = solve_in_time(make_instance(cycle(4), 0, 2, 1), 1);
    EXPECT_TRUE(c4.facilitator_wins);
    EXPECT_EQ(c4.min_rounds, std::optional<unsigned>(1));
    EXPECT_THROW(solve_in_time(make_instance(cycle(4), 0, 2, 1), 0), std::invalid_argument);
}

TEST(SolveInTime, AgreesWithDepthLimitedSearch)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; trial++) {
        Graph g = testing::random_connected(4 + trial % 3, 0.3, rng);
        auto pair = testing::random_far_pair(g, rng);
        if (!pair) continue;
        Instance inst = make_instance(g, pair->first, pair->second, 1 + trial % 2);
        SolveReport r = solve(inst);
        for (unsigned tau = 1; tau <= 4; tau++) {
            EXPECT_EQ(solve_in_time(r, tau).facilitator_wins, testing::naive_wins_within(inst, tau))
                << "tau=" << tau;
        }
    }
}

TEST(DynamicSeparation, TreesCyclesAndCompleteGraphs)
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; trial++) {
        Graph tree = testing::random_connected(5 + trial, 0.0, rng);
        auto pair = testing::random_far_pair(tree, rng);
        if (!pair) continue;
        EXPECT_EQ(dynamic_separation(tree, pair->first, pair->second), ExtendedCount(1));
    }
    EXPECT_EQ(dynamic_separation(cycle(6), 0, 3), ExtendedCount(2));
    EXPECT_TRUE(dynamic_separation(cycle(6), 0, 1).is_infinite());
    Graph g = make_grid(3, 4);
    SeparationStats stats;
    EXPECT_EQ(dynamic_separation(g, 0, 11, SeparationOptions{kDefaultBudget, true}, &stats), ExtendedCount(2));
    EXPECT_EQ(stats.lambda, ExtendedCount(2));
    EXPECT_EQ(stats.solves, 2u);
}

TEST(DynamicSeparation, CommonNeighboursRaiseTheStart)
{
    // s and t share three neighbours: fewer agents cannot block them all
    Graph g(5);
    for (Vertex m = 1; m <= 3; m++) {
        g.add_edge(0, m);
        g.add_edge(m, 4);
    }
    SeparationStats stats;
    EXPECT_EQ(dynamic_separation(g, 0, 4, SeparationOptions{kDefaultBudget, true}, &stats), ExtendedCount(3));
    EXPECT_EQ(stats.solves, 1u);
}

TEST(Strategies, ExtractedMovesAreLegalAndKeepRegions)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; trial++) {
        Graph g = testing::random_connected(5 + trial % 3, 0.3, rng);
        auto pair = testing::random_far_pair(g, rng);
        if (!pair) continue;
        SolveReport r = solve(make_instance(g, pair->first, pair->second, 1 + trial % 2));
        const PositionIndex& idx = r.index();
        for (std::uint64_t p = 0; p < idx.pairs(); p++) {
            Position fp = idx.position(p, Side::Facilitator);
            if (fp.f.met()) continue;
            Position after{r.facilitator_move(fp), fp.d, Side::Divider};
            ASSERT_TRUE(legal_move(fp, after, g));
            if (auto l = r.level(fp)) ASSERT_EQ(r.level(after), std::optional<unsigned>(*l - 1));
            Position dp = idx.position(p, Side::Divider);
            Position reply{dp.f, r.divider_move(dp), Side::Facilitator};
            ASSERT_TRUE(legal_move(dp, reply, g));
            if (!r.level(dp)) ASSERT_FALSE(r.level(reply).has_value());
        }
    }
}

} // namespace
} // namespace rendezvous
