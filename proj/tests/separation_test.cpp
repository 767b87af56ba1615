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
#include "rendezvous/reductions.hpp"
#include "rendezvous/separation.hpp"
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

TEST(ExtendedCount, OrdersInfinityLast)
{
    ExtendedCount inf = ExtendedCount::infinite();
    EXPECT_LT(ExtendedCount(3), inf);
    EXPECT_LT(ExtendedCount(2), ExtendedCount(3));
    EXPECT_EQ(inf, ExtendedCount::infinite());
    EXPECT_THROW(inf.value(), std::logic_error);
    EXPECT_EQ(inf.to_string(), "inf");
    EXPECT_EQ(ExtendedCount(4).to_string(), "4");
}

TEST(StaticSeparation, SmallCases)
{
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    EXPECT_EQ(static_separation(path, 0, 2), ExtendedCount(1));
    EXPECT_EQ(min_vertex_cut(path, 0, 2), (std::vector<Vertex>{1}));
    EXPECT_TRUE(static_separation(path, 0, 1).is_infinite());
    EXPECT_TRUE(static_separation(path, 2, 2).is_infinite());
    EXPECT_THROW(min_vertex_cut(path, 0, 1), CutUndefined);

    Graph c4 = cycle(4);
    EXPECT_EQ(static_separation(c4, 0, 2), ExtendedCount(2));
    EXPECT_EQ(min_vertex_cut(c4, 0, 2), (std::vector<Vertex>{1, 3}));
}

TEST(StaticSeparation, TreesHaveLambdaOne)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; trial++) {
        Graph g = testing::random_connected(4 + trial % 8, 0.0, rng);
        ASSERT_TRUE(is_tree(g));
        auto pair = testing::random_far_pair(g, rng);
        if (!pair) continue;
        EXPECT_EQ(static_separation(g, pair->first, pair->second), ExtendedCount(1));
    }
}

TEST(StaticSeparation, AgreesWithSubsetEnumeration)
{
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 150; trial++) {
        Graph g = testing::random_connected(3 + trial % 8, 0.45, rng);
        auto pair = testing::random_far_pair(g, rng);
        if (!pair) continue;
        auto [s, t] = *pair;
        std::optional<unsigned> brute = testing::brute_lambda(g, s, t);
        ASSERT_TRUE(brute.has_value());
        EXPECT_EQ(static_separation(g, s, t), ExtendedCount(*brute));
        std::vector<Vertex> cut = min_vertex_cut(g, s, t);
        EXPECT_EQ(cut.size(), *brute);
        EXPECT_TRUE(separates(g, s, t, cut));
        EXPECT_TRUE(std::find(cut.begin(), cut.end(), s) == cut.end());
        EXPECT_TRUE(std::find(cut.begin(), cut.end(), t) == cut.end());
        checked++;
    }
    EXPECT_GT(checked, 100);
}

TEST(StaticSeparation, SetCoverHubIsInEveryCut)
{
    SetCoverInstance src{3, {{1, 2}, {3}, {2, 3}}, 2};
    Reduction red = reduce_setcover(src);
    const Instance& inst = red.instance;
    Vertex z = red.index.at("z");
    std::vector<Vertex> cut = min_vertex_cut(inst.graph, inst.s, inst.t);
    EXPECT_TRUE(std::binary_search(cut.begin(), cut.end(), z));
    // removing z costs one more separator vertex than any cut without it
    std::vector<Vertex> others;
    for (Vertex v : cut) {
        if (v != z) others.push_back(v);
    }
    EXPECT_FALSE(separates(inst.graph, inst.s, inst.t, others));
}

TEST(StaticSeparation, SeparatesDetectsLeaks)
{
    Graph c4 = cycle(4);
    EXPECT_TRUE(separates(c4, 0, 2, {1, 3}));
    EXPECT_FALSE(separates(c4, 0, 2, {1}));
}

} // namespace
} // namespace rendezvous
