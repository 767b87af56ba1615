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

#include "rendezvous/engine.hpp"
#include "rendezvous/gadget_check.hpp"
#include "rendezvous/policies.hpp"
#include "rendezvous/scripted.hpp"

namespace rendezvous {
namespace {

NAELiteral
lit(unsigned var, unsigned bound)
{
    return NAELiteral{var, bound};
}

TEST(ScriptedDivider3DM, PlacementFollowsTheMatching)
{
    ThreeDMInstance src{2, {{1, 1, 1}, {1, 2, 2}, {2, 2, 2}}};
    Reduction red = reduce_3dm(src);
    auto div = scripted_divider_3dm(src, {1, 3}, red.index);
    DPlacement d = div->place(red.instance);
    const GadgetIndex& gi = red.index;
    std::vector<Vertex> expected{gi.path("row[1]").vertices[0], gi.path("row[2]").vertices[2], gi.at("g1"),
                                 gi.at("g2")};
    EXPECT_EQ(d, DPlacement(expected));
    EXPECT_TRUE(legal_placement(red.instance, d));
    EXPECT_TRUE(div->active_spoke().empty());
}

TEST(ScriptedDivider3DM, SurvivesGreedyAndRandomFacilitators)
{
    ThreeDMInstance src{1, {{1, 1, 1}}};
    Reduction red = reduce_3dm(src);
    const Graph& g = red.instance.graph;
    const unsigned rounds = 10 * 2 * 2;
    {
        GreedyRushFacilitator fac(g);
        auto div = scripted_divider_3dm(src, {1}, red.index);
        Trace tr = simulate(red.instance, fac, *div, rounds);
        EXPECT_FALSE(tr.met);
        EXPECT_FALSE(div->active_spoke().empty());
    }
    for (std::uint64_t seed = 1; seed <= 10; seed++) {
        RandomFacilitator fac(g, seed);
        auto div = scripted_divider_3dm(src, {1}, red.index);
        EXPECT_FALSE(simulate(red.instance, fac, *div, rounds).met) << seed;
    }
}

TEST(ScriptedDivider3DM, ExtraSetKeepsPlacementLegal)
{
    ThreeDMInstance src{1, {{1, 1, 1}}};
    ThreeDMInstance bigger = src;
    bigger.sets.push_back({1, 1, 1});
    Reduction red = reduce_3dm(bigger);
    auto div = scripted_divider_3dm(bigger, {1}, red.index);
    EXPECT_TRUE(legal_placement(red.instance, div->place(red.instance)));
    RandomFacilitator fac(red.instance.graph, 5);
    EXPECT_FALSE(simulate(red.instance, fac, *div, 10 * 4 * 4).met);
}

TEST(ScriptedDividerNAE, SurvivesRandomAndGreedyPlay)
{
    std::vector<NAEInstance> yes{
        {1, 2, {{lit(1, 1), lit(1, 2), lit(1, 2)}}},
        {2, 2, {{lit(1, 1), lit(2, 1), lit(2, 2)}}},
        {2, 3, {{lit(1, 2), lit(2, 1), lit(1, 3)}, {lit(1, 1), lit(2, 2), lit(2, 2)}}},
    };
    for (const NAEInstance& src : yes) {
        auto values = assignment_nae(src);
        ASSERT_TRUE(values.has_value());
        Reduction red = reduce_nae(src);
        const Graph& g = red.instance.graph;
        const unsigned rounds = std::max(10 * src.dstar * src.dstar, 60u);
        GreedyRushFacilitator greedy(g);
        auto div = scripted_divider_nae(src, *values, red.index);
        EXPECT_FALSE(simulate(red.instance, greedy, *div, rounds).met);
        for (std::uint64_t seed = 1; seed <= 20; seed++) {
            RandomFacilitator fac(g, seed);
            auto d2 = scripted_divider_nae(src, *values, red.index);
            EXPECT_FALSE(simulate(red.instance, fac, *d2, rounds).met) << seed;
        }
    }
}

TEST(ScriptedDividerNAE, RejectsBadAssignments)
{
    NAEInstance src{1, 2, {{lit(1, 1), lit(1, 2), lit(1, 2)}}};
    Reduction red = reduce_nae(src);
    EXPECT_THROW(scripted_divider_nae(src, {3}, red.index), std::invalid_argument);
    EXPECT_THROW(scripted_divider_nae(src, {}, red.index), std::invalid_argument);
}

TEST(ScriptedFacilitatorNAE, RushesAnUnguardedGate)
{
    NAEInstance src{1, 1, {{lit(1, 1), lit(1, 1), lit(1, 1)}}};
    Reduction red = reduce_nae(src);
    const GadgetIndex& gi = red.index;
    HoldingDivider div(DPlacement({gi.path("row[1]").vertices[0], gi.at("g2"), gi.at("c[1].l")}));
    auto fac = scripted_facilitator_nae(src, gi, red.instance.graph);
    Trace tr = simulate(red.instance, *fac, div, 10);
    EXPECT_TRUE(tr.met);
    EXPECT_EQ(tr.rounds, 1u);
    EXPECT_EQ(fac->target(), std::optional<Vertex>(gi.at("g1")));
}

TEST(ScriptedFacilitatorNAE, BeatsHoldingPlacementsOnNoSources)
{
    std::vector<NAEInstance> no{
        {1, 1, {{lit(1, 1), lit(1, 1), lit(1, 1)}}},
        {1, 2, {{lit(1, 1), lit(1, 1), lit(1, 1)}}},
        {2, 2, {{lit(1, 2), lit(2, 2), lit(1, 2)}}},
    };
    for (const NAEInstance& src : no) {
        ASSERT_FALSE(oracle_nae(src));
        Reduction red = reduce_nae(src);
        const GadgetIndex& gi = red.index;
        std::vector<unsigned> values(src.n, 1);
        // every assignment placed on the rows, guards on both gates
        while (true) {
            std::vector<Vertex> agents{gi.at("g1"), gi.at("g2")};
            for (unsigned i = 1; i <= src.n; i++) {
                agents.push_back(gi.path("row[" + std::to_string(i) + "]").vertices[values[i - 1] - 1]);
            }
            HoldingDivider div{DPlacement(agents)};
            auto fac = scripted_facilitator_nae(src, gi, red.instance.graph);
            Trace tr = simulate(red.instance, *fac, div, 4 * src.dstar + 4);
            EXPECT_TRUE(tr.met);
            EXPECT_LE(tr.rounds, 2 * src.dstar + 2);
            unsigned i = 0;
            while (i < src.n && values[i] == src.dstar) values[i++] = 1;
            if (i == src.n) break;
            values[i]++;
        }
    }
}

TEST(ScriptedFacilitatorNAE, ReportsSatisfiedPlacements)
{
    NAEInstance src{1, 2, {{lit(1, 1), lit(1, 2), lit(1, 2)}}};
    Reduction red = reduce_nae(src);
    const GadgetIndex& gi = red.index;
    HoldingDivider div(DPlacement({gi.at("g1"), gi.at("g2"), gi.path("row[1]").vertices[1]}));
    auto fac = scripted_facilitator_nae(src, gi, red.instance.graph);
    EXPECT_THROW(simulate(red.instance, *fac, div, 10), NoViolatedClause);
}

TEST(ScriptedFacilitatorNAE, ExactSolveAgreesOnTheSmallestNoSource)
{
    NAEInstance src{1, 1, {{lit(1, 1), lit(1, 1), lit(1, 1)}}};
    Reduction red = reduce_nae(src);
    SolveReport r = solve(red.instance);
    EXPECT_EQ(r.winner(), Side::Facilitator);
    ASSERT_TRUE(r.min_rounds().has_value());
    EXPECT_LE(*r.min_rounds(), 2 * src.dstar + 2);
    ExactDivider div(r);
    auto fac = scripted_facilitator_nae(src, red.index, red.instance.graph);
    Trace tr = simulate(red.instance, *fac, div, 4 * src.dstar + 4);
    EXPECT_TRUE(tr.met);
}

} // namespace
} // namespace rendezvous
