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

#include <set>

#include "rendezvous/gadget_check.hpp"

namespace rendezvous {
namespace {

NAELiteral
lit(unsigned var, unsigned bound)
{
    return NAELiteral{var, bound};
}

void
expect_all_pass(const GadgetReport& rep)
{
    for (const GadgetCheck& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_TRUE(rep.ok());
}

TEST(ValidateGadgets, Fresh3DMOutputsPass)
{
    std::vector<ThreeDMInstance> sources{
        {1, {{1, 1, 1}}},
        {1, {{1, 1, 1}, {1, 1, 1}}},
        {2, {{1, 1, 1}, {2, 2, 2}}},
        {2, {{1, 2, 1}, {2, 1, 2}, {1, 1, 2}}},
    };
    for (const auto& src : sources) {
        Reduction red = reduce_3dm(src);
        GadgetReport rep = validate_gadgets(red.instance, red.index, ReductionKind::ThreeDM);
        expect_all_pass(rep);
        for (const char* name : {"registry", "coverage", "degrees", "connected", "forest"}) {
            EXPECT_NE(rep.find(name), nullptr) << name;
        }
        EXPECT_EQ(feedback_witness_3dm(red.index).size(), 14u);
    }
}

TEST(ValidateGadgets, FreshNAEOutputsPass)
{
    for (unsigned n = 1; n <= 3; n++) {
        for (unsigned ds = 1; ds <= 3; ds++) {
            NAEInstance src{n, ds, {{lit(1, 1), lit(n, ds), lit(1 + n / 2, 1)}, {lit(n, 1), lit(n, 1), lit(1, ds)}}};
            Reduction red = reduce_nae(src);
            GadgetReport rep = validate_gadgets(red.instance, red.index, ReductionKind::NAE);
            expect_all_pass(rep);
            ASSERT_NE(rep.find("stars"), nullptr);
            EXPECT_EQ(feedback_witness_nae(red.index).size(), 2u * n + 2u);
        }
    }
}

TEST(ValidateGadgets, FreshSetCoverOutputsPass)
{
    Reduction red = reduce_setcover(SetCoverInstance{3, {{1, 2}, {2, 3}, {}}, 2});
    GadgetReport rep = validate_gadgets(red.instance, red.index, ReductionKind::SetCover);
    expect_all_pass(rep);
    EXPECT_NE(rep.find("cover"), nullptr);
}

TEST(ValidateGadgets, KindMismatchFails)
{
    Reduction red = reduce_setcover(SetCoverInstance{1, {{1}}, 1});
    EXPECT_FALSE(validate_gadgets(red.instance, red.index, ReductionKind::NAE).ok());
}

TEST(ValidateGadgets, ShortenedPathsAreCaught)
{
    Reduction red = reduce_3dm(ThreeDMInstance{1, {{1, 1, 1}}});
    std::set<std::string> families;
    int mutated = 0;
    for (const RegisteredPath& p : red.index.paths) {
        // one representative per path family
        if (p.internal == 0) continue;
        if (!families.insert(p.id.substr(0, p.id.find_first_of(".[-"))).second) continue;
        Reduction bad = shorten_path(red, p.id);
        GadgetReport rep = validate_gadgets(bad.instance, bad.index, ReductionKind::ThreeDM);
        EXPECT_FALSE(rep.ok()) << p.id;
        const GadgetCheck* reg = rep.find("registry");
        ASSERT_NE(reg, nullptr);
        EXPECT_FALSE(reg->passed) << p.id;
        mutated++;
    }
    EXPECT_GT(mutated, 5);
}

TEST(ValidateGadgets, EveryNAEPathMutationIsCaught)
{
    Reduction red = reduce_nae(NAEInstance{2, 2, {{lit(1, 1), lit(2, 2), lit(2, 1)}}});
    for (const RegisteredPath& p : red.index.paths) {
        if (p.internal == 0) continue;
        Reduction bad = shorten_path(red, p.id);
        EXPECT_FALSE(validate_gadgets(bad.instance, bad.index, ReductionKind::NAE).ok()) << p.id;
    }
}

TEST(ValidateGadgets, ExtraEdgeIsCaught)
{
    Reduction red = reduce_nae(NAEInstance{1, 2, {{lit(1, 1), lit(1, 2), lit(1, 1)}}});
    Instance bad = red.instance;
    bad.graph.add_edge(red.index.at("g1"), red.index.at("c[1].l"));
    EXPECT_FALSE(validate_gadgets(bad, red.index, ReductionKind::NAE).ok());
}

TEST(ForestShape, ClassifiesTrees)
{
    Graph path(4);
    for (Vertex v = 0; v < 3; v++) path.add_edge(v, v + 1);
    EXPECT_EQ(classify_tree(path), TreeShape::Path);
    Graph spider(7);
    for (Vertex leg = 0; leg < 3; leg++) {
        spider.add_edge(0, 1 + 2 * leg);
        spider.add_edge(1 + 2 * leg, 2 + 2 * leg);
    }
    EXPECT_EQ(classify_tree(spider), TreeShape::SubdividedStar);
    // two branch vertices joined by a path
    Graph cat(8);
    cat.add_edge(0, 1);
    cat.add_edge(1, 2);
    cat.add_edge(2, 3);
    cat.add_edge(0, 4);
    cat.add_edge(0, 5);
    cat.add_edge(3, 6);
    cat.add_edge(3, 7);
    EXPECT_EQ(classify_tree(cat), TreeShape::SubdividedCaterpillar);
    // three branch vertices off a common centre, not on one path
    Graph other(13);
    for (Vertex arm = 0; arm < 3; arm++) {
        Vertex b = 1 + 4 * arm;
        other.add_edge(0, b);
        other.add_edge(b, b + 1);
        other.add_edge(b, b + 2);
        other.add_edge(b + 2, b + 3);
    }
    EXPECT_EQ(classify_tree(other), TreeShape::Other);
    EXPECT_STREQ(tree_shape_name(TreeShape::SubdividedStar), "subdivided star");
}

TEST(ForestShape, ElevenVertexSetLeavesCycles)
{
    // both right critical vertices fan out to every right end, so with two
    // elements they close a cycle unless one of them is removed
    Reduction red = reduce_3dm(ThreeDMInstance{2, {{1, 1, 1}, {2, 2, 2}}});
    const GadgetIndex& gi = red.index;
    std::vector<Vertex> eleven{gi.at("s"), gi.at("t")};
    for (const char* ty : {"alpha", "beta", "gamma"}) {
        eleven.push_back(gi.at(std::string("s.") + ty + ".l"));
        eleven.push_back(gi.at(std::string(ty) + ".l"));
        eleven.push_back(gi.at(std::string(ty) + ".r"));
    }
    EXPECT_FALSE(forest_shape(red.instance.graph, eleven).acyclic);
    ForestShape full = forest_shape(red.instance.graph, feedback_witness_3dm(gi));
    EXPECT_TRUE(full.acyclic);
}

} // namespace
} // namespace rendezvous
