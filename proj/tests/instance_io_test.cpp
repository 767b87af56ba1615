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

#include <algorithm>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "rendezvous/instance_io.hpp"
#include "rendezvous/special.hpp"

namespace rendezvous {
namespace {

const char* kCycleText = "rv 1\n4 4\n0 1\n0 3\n1 2\n2 3\ns 0 t 2 k 1\n";

Graph
cycle4()
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
}

ParseErrorKind
kind_of(const std::string& text)
{
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for: " << text;
    return ParseErrorKind::MalformedHeader;
}

TEST(InstanceText, ParsesCycle)
{
    Instance inst = parse_instance("# four-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\ns 0 t 2 k 1\n");
    EXPECT_EQ(inst.graph, cycle4());
    EXPECT_EQ(inst.s, 0u);
    EXPECT_EQ(inst.t, 2u);
    EXPECT_EQ(inst.k, 1u);
    EXPECT_TRUE(inst.connected);
}

TEST(InstanceText, SerializesCanonically)
{
    Instance a = make_instance(cycle4(), 0, 2, 1);
    Graph g(4);
    g.add_edge(3, 0);
    g.add_edge(2, 3);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    Instance b = make_instance(g, 0, 2, 1);
    EXPECT_EQ(serialize_instance(a), kCycleText);
    EXPECT_EQ(serialize_instance(a), serialize_instance(b));
}

TEST(InstanceText, GridCarriesCoordinates)
{
    Instance inst = make_instance(make_grid(2, 2), 0, 3, 2);
    std::string text = serialize_instance(inst);
    EXPECT_NE(text.find("coord 0 1 1"), std::string::npos);
    EXPECT_NE(text.find("coord 3 2 2"), std::string::npos);
    EXPECT_EQ(parse_instance(text), inst);
}

TEST(InstanceText, DistinctErrorKinds)
{
    EXPECT_EQ(kind_of("rv 2\n1 0\ns 0 t 0 k 1\n"), ParseErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of("four four\n"), ParseErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of("4 1\n5 9\ns 0 t 2 k 1\n"), ParseErrorKind::VertexOutOfRange);
    EXPECT_EQ(kind_of("4 2\n0 1\n1 0\ns 0 t 2 k 1\n"), ParseErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of("4 1\n1 1\ns 0 t 2 k 1\n"), ParseErrorKind::SelfLoop);
    EXPECT_EQ(kind_of("4 1\n0 1\ns 0 t 9 k 1\n"), ParseErrorKind::InvalidTerminal);
    EXPECT_EQ(kind_of("4 1\n0 1\ns 0 t 2 k 0\n"), ParseErrorKind::InvalidAgentCount);
    EXPECT_EQ(kind_of("4 1\n0 1\n"), ParseErrorKind::MissingTerminals);
    EXPECT_EQ(kind_of("4 2\n0 1\ns 0 t 2 k 1\n"), ParseErrorKind::EdgeCountMismatch);
    EXPECT_EQ(kind_of("4 1\n0 1 2\ns 0 t 2 k 1\n"), ParseErrorKind::MalformedLine);
}

TEST(InstanceText, ErrorCarriesLineNumber)
{
    try {
        parse_instance("4 1\n# comment\n5 9\ns 0 t 2 k 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(InstanceText, DisconnectedGraphIsFlagged)
{
    Instance inst = parse_instance("4 1\n0 1\ns 0 t 1 k 1\n");
    EXPECT_FALSE(inst.connected);
}

TEST(InstanceText, RoundTripRandom)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        Graph g = testing::random_connected(2 + trial % 9, 0.3, rng);
        if (trial % 3 == 0) g.set_label(0, "root vertex");
        Instance inst = make_instance(g, 0, static_cast<Vertex>(g.size() - 1), 1 + trial % 3);
        EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
        EXPECT_EQ(parse_instance_json(serialize_instance_json(inst)), inst);
    }
}

TEST(InstanceJson, ParsesMirror)
{
    Instance inst = parse_instance_json(R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]],"s":0,"t":2,"k":1})");
    EXPECT_EQ(inst, make_instance(cycle4(), 0, 2, 1));
    EXPECT_THROW(parse_instance_json(R"({"n":4,"edges":[[0,7]],"s":0,"t":2,"k":1})"), ParseError);
    EXPECT_THROW(parse_instance_json("not json"), ParseError);
}

TEST(InstanceFiles, ExtensionSelectsFormat)
{
    auto dir = std::filesystem::temp_directory_path();
    Instance inst = make_instance(make_grid(2, 3), 0, 5, 2);
    for (const char* name : {"rv_io_test.rv", "rv_io_test.json"}) {
        std::string path = (dir / name).string();
        save_instance(path, inst);
        EXPECT_EQ(load_instance(path), inst);
        std::filesystem::remove(path);
    }
}

// reference: try every bijection
bool
brute_adjacent(std::vector<Vertex> x, const std::vector<Vertex>& y, const Graph& g)
{
    std::sort(x.begin(), x.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; i++) ok = x[i] == y[i] || g.adjacent(x[i], y[i]);
        if (ok) return true;
    } while (std::next_permutation(x.begin(), x.end()));
    return false;
}

TEST(MultisetAdjacency, PaperExamples)
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    EXPECT_TRUE(multiset_adjacent(FPlacement(0, 0), FPlacement(0, 1), g));
    EXPECT_FALSE(multiset_adjacent(FPlacement(0, 1), FPlacement(2, 3), g));
    EXPECT_TRUE(multiset_adjacent(FPlacement(1, 3), FPlacement(1, 3), g));
}

TEST(MultisetAdjacency, AgreesWithBijectionSearch)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; trial++) {
        Graph g = testing::random_connected(3 + trial % 6, 0.35, rng);
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.size() - 1));
        for (int q = 0; q < 40; q++) {
            std::size_t k = 1 + q % 4;
            std::vector<Vertex> x(k), y(k);
            for (auto& v : x) v = pick(rng);
            for (auto& v : y) v = pick(rng);
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            bool fast = multiset_adjacent(std::span<const Vertex>(x), std::span<const Vertex>(y), g);
            EXPECT_EQ(fast, brute_adjacent(x, y, g));
            EXPECT_EQ(fast, multiset_adjacent(std::span<const Vertex>(y), std::span<const Vertex>(x), g));
            EXPECT_TRUE(multiset_adjacent(std::span<const Vertex>(x), std::span<const Vertex>(x), g));
        }
    }
}

} // namespace
} // namespace rendezvous
