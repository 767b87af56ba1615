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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rendezvous {

using Vertex = std::uint32_t;

struct Coord {
    int row = 0;
    int col = 0;
    bool operator==(const Coord&) const = default;
};

/**
 * Undirected simple graph on vertices 0..n-1 with sorted neighbor lists.
 * Labels and grid coordinates are optional sidecar data.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t size() const { return adj.size(); }
    std::size_t edge_count() const { return m; }

    Vertex add_vertex(std::string label = {});

    // throws std::invalid_argument on self-loops, duplicates and bad indices
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj[v]; }
    std::size_t degree(Vertex v) const { return adj[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;
    bool valid(Vertex v) const { return v < adj.size(); }

    // edges as (u, v) with u < v in lexicographic order
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool has_labels() const;
    const std::string& label(Vertex v) const;
    void set_label(Vertex v, std::string text);
    std::optional<Vertex> find_label(const std::string& text) const;

    bool has_any_coord() const;
    // true when every vertex carries a coordinate
    bool has_all_coords() const;
    std::optional<Coord> coord(Vertex v) const;
    void set_coord(Vertex v, Coord c);

    bool connected() const;
    // connectivity check that ignores vertices with blocked[v] set
    bool reaches(Vertex from, Vertex to, const std::vector<char>& blocked) const;
    std::vector<int> distances_from(Vertex from, const std::vector<char>* blocked = nullptr) const;

    // keeps vertices with keep[v] set, preserving relative order and sidecars;
    // old_index[new] = old
    Graph induced(const std::vector<char>& keep, std::vector<Vertex>* old_index = nullptr) const;

    bool operator==(const Graph& other) const;

private:
    std::vector<std::vector<Vertex>> adj;
    std::vector<std::string> labels;
    std::vector<std::optional<Coord>> coords;
    std::size_t m = 0;
};

enum class Side : std::uint8_t { Facilitator = 0, Divider = 1 };

const char* side_name(Side side);
Side other_side(Side side);

/**
 * One query: can Facilitator, starting from s and t, force a meeting
 * against k Divider agents.
 */
struct Instance {
    Graph graph;
    Vertex s = 0;
    Vertex t = 0;
    unsigned k = 1;
    bool connected = true;

    bool operator==(const Instance& other) const = default;
};

// validates terminals and k, records connectivity
Instance make_instance(Graph graph, Vertex s, Vertex t, unsigned k);

/** Romeo and Juliet as a sorted pair; a == b means they met. */
struct FPlacement {
    Vertex a = 0;
    Vertex b = 0;

    FPlacement() = default;
    FPlacement(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

    bool met() const { return a == b; }
    bool contains(Vertex v) const { return a == v || b == v; }
    bool operator==(const FPlacement&) const = default;
    auto operator<=>(const FPlacement&) const = default;
};

/** Divider agents as a sorted multiset of k vertices. */
struct DPlacement {
    std::vector<Vertex> agents;

    DPlacement() = default;
    explicit DPlacement(std::vector<Vertex> v);

    std::size_t size() const { return agents.size(); }
    bool contains(Vertex v) const;
    bool operator==(const DPlacement&) const = default;
    auto operator<=>(const DPlacement&) const = default;
};

struct Position {
    FPlacement f;
    DPlacement d;
    Side to_move = Side::Facilitator;

    bool operator==(const Position&) const = default;
};

bool compatible(const FPlacement& f, const DPlacement& d);

/**
 * True iff there is a bijection x -> y moving every element along at most
 * one edge. Sizes must match (std::invalid_argument otherwise).
 */
bool multiset_adjacent(std::span<const Vertex> x, std::span<const Vertex> y, const Graph& g);
bool multiset_adjacent(const FPlacement& x, const FPlacement& y, const Graph& g);
bool multiset_adjacent(const DPlacement& x, const DPlacement& y, const Graph& g);

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

} // namespace rendezvous
