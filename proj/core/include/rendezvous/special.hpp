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

#include <optional>
#include <stdexcept>
#include <vector>

#include "rendezvous/graph.hpp"
#include "rendezvous/separation.hpp"
#include "rendezvous/simulate.hpp"

namespace rendezvous {

/** One elimination: drop a vertex of degree <= 1, or of degree 2 joining its two neighbours. */
struct Tw2Step {
    Vertex vertex = 0;
    // degree-2 step: the joined neighbours, and whether the edge was new
    std::optional<std::pair<Vertex, Vertex>> joined;
    bool fill = false;
};

struct Tw2Witness {
    std::vector<Tw2Step> elimination;
};

/** Degree-<=2 elimination, lowest index first; empty when treewidth exceeds 2. */
std::optional<Tw2Witness> recognize_tw2(const Graph& g);

bool is_tree(const Graph& g);

/** Rows and columns of a full rectangle described by the coordinate sidecar. */
struct GridMeta {
    int row0 = 1;
    int col0 = 1;
    int rows = 0;
    int cols = 0;
    // coordinate -> vertex, row-major
    std::vector<Vertex> cells;

    Vertex vertex(int row, int col) const { return cells[(row - row0) * cols + (col - col0)]; }
    bool inside(int row, int col) const
    {
        return row >= row0 && row < row0 + rows && col >= col0 && col < col0 + cols;
    }
};

/** Meta when every vertex has a distinct coordinate, they fill a rectangle and edges are unit steps. */
std::optional<GridMeta> grid_meta(const Graph& g);

/** rows x cols grid, vertex (i,j) at index (i-1)*cols + (j-1), labelled "(i,j)". */
Graph make_grid(int rows, int cols);

enum class FastPath { Trivial, Tree, Tw2, Grid };

const char* fast_path_name(FastPath path);

struct SpecialResult {
    Side winner = Side::Facilitator;
    ExtendedCount d;
    ExtendedCount lambda;
    FastPath path = FastPath::Trivial;
};

/** Closed-form answer on adjacent terminals, trees, treewidth <= 2 and grids; empty otherwise. */
std::optional<SpecialResult> solve_special(const Instance& inst);

class AdjacentTerminals : public std::invalid_argument {
public:
    AdjacentTerminals() : std::invalid_argument("AdjacentTerminals: the mimic needs distinct non-adjacent terminals") {}
};

/** A reply the mimic table does not cover: the mimic square is held by Facilitator. */
class MimicGap : public std::logic_error {
public:
    explicit MimicGap(const std::string& what) : std::logic_error("MimicGap: " + what) {}
};

enum class Axis { Row, Col };

struct MimicState {
    // d1 sits one step past Romeo toward Juliet on the axis, d2 one step before Juliet
    Vertex romeo = 0;
    Vertex juliet = 0;
    Vertex d1 = 0;
    Vertex d2 = 0;
    Axis axis = Axis::Row;
    // +1 when Juliet lies at the larger axis coordinate
    int toward = 1;
    // Romeo and Juliet diagonal: d1 and d2 hold their two common neighbours
    bool diagonal = false;
};

/**
 * Two-agent Divider on a grid: D1 mirrors Romeo one square toward Juliet,
 * D2 mirrors Juliet one square toward Romeo. The axis is the one with a gap
 * of at least 2 (rows first). From a diagonal start both common neighbours are
 * held until either agent moves, which opens a gap of 2 on some axis.
 */
class GridDivider : public DividerPolicy {
public:
    GridDivider(const Graph& g, Vertex s, Vertex t);
    DPlacement place(const Instance& inst) override;
    DPlacement move(const Position& p, unsigned round) override;
    const MimicState& state() const { return st; }

    // signed gap along the axis from Romeo to Juliet
    int gap() const;

private:
    Coord at(Vertex v) const;
    Vertex shift(Vertex v, int delta) const;
    Vertex shift(Vertex v, Axis axis, int delta) const;
    void aim(Vertex r, Vertex j, MimicState& out) const;
    bool leave_diagonal(Vertex r, Vertex j, const FPlacement& f, MimicState& out) const;
    bool reply(Vertex r, Vertex j, const FPlacement& f, MimicState& out) const;

    const Graph& graph;
    GridMeta meta;
    MimicState st;
};

} // namespace rendezvous
