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

#include <string>
#include <vector>

#include "rendezvous/reductions.hpp"

namespace rendezvous {

struct GadgetCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

/** Itemized result of validate_gadgets; every check is listed, pass or fail. */
struct GadgetReport {
    std::vector<GadgetCheck> checks;

    bool ok() const;
    // nullptr when no check of that name ran
    const GadgetCheck* find(const std::string& name) const;
};

/*
 * Structural checks on a generated instance, recounted from raw adjacency:
 *   registry      every registered path walks from..to over real edges with
 *                 the registered number of internal vertices
 *   coverage      every vertex is named or internal to exactly one path, and
 *                 every edge is a path edge or a direct named-named edge
 *   degrees       named vertices have the degree the construction implies
 *   connected     the graph is connected
 *   forest        (3DM) G minus the 14-vertex witness is a forest of paths and
 *                 subdivided caterpillars
 *   stars         (NAE) G minus {s, t, u_i^0, u_i^{dstar+1}} is a forest of
 *                 paths and subdivided stars
 *   cover         (set cover) U, s, t and the w_i form a vertex cover
 */
GadgetReport validate_gadgets(const Instance& inst, const GadgetIndex& gi, ReductionKind kind);

// 3DM: s, t, the six critical s vertices and the six type hubs
std::vector<Vertex> feedback_witness_3dm(const GadgetIndex& gi);
// NAE: s, t and both ends of every variable row
std::vector<Vertex> feedback_witness_nae(const GadgetIndex& gi);

enum class TreeShape { Path, SubdividedStar, SubdividedCaterpillar, Other };

const char* tree_shape_name(TreeShape shape);

// shape of one tree: branch vertices (degree >= 3) counted and tested for
// lying on a single path
TreeShape classify_tree(const Graph& tree);

struct ForestShape {
    bool acyclic = true;
    std::vector<TreeShape> components;
};

// G minus the removed set, component by component
ForestShape forest_shape(const Graph& g, const std::vector<Vertex>& removed);

/**
 * Planted fault for validator tests: deletes one internal vertex of the named
 * path and bridges its neighbours. The registry keeps the original internal
 * count, so the path is now one vertex short.
 */
Reduction shorten_path(const Reduction& red, const std::string& path_id);

} // namespace rendezvous
