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
#include <stdexcept>
#include <vector>

#include "rendezvous/graph.hpp"

namespace rendezvous {

constexpr unsigned kDefaultCoverBudget = 20;

/** A vertex cover that always contains s and t. */
struct VertexCoverWitness {
    std::vector<Vertex> vertices;  // sorted
    // minimum among covers containing s and t; false for the matching fallback
    bool exact = false;

    bool contains(Vertex v) const;
    std::size_t size() const { return vertices.size(); }
};

class CoverInvalid : public std::runtime_error {
public:
    CoverInvalid(Vertex u, Vertex v);
};

/**
 * Minimum cover containing s and t by bounded search-tree branching; when
 * no such cover of size <= budget exists, endpoints of a maximal matching.
 */
VertexCoverWitness vertex_cover(const Graph& g, Vertex s, Vertex t, unsigned budget = kDefaultCoverBudget);

/** Vertices outside the cover sharing one exact neighbourhood. */
struct TwinClass {
    std::vector<Vertex> neighborhood;
    std::vector<Vertex> members;
};

/** Partition of V minus the cover by neighbourhood, ordered by neighbourhood. */
std::vector<TwinClass> twin_classes(const Graph& g, const VertexCoverWitness& x);

/** True when s = t, st is an edge, or s and t share more than k neighbours. */
bool apply_rule1(const Instance& inst);

struct RuleTwoResult {
    Instance reduced;
    VertexCoverWitness cover;  // in reduced indices
    std::vector<Vertex> deleted;  // input indices
    std::vector<Vertex> old_index;  // reduced vertex -> input vertex
    unsigned classes_touched = 0;
};

/** Curtails every twin class to its k+1 lowest-index members. */
RuleTwoResult apply_rule2(const Instance& inst, const VertexCoverWitness& x);

struct KernelReport {
    bool trivial_yes = false;
    std::optional<Instance> reduced;
    VertexCoverWitness cover;  // of the input
    std::vector<Vertex> deleted;
    std::vector<Vertex> old_index;
    unsigned classes_touched = 0;
    // |X| + 2^|X| (k+1), saturated
    std::uint64_t bound = 0;
    bool size_bound_ok = false;
};

KernelReport kernelize(const Instance& inst, unsigned cover_budget = kDefaultCoverBudget);

} // namespace rendezvous
