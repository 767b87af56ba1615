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
#include <stdexcept>
#include <string>
#include <vector>

#include "rendezvous/graph.hpp"

namespace rendezvous {

// Divider agent counts above this are rejected by the exact engine
constexpr unsigned kMaxAgents = 16;

constexpr std::uint64_t kDefaultBudget = 50'000'000;

class CapacityExceeded : public std::runtime_error {
public:
    explicit CapacityExceeded(std::uint64_t position_sides, std::uint64_t budget);
    // number of position-sides the instance would need
    std::uint64_t positions() const { return count; }
    std::uint64_t budget() const { return limit; }

private:
    std::uint64_t count;
    std::uint64_t limit;
};

/**
 * Number of compatible (F, D) pairs for n vertices and k Divider agents:
 * n * C(n+k-2, k) + C(n, 2) * C(n+k-3, k). Saturates at UINT64_MAX.
 */
std::uint64_t compatible_pair_count(std::uint64_t n, std::uint64_t k);

/**
 * Dense bijection between compatible (F, D) pairs and 0..pairs()-1. Pairs are
 * grouped by F (lexicographic), and within a group D is ranked in colex order
 * after removing F's vertices from the vertex range. A position is the pair
 * index together with the side to move.
 */
class PositionIndex {
public:
    PositionIndex(std::size_t n, unsigned k);

    std::size_t vertices() const { return n; }
    unsigned agents() const { return k; }
    std::uint64_t pairs() const { return offsets.back(); }
    std::uint64_t position_sides() const { return 2 * pairs(); }

    std::size_t f_count() const { return f_pairs.size(); }
    std::size_t f_index(Vertex a, Vertex b) const; // a <= b
    FPlacement f_at(std::size_t fi) const { return f_pairs[fi]; }
    std::uint64_t f_begin(std::size_t fi) const { return offsets[fi]; }
    std::uint64_t f_end(std::size_t fi) const { return offsets[fi + 1]; }

    // d must be sorted, size k, disjoint from f
    std::uint64_t pair_of(const FPlacement& f, const Vertex* d) const;
    std::uint64_t pair_of(const FPlacement& f, const DPlacement& d) const { return pair_of(f, d.agents.data()); }
    std::uint64_t pair_of(std::size_t fi, const Vertex* d) const;

    // writes k sorted vertices to d, returns the F group
    std::size_t decode(std::uint64_t pair, Vertex* d) const;
    Position position(std::uint64_t pair, Side to_move) const;

    std::uint64_t binom(unsigned a, unsigned b) const;

private:
    std::size_t n;
    unsigned k;
    std::vector<FPlacement> f_pairs;
    std::vector<std::uint64_t> offsets;
    // choose[a * (k+1) + b] = C(a, b) for a < n + k
    std::vector<std::uint64_t> choose;
};

/** Index for g with k agents; throws CapacityExceeded past budget position-sides. */
PositionIndex enumerate_positions(const Graph& g, unsigned k, std::uint64_t budget = kDefaultBudget);

} // namespace rendezvous
