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
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rendezvous/graph.hpp"
#include "rendezvous/position_index.hpp"
#include "rendezvous/separation.hpp"

namespace rendezvous {

class DisconnectedGraph : public std::runtime_error {
public:
    DisconnectedGraph() : std::runtime_error("DisconnectedGraph: the exact engine needs a connected graph") {}
};

struct SolveOptions {
    // maximum number of position-sides (2 per compatible pair)
    std::uint64_t budget = kDefaultBudget;
};

struct SolveStats {
    std::uint64_t pairs = 0;
    std::uint64_t position_sides = 0;
    // attractor layers processed
    unsigned iterations = 0;
    double seconds = 0;
};

/**
 * Result of the exact solve. Facilitator-won positions carry a level: the
 * number of Facilitator moves within which she forces a meeting (0 at a
 * meeting). Strategies are read off the levels on demand:
 *   Facilitator in her region moves to the lowest-index successor one level
 *   down; Divider outside her region moves to the lowest-index successor that
 *   stays outside. Outside their winning regions both sides delay: Divider
 *   picks the successor with the largest level, Facilitator the lowest-index
 *   successor.
 * Reports for s = t or adjacent s, t are trivial: no position space is built.
 */
class SolveReport {
public:
    Side winner() const;
    const Instance& instance() const;
    const SolveStats& stats() const;

    bool has_index() const;
    const PositionIndex& index() const;

    std::optional<unsigned> level(const Position& p) const;
    bool in_facilitator_region(const Position& p) const { return level(p).has_value(); }

    // minimax meeting round over all initial placements; empty when Divider wins
    std::optional<unsigned> min_rounds() const;

    FPlacement facilitator_move(const Position& p) const;
    DPlacement divider_move(const Position& p) const;
    DPlacement divider_placement() const;

    // bit 2*pair + side set when the position-side is Facilitator-won
    std::vector<bool> facilitator_region() const;

    struct Data;
    explicit SolveReport(std::shared_ptr<const Data> data);

private:
    std::shared_ptr<const Data> data;
};

SolveReport solve(const Instance& inst, const SolveOptions& options = {});

struct TimedResult {
    bool facilitator_wins = false;
    // minimax number of Facilitator moves to a meeting; empty when Divider
    // prevents meeting forever
    std::optional<unsigned> min_rounds;
};

/**
 * Can Facilitator force a meeting within tau of her own moves? Divider places
 * first, every round is a Facilitator move then a Divider move, and no Divider
 * move follows the tau-th Facilitator move.
 */
TimedResult solve_in_time(const Instance& inst, unsigned tau, const SolveOptions& options = {});
TimedResult solve_in_time(const SolveReport& report, unsigned tau);

struct SeparationOptions {
    std::uint64_t budget = kDefaultBudget;
    // also solve k = lambda to confirm Divider wins there; otherwise the
    // static-cut argument settles it without a solve
    bool verify_upper = false;
};

struct SeparationStats {
    ExtendedCount lambda;
    // largest position space solved
    std::uint64_t position_sides = 0;
    unsigned solves = 0;
};

/**
 * Least k for which Divider wins; Infinite when s = t or st is an edge.
 * Scans k upward from max(1, |N(s) & N(t)|), since with fewer agents one
 * common neighbour stays free and Facilitator meets at once.
 */
ExtendedCount dynamic_separation(const Graph& g, Vertex s, Vertex t, const SeparationOptions& options = {},
                                 SeparationStats* stats = nullptr);

/** All legal half-moves from p, stay included, side to move flipped. */
std::vector<Position> successors(const Position& p, const Graph& g);

// legality of a single half-move (placement excluded)
bool legal_move(const Position& from, const Position& to, const Graph& g);

} // namespace rendezvous
