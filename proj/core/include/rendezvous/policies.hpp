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
#include <random>

#include "rendezvous/engine.hpp"
#include "rendezvous/simulate.hpp"

namespace rendezvous {

/** Each agent independently stays or steps to a uniformly chosen free neighbour. */
class RandomFacilitator : public FacilitatorPolicy {
public:
    RandomFacilitator(const Graph& g, std::uint64_t seed) : graph(g), rng(seed) {}
    FPlacement move(const Position& p, unsigned round) override;

private:
    const Graph& graph;
    std::mt19937_64 rng;
};

/** Uniform placement off s and t; each agent then stays or steps at random. */
class RandomDivider : public DividerPolicy {
public:
    RandomDivider(const Graph& g, std::uint64_t seed) : graph(g), rng(seed) {}
    DPlacement place(const Instance& inst) override;
    DPlacement move(const Position& p, unsigned round) override;

private:
    const Graph& graph;
    std::mt19937_64 rng;
};

/**
 * Both agents walk a shortest free path toward the vertex minimising the
 * larger of their two distances (ties: smaller sum, then lower index).
 */
class GreedyRushFacilitator : public FacilitatorPolicy {
public:
    explicit GreedyRushFacilitator(const Graph& g) : graph(g) {}
    FPlacement move(const Position& p, unsigned round) override;

    // the meeting target for p, empty when R and J are cut apart
    std::optional<Vertex> target(const Position& p) const;

private:
    const Graph& graph;
};

/**
 * Holds a minimum vertex cut when it has enough agents. Otherwise places
 * on a cut prefix and, each round, steps the agent nearest to the greedy
 * meeting target one vertex toward it.
 */
class HeuristicDivider : public DividerPolicy {
public:
    explicit HeuristicDivider(const Graph& g) : graph(g), rush(g) {}
    DPlacement place(const Instance& inst) override;
    DPlacement move(const Position& p, unsigned round) override;

private:
    const Graph& graph;
    GreedyRushFacilitator rush;
    bool holding = false;
};

/** Keeps its agents where they were placed. */
class HoldingDivider : public DividerPolicy {
public:
    explicit HoldingDivider(DPlacement d) : placement(std::move(d)) {}
    DPlacement place(const Instance&) override { return placement; }
    DPlacement move(const Position& p, unsigned) override { return p.d; }

private:
    DPlacement placement;
};

/** Strategies read off an exact SolveReport. */
class ExactFacilitator : public FacilitatorPolicy {
public:
    explicit ExactFacilitator(SolveReport r) : report(std::move(r)) {}
    FPlacement move(const Position& p, unsigned round) override;

private:
    SolveReport report;
};

class ExactDivider : public DividerPolicy {
public:
    explicit ExactDivider(SolveReport r) : report(std::move(r)) {}
    DPlacement place(const Instance& inst) override;
    DPlacement move(const Position& p, unsigned round) override;

private:
    SolveReport report;
};

/** A policy's next step from `at` toward `goal` avoiding blocked vertices; at itself when stuck. */
Vertex step_toward(const Graph& g, Vertex at, Vertex goal, const std::vector<char>& blocked);

} // namespace rendezvous
