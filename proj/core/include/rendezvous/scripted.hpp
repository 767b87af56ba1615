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

#include <map>
#include <optional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rendezvous/reductions.hpp"
#include "rendezvous/simulate.hpp"

namespace rendezvous {

/** A scripted strategy met a case its case table does not cover. */
class ScriptGap : public std::runtime_error {
public:
    ScriptGap(unsigned round, const std::string& detail);
    unsigned round() const { return when; }

private:
    unsigned when;
};

/** The placement satisfies every clause, so neither rush applies. */
class NoViolatedClause : public std::runtime_error {
public:
    NoViolatedClause() : std::runtime_error("NoViolatedClause: the placement encodes a satisfying assignment") {}
};

/**
 * How Divider seals a Facilitator agent that has just stepped off a terminal
 * into one of its spokes: the terminal is closed behind it by a guard agent
 * and every exit at the far end is occupied by a blocker walking a fixed route.
 */
struct SealPlan {
    std::string spoke;
    struct Blocker {
        unsigned agent = 0;
        // vertices after the agent's start, ending at the exit it holds
        std::vector<Vertex> route;
    };
    std::vector<Blocker> blockers;
};

/**
 * Divider that places agents with identities, holds until Facilitator leaves
 * s or t, then seals the agent that left (the one from s when both did) with
 * the plan registered for the spoke it entered. Throws ScriptGap when a
 * route step is occupied or no plan covers the spoke.
 */
class SealingDivider : public DividerPolicy {
public:
    SealingDivider(Vertex s, Vertex t, std::vector<Vertex> start, unsigned guard_s, unsigned guard_t,
                   std::map<std::pair<Vertex, Vertex>, SealPlan> plans);

    DPlacement place(const Instance& inst) override;
    DPlacement move(const Position& p, unsigned round) override;

    // spoke of the active seal, empty before anyone leaves a terminal
    const std::string& active_spoke() const { return spoke; }

private:
    DPlacement current() const;

    Vertex s, t;
    std::vector<Vertex> agents;
    unsigned guard_s, guard_t;
    // keyed by (terminal, first spoke vertex)
    std::map<std::pair<Vertex, Vertex>, SealPlan> plans;
    const SealPlan* active = nullptr;
    std::vector<std::size_t> progress;
    std::string spoke;
};

/**
 * Divider from a perfect matching (1-based set indices): D_i starts on
 * u_i^{j_i} for the i-th chosen set in increasing order, two guards on g1, g2.
 * Row spokes are sealed by walking D_i to the row end; critical spokes by
 * sending, for every element a, the agent whose set covers a through the
 * type hub to the matching x/y/z end.
 */
std::unique_ptr<SealingDivider> scripted_divider_3dm(const ThreeDMInstance& src, const std::vector<unsigned>& matching,
                                                     const GadgetIndex& gi);

/**
 * Divider from an assignment (values in [dstar]): D_i starts on u_i^{value}.
 * Row spokes are sealed by walking D_i to the row end; a spoke to c_j^l by a
 * true literal's agent, a spoke to c_j^r by a false literal's agent.
 */
std::unique_ptr<SealingDivider> scripted_divider_nae(const NAEInstance& src, const std::vector<unsigned>& assignment,
                                                     const GadgetIndex& gi);

/**
 * Facilitator that reads Divider's placement on the first move: rushes an
 * unguarded g1/g2, else a row end with no agent within distance dstar, else
 * reads the assignment off the rows and rushes c_j^r for an all-true clause or
 * c_j^l for an all-false one. Throws NoViolatedClause when every clause is
 * satisfied by the placement.
 */
class ScriptedFacilitatorNAE : public FacilitatorPolicy {
public:
    ScriptedFacilitatorNAE(NAEInstance src, GadgetIndex gi, const Graph& g);

    FPlacement move(const Position& p, unsigned round) override;

    // target vertex chosen on the first move
    std::optional<Vertex> target() const { return goal; }

private:
    void plan(const Position& p);

    NAEInstance src;
    GadgetIndex gi;
    const Graph& g;
    std::vector<Vertex> route_s, route_t;
    std::optional<Vertex> goal;
    std::size_t step = 0;
};

std::unique_ptr<ScriptedFacilitatorNAE> scripted_facilitator_nae(const NAEInstance& src, const GadgetIndex& gi,
                                                                 const Graph& g);

} // namespace rendezvous
