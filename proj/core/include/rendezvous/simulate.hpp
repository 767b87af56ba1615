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

#include <stdexcept>
#include <string>
#include <vector>

#include "rendezvous/graph.hpp"

namespace rendezvous {

class FacilitatorPolicy {
public:
    virtual ~FacilitatorPolicy() = default;
    // p has Facilitator to move; round counts from 1
    virtual FPlacement move(const Position& p, unsigned round) = 0;
};

class DividerPolicy {
public:
    virtual ~DividerPolicy() = default;
    virtual DPlacement place(const Instance& inst) = 0;
    // p has Divider to move, right after Facilitator's move of this round
    virtual DPlacement move(const Position& p, unsigned round) = 0;
};

class IllegalMove : public std::runtime_error {
public:
    IllegalMove(Side side, unsigned round, const std::string& detail);
    Side side() const { return who; }
    unsigned round() const { return when; }

private:
    Side who;
    unsigned when;
};

struct TraceStep {
    unsigned round = 0;
    Position position;
};

/**
 * Positions after the placement (round 0) and after every half-move. met
 * is set the moment Facilitator's agents share a vertex.
 */
struct Trace {
    std::vector<TraceStep> steps;
    bool met = false;
    Vertex meeting_vertex = 0;
    // round of the meeting, or the number of rounds played
    unsigned rounds = 0;
};

/**
 * Plays Divider's placement and then up to max_rounds rounds of Facilitator
 * move + Divider reply. Every half-move is checked; a bad one raises
 * IllegalMove naming the side and round. s = t counts as met at round 0.
 */
Trace simulate(const Instance& inst, FacilitatorPolicy& fac, DividerPolicy& div, unsigned max_rounds);

// placement legality: k vertices, none of them s or t
bool legal_placement(const Instance& inst, const DPlacement& d);

} // namespace rendezvous
