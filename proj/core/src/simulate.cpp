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

#include "rendezvous/simulate.hpp"

#include <algorithm>

#include "rendezvous/engine.hpp"

namespace rendezvous {

IllegalMove::IllegalMove(Side side, unsigned round, const std::string& detail)
    : std::runtime_error(std::string("IllegalMove by ") + side_name(side) + " in round " + std::to_string(round)
                         + ": " + detail),
      who(side), when(round)
{
}

bool
legal_placement(const Instance& inst, const DPlacement& d)
{
    if (d.size() != inst.k) return false;
    if (!std::is_sorted(d.agents.begin(), d.agents.end())) return false;
    for (Vertex v : d.agents) {
        if (!inst.graph.valid(v) || v == inst.s || v == inst.t) return false;
    }
    return true;
}

Trace
simulate(const Instance& inst, FacilitatorPolicy& fac, DividerPolicy& div, unsigned max_rounds)
{
    Trace trace;
    Position pos;
    pos.f = FPlacement(inst.s, inst.t);
    pos.d = div.place(inst);
    pos.to_move = Side::Facilitator;
    if (!legal_placement(inst, pos.d)) throw IllegalMove(Side::Divider, 0, "placement must be k vertices off s and t");
    trace.steps.push_back({0, pos});
    if (pos.f.met()) {
        trace.met = true;
        trace.meeting_vertex = pos.f.a;
        return trace;
    }
    for (unsigned round = 1; round <= max_rounds; round++) {
        Position next = pos;
        next.f = fac.move(pos, round);
        next.to_move = Side::Divider;
        if (!legal_move(pos, next, inst.graph)) throw IllegalMove(Side::Facilitator, round, "not a legal half-move");
        pos = std::move(next);
        trace.steps.push_back({round, pos});
        trace.rounds = round;
        if (pos.f.met()) {
            trace.met = true;
            trace.meeting_vertex = pos.f.a;
            return trace;
        }
        next = pos;
        next.d = div.move(pos, round);
        next.to_move = Side::Facilitator;
        if (!legal_move(pos, next, inst.graph)) throw IllegalMove(Side::Divider, round, "not a legal half-move");
        pos = std::move(next);
        trace.steps.push_back({round, pos});
    }
    return trace;
}

} // namespace rendezvous
