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

#include "rendezvous/scripted.hpp"

#include <algorithm>

namespace rendezvous {

namespace {

std::string
idx(unsigned i)
{
    return "[" + std::to_string(i) + "]";
}

const char* const kTypes[3] = {"alpha", "beta", "gamma"};
const char* const kEnds[3] = {"x", "y", "z"};
const char* const kSides[2] = {"l", "r"};

// walk a registered path from one endpoint to the other, endpoint included
void
append_path(std::vector<Vertex>& out, const RegisteredPath& p, Vertex from)
{
    if (from == p.from) {
        out.insert(out.end(), p.vertices.begin(), p.vertices.end());
        out.push_back(p.to);
    } else if (from == p.to) {
        out.insert(out.end(), p.vertices.rbegin(), p.vertices.rend());
        out.push_back(p.from);
    } else {
        throw std::logic_error("route does not touch path " + p.id);
    }
}

// row walk from interior position `at` (1-based) to u^0 or the far end
std::vector<Vertex>
row_route(const GadgetIndex& gi, unsigned i, unsigned at, bool to_low)
{
    const RegisteredPath& row = gi.path("row" + idx(i));
    std::vector<Vertex> out;
    if (to_low) {
        for (unsigned q = at - 1; q >= 1; q--) out.push_back(row.vertices[q - 1]);
        out.push_back(row.from);
    } else {
        for (unsigned q = at + 1; q <= row.vertices.size(); q++) out.push_back(row.vertices[q - 1]);
        out.push_back(row.to);
    }
    return out;
}

void
add_plan(std::map<std::pair<Vertex, Vertex>, SealPlan>& plans, const GadgetIndex& gi, const std::string& spoke,
         std::vector<SealPlan::Blocker> blockers)
{
    const RegisteredPath& p = gi.path(spoke);
    SealPlan plan;
    plan.spoke = spoke;
    plan.blockers = std::move(blockers);
    plans[{p.from, p.vertices.front()}] = std::move(plan);
}

} // namespace

ScriptGap::ScriptGap(unsigned round, const std::string& detail)
    : std::runtime_error("ScriptGap at round " + std::to_string(round) + ": " + detail), when(round)
{
}

SealingDivider::SealingDivider(Vertex s_, Vertex t_, std::vector<Vertex> start, unsigned guard_s_, unsigned guard_t_,
                               std::map<std::pair<Vertex, Vertex>, SealPlan> plans_)
    : s(s_), t(t_), agents(std::move(start)), guard_s(guard_s_), guard_t(guard_t_), plans(std::move(plans_))
{
}

DPlacement
SealingDivider::current() const
{
    std::vector<Vertex> sorted = agents;
    std::sort(sorted.begin(), sorted.end());
    return DPlacement(std::move(sorted));
}

DPlacement
SealingDivider::place(const Instance&)
{
    return current();
}

DPlacement
SealingDivider::move(const Position& p, unsigned round)
{
    if (active == nullptr) {
        const bool left_s = !p.f.contains(s);
        const bool left_t = !p.f.contains(t);
        if (!left_s && !left_t) return current();
        const Vertex terminal = left_s ? s : t;
        // the agent that left sits on the spoke vertex next to its terminal
        Vertex entered = p.f.a;
        bool found = false;
        for (auto& [key, plan] : plans) {
            if (key.first == terminal && p.f.contains(key.second)) {
                entered = key.second;
                found = true;
                break;
            }
        }
        if (!found) throw ScriptGap(round, "no seal registered for the spoke entered from " + std::to_string(terminal));
        active = &plans.at({terminal, entered});
        spoke = active->spoke;
        progress.assign(active->blockers.size(), 0);
        agents[left_s ? guard_s : guard_t] = terminal;
    }
    for (std::size_t b = 0; b < active->blockers.size(); b++) {
        const SealPlan::Blocker& blk = active->blockers[b];
        if (progress[b] >= blk.route.size()) continue;
        const Vertex next = blk.route[progress[b]];
        if (p.f.contains(next)) {
            throw ScriptGap(round, "blocker " + std::to_string(blk.agent) + " on " + active->spoke +
                                       " finds its route occupied at vertex " + std::to_string(next));
        }
        agents[blk.agent] = next;
        progress[b]++;
    }
    return current();
}

std::unique_ptr<SealingDivider>
scripted_divider_3dm(const ThreeDMInstance& src, const std::vector<unsigned>& matching, const GadgetIndex& gi)
{
    validate_source(src);
    const unsigned n = src.n;
    const unsigned m = static_cast<unsigned>(src.sets.size());
    std::vector<unsigned> chosen = matching;
    std::sort(chosen.begin(), chosen.end());
    if (chosen.size() != n) throw std::invalid_argument("matching must name exactly n sets");
    for (unsigned j : chosen) {
        if (j < 1 || j > m) throw std::invalid_argument("matching names a set outside [m]");
    }
    std::vector<Vertex> start(n + 2);
    for (unsigned i = 1; i <= n; i++) start[i - 1] = gi.path("row" + idx(i)).vertices[chosen[i - 1] - 1];
    start[n] = gi.at("g1");
    start[n + 1] = gi.at("g2");

    std::map<std::pair<Vertex, Vertex>, SealPlan> plans;
    for (const char* term : {"s", "t"}) {
        for (unsigned i = 1; i <= n; i++) {
            const unsigned at = chosen[i - 1];
            add_plan(plans, gi, std::string(term) + "-u" + idx(i) + ".lo", {{i - 1, row_route(gi, i, at, true)}});
            add_plan(plans, gi, std::string(term) + "-u" + idx(i) + ".hi", {{i - 1, row_route(gi, i, at, false)}});
        }
        for (unsigned side = 0; side < 2; side++) {
            for (unsigned ty = 0; ty < 3; ty++) {
                const std::string sfx = std::string(".") + kSides[side];
                const Vertex hub = gi.at(kTypes[ty] + sfx);
                std::vector<SealPlan::Blocker> blockers;
                for (unsigned a = 1; a <= n; a++) {
                    // the agent whose chosen set carries element a of this type
                    unsigned owner = 0;
                    for (unsigned i = 1; i <= n; i++) {
                        if (src.sets[chosen[i - 1] - 1][ty] == a) owner = i;
                    }
                    if (owner == 0) continue;
                    SealPlan::Blocker blk;
                    blk.agent = owner - 1;
                    append_path(blk.route,
                                gi.path("set" + idx(chosen[owner - 1]) + "." + kTypes[ty] + sfx + idx(owner)),
                                start[owner - 1]);
                    append_path(blk.route, gi.path(std::string("elem.") + kTypes[ty] + idx(a) + sfx), hub);
                    const Vertex terminal = blk.route.back();
                    append_path(blk.route, gi.path(std::string("end.") + kEnds[ty] + idx(a) + sfx), terminal);
                    blockers.push_back(std::move(blk));
                }
                add_plan(plans, gi, std::string("crit.") + term + "." + kTypes[ty] + sfx, std::move(blockers));
            }
        }
    }
    return std::make_unique<SealingDivider>(gi.at("s"), gi.at("t"), std::move(start), n, n + 1, std::move(plans));
}

std::unique_ptr<SealingDivider>
scripted_divider_nae(const NAEInstance& src, const std::vector<unsigned>& assignment, const GadgetIndex& gi)
{
    validate_source(src);
    const unsigned n = src.n;
    const unsigned ds = src.dstar;
    if (assignment.size() != n) throw std::invalid_argument("assignment must give a value per variable");
    for (unsigned v : assignment) {
        if (v < 1 || v > ds) throw std::invalid_argument("assignment value outside [dstar]");
    }
    std::vector<Vertex> start(n + 2);
    for (unsigned i = 1; i <= n; i++) start[i - 1] = gi.path("row" + idx(i)).vertices[assignment[i - 1] - 1];
    start[n] = gi.at("g1");
    start[n + 1] = gi.at("g2");

    std::map<std::pair<Vertex, Vertex>, SealPlan> plans;
    for (const char* term : {"s", "t"}) {
        for (unsigned i = 1; i <= n; i++) {
            const unsigned at = assignment[i - 1];
            add_plan(plans, gi, std::string(term) + "-u" + idx(i) + ".lo", {{i - 1, row_route(gi, i, at, true)}});
            add_plan(plans, gi, std::string(term) + "-u" + idx(i) + ".hi", {{i - 1, row_route(gi, i, at, false)}});
        }
        for (unsigned j = 1; j <= src.clauses.size(); j++) {
            const auto& clause = src.clauses[j - 1];
            for (bool left : {true, false}) {
                // left end needs a true literal, right end a false one
                std::vector<SealPlan::Blocker> blockers;
                for (unsigned q = 0; q < 3 && blockers.empty(); q++) {
                    const NAELiteral& lit = clause[q];
                    const unsigned value = assignment[lit.var - 1];
                    if ((value <= lit.bound) != left) continue;
                    SealPlan::Blocker blk;
                    blk.agent = lit.var - 1;
                    blk.route = row_route(gi, lit.var, value, left);
                    append_path(blk.route, gi.path("clause" + idx(j) + ".lit" + idx(q + 1) + (left ? ".l" : ".r")),
                                blk.route.back());
                    blockers.push_back(std::move(blk));
                }
                // an unsatisfied clause leaves the spoke without a plan
                if (blockers.empty()) continue;
                add_plan(plans, gi, std::string(term) + "-c" + idx(j) + (left ? ".l" : ".r"), std::move(blockers));
            }
        }
    }
    return std::make_unique<SealingDivider>(gi.at("s"), gi.at("t"), std::move(start), n, n + 1, std::move(plans));
}

ScriptedFacilitatorNAE::ScriptedFacilitatorNAE(NAEInstance src_, GadgetIndex gi_, const Graph& g_)
    : src(std::move(src_)), gi(std::move(gi_)), g(g_)
{
    validate_source(src);
}

void
ScriptedFacilitatorNAE::plan(const Position& p)
{
    auto occupied = [&](Vertex v) { return std::binary_search(p.d.agents.begin(), p.d.agents.end(), v); };
    auto rush = [&](const std::string& via_s, const std::string& via_t) {
        const RegisteredPath& ps = gi.path(via_s);
        const RegisteredPath& pt = gi.path(via_t);
        append_path(route_s, ps, ps.from);
        append_path(route_t, pt, pt.from);
        goal = ps.to;
    };
    for (const char* gname : {"g1", "g2"}) {
        if (!occupied(gi.at(gname))) {
            route_s = route_t = {gi.at(gname)};
            goal = gi.at(gname);
            return;
        }
    }
    const unsigned n = src.n;
    const unsigned ds = src.dstar;
    for (unsigned i = 1; i <= n; i++) {
        for (bool low : {true, false}) {
            const Vertex end = gi.at("u" + idx(i) + idx(low ? 0 : ds + 1));
            std::vector<int> dist = g.distances_from(end);
            bool guarded = std::any_of(p.d.agents.begin(), p.d.agents.end(), [&](Vertex v) {
                return dist[v] >= 0 && dist[v] <= static_cast<int>(ds);
            });
            if (!guarded) {
                const std::string sfx = "-u" + idx(i) + (low ? ".lo" : ".hi");
                rush("s" + sfx, "t" + sfx);
                return;
            }
        }
    }
    // every row end is guarded, so each row holds an agent: read the values
    std::vector<unsigned> values(n, 0);
    for (unsigned i = 1; i <= n; i++) {
        const RegisteredPath& row = gi.path("row" + idx(i));
        for (unsigned q = 1; q <= ds && values[i - 1] == 0; q++) {
            if (occupied(row.vertices[q - 1])) values[i - 1] = q;
        }
        if (values[i - 1] == 0) throw ScriptGap(1, "row " + std::to_string(i) + " is guarded from outside the row");
    }
    for (unsigned j = 1; j <= src.clauses.size(); j++) {
        unsigned truths = 0;
        for (const NAELiteral& lit : src.clauses[j - 1]) truths += values[lit.var - 1] <= lit.bound ? 1 : 0;
        if (truths == 3) {
            rush("s-c" + idx(j) + ".r", "t-c" + idx(j) + ".r");
            return;
        }
        if (truths == 0) {
            rush("s-c" + idx(j) + ".l", "t-c" + idx(j) + ".l");
            return;
        }
    }
    throw NoViolatedClause();
}

FPlacement
ScriptedFacilitatorNAE::move(const Position& p, unsigned round)
{
    if (!goal) plan(p);
    if (step >= route_s.size()) return p.f;
    auto occupied = [&](Vertex v) { return std::binary_search(p.d.agents.begin(), p.d.agents.end(), v); };
    const Vertex a = route_s[step];
    const Vertex b = route_t[step];
    if (occupied(a) || occupied(b)) throw ScriptGap(round, "rush toward " + g.label(*goal) + " is blocked");
    step++;
    return FPlacement(a, b);
}

std::unique_ptr<ScriptedFacilitatorNAE>
scripted_facilitator_nae(const NAEInstance& src, const GadgetIndex& gi, const Graph& g)
{
    return std::make_unique<ScriptedFacilitatorNAE>(src, gi, g);
}

} // namespace rendezvous
