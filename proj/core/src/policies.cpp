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

#include "rendezvous/policies.hpp"

#include <algorithm>
#include <limits>

#include "rendezvous/separation.hpp"

namespace rendezvous {

namespace {

template <typename Pred>
Vertex
random_step(const Graph& g, Vertex v, Pred blocked, std::mt19937_64& rng)
{
    std::vector<Vertex> opts{v};
    for (Vertex w : g.neighbors(v)) {
        if (!blocked(w)) opts.push_back(w);
    }
    std::uniform_int_distribution<std::size_t> pick(0, opts.size() - 1);
    return opts[pick(rng)];
}

std::vector<char>
mask_of(std::size_t n, const std::vector<Vertex>& vs)
{
    std::vector<char> m(n, 0);
    for (Vertex v : vs) m[v] = 1;
    return m;
}

} // namespace

Vertex
step_toward(const Graph& g, Vertex at, Vertex goal, const std::vector<char>& blocked)
{
    if (at == goal) return at;
    std::vector<int> dist = g.distances_from(goal, &blocked);
    if (dist[at] < 0) return at;
    for (Vertex w : g.neighbors(at)) {
        if (!blocked[w] && dist[w] >= 0 && dist[w] + 1 == dist[at]) return w;
    }
    return at;
}

FPlacement
RandomFacilitator::move(const Position& p, unsigned)
{
    auto blocked = [&](Vertex w) { return p.d.contains(w); };
    Vertex a = random_step(graph, p.f.a, blocked, rng);
    Vertex b = random_step(graph, p.f.b, blocked, rng);
    return FPlacement(a, b);
}

DPlacement
RandomDivider::place(const Instance& inst)
{
    std::vector<Vertex> free;
    for (Vertex v = 0; v < graph.size(); v++) {
        if (v != inst.s && v != inst.t) free.push_back(v);
    }
    if (free.empty()) throw std::logic_error("no vertex available for Divider");
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    std::vector<Vertex> agents(inst.k);
    for (Vertex& v : agents) v = free[pick(rng)];
    return DPlacement(std::move(agents));
}

DPlacement
RandomDivider::move(const Position& p, unsigned)
{
    auto blocked = [&](Vertex w) { return p.f.contains(w); };
    std::vector<Vertex> agents = p.d.agents;
    for (Vertex& v : agents) v = random_step(graph, v, blocked, rng);
    return DPlacement(std::move(agents));
}

std::optional<Vertex>
GreedyRushFacilitator::target(const Position& p) const
{
    std::vector<char> blocked = mask_of(graph.size(), p.d.agents);
    std::vector<int> da = graph.distances_from(p.f.a, &blocked);
    std::vector<int> db = graph.distances_from(p.f.b, &blocked);
    std::optional<Vertex> best;
    int best_max = std::numeric_limits<int>::max();
    int best_sum = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < graph.size(); v++) {
        if (da[v] < 0 || db[v] < 0) continue;
        int hi = std::max(da[v], db[v]);
        int sum = da[v] + db[v];
        if (hi < best_max || (hi == best_max && sum < best_sum)) {
            best = v;
            best_max = hi;
            best_sum = sum;
        }
    }
    return best;
}

FPlacement
GreedyRushFacilitator::move(const Position& p, unsigned)
{
    std::optional<Vertex> goal = target(p);
    if (!goal) return p.f;
    std::vector<char> blocked = mask_of(graph.size(), p.d.agents);
    return FPlacement(step_toward(graph, p.f.a, *goal, blocked), step_toward(graph, p.f.b, *goal, blocked));
}

DPlacement
HeuristicDivider::place(const Instance& inst)
{
    std::vector<Vertex> agents;
    if (inst.s != inst.t && !graph.adjacent(inst.s, inst.t)) {
        std::vector<Vertex> cut = min_vertex_cut(graph, inst.s, inst.t);
        holding = cut.size() <= inst.k;
        for (std::size_t i = 0; i < inst.k && !cut.empty(); i++) agents.push_back(cut[std::min(i, cut.size() - 1)]);
    }
    for (Vertex v = 0; agents.size() < inst.k && v < graph.size(); v++) {
        if (v != inst.s && v != inst.t) agents.push_back(v);
    }
    if (agents.size() < inst.k) throw std::logic_error("no vertex available for Divider");
    return DPlacement(std::move(agents));
}

DPlacement
HeuristicDivider::move(const Position& p, unsigned)
{
    if (holding) return p.d;
    Position probe = p;
    probe.to_move = Side::Facilitator;
    std::optional<Vertex> goal = rush.target(probe);
    if (!goal) return p.d;
    std::vector<char> blocked = mask_of(graph.size(), {p.f.a, p.f.b});
    std::vector<int> dist = graph.distances_from(*goal, &blocked);
    auto far = [&](Vertex v) { return dist[v] < 0 ? std::numeric_limits<int>::max() : dist[v]; };
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < p.d.size(); i++) {
        if (far(p.d.agents[i]) < far(p.d.agents[nearest])) nearest = i;
    }
    std::vector<Vertex> agents = p.d.agents;
    if (!p.f.contains(*goal)) agents[nearest] = step_toward(graph, agents[nearest], *goal, blocked);
    return DPlacement(std::move(agents));
}

FPlacement
ExactFacilitator::move(const Position& p, unsigned)
{
    return report.facilitator_move(p);
}

DPlacement
ExactDivider::place(const Instance&)
{
    return report.divider_placement();
}

DPlacement
ExactDivider::move(const Position& p, unsigned)
{
    return report.divider_move(p);
}

} // namespace rendezvous
