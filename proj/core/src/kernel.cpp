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

#include "rendezvous/kernel.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rendezvous {

namespace {

// search nodes before giving up on exactness
constexpr std::uint64_t kNodeLimit = 2'000'000;

class CoverSearch {
public:
    CoverSearch(const Graph& g_, unsigned limit_) : g(g_), limit(limit_), taken(g_.size(), 0) {}

    // best cover extending `forced` with at most `limit` vertices in total
    std::optional<std::vector<Vertex>> run(const std::vector<Vertex>& forced)
    {
        std::vector<Vertex> chosen;
        for (Vertex v : forced) {
            if (!taken[v]) {
                taken[v] = 1;
                chosen.push_back(v);
            }
        }
        best_size = limit + 1;
        branch(chosen);
        if (best_size > limit || nodes > kNodeLimit) return std::nullopt;
        return best;
    }

private:
    unsigned live_degree(Vertex v) const
    {
        unsigned d = 0;
        for (Vertex w : g.neighbors(v)) d += taken[w] ? 0 : 1;
        return d;
    }

    // greedy maximal matching on uncovered edges: a lower bound
    unsigned matching_bound() const
    {
        std::vector<char> used(g.size(), 0);
        unsigned m = 0;
        for (Vertex u = 0; u < g.size(); u++) {
            if (taken[u] || used[u]) continue;
            for (Vertex w : g.neighbors(u)) {
                if (!taken[w] && !used[w]) {
                    used[u] = used[w] = 1;
                    m++;
                    break;
                }
            }
        }
        return m;
    }

    void branch(std::vector<Vertex>& chosen)
    {
        if (++nodes > kNodeLimit) return;
        if (chosen.size() + matching_bound() >= best_size) return;
        Vertex pick = 0;
        unsigned deg = 0;
        for (Vertex v = 0; v < g.size(); v++) {
            if (taken[v]) continue;
            unsigned d = live_degree(v);
            if (d > deg) {
                deg = d;
                pick = v;
            }
        }
        if (deg == 0) {
            best = chosen;
            best_size = chosen.size();
            return;
        }
        // a pendant edge: its other endpoint is always as good
        for (Vertex v = 0; v < g.size(); v++) {
            if (taken[v] || live_degree(v) != 1) continue;
            for (Vertex w : g.neighbors(v)) {
                if (taken[w]) continue;
                take_and_recurse(chosen, {w});
                return;
            }
        }
        take_and_recurse(chosen, {pick});
        std::vector<Vertex> nbrs;
        for (Vertex w : g.neighbors(pick)) {
            if (!taken[w]) nbrs.push_back(w);
        }
        take_and_recurse(chosen, nbrs);
    }

    void take_and_recurse(std::vector<Vertex>& chosen, const std::vector<Vertex>& add)
    {
        if (chosen.size() + add.size() >= best_size) return;
        for (Vertex v : add) {
            taken[v] = 1;
            chosen.push_back(v);
        }
        branch(chosen);
        for (Vertex v : add) {
            taken[v] = 0;
            chosen.pop_back();
        }
    }

    const Graph& g;
    unsigned limit;
    std::vector<char> taken;
    std::vector<Vertex> best;
    std::size_t best_size = 0;
    std::uint64_t nodes = 0;
};

std::uint64_t
kernel_bound(std::size_t cover, unsigned k)
{
    if (cover >= 58) return UINT64_MAX;
    return cover + (std::uint64_t(1) << cover) * (k + 1);
}

} // namespace

bool
VertexCoverWitness::contains(Vertex v) const
{
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

CoverInvalid::CoverInvalid(Vertex u, Vertex v)
    : std::runtime_error("CoverInvalid: edge " + std::to_string(u) + "-" + std::to_string(v) + " escapes the cover")
{
}

VertexCoverWitness
vertex_cover(const Graph& g, Vertex s, Vertex t, unsigned budget)
{
    if (!g.valid(s) || !g.valid(t)) throw std::invalid_argument("terminal out of range");
    VertexCoverWitness w;
    std::vector<Vertex> forced{s};
    if (t != s) forced.push_back(t);
    CoverSearch search(g, std::max<unsigned>(budget, static_cast<unsigned>(forced.size())));
    if (auto found = search.run(forced)) {
        w.vertices = *found;
        w.exact = true;
    } else {
        std::vector<char> in(g.size(), 0);
        for (Vertex v : forced) in[v] = 1;
        for (auto [u, v] : g.edges()) {
            if (!in[u] && !in[v]) in[u] = in[v] = 1;
        }
        for (Vertex v = 0; v < g.size(); v++) {
            if (in[v]) w.vertices.push_back(v);
        }
    }
    std::sort(w.vertices.begin(), w.vertices.end());
    return w;
}

std::vector<TwinClass>
twin_classes(const Graph& g, const VertexCoverWitness& x)
{
    std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.size(); v++) {
        if (x.contains(v)) continue;
        for (Vertex w : g.neighbors(v)) {
            if (!x.contains(w)) throw CoverInvalid(std::min(v, w), std::max(v, w));
        }
        classes[g.neighbors(v)].push_back(v);
    }
    std::vector<TwinClass> out;
    for (auto& [nbrs, members] : classes) out.push_back({nbrs, std::move(members)});
    return out;
}

bool
apply_rule1(const Instance& inst)
{
    if (inst.s == inst.t || inst.graph.adjacent(inst.s, inst.t)) return true;
    return common_neighbor_count(inst.graph, inst.s, inst.t) > inst.k;
}

RuleTwoResult
apply_rule2(const Instance& inst, const VertexCoverWitness& x)
{
    const Graph& g = inst.graph;
    std::vector<char> keep(g.size(), 1);
    RuleTwoResult r;
    for (const TwinClass& c : twin_classes(g, x)) {
        if (c.members.size() <= inst.k + 1) continue;
        r.classes_touched++;
        for (std::size_t i = inst.k + 1; i < c.members.size(); i++) {
            keep[c.members[i]] = 0;
            r.deleted.push_back(c.members[i]);
        }
    }
    std::sort(r.deleted.begin(), r.deleted.end());
    Graph h = g.induced(keep, &r.old_index);
    std::vector<Vertex> renumber(g.size(), 0);
    for (Vertex i = 0; i < r.old_index.size(); i++) renumber[r.old_index[i]] = i;
    for (Vertex v : x.vertices) r.cover.vertices.push_back(renumber[v]);
    r.cover.exact = x.exact;
    r.reduced = make_instance(std::move(h), renumber[inst.s], renumber[inst.t], inst.k);
    return r;
}

KernelReport
kernelize(const Instance& inst, unsigned cover_budget)
{
    KernelReport rep;
    rep.cover = vertex_cover(inst.graph, inst.s, inst.t, cover_budget);
    rep.bound = kernel_bound(rep.cover.size(), inst.k);
    if (apply_rule1(inst)) {
        rep.trivial_yes = true;
        rep.size_bound_ok = true;
        return rep;
    }
    Instance cur = inst;
    VertexCoverWitness cover = rep.cover;
    std::vector<Vertex> to_input(inst.graph.size());
    for (Vertex v = 0; v < to_input.size(); v++) to_input[v] = v;
    while (true) {
        RuleTwoResult step = apply_rule2(cur, cover);
        rep.classes_touched += step.classes_touched;
        if (step.deleted.empty()) break;
        for (Vertex v : step.deleted) rep.deleted.push_back(to_input[v]);
        std::vector<Vertex> next(step.old_index.size());
        for (Vertex i = 0; i < next.size(); i++) next[i] = to_input[step.old_index[i]];
        to_input = std::move(next);
        cur = std::move(step.reduced);
        cover = std::move(step.cover);
    }
    std::sort(rep.deleted.begin(), rep.deleted.end());
    rep.old_index = std::move(to_input);
    rep.size_bound_ok = cur.graph.size() <= rep.bound;
    rep.reduced = std::move(cur);
    return rep;
}

} // namespace rendezvous
