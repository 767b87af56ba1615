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

#include "rendezvous/separation.hpp"

#include <algorithm>
#include <deque>

namespace rendezvous {

ExtendedCount
ExtendedCount::infinite()
{
    ExtendedCount c;
    c.inf = true;
    return c;
}

unsigned
ExtendedCount::value() const
{
    if (inf) throw std::logic_error("value() of an infinite count");
    return val;
}

std::string
ExtendedCount::to_string() const
{
    return inf ? "inf" : std::to_string(val);
}

std::strong_ordering
ExtendedCount::operator<=>(const ExtendedCount& o) const
{
    if (inf || o.inf) return static_cast<int>(inf) <=> static_cast<int>(o.inf);
    return val <=> o.val;
}

namespace {

/*
 * Vertex v becomes in-node 2v and out-node 2v+1. Non-terminal vertices get a
 * unit arc in->out, graph edges become unbounded arcs out(u)->in(v).
 */
class SplitFlow {
public:
    SplitFlow(const Graph& g, Vertex s, Vertex t) : n(g.size())
    {
        head.assign(2 * n, -1);
        int big = static_cast<int>(n) + 1;
        for (Vertex v = 0; v < n; v++) {
            add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
        }
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, big);
            add_arc(2 * v + 1, 2 * u, big);
        }
        source = 2 * s + 1;
        sink = 2 * t;
    }

    unsigned run()
    {
        unsigned flow = 0;
        while (augment()) flow++;
        return flow;
    }

    std::vector<char> residual_reachable() const
    {
        std::vector<char> seen(2 * n, 0);
        std::deque<int> queue{static_cast<int>(source)};
        seen[source] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int a = head[x]; a >= 0; a = arcs[a].next) {
                if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = 1;
                    queue.push_back(arcs[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int cap;
        int next;
    };

    void add_arc(std::size_t from, std::size_t to, int cap)
    {
        arcs.push_back({static_cast<int>(to), cap, head[from]});
        head[from] = static_cast<int>(arcs.size() - 1);
        arcs.push_back({static_cast<int>(from), 0, head[to]});
        head[to] = static_cast<int>(arcs.size() - 1);
    }

    // one BFS augmenting path; unit bottleneck is guaranteed by the split arcs
    bool augment()
    {
        std::vector<int> via(2 * n, -1);
        std::vector<char> seen(2 * n, 0);
        std::deque<int> queue{static_cast<int>(source)};
        seen[source] = 1;
        while (!queue.empty() && !seen[sink]) {
            int x = queue.front();
            queue.pop_front();
            for (int a = head[x]; a >= 0; a = arcs[a].next) {
                int y = arcs[a].to;
                if (arcs[a].cap > 0 && !seen[y]) {
                    seen[y] = 1;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if (!seen[sink]) return false;
        for (int x = static_cast<int>(sink); x != static_cast<int>(source);) {
            int a = via[x];
            arcs[a].cap -= 1;
            arcs[a ^ 1].cap += 1;
            x = arcs[a ^ 1].to;
        }
        return true;
    }

    std::size_t n;
    std::size_t source = 0;
    std::size_t sink = 0;
    std::vector<int> head;
    std::vector<Arc> arcs;
};

void
check_terminals(const Graph& g, Vertex s, Vertex t)
{
    if (!g.valid(s) || !g.valid(t)) throw std::invalid_argument("terminal out of range");
}

} // namespace

ExtendedCount
static_separation(const Graph& g, Vertex s, Vertex t)
{
    check_terminals(g, s, t);
    if (s == t || g.adjacent(s, t)) return ExtendedCount::infinite();
    SplitFlow flow(g, s, t);
    return flow.run();
}

std::vector<Vertex>
min_vertex_cut(const Graph& g, Vertex s, Vertex t)
{
    check_terminals(g, s, t);
    if (s == t || g.adjacent(s, t)) throw CutUndefined();
    SplitFlow flow(g, s, t);
    flow.run();
    auto seen = flow.residual_reachable();
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < g.size(); v++) {
        if (v != s && v != t && seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    }
    return cut;
}

bool
separates(const Graph& g, Vertex s, Vertex t, const std::vector<Vertex>& cut)
{
    std::vector<char> blocked(g.size(), 0);
    for (Vertex v : cut) blocked[v] = 1;
    if (blocked[s] || blocked[t]) return false;
    return !g.reaches(s, t, blocked);
}

} // namespace rendezvous
