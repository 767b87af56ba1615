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

#include "rendezvous/special.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <string>

namespace rendezvous {

std::optional<Tw2Witness>
recognize_tw2(const Graph& g)
{
    const std::size_t n = g.size();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::set<Vertex> low;
    for (Vertex v = 0; v < n; v++) {
        if (adj[v].size() <= 2) low.insert(v);
    }
    Tw2Witness w;
    std::size_t left = n;
    while (!low.empty()) {
        Vertex v = *low.begin();
        low.erase(low.begin());
        if (gone[v] || adj[v].size() > 2) continue;
        Tw2Step step;
        step.vertex = v;
        std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
        for (Vertex u : nb) adj[u].erase(v);
        if (nb.size() == 2) {
            step.joined = std::make_pair(nb[0], nb[1]);
            step.fill = adj[nb[0]].insert(nb[1]).second;
            adj[nb[1]].insert(nb[0]);
        }
        adj[v].clear();
        gone[v] = 1;
        left--;
        w.elimination.push_back(step);
        for (Vertex u : nb) {
            if (adj[u].size() <= 2) low.insert(u);
        }
    }
    if (left != 0) return std::nullopt;
    return w;
}

bool
is_tree(const Graph& g)
{
    return g.size() > 0 && g.edge_count() + 1 == g.size() && g.connected();
}

std::optional<GridMeta>
grid_meta(const Graph& g)
{
    if (g.size() == 0 || !g.has_all_coords()) return std::nullopt;
    GridMeta meta;
    int rmin = INT32_MAX, rmax = INT32_MIN, cmin = INT32_MAX, cmax = INT32_MIN;
    for (Vertex v = 0; v < g.size(); v++) {
        Coord c = *g.coord(v);
        rmin = std::min(rmin, c.row);
        rmax = std::max(rmax, c.row);
        cmin = std::min(cmin, c.col);
        cmax = std::max(cmax, c.col);
    }
    long long area = static_cast<long long>(rmax - rmin + 1) * (cmax - cmin + 1);
    if (area != static_cast<long long>(g.size())) return std::nullopt;
    meta.row0 = rmin;
    meta.col0 = cmin;
    meta.rows = rmax - rmin + 1;
    meta.cols = cmax - cmin + 1;
    meta.cells.assign(g.size(), static_cast<Vertex>(g.size()));
    for (Vertex v = 0; v < g.size(); v++) {
        Coord c = *g.coord(v);
        Vertex& cell = meta.cells[(c.row - rmin) * meta.cols + (c.col - cmin)];
        if (cell != g.size()) return std::nullopt;
        cell = v;
    }
    std::size_t expected = 2 * g.size() - meta.rows - meta.cols;
    if (g.edge_count() != expected) return std::nullopt;
    for (auto [u, v] : g.edges()) {
        Coord a = *g.coord(u);
        Coord b = *g.coord(v);
        if (std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1) return std::nullopt;
    }
    return meta;
}

Graph
make_grid(int rows, int cols)
{
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    Graph g(static_cast<std::size_t>(rows) * cols);
    auto id = [cols](int i, int j) { return static_cast<Vertex>((i - 1) * cols + (j - 1)); };
    for (int i = 1; i <= rows; i++) {
        for (int j = 1; j <= cols; j++) {
            g.set_label(id(i, j), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
            g.set_coord(id(i, j), {i, j});
            if (j < cols) g.add_edge(id(i, j), id(i, j + 1));
            if (i < rows) g.add_edge(id(i, j), id(i + 1, j));
        }
    }
    return g;
}

const char*
fast_path_name(FastPath path)
{
    switch (path) {
    case FastPath::Trivial: return "trivial";
    case FastPath::Tree: return "tree";
    case FastPath::Tw2: return "tw2";
    case FastPath::Grid: return "grid";
    }
    return "?";
}

std::optional<SpecialResult>
solve_special(const Instance& inst)
{
    const Graph& g = inst.graph;
    SpecialResult r;
    r.lambda = static_separation(g, inst.s, inst.t);
    if (inst.s == inst.t || g.adjacent(inst.s, inst.t)) {
        r.d = ExtendedCount::infinite();
        r.winner = Side::Facilitator;
        r.path = FastPath::Trivial;
        return r;
    }
    if (!inst.connected) return std::nullopt;
    if (is_tree(g)) {
        r.d = 1;
        r.path = FastPath::Tree;
    } else if (recognize_tw2(g)) {
        r.d = r.lambda;
        r.path = FastPath::Tw2;
    } else if (grid_meta(g)) {
        r.d = 2;
        r.path = FastPath::Grid;
    } else {
        return std::nullopt;
    }
    r.winner = inst.k >= r.d.value() ? Side::Divider : Side::Facilitator;
    return r;
}

GridDivider::GridDivider(const Graph& g, Vertex s, Vertex t) : graph(g)
{
    auto m = grid_meta(g);
    if (!m) throw std::invalid_argument("graph carries no full grid coordinates");
    meta = std::move(*m);
    if (s == t || g.adjacent(s, t)) throw AdjacentTerminals();
    Coord a = at(s);
    Coord b = at(t);
    st.romeo = s;
    st.juliet = t;
    if (std::abs(b.row - a.row) == 1 && std::abs(b.col - a.col) == 1) {
        st.diagonal = true;
        st.toward = b.row > a.row ? 1 : -1;
        st.d1 = meta.vertex(a.row, b.col);
        st.d2 = meta.vertex(b.row, a.col);
        return;
    }
    aim(s, t, st);
}

// picks the axis with a gap of at least 2 and places both shadows on it
void
GridDivider::aim(Vertex r, Vertex j, MimicState& out) const
{
    Coord a = at(r);
    Coord b = at(j);
    int dr = b.row - a.row;
    int dc = b.col - a.col;
    if (std::abs(dr) >= 2 || std::abs(dc) < 2) {
        out.axis = Axis::Row;
        out.toward = dr > 0 ? 1 : -1;
    } else {
        out.axis = Axis::Col;
        out.toward = dc > 0 ? 1 : -1;
    }
    out.diagonal = false;
    out.romeo = r;
    out.juliet = j;
    out.d1 = shift(r, out.axis, out.toward);
    out.d2 = shift(j, out.axis, -out.toward);
}

Coord
GridDivider::at(Vertex v) const
{
    return *graph.coord(v);
}

Vertex
GridDivider::shift(Vertex v, int delta) const
{
    return shift(v, st.axis, delta);
}

Vertex
GridDivider::shift(Vertex v, Axis axis, int delta) const
{
    Coord c = at(v);
    if (axis == Axis::Row) {
        c.row += delta;
    } else {
        c.col += delta;
    }
    if (!meta.inside(c.row, c.col)) throw MimicGap("mimic square off the grid");
    return meta.vertex(c.row, c.col);
}

int
GridDivider::gap() const
{
    Coord a = at(st.romeo);
    Coord b = at(st.juliet);
    int raw = st.axis == Axis::Row ? b.row - a.row : b.col - a.col;
    return raw * st.toward;
}

DPlacement
GridDivider::place(const Instance&)
{
    return DPlacement({st.d1, st.d2});
}

bool
GridDivider::leave_diagonal(Vertex r, Vertex j, const FPlacement& f, MimicState& out) const
{
    if (r == st.romeo && j == st.juliet) {
        out = st;
        return true;
    }
    try {
        aim(r, j, out);
    } catch (const MimicGap&) {
        return false;
    }
    std::array<Vertex, 2> from{st.d1, st.d2};
    std::array<Vertex, 2> to{out.d1, out.d2};
    return !f.contains(out.d1) && !f.contains(out.d2) && multiset_adjacent(from, to, graph);
}

bool
GridDivider::reply(Vertex r, Vertex j, const FPlacement& f, MimicState& out) const
{
    auto close = [&](Vertex x, Vertex y) { return x == y || graph.adjacent(x, y); };
    if (!close(st.romeo, r) || !close(st.juliet, j)) return false;
    if (st.diagonal) return leave_diagonal(r, j, f, out);
    out = st;
    out.romeo = r;
    out.juliet = j;
    try {
        // an unmoved agent keeps its shadow in place
        if (r != st.romeo) out.d1 = shift(r, st.toward);
        if (j != st.juliet) out.d2 = shift(j, -st.toward);
    } catch (const MimicGap&) {
        return false;
    }
    return !f.contains(out.d1) && !f.contains(out.d2);
}

DPlacement
GridDivider::move(const Position& p, unsigned round)
{
    MimicState next;
    bool ok = reply(p.f.a, p.f.b, p.f, next);
    if (!ok) ok = reply(p.f.b, p.f.a, p.f, next);
    if (!ok) {
        throw MimicGap("no mimic reply in round " + std::to_string(round) + " for Romeo at "
                       + std::to_string(p.f.a) + " and Juliet at " + std::to_string(p.f.b));
    }
    st = next;
    return DPlacement({st.d1, st.d2});
}

} // namespace rendezvous
