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

#include "rendezvous/graph.hpp"

#include <algorithm>
#include <deque>

namespace rendezvous {

namespace {
const std::string empty_label;
}

Graph::Graph(std::size_t n) : adj(n) {}

Vertex
Graph::add_vertex(std::string label)
{
    adj.emplace_back();
    if (!labels.empty() || !label.empty()) {
        labels.resize(adj.size());
        labels.back() = std::move(label);
    }
    if (!coords.empty()) coords.resize(adj.size());
    return static_cast<Vertex>(adj.size() - 1);
}

void
Graph::add_edge(Vertex u, Vertex v)
{
    if (!valid(u) || !valid(v)) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    auto& nu = adj[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) throw std::invalid_argument("duplicate edge");
    nu.insert(it, v);
    auto& nv = adj[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    m++;
}

void
Graph::remove_edge(Vertex u, Vertex v)
{
    if (!adjacent(u, v)) throw std::invalid_argument("no such edge");
    auto& nu = adj[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adj[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    m--;
}

bool
Graph::adjacent(Vertex u, Vertex v) const
{
    if (!valid(u) || !valid(v)) return false;
    // search the shorter list
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    Vertex x = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), x);
}

std::vector<std::pair<Vertex, Vertex>>
Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m);
    for (Vertex u = 0; u < adj.size(); u++) {
        for (Vertex v : adj[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool
Graph::has_labels() const
{
    return std::any_of(labels.begin(), labels.end(), [](const std::string& l) { return !l.empty(); });
}

const std::string&
Graph::label(Vertex v) const
{
    if (v < labels.size()) return labels[v];
    return empty_label;
}

void
Graph::set_label(Vertex v, std::string text)
{
    if (!valid(v)) throw std::invalid_argument("label vertex out of range");
    if (labels.size() < adj.size()) labels.resize(adj.size());
    labels[v] = std::move(text);
}

std::optional<Vertex>
Graph::find_label(const std::string& text) const
{
    for (Vertex v = 0; v < labels.size(); v++) {
        if (labels[v] == text) return v;
    }
    return std::nullopt;
}

bool
Graph::has_any_coord() const
{
    return std::any_of(coords.begin(), coords.end(), [](const auto& c) { return c.has_value(); });
}

bool
Graph::has_all_coords() const
{
    if (adj.empty() || coords.size() < adj.size()) return false;
    return std::all_of(coords.begin(), coords.end(), [](const auto& c) { return c.has_value(); });
}

std::optional<Coord>
Graph::coord(Vertex v) const
{
    if (v < coords.size()) return coords[v];
    return std::nullopt;
}

void
Graph::set_coord(Vertex v, Coord c)
{
    if (!valid(v)) throw std::invalid_argument("coord vertex out of range");
    if (coords.size() < adj.size()) coords.resize(adj.size());
    coords[v] = c;
}

std::vector<int>
Graph::distances_from(Vertex from, const std::vector<char>* blocked) const
{
    std::vector<int> dist(adj.size(), -1);
    if (!valid(from)) return dist;
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : adj[u]) {
            if (dist[v] >= 0) continue;
            if (blocked != nullptr && (*blocked)[v]) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

bool
Graph::reaches(Vertex from, Vertex to, const std::vector<char>& blocked) const
{
    if (blocked[from] || blocked[to]) return false;
    return distances_from(from, &blocked)[to] >= 0;
}

bool
Graph::connected() const
{
    if (adj.size() <= 1) return true;
    auto dist = distances_from(0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

Graph
Graph::induced(const std::vector<char>& keep, std::vector<Vertex>* old_index) const
{
    std::vector<Vertex> new_of(adj.size(), UINT32_MAX);
    Graph h;
    std::vector<Vertex> olds;
    for (Vertex v = 0; v < adj.size(); v++) {
        if (!keep[v]) continue;
        new_of[v] = h.add_vertex(label(v));
        if (auto c = coord(v)) h.set_coord(new_of[v], *c);
        olds.push_back(v);
    }
    for (auto [u, v] : edges()) {
        if (keep[u] && keep[v]) h.add_edge(new_of[u], new_of[v]);
    }
    if (old_index != nullptr) *old_index = std::move(olds);
    return h;
}

bool
Graph::operator==(const Graph& other) const
{
    if (adj != other.adj) return false;
    for (Vertex v = 0; v < adj.size(); v++) {
        if (label(v) != other.label(v) || coord(v) != other.coord(v)) return false;
    }
    return true;
}

const char*
side_name(Side side)
{
    return side == Side::Facilitator ? "Facilitator" : "Divider";
}

Side
other_side(Side side)
{
    return side == Side::Facilitator ? Side::Divider : Side::Facilitator;
}

Instance
make_instance(Graph graph, Vertex s, Vertex t, unsigned k)
{
    if (!graph.valid(s) || !graph.valid(t)) throw std::invalid_argument("terminal out of range");
    if (k < 1) throw std::invalid_argument("agent count must be at least 1");
    Instance inst;
    inst.connected = graph.connected();
    inst.graph = std::move(graph);
    inst.s = s;
    inst.t = t;
    inst.k = k;
    return inst;
}

DPlacement::DPlacement(std::vector<Vertex> v) : agents(std::move(v))
{
    std::sort(agents.begin(), agents.end());
}

bool
DPlacement::contains(Vertex v) const
{
    return std::binary_search(agents.begin(), agents.end(), v);
}

bool
compatible(const FPlacement& f, const DPlacement& d)
{
    return !d.contains(f.a) && !d.contains(f.b);
}

namespace {

bool
step_ok(const Graph& g, Vertex from, Vertex to)
{
    return from == to || g.adjacent(from, to);
}

// Kuhn augmenting path on the stay-or-step bipartite graph
bool
augment(std::size_t i, std::span<const Vertex> x, std::span<const Vertex> y, const Graph& g,
        std::vector<int>& match_of_y, std::vector<char>& seen)
{
    for (std::size_t j = 0; j < y.size(); j++) {
        if (seen[j] || !step_ok(g, x[i], y[j])) continue;
        seen[j] = 1;
        if (match_of_y[j] < 0 || augment(match_of_y[j], x, y, g, match_of_y, seen)) {
            match_of_y[j] = static_cast<int>(i);
            return true;
        }
    }
    return false;
}

} // namespace

bool
multiset_adjacent(std::span<const Vertex> x, std::span<const Vertex> y, const Graph& g)
{
    if (x.size() != y.size()) throw std::invalid_argument("multiset size mismatch");
    if (x.size() == 2) {
        return (step_ok(g, x[0], y[0]) && step_ok(g, x[1], y[1]))
            || (step_ok(g, x[0], y[1]) && step_ok(g, x[1], y[0]));
    }
    std::vector<int> match_of_y(y.size(), -1);
    std::vector<char> seen(y.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(i, x, y, g, match_of_y, seen)) return false;
    }
    return true;
}

bool
multiset_adjacent(const FPlacement& x, const FPlacement& y, const Graph& g)
{
    Vertex a[2] = {x.a, x.b};
    Vertex b[2] = {y.a, y.b};
    return multiset_adjacent(std::span<const Vertex>(a, 2), std::span<const Vertex>(b, 2), g);
}

bool
multiset_adjacent(const DPlacement& x, const DPlacement& y, const Graph& g)
{
    return multiset_adjacent(std::span<const Vertex>(x.agents), std::span<const Vertex>(y.agents), g);
}

std::size_t
common_neighbor_count(const Graph& g, Vertex u, Vertex v)
{
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            count++;
            ++i;
            ++j;
        }
    }
    return count;
}

} // namespace rendezvous
