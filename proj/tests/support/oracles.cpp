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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace rendezvous::testing {

namespace {

// key: [a, b, d_1, ..., d_k] with a <= b and d sorted
using Key = std::vector<Vertex>;

constexpr unsigned kInf = std::numeric_limits<unsigned>::max();

Key
make_key(Vertex a, Vertex b, std::vector<Vertex> d)
{
    std::sort(d.begin(), d.end());
    Key key{std::min(a, b), std::max(a, b)};
    key.insert(key.end(), d.begin(), d.end());
    return key;
}

std::vector<Vertex>
options(const Graph& g, Vertex v)
{
    std::vector<Vertex> out{v};
    out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    return out;
}

std::vector<std::pair<Vertex, Vertex>>
facilitator_moves(const Graph& g, const Key& key)
{
    auto blocked = [&](Vertex v) { return std::find(key.begin() + 2, key.end(), v) != key.end(); };
    std::set<std::pair<Vertex, Vertex>> out;
    for (Vertex x : options(g, key[0])) {
        if (blocked(x)) continue;
        for (Vertex y : options(g, key[1])) {
            if (blocked(y)) continue;
            out.insert({std::min(x, y), std::max(x, y)});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<Vertex>>
divider_moves(const Graph& g, const Key& key)
{
    const std::size_t k = key.size() - 2;
    std::set<std::vector<Vertex>> out;
    std::vector<Vertex> cur(k);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            std::vector<Vertex> sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            out.insert(sorted);
            return;
        }
        for (Vertex w : options(g, key[2 + i])) {
            if (w == key[0] || w == key[1]) continue;
            cur[i] = w;
            rec(i + 1);
        }
    };
    rec(0);
    return {out.begin(), out.end()};
}

// all sorted k-multisets over the vertices not in excluded
void
multisets(std::size_t n, unsigned k, const std::vector<Vertex>& excluded,
          const std::function<void(const std::vector<Vertex>&)>& visit)
{
    std::vector<Vertex> allowed;
    for (Vertex v = 0; v < n; v++) {
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) allowed.push_back(v);
    }
    std::vector<Vertex> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == k) {
            visit(cur);
            return;
        }
        for (std::size_t i = from; i < allowed.size(); i++) {
            cur.push_back(allowed[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
}

struct NaiveGame {
    explicit NaiveGame(const Instance& inst) : g(inst.graph)
    {
        const std::size_t n = g.size();
        for (Vertex a = 0; a < n; a++) {
            for (Vertex b = a; b < n; b++) {
                multisets(n, inst.k, {a, b}, [&](const std::vector<Vertex>& d) { keys.push_back(make_key(a, b, d)); });
            }
        }
        for (std::size_t i = 0; i < keys.size(); i++) id[keys[i]] = i;
    }

    // value iteration from infinity; vf counts Facilitator moves to a meeting
    void solve()
    {
        vf.assign(keys.size(), kInf);
        vd.assign(keys.size(), kInf);
        for (std::size_t i = 0; i < keys.size(); i++) {
            if (keys[i][0] == keys[i][1]) vf[i] = vd[i] = 0;
        }
        std::vector<std::vector<std::size_t>> fsucc(keys.size()), dsucc(keys.size());
        for (std::size_t i = 0; i < keys.size(); i++) {
            if (keys[i][0] == keys[i][1]) continue;
            std::vector<Vertex> d(keys[i].begin() + 2, keys[i].end());
            for (auto [x, y] : facilitator_moves(g, keys[i])) fsucc[i].push_back(id.at(make_key(x, y, d)));
            for (const auto& nd : divider_moves(g, keys[i])) dsucc[i].push_back(id.at(make_key(keys[i][0], keys[i][1], nd)));
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < keys.size(); i++) {
                if (keys[i][0] == keys[i][1]) continue;
                unsigned best = kInf;
                for (std::size_t q : fsucc[i]) {
                    unsigned v = keys[q][0] == keys[q][1] ? 0 : vd[q];
                    if (v != kInf) best = std::min(best, v + 1);
                }
                if (best < vf[i]) {
                    vf[i] = best;
                    changed = true;
                }
                unsigned worst = 0;
                for (std::size_t q : dsucc[i]) worst = std::max(worst, vf[q]);
                if (worst < vd[i]) {
                    vd[i] = worst;
                    changed = true;
                }
            }
        }
    }

    const Graph& g;
    std::vector<Key> keys;
    std::map<Key, std::size_t> id;
    std::vector<unsigned> vf, vd;
};

bool
separated(const Graph& g, Vertex s, Vertex t, const std::vector<char>& removed)
{
    std::vector<char> seen(g.size(), 0);
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (v == t) return false;
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w] && !removed[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return true;
}

std::uint64_t
binom(std::uint64_t a, std::uint64_t b)
{
    if (b > a) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; i++) r = r * (a - b + i) / i;
    return r;
}

} // namespace

NaiveSolution
naive_solve(const Instance& inst)
{
    NaiveSolution out;
    if (inst.s == inst.t) {
        out.min_rounds = 0;
        return out;
    }
    NaiveGame game(inst);
    game.solve();
    out.pairs = game.keys.size();
    unsigned worst = 0;
    multisets(inst.graph.size(), inst.k, {inst.s, inst.t}, [&](const std::vector<Vertex>& d) {
        worst = std::max(worst, game.vf[game.id.at(make_key(inst.s, inst.t, d))]);
    });
    if (worst == kInf) {
        out.winner = Side::Divider;
    } else {
        out.min_rounds = worst;
    }
    return out;
}

bool
naive_wins_within(const Instance& inst, unsigned tau)
{
    if (inst.s == inst.t) return true;
    const Graph& g = inst.graph;
    std::map<std::pair<Key, unsigned>, bool> memo;
    std::function<bool(const Key&, unsigned)> fwin = [&](const Key& key, unsigned left) -> bool {
        auto it = memo.find({key, left});
        if (it != memo.end()) return it->second;
        bool win = false;
        std::vector<Vertex> d(key.begin() + 2, key.end());
        for (auto [x, y] : facilitator_moves(g, key)) {
            if (x == y) {
                win = true;
                break;
            }
            if (left <= 1) continue;
            Key after = make_key(x, y, d);
            bool all = true;
            for (const auto& nd : divider_moves(g, after)) {
                if (!fwin(make_key(x, y, nd), left - 1)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                win = true;
                break;
            }
        }
        memo[{key, left}] = win;
        return win;
    };
    bool all = true;
    multisets(g.size(), inst.k, {inst.s, inst.t}, [&](const std::vector<Vertex>& d) {
        if (all && !fwin(make_key(inst.s, inst.t, d), tau)) all = false;
    });
    return all;
}

std::optional<unsigned>
brute_lambda(const Graph& g, Vertex s, Vertex t)
{
    if (s == t || g.adjacent(s, t)) return std::nullopt;
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < g.size(); v++) {
        if (v != s && v != t) inner.push_back(v);
    }
    const std::size_t m = inner.size();
    unsigned best = static_cast<unsigned>(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); mask++) {
        unsigned size = static_cast<unsigned>(__builtin_popcountll(mask));
        if (size >= best) continue;
        std::vector<char> removed(g.size(), 0);
        for (std::size_t i = 0; i < m; i++) {
            if (mask >> i & 1) removed[inner[i]] = 1;
        }
        if (separated(g, s, t, removed)) best = size;
    }
    return best;
}

std::uint64_t
brute_pair_count(std::size_t n, unsigned k)
{
    std::uint64_t count = 0;
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a; b < n; b++) multisets(n, k, {a, b}, [&](const std::vector<Vertex>&) { count++; });
    }
    return count;
}

std::uint64_t
closed_form_pairs(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t met = n * binom(n + k - 2, k);
    std::uint64_t apart = n >= 2 ? n * (n - 1) / 2 * binom(n + k - 3, k) : 0;
    return met + apart;
}

std::vector<Vertex>
brute_vertex_cover(const Graph& g, Vertex s, Vertex t)
{
    const std::size_t n = g.size();
    std::vector<Vertex> best;
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); mask++) {
        if (!(mask >> s & 1) || !(mask >> t & 1)) continue;
        if (found && static_cast<std::size_t>(__builtin_popcountll(mask)) >= best.size()) continue;
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (!(mask >> u & 1) && !(mask >> v & 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        best.clear();
        for (Vertex v = 0; v < n; v++) {
            if (mask >> v & 1) best.push_back(v);
        }
        found = true;
    }
    return best;
}

bool
brute_treewidth_at_most_two(const Graph& g)
{
    // a K4 minor is four disjoint connected branch sets, pairwise adjacent;
    // label 4 marks unused vertices
    const std::size_t n = g.size();
    if (n < 4) return true;
    std::vector<unsigned> label(n, 0);
    auto connected_set = [&](unsigned c) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; v++) {
            if (label[v] == c) members.push_back(v);
        }
        if (members.empty()) return false;
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{members[0]};
        seen[members[0]] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            reached++;
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w] && label[w] == c) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return reached == members.size();
    };
    while (true) {
        bool model = true;
        for (unsigned c = 0; c < 4 && model; c++) model = connected_set(c);
        if (model) {
            bool touch[4][4] = {};
            for (auto [u, v] : g.edges()) {
                if (label[u] < 4 && label[v] < 4) touch[label[u]][label[v]] = touch[label[v]][label[u]] = true;
            }
            for (unsigned a = 0; a < 4 && model; a++) {
                for (unsigned b = a + 1; b < 4 && model; b++) model = touch[a][b];
            }
            if (model) return false;
        }
        std::size_t i = 0;
        while (i < n && label[i] == 4) label[i++] = 0;
        if (i == n) return true;
        label[i]++;
    }
}

Graph
random_connected(std::size_t n, double extra_edge_prob, std::mt19937_64& rng)
{
    Graph g(n);
    for (Vertex v = 1; v < n; v++) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    std::bernoulli_distribution extra(extra_edge_prob);
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) {
            if (!g.adjacent(u, v) && extra(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph
random_series_parallel(std::size_t n, std::mt19937_64& rng)
{
    Graph g(2);
    g.add_edge(0, 1);
    while (g.size() < n) {
        auto edges = g.edges();
        std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
        auto [u, v] = edges[pick_edge(rng)];
        std::uniform_int_distribution<int> op(0, 5);
        Vertex w = g.add_vertex();
        switch (op(rng)) {
        case 0:
        case 1:
            // series: subdivide uv
            g.remove_edge(u, v);
            g.add_edge(u, w);
            g.add_edge(w, v);
            break;
        case 2:
        case 3:
        case 4:
            // parallel: a second route u-w-v
            g.add_edge(u, w);
            g.add_edge(w, v);
            break;
        default: {
            std::uniform_int_distribution<Vertex> any(0, w - 1);
            g.add_edge(any(rng), w);
        }
        }
    }
    return g;
}

Graph
random_theta(std::size_t n, unsigned branches, std::mt19937_64& rng)
{
    Graph g(2);
    for (unsigned b = 0; b < branches; b++) {
        Vertex mid = g.add_vertex();
        g.add_edge(0, mid);
        g.add_edge(mid, 1);
    }
    while (g.size() < n) {
        auto edges = g.edges();
        std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
        auto [u, v] = edges[pick_edge(rng)];
        Vertex w = g.add_vertex();
        if (std::bernoulli_distribution(0.5)(rng)) g.remove_edge(u, v);
        g.add_edge(u, w);
        g.add_edge(w, v);
    }
    return g;
}

std::optional<std::pair<Vertex, Vertex>>
random_far_pair(const Graph& g, std::mt19937_64& rng)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < g.size(); u++) {
        for (Vertex v = u + 1; v < g.size(); v++) {
            if (!g.adjacent(u, v)) pairs.push_back({u, v});
        }
    }
    if (pairs.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    auto p = pairs[pick(rng)];
    if (rng() & 1) std::swap(p.first, p.second);
    return p;
}

Instance
random_planted_twins(unsigned k, std::mt19937_64& rng)
{
    while (true) {
        std::uniform_int_distribution<unsigned> core_extra(1, 2);
        const unsigned core = 2 + core_extra(rng);
        Graph g(core);
        // s = 0 and t = 1 stay non-adjacent; other core edges at random
        std::bernoulli_distribution coin(0.5);
        for (Vertex u = 0; u < core; u++) {
            for (Vertex v = std::max<Vertex>(u + 1, 2); v < core; v++) {
                if (coin(rng)) g.add_edge(u, v);
            }
        }
        std::uniform_int_distribution<unsigned> nclasses(1, 3);
        std::uniform_int_distribution<unsigned> mask_pick(1, (1u << core) - 1);
        std::uniform_int_distribution<unsigned> members(1, k + 4);
        const unsigned classes = nclasses(rng);
        std::set<unsigned> used;
        for (unsigned c = 0; c < classes; c++) {
            unsigned mask = mask_pick(rng);
            if (!used.insert(mask).second) continue;
            const unsigned count = members(rng);
            for (unsigned r = 0; r < count; r++) {
                Vertex w = g.add_vertex();
                for (Vertex x = 0; x < core; x++) {
                    if (mask >> x & 1) g.add_edge(w, x);
                }
            }
        }
        if (!g.connected() || g.size() > 18) continue;
        // post-kernel size: core plus at most k+1 per class
        std::size_t bound = core;
        for (unsigned mask : used) {
            (void)mask;
            bound += k + 1;
        }
        if (bound > 12) continue;
        return make_instance(std::move(g), 0, 1, k);
    }
}

} // namespace rendezvous::testing
