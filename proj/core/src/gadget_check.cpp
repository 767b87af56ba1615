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

#include "rendezvous/gadget_check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

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

class Checker {
public:
    Checker(const Instance& inst_, const GadgetIndex& gi_) : inst(inst_), g(inst_.graph), gi(gi_) {}

    void add(const std::string& name, const std::vector<std::string>& problems)
    {
        GadgetCheck c;
        c.name = name;
        c.passed = problems.empty();
        for (std::size_t i = 0; i < problems.size() && i < 8; i++) {
            if (i > 0) c.detail += "; ";
            c.detail += problems[i];
        }
        if (problems.size() > 8) c.detail += "; and " + std::to_string(problems.size() - 8) + " more";
        report.checks.push_back(std::move(c));
    }

    void registry()
    {
        std::vector<std::string> bad;
        for (const RegisteredPath& p : gi.paths) {
            if (!g.valid(p.from) || !g.valid(p.to)) {
                bad.push_back(p.id + ": endpoint out of range");
                continue;
            }
            // walk over real edges only, counting what is actually there
            std::uint64_t walked = 0;
            Vertex prev = p.from;
            bool broken = false;
            for (Vertex v : p.vertices) {
                if (!g.valid(v) || !g.adjacent(prev, v)) {
                    broken = true;
                    break;
                }
                walked++;
                prev = v;
            }
            if (broken || !g.adjacent(prev, p.to)) {
                bad.push_back(p.id + ": chain broken after " + std::to_string(walked) + " internal vertices");
                continue;
            }
            if (walked != p.internal) {
                bad.push_back(p.id + ": registered " + std::to_string(p.internal) + " internal vertices, graph has " +
                              std::to_string(walked));
            }
        }
        add("registry", bad);
    }

    void coverage()
    {
        std::vector<std::string> bad;
        std::vector<unsigned> owners(g.size(), 0);
        std::vector<unsigned> endpoint_uses(g.size(), 0);
        for (const auto& [name, v] : gi.named) {
            if (!g.valid(v)) {
                bad.push_back("named vertex " + name + " out of range");
                continue;
            }
            owners[v]++;
        }
        std::uint64_t path_edges = 0;
        for (const RegisteredPath& p : gi.paths) {
            for (Vertex v : p.vertices) {
                if (g.valid(v)) owners[v]++;
            }
            if (g.valid(p.from)) endpoint_uses[p.from]++;
            if (g.valid(p.to)) endpoint_uses[p.to]++;
            path_edges += p.vertices.size() + 1;
        }
        for (Vertex v = 0; v < g.size(); v++) {
            if (owners[v] != 1) {
                bad.push_back("vertex " + std::to_string(v) + " (" + g.label(v) + ") owned " +
                              std::to_string(owners[v]) + " times");
            }
        }
        // path internals carry two path edges plus any paths ending on them
        std::set<Vertex> named_set;
        for (const auto& [name, v] : gi.named) named_set.insert(v);
        for (const RegisteredPath& p : gi.paths) {
            for (Vertex v : p.vertices) {
                if (!g.valid(v) || named_set.count(v)) continue;
                if (g.degree(v) != 2 + endpoint_uses[v]) {
                    bad.push_back(p.id + ": internal vertex " + g.label(v) + " has degree " +
                                  std::to_string(g.degree(v)) + ", expected " + std::to_string(2 + endpoint_uses[v]));
                }
            }
        }
        std::uint64_t direct = 0;
        for (auto [u, v] : g.edges()) {
            if (named_set.count(u) && named_set.count(v)) direct++;
        }
        if (path_edges + direct != g.edge_count()) {
            bad.push_back("edges: " + std::to_string(path_edges) + " path edges + " + std::to_string(direct) +
                          " direct edges != " + std::to_string(g.edge_count()));
        }
        add("coverage", bad);
    }

    void expect_degree(std::vector<std::string>& bad, const std::string& name, std::size_t want)
    {
        auto it = gi.named.find(name);
        if (it == gi.named.end()) {
            bad.push_back("missing named vertex " + name);
            return;
        }
        if (!g.valid(it->second)) return;
        std::size_t got = g.degree(it->second);
        if (got != want) {
            bad.push_back(name + " has degree " + std::to_string(got) + ", expected " + std::to_string(want));
        }
    }

    unsigned count_named(const std::string& prefix, const std::string& suffix)
    {
        unsigned c = 0;
        for (unsigned i = 1;; i++) {
            if (!gi.named.count(prefix + idx(i) + suffix)) return c;
            c++;
        }
    }

    void degrees_3dm(unsigned n, unsigned m)
    {
        std::vector<std::string> bad;
        for (const char* term : {"s", "t"}) expect_degree(bad, term, 2 + 2 * n + 6);
        for (const char* gname : {"g1", "g2"}) expect_degree(bad, gname, 2);
        for (unsigned i = 1; i <= n; i++) {
            expect_degree(bad, "u" + idx(i) + idx(0), 3);
            expect_degree(bad, "u" + idx(i) + idx(m + 1), 3);
        }
        for (const char* side : kSides) {
            for (unsigned ty = 0; ty < 3; ty++) {
                const std::string sfx = std::string(".") + side;
                expect_degree(bad, kTypes[ty] + sfx, n + n * m);
                for (const char* term : {"s", "t"}) {
                    expect_degree(bad, std::string(term) + "." + kTypes[ty] + sfx, 1 + n);
                }
                for (unsigned i = 1; i <= n; i++) {
                    expect_degree(bad, kTypes[ty] + idx(i) + sfx, 2);
                    expect_degree(bad, kEnds[ty] + idx(i) + sfx, 3);
                }
            }
        }
        add("degrees", bad);
    }

    void degrees_nae(unsigned n, unsigned m, unsigned dstar)
    {
        std::vector<std::string> bad;
        for (const char* term : {"s", "t"}) expect_degree(bad, term, 2 + 2 * n + 2 * m);
        for (const char* gname : {"g1", "g2"}) expect_degree(bad, gname, 2);
        // each literal on variable i adds one path at each end of its row
        std::vector<std::size_t> occurrences(n + 1, 0);
        for (const RegisteredPath& p : gi.paths) {
            if (p.id.rfind("clause", 0) == 0 && p.id.size() > 2 && p.id.substr(p.id.size() - 2) == ".l") {
                for (unsigned i = 1; i <= n; i++) {
                    if (gi.named.count("u" + idx(i) + idx(0)) && p.to == gi.named.at("u" + idx(i) + idx(0))) {
                        occurrences[i]++;
                    }
                }
            }
        }
        for (unsigned i = 1; i <= n; i++) {
            expect_degree(bad, "u" + idx(i) + idx(0), 3 + occurrences[i]);
            expect_degree(bad, "u" + idx(i) + idx(dstar + 1), 3 + occurrences[i]);
        }
        for (unsigned j = 1; j <= m; j++) {
            expect_degree(bad, "c" + idx(j) + ".l", 5);
            expect_degree(bad, "c" + idx(j) + ".r", 5);
        }
        add("degrees", bad);
    }

    void degrees_setcover(unsigned n, unsigned m, unsigned budget)
    {
        std::vector<std::string> bad;
        expect_degree(bad, "s", n + budget + 1);
        expect_degree(bad, "t", n + budget + 1);
        expect_degree(bad, "z", 2);
        for (unsigned i = 1; i <= budget; i++) expect_degree(bad, "w" + idx(i), 2 + m);
        add("degrees", bad);
    }

    void connected()
    {
        std::vector<std::string> bad;
        if (!g.connected()) bad.push_back("graph is disconnected");
        add("connected", bad);
    }

    void forest(const std::string& name, const std::vector<Vertex>& witness, bool stars_only)
    {
        std::vector<std::string> bad;
        ForestShape shape = forest_shape(g, witness);
        if (!shape.acyclic) bad.push_back("G minus the witness has a cycle");
        for (std::size_t c = 0; c < shape.components.size(); c++) {
            TreeShape ts = shape.components[c];
            bool fine = ts == TreeShape::Path || ts == TreeShape::SubdividedStar ||
                        (!stars_only && ts == TreeShape::SubdividedCaterpillar);
            if (!fine) bad.push_back("component " + std::to_string(c) + " is " + tree_shape_name(ts));
        }
        add(name, bad);
        if (bad.empty()) {
            report.checks.back().detail = std::to_string(witness.size()) + "-vertex witness, " +
                                          std::to_string(shape.components.size()) + " components";
        }
    }

    void vertex_cover(unsigned n, unsigned budget)
    {
        std::vector<std::string> bad;
        std::vector<char> in(g.size(), 0);
        in[gi.at("s")] = in[gi.at("t")] = 1;
        for (unsigned h = 1; h <= n; h++) in[gi.at("u" + idx(h))] = 1;
        for (unsigned i = 1; i <= budget; i++) in[gi.at("w" + idx(i))] = 1;
        for (auto [u, v] : g.edges()) {
            if (!in[u] && !in[v]) bad.push_back("edge " + g.label(u) + "-" + g.label(v) + " uncovered");
        }
        add("cover", bad);
    }

    const Instance& inst;
    const Graph& g;
    const GadgetIndex& gi;
    GadgetReport report;
};

} // namespace

bool
GadgetReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const GadgetCheck& c) { return c.passed; });
}

const GadgetCheck*
GadgetReport::find(const std::string& name) const
{
    for (const GadgetCheck& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const char*
tree_shape_name(TreeShape shape)
{
    switch (shape) {
    case TreeShape::Path: return "path";
    case TreeShape::SubdividedStar: return "subdivided star";
    case TreeShape::SubdividedCaterpillar: return "subdivided caterpillar";
    case TreeShape::Other: return "other tree";
    }
    return "?";
}

TreeShape
classify_tree(const Graph& tree)
{
    const std::size_t n = tree.size();
    std::vector<std::size_t> deg(n);
    std::size_t branches = 0;
    for (Vertex v = 0; v < n; v++) {
        deg[v] = tree.degree(v);
        if (deg[v] >= 3) branches++;
    }
    if (branches == 0) return TreeShape::Path;
    if (branches == 1) return TreeShape::SubdividedStar;
    // peel leaves that are not branch vertices; the branch vertices lie on one
    // path exactly when what remains has maximum degree two
    std::vector<char> gone(n, 0);
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; v++) {
        if (deg[v] <= 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        Vertex v = leaves.back();
        leaves.pop_back();
        if (gone[v] || tree.degree(v) >= 3) continue;
        gone[v] = 1;
        for (Vertex w : tree.neighbors(v)) {
            if (gone[w]) continue;
            if (--deg[w] == 1 && tree.degree(w) < 3) leaves.push_back(w);
        }
    }
    for (Vertex v = 0; v < n; v++) {
        if (!gone[v] && deg[v] > 2) return TreeShape::Other;
    }
    return TreeShape::SubdividedCaterpillar;
}

ForestShape
forest_shape(const Graph& g, const std::vector<Vertex>& removed)
{
    std::vector<char> keep(g.size(), 1);
    for (Vertex v : removed) {
        if (g.valid(v)) keep[v] = 0;
    }
    Graph rest = g.induced(keep);
    ForestShape out;
    std::vector<int> comp(rest.size(), -1);
    int ncomp = 0;
    for (Vertex root = 0; root < rest.size(); root++) {
        if (comp[root] >= 0) continue;
        std::vector<Vertex> members{root};
        comp[root] = ncomp;
        std::size_t edges2 = 0;
        for (std::size_t i = 0; i < members.size(); i++) {
            Vertex v = members[i];
            edges2 += rest.degree(v);
            for (Vertex w : rest.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    members.push_back(w);
                }
            }
        }
        ncomp++;
        if (edges2 / 2 != members.size() - 1) {
            out.acyclic = false;
            out.components.push_back(TreeShape::Other);
            continue;
        }
        std::vector<char> in(rest.size(), 0);
        for (Vertex v : members) in[v] = 1;
        out.components.push_back(classify_tree(rest.induced(in)));
    }
    return out;
}

std::vector<Vertex>
feedback_witness_3dm(const GadgetIndex& gi)
{
    std::vector<Vertex> out{gi.at("s"), gi.at("t")};
    for (const char* side : kSides) {
        for (const char* ty : kTypes) {
            out.push_back(gi.at(std::string("s.") + ty + "." + side));
            out.push_back(gi.at(std::string(ty) + "." + side));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex>
feedback_witness_nae(const GadgetIndex& gi)
{
    std::vector<Vertex> out{gi.at("s"), gi.at("t")};
    const unsigned n = gi.k - 2;
    const unsigned dstar = static_cast<unsigned>(gi.scale);
    for (unsigned i = 1; i <= n; i++) {
        out.push_back(gi.at("u" + idx(i) + idx(0)));
        out.push_back(gi.at("u" + idx(i) + idx(dstar + 1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GadgetReport
validate_gadgets(const Instance& inst, const GadgetIndex& gi, ReductionKind kind)
{
    Checker ck(inst, gi);
    if (gi.kind != kind) {
        ck.add("kind", {std::string("gadget index is ") + reduction_name(gi.kind) + ", expected " + reduction_name(kind)});
        return ck.report;
    }
    ck.registry();
    ck.coverage();
    try {
        switch (kind) {
        case ReductionKind::ThreeDM: {
            const unsigned n = gi.k - 2;
            const std::uint64_t rest = gi.scale - std::uint64_t(n) * n;
            const unsigned m = static_cast<unsigned>(std::llround(std::sqrt(static_cast<double>(rest))));
            ck.degrees_3dm(n, m);
            ck.connected();
            ck.forest("forest", feedback_witness_3dm(gi), false);
            break;
        }
        case ReductionKind::NAE: {
            const unsigned n = gi.k - 2;
            ck.degrees_nae(n, ck.count_named("c", ".l"), static_cast<unsigned>(gi.scale));
            ck.connected();
            ck.forest("stars", feedback_witness_nae(gi), true);
            break;
        }
        case ReductionKind::SetCover: {
            const unsigned budget = gi.k - 1;
            const unsigned n = ck.count_named("u", "");
            const unsigned m = ck.count_named("S[1]", "");
            ck.degrees_setcover(n, m, budget);
            ck.connected();
            ck.vertex_cover(n, budget);
            break;
        }
        }
    } catch (const std::out_of_range& e) {
        ck.add("named", {e.what()});
    }
    return ck.report;
}

Reduction
shorten_path(const Reduction& red, const std::string& path_id)
{
    const RegisteredPath& target = red.index.path(path_id);
    if (target.vertices.empty()) throw std::invalid_argument("path " + path_id + " has no internal vertex to remove");
    const Graph& g = red.instance.graph;
    const std::size_t mid = target.vertices.size() / 2;
    const Vertex victim = target.vertices[mid];
    const Vertex before = mid == 0 ? target.from : target.vertices[mid - 1];
    const Vertex after = mid + 1 == target.vertices.size() ? target.to : target.vertices[mid + 1];

    std::vector<char> keep(g.size(), 1);
    keep[victim] = 0;
    Graph mutated = g.induced(keep);
    auto remap = [&](Vertex v) { return v > victim ? v - 1 : v; };
    mutated.add_edge(remap(before), remap(after));

    Reduction out;
    out.instance = make_instance(std::move(mutated), remap(red.instance.s), remap(red.instance.t), red.instance.k);
    out.index = red.index;
    for (auto& [name, v] : out.index.named) v = remap(v);
    for (RegisteredPath& p : out.index.paths) {
        p.from = remap(p.from);
        p.to = remap(p.to);
        if (p.id == path_id) p.vertices.erase(p.vertices.begin() + static_cast<std::ptrdiff_t>(mid));
        for (Vertex& v : p.vertices) v = remap(v);
    }
    return out;
}

} // namespace rendezvous
