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

#include "rendezvous/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace rendezvous {

using json = nlohmann::json;

namespace {

const char* const kTypes[3] = {"alpha", "beta", "gamma"};
const char* const kEnds[3] = {"x", "y", "z"};
const char* const kSides[2] = {"l", "r"};

std::string
idx(unsigned i)
{
    return "[" + std::to_string(i) + "]";
}

/** Incremental builder keeping the graph, the named map and the registry in step. */
class Builder {
public:
    Vertex named(const std::string& name)
    {
        auto it = gi.named.find(name);
        if (it != gi.named.end()) return it->second;
        Vertex v = g.add_vertex(name);
        gi.named.emplace(name, v);
        return v;
    }

    void edge(Vertex u, Vertex v) { g.add_edge(u, v); }

    const RegisteredPath& path(const std::string& id, Vertex from, Vertex to, std::uint64_t internal)
    {
        RegisteredPath p;
        p.id = id;
        p.from = from;
        p.to = to;
        p.internal = internal;
        Vertex prev = from;
        for (std::uint64_t x = 0; x < internal; x++) {
            Vertex w = g.add_vertex(id + "#" + std::to_string(x + 1));
            p.vertices.push_back(w);
            g.add_edge(prev, w);
            prev = w;
        }
        g.add_edge(prev, to);
        gi.paths.push_back(std::move(p));
        return gi.paths.back();
    }

    Graph g;
    GadgetIndex gi;
};

// iterate all size-r subsets of [0, m) in lexicographic order
template <typename F>
bool
for_each_combination(unsigned m, unsigned r, F&& f)
{
    std::vector<unsigned> c(r);
    std::iota(c.begin(), c.end(), 0u);
    if (r > m) return false;
    while (true) {
        if (f(c)) return true;
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && c[i] == m - r + i) i--;
        if (i < 0) return false;
        c[i]++;
        for (unsigned j = i + 1; j < r; j++) c[j] = c[j - 1] + 1;
    }
}

std::uint64_t
binomial_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap)
{
    if (b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; i++) {
        r = r * (a - b + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t
power_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap)
{
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < exp; i++) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t candidates)
    : std::runtime_error("BudgetExceeded: " + std::to_string(candidates) + "+ candidates for the brute-force oracle"),
      count(candidates)
{
}

void
validate_source(const ThreeDMInstance& src)
{
    if (src.n < 1) throw SourceInvalid("3DM needs n >= 1");
    for (std::size_t j = 0; j < src.sets.size(); j++) {
        for (unsigned e : src.sets[j]) {
            if (e < 1 || e > src.n) throw SourceInvalid("set " + std::to_string(j + 1) + " has an element outside [n]");
        }
    }
}

void
validate_source(const NAEInstance& src)
{
    if (src.n < 1) throw SourceInvalid("NAE needs n >= 1");
    if (src.dstar < 1) throw SourceInvalid("NAE needs dstar >= 1");
    for (std::size_t j = 0; j < src.clauses.size(); j++) {
        for (const NAELiteral& l : src.clauses[j]) {
            if (l.var < 1 || l.var > src.n) throw SourceInvalid("clause " + std::to_string(j + 1) + " names a bad variable");
            if (l.bound < 1 || l.bound > src.dstar) {
                throw SourceInvalid("clause " + std::to_string(j + 1) + " has a bound outside [dstar]");
            }
        }
    }
}

void
validate_source(const SetCoverInstance& src)
{
    for (std::size_t j = 0; j < src.family.size(); j++) {
        for (unsigned e : src.family[j]) {
            if (e < 1 || e > src.universe) {
                throw SourceInvalid("set " + std::to_string(j + 1) + " has an element outside the universe");
            }
        }
    }
}

const char*
reduction_name(ReductionKind kind)
{
    switch (kind) {
    case ReductionKind::ThreeDM: return "3dm";
    case ReductionKind::NAE: return "nae";
    case ReductionKind::SetCover: return "setcover";
    }
    return "?";
}

ReductionKind
parse_reduction(const std::string& name)
{
    if (name == "3dm") return ReductionKind::ThreeDM;
    if (name == "nae") return ReductionKind::NAE;
    if (name == "setcover") return ReductionKind::SetCover;
    throw std::invalid_argument("unknown reduction kind: " + name);
}

Vertex
GadgetIndex::at(const std::string& name) const
{
    auto it = named.find(name);
    if (it == named.end()) throw std::out_of_range("no gadget vertex named " + name);
    return it->second;
}

const RegisteredPath&
GadgetIndex::path(const std::string& id) const
{
    for (const RegisteredPath& p : paths) {
        if (p.id == id) return p;
    }
    throw std::out_of_range("no registered path " + id);
}

std::uint64_t
GadgetIndex::registry_vertex_count() const
{
    std::uint64_t total = named.size();
    for (const RegisteredPath& p : paths) total += p.internal;
    return total;
}

Reduction
reduce_3dm(const ThreeDMInstance& src)
{
    validate_source(src);
    const unsigned n = src.n;
    const unsigned m = static_cast<unsigned>(src.sets.size());
    if (m < 1) throw SourceInvalid("3DM needs at least one set");
    const std::uint64_t M = std::uint64_t(n) * n + std::uint64_t(m) * m;
    const std::uint64_t M2 = M * M;
    Builder b;
    b.gi.kind = ReductionKind::ThreeDM;
    b.gi.scale = M;
    b.gi.k = n + 2;

    const Vertex s = b.named("s");
    const Vertex t = b.named("t");
    for (const char* gname : {"g1", "g2"}) {
        Vertex gv = b.named(gname);
        b.edge(s, gv);
        b.edge(t, gv);
    }

    // base gadget: the u rows, each u_i^j standing for set j
    for (unsigned i = 1; i <= n; i++) {
        Vertex lo = b.named("u" + idx(i) + idx(0));
        Vertex hi = b.named("u" + idx(i) + idx(m + 1));
        const RegisteredPath& row = b.path("row" + idx(i), lo, hi, m);
        for (unsigned j = 1; j <= m; j++) b.g.set_label(row.vertices[j - 1], "u" + idx(i) + idx(j));
        b.path("s-u" + idx(i) + ".lo", s, lo, m);
        b.path("s-u" + idx(i) + ".hi", s, hi, m);
        b.path("t-u" + idx(i) + ".lo", t, lo, m);
        b.path("t-u" + idx(i) + ".hi", t, hi, m);
    }

    // elements: type hubs, per-element terminals and their x/y/z ends
    for (unsigned side = 0; side < 2; side++) {
        for (unsigned ty = 0; ty < 3; ty++) {
            const std::string sfx = std::string(".") + kSides[side];
            Vertex hub = b.named(std::string(kTypes[ty]) + sfx);
            for (unsigned i = 1; i <= n; i++) {
                Vertex term = b.named(std::string(kTypes[ty]) + idx(i) + sfx);
                std::uint64_t len = side == 0 ? M2 - M * i : M2 + M * i;
                b.path(std::string("elem.") + kTypes[ty] + idx(i) + sfx, hub, term, len);
                Vertex end = b.named(std::string(kEnds[ty]) + idx(i) + sfx);
                b.path(std::string("end.") + kEnds[ty] + idx(i) + sfx, end, term, 2 * M2 - 1);
            }
        }
    }

    // sets: every u_i^j joined to the six hubs by element-dependent lengths
    for (unsigned j = 1; j <= m; j++) {
        for (unsigned i = 1; i <= n; i++) {
            Vertex uij = b.gi.path("row" + idx(i)).vertices[j - 1];
            for (unsigned side = 0; side < 2; side++) {
                for (unsigned ty = 0; ty < 3; ty++) {
                    const std::uint64_t e = src.sets[j - 1][ty];
                    Vertex hub = b.gi.at(std::string(kTypes[ty]) + "." + kSides[side]);
                    std::uint64_t len = side == 0 ? M2 + M * e : M2 - M * e;
                    b.path("set" + idx(j) + "." + kTypes[ty] + "." + kSides[side] + idx(i), hub, uij, len);
                }
            }
        }
    }

    // critical vertices and their fans to the x/y/z ends
    for (const char* term : {"s", "t"}) {
        Vertex root = b.gi.at(term);
        for (unsigned side = 0; side < 2; side++) {
            for (unsigned ty = 0; ty < 3; ty++) {
                const std::string name = std::string(term) + "." + kTypes[ty] + "." + kSides[side];
                Vertex crit = b.named(name);
                b.path("crit." + name, root, crit, 2 * M2 + 1);
                for (unsigned i = 1; i <= n; i++) {
                    Vertex end = b.gi.at(std::string(kEnds[ty]) + idx(i) + "." + kSides[side]);
                    b.path("fan." + name + idx(i), crit, end, 2 * M2);
                }
            }
        }
    }

    Reduction out;
    out.instance = make_instance(std::move(b.g), s, t, n + 2);
    out.index = std::move(b.gi);
    return out;
}

Reduction
reduce_nae(const NAEInstance& src)
{
    validate_source(src);
    const unsigned n = src.n;
    const unsigned ds = src.dstar;
    Builder b;
    b.gi.kind = ReductionKind::NAE;
    b.gi.scale = ds;
    b.gi.k = n + 2;

    const Vertex s = b.named("s");
    const Vertex t = b.named("t");
    for (const char* gname : {"g1", "g2"}) {
        Vertex gv = b.named(gname);
        b.edge(s, gv);
        b.edge(t, gv);
    }
    for (unsigned i = 1; i <= n; i++) {
        Vertex lo = b.named("u" + idx(i) + idx(0));
        Vertex hi = b.named("u" + idx(i) + idx(ds + 1));
        const RegisteredPath& row = b.path("row" + idx(i), lo, hi, ds);
        for (unsigned d = 1; d <= ds; d++) b.g.set_label(row.vertices[d - 1], "u" + idx(i) + idx(d));
        b.path("s-u" + idx(i) + ".lo", s, lo, ds);
        b.path("s-u" + idx(i) + ".hi", s, hi, ds);
        b.path("t-u" + idx(i) + ".lo", t, lo, ds);
        b.path("t-u" + idx(i) + ".hi", t, hi, ds);
    }
    for (unsigned j = 1; j <= src.clauses.size(); j++) {
        Vertex cl = b.named("c" + idx(j) + ".l");
        Vertex cr = b.named("c" + idx(j) + ".r");
        for (unsigned q = 0; q < 3; q++) {
            const NAELiteral& lit = src.clauses[j - 1][q];
            Vertex lo = b.gi.at("u" + idx(lit.var) + idx(0));
            Vertex hi = b.gi.at("u" + idx(lit.var) + idx(ds + 1));
            b.path("clause" + idx(j) + ".lit" + idx(q + 1) + ".l", cl, lo, 2 * ds - lit.bound);
            b.path("clause" + idx(j) + ".lit" + idx(q + 1) + ".r", cr, hi, ds + lit.bound);
        }
        b.path("s-c" + idx(j) + ".l", s, cl, 2 * ds + 1);
        b.path("s-c" + idx(j) + ".r", s, cr, 2 * ds + 1);
        b.path("t-c" + idx(j) + ".l", t, cl, 2 * ds + 1);
        b.path("t-c" + idx(j) + ".r", t, cr, 2 * ds + 1);
    }
    Reduction out;
    out.instance = make_instance(std::move(b.g), s, t, n + 2);
    out.index = std::move(b.gi);
    return out;
}

Reduction
reduce_setcover(const SetCoverInstance& src)
{
    validate_source(src);
    const unsigned n = src.universe;
    const unsigned m = static_cast<unsigned>(src.family.size());
    const unsigned k = src.budget;
    Builder b;
    b.gi.kind = ReductionKind::SetCover;
    b.gi.scale = k;
    b.gi.k = k + 1;
    const Vertex s = b.named("s");
    const Vertex t = b.named("t");
    for (unsigned h = 1; h <= n; h++) {
        Vertex u = b.named("u" + idx(h));
        Vertex x = b.named("x" + idx(h));
        Vertex x2 = b.named("x'" + idx(h));
        b.edge(s, x);
        b.edge(x, u);
        b.edge(u, x2);
        b.edge(x2, t);
    }
    for (unsigned i = 1; i <= k; i++) {
        Vertex w = b.named("w" + idx(i));
        Vertex y = b.named("y" + idx(i));
        Vertex y2 = b.named("y'" + idx(i));
        b.edge(s, y);
        b.edge(y, w);
        b.edge(w, y2);
        b.edge(y2, t);
        for (unsigned j = 1; j <= m; j++) {
            Vertex sj = b.named("S" + idx(i) + idx(j));
            b.edge(sj, w);
            std::vector<unsigned> elems = src.family[j - 1];
            std::sort(elems.begin(), elems.end());
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
            for (unsigned h : elems) b.edge(sj, b.gi.at("u" + idx(h)));
        }
    }
    Vertex z = b.named("z");
    b.edge(s, z);
    b.edge(z, t);
    Reduction out;
    out.instance = make_instance(std::move(b.g), s, t, k + 1);
    out.index = std::move(b.gi);
    return out;
}

std::optional<std::vector<unsigned>>
matching_3dm(const ThreeDMInstance& src, std::uint64_t budget)
{
    validate_source(src);
    const unsigned m = static_cast<unsigned>(src.sets.size());
    std::uint64_t count = binomial_capped(m, src.n, budget);
    if (count > budget) throw BudgetExceeded(count);
    std::optional<std::vector<unsigned>> found;
    for_each_combination(m, src.n, [&](const std::vector<unsigned>& pick) {
        std::vector<char> seen(3 * (src.n + 1), 0);
        for (unsigned j : pick) {
            for (unsigned ty = 0; ty < 3; ty++) {
                char& cell = seen[ty * (src.n + 1) + src.sets[j][ty]];
                if (cell) return false;
                cell = 1;
            }
        }
        std::vector<unsigned> one_based;
        for (unsigned j : pick) one_based.push_back(j + 1);
        found = one_based;
        return true;
    });
    return found;
}

bool
nae_satisfied(const std::array<NAELiteral, 3>& clause, const std::vector<unsigned>& values)
{
    unsigned truths = 0;
    for (const NAELiteral& l : clause) truths += values[l.var - 1] <= l.bound ? 1 : 0;
    return truths != 0 && truths != 3;
}

std::optional<std::vector<unsigned>>
assignment_nae(const NAEInstance& src, std::uint64_t budget)
{
    validate_source(src);
    std::uint64_t count = power_capped(src.dstar, src.n, budget);
    if (count > budget) throw BudgetExceeded(count);
    std::vector<unsigned> values(src.n, 1);
    while (true) {
        bool ok = std::all_of(src.clauses.begin(), src.clauses.end(),
                              [&](const auto& c) { return nae_satisfied(c, values); });
        if (ok) return values;
        unsigned i = 0;
        while (i < src.n && values[i] == src.dstar) values[i++] = 1;
        if (i == src.n) return std::nullopt;
        values[i]++;
    }
}

std::optional<std::vector<unsigned>>
cover_setcover(const SetCoverInstance& src, std::uint64_t budget)
{
    validate_source(src);
    const unsigned m = static_cast<unsigned>(src.family.size());
    std::uint64_t count = power_capped(2, m, budget);
    if (count > budget) throw BudgetExceeded(count);
    std::optional<std::vector<unsigned>> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); mask++) {
        unsigned size = static_cast<unsigned>(__builtin_popcountll(mask));
        if (size > src.budget || (best && size >= best->size())) continue;
        std::vector<char> covered(src.universe + 1, 0);
        for (unsigned j = 0; j < m; j++) {
            if (mask >> j & 1) {
                for (unsigned e : src.family[j]) covered[e] = 1;
            }
        }
        if (std::count(covered.begin() + 1, covered.end(), 1) != static_cast<long>(src.universe)) continue;
        std::vector<unsigned> pick;
        for (unsigned j = 0; j < m; j++) {
            if (mask >> j & 1) pick.push_back(j + 1);
        }
        best = pick;
    }
    return best;
}

bool
oracle_3dm(const ThreeDMInstance& src, std::uint64_t budget)
{
    return matching_3dm(src, budget).has_value();
}

bool
oracle_nae(const NAEInstance& src, std::uint64_t budget)
{
    return assignment_nae(src, budget).has_value();
}

bool
oracle_setcover(const SetCoverInstance& src, std::uint64_t budget)
{
    return cover_setcover(src, budget).has_value();
}

namespace {

json
parse_doc(const std::string& text)
{
    try {
        json doc = json::parse(text);
        if (!doc.is_object()) throw SourceInvalid("expected a JSON object");
        return doc;
    } catch (const json::parse_error& e) {
        throw SourceInvalid(std::string("malformed JSON: ") + e.what());
    }
}

template <typename F>
auto
guarded(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw SourceInvalid(std::string("bad field: ") + e.what());
    }
}

} // namespace

ThreeDMInstance
parse_3dm_json(const std::string& text)
{
    json doc = parse_doc(text);
    ThreeDMInstance src = guarded([&] {
        ThreeDMInstance out;
        out.n = doc.at("n").get<unsigned>();
        for (const json& set : doc.at("sets")) {
            if (set.size() != 3) throw SourceInvalid("each set needs exactly three elements");
            out.sets.push_back({set[0].get<unsigned>(), set[1].get<unsigned>(), set[2].get<unsigned>()});
        }
        return out;
    });
    validate_source(src);
    return src;
}

NAEInstance
parse_nae_json(const std::string& text)
{
    json doc = parse_doc(text);
    NAEInstance src = guarded([&] {
        NAEInstance out;
        out.n = doc.at("n").get<unsigned>();
        out.dstar = doc.at("dstar").get<unsigned>();
        for (const json& c : doc.at("clauses")) {
            if (c.size() != 6) throw SourceInvalid("each clause needs [i1, d1, i2, d2, i3, d3]");
            std::array<NAELiteral, 3> clause;
            for (unsigned q = 0; q < 3; q++) clause[q] = NAELiteral{c[2 * q].get<unsigned>(), c[2 * q + 1].get<unsigned>()};
            out.clauses.push_back(clause);
        }
        return out;
    });
    validate_source(src);
    return src;
}

SetCoverInstance
parse_setcover_json(const std::string& text)
{
    json doc = parse_doc(text);
    SetCoverInstance src = guarded([&] {
        SetCoverInstance out;
        out.universe = doc.at("universe").get<unsigned>();
        out.budget = doc.at("budget").get<unsigned>();
        for (const json& set : doc.at("family")) out.family.push_back(set.get<std::vector<unsigned>>());
        return out;
    });
    validate_source(src);
    return src;
}

std::string
serialize_source_json(const ThreeDMInstance& src)
{
    json doc;
    doc["n"] = src.n;
    doc["sets"] = json::array();
    for (const auto& set : src.sets) doc["sets"].push_back({set[0], set[1], set[2]});
    return doc.dump();
}

std::string
serialize_source_json(const NAEInstance& src)
{
    json doc;
    doc["n"] = src.n;
    doc["dstar"] = src.dstar;
    doc["clauses"] = json::array();
    for (const auto& c : src.clauses) {
        json flat = json::array();
        for (const NAELiteral& l : c) {
            flat.push_back(l.var);
            flat.push_back(l.bound);
        }
        doc["clauses"].push_back(flat);
    }
    return doc.dump();
}

std::string
serialize_source_json(const SetCoverInstance& src)
{
    json doc;
    doc["universe"] = src.universe;
    doc["family"] = src.family;
    doc["budget"] = src.budget;
    return doc.dump();
}

std::string
serialize_gadget_index(const GadgetIndex& gi)
{
    json doc;
    doc["kind"] = reduction_name(gi.kind);
    doc["k"] = gi.k;
    doc["scale"] = gi.scale;
    doc["named"] = json::object();
    for (const auto& [name, v] : gi.named) doc["named"][name] = v;
    doc["paths"] = json::array();
    for (const RegisteredPath& p : gi.paths) {
        doc["paths"].push_back(
            {{"id", p.id}, {"from", p.from}, {"to", p.to}, {"internal", p.internal}, {"vertices", p.vertices}});
    }
    return doc.dump();
}

GadgetIndex
parse_gadget_index(const std::string& text)
{
    json doc = parse_doc(text);
    return guarded([&] {
        GadgetIndex gi;
        try {
            gi.kind = parse_reduction(doc.at("kind").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SourceInvalid(e.what());
        }
        gi.k = doc.at("k").get<unsigned>();
        gi.scale = doc.at("scale").get<std::uint64_t>();
        for (const auto& [name, v] : doc.at("named").items()) gi.named.emplace(name, v.get<Vertex>());
        for (const json& p : doc.at("paths")) {
            RegisteredPath rp;
            rp.id = p.at("id").get<std::string>();
            rp.from = p.at("from").get<Vertex>();
            rp.to = p.at("to").get<Vertex>();
            rp.internal = p.at("internal").get<std::uint64_t>();
            rp.vertices = p.at("vertices").get<std::vector<Vertex>>();
            gi.paths.push_back(std::move(rp));
        }
        return gi;
    });
}

} // namespace rendezvous
