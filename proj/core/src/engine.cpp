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

#include "rendezvous/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "moves.hpp"

namespace rendezvous {

namespace {
constexpr std::uint16_t kUnwon = 0xFFFF;
constexpr std::uint16_t kMaxLevel = 0xFFFE;
} // namespace

struct SolveReport::Data {
    Instance inst;
    Side winner = Side::Facilitator;
    SolveStats stats;
    std::optional<PositionIndex> idx;
    // per pair, Facilitator-to-move and Divider-to-move levels
    std::vector<std::uint16_t> fac_level;
    std::vector<std::uint16_t> div_level;
    std::optional<unsigned> min_rounds;
};

namespace {

/*
 * Backward attractor, one layer per Facilitator move. Layer L holds the
 * Divider-to-move positions whose every successor is won within L moves; their
 * Facilitator predecessors become level L+1, and each of those decrements the
 * outstanding-successor counter of its Divider predecessors. Counters are
 * filled lazily on first touch (0 = not yet counted).
 */
template <typename Counter>
unsigned
run_attractor(const Graph& g, const PositionIndex& idx, std::vector<std::uint16_t>& lf,
              std::vector<std::uint16_t>& ld)
{
    const unsigned k = idx.agents();
    const std::uint64_t pairs = idx.pairs();
    std::vector<Counter> counter(pairs, 0);
    std::vector<std::uint32_t> div_frontier;
    std::vector<std::uint32_t> fac_frontier;

    for (Vertex v = 0; v < g.size(); v++) {
        std::size_t fi = idx.f_index(v, v);
        for (std::uint64_t p = idx.f_begin(fi); p < idx.f_end(fi); p++) {
            lf[p] = 0;
            ld[p] = 0;
            div_frontier.push_back(static_cast<std::uint32_t>(p));
        }
    }

    detail::MoveGen outer(g, k);
    detail::MoveGen inner(g, k);
    std::vector<Vertex> d(k);
    std::vector<Vertex> recs;
    std::vector<std::uint64_t> ranks;
    std::vector<std::uint64_t> count_ranks;
    std::vector<FPlacement> fmoves;
    fmoves.reserve(64);
    // dedup by stamping offsets inside the Facilitator block, which are dense
    std::uint64_t widest = 0;
    for (std::size_t fi = 0; fi < idx.f_count(); fi++) widest = std::max(widest, idx.f_end(fi) - idx.f_begin(fi));
    std::vector<std::uint32_t> seen(widest, 0);
    std::uint32_t stamp = 0;
    // distinct Divider successors of (F, D) as pair indices
    auto divider_ranks = [&](detail::MoveGen& gen, const Vertex* from, std::size_t fi, std::vector<std::uint64_t>& out) {
        gen.divider(from, idx.f_at(fi), recs, false);
        if (++stamp == 0) {
            std::fill(seen.begin(), seen.end(), 0);
            stamp = 1;
        }
        const std::uint64_t base = idx.f_begin(fi);
        const std::size_t nrec = recs.size() / k;
        out.clear();
        for (std::size_t i = 0; i < nrec; i++) {
            std::uint64_t r = idx.pair_of(fi, recs.data() + i * k);
            if (seen[r - base] == stamp) continue;
            seen[r - base] = stamp;
            out.push_back(r);
        }
    };
    unsigned layers = 0;
    std::uint16_t level = 0;
    while (!div_frontier.empty()) {
        if (level >= kMaxLevel) throw std::overflow_error("attractor level exceeds 16 bits");
        const std::uint16_t next = level + 1;
        layers++;
        fac_frontier.clear();
        for (std::uint32_t p : div_frontier) {
            std::size_t fi = idx.decode(p, d.data());
            outer.facilitator(idx.f_at(fi), d.data(), fmoves);
            for (const FPlacement& f : fmoves) {
                if (f.met()) continue;
                std::uint64_t q = idx.pair_of(f, d.data());
                if (lf[q] == kUnwon) {
                    lf[q] = next;
                    fac_frontier.push_back(static_cast<std::uint32_t>(q));
                }
            }
        }
        div_frontier.clear();
        std::vector<Vertex> rec(k);
        for (std::uint32_t q : fac_frontier) {
            std::size_t fi = idx.decode(q, d.data());
            divider_ranks(outer, d.data(), fi, ranks);
            for (std::uint64_t r : ranks) {
                if (ld[r] != kUnwon) continue;
                if (counter[r] == 0) {
                    idx.decode(r, rec.data());
                    divider_ranks(inner, rec.data(), fi, count_ranks);
                    counter[r] = static_cast<Counter>(count_ranks.size());
                }
                if (--counter[r] == 0) {
                    ld[r] = next;
                    div_frontier.push_back(static_cast<std::uint32_t>(r));
                }
            }
        }
        level = next;
    }
    return layers;
}

// upper bound on distinct Divider successors of any position
std::uint64_t
divider_branching_bound(const Graph& g, unsigned k)
{
    std::size_t maxdeg = 0;
    for (Vertex v = 0; v < g.size(); v++) maxdeg = std::max(maxdeg, g.degree(v));
    std::uint64_t product = 1;
    for (unsigned i = 0; i < k && product <= UINT32_MAX; i++) product *= maxdeg + 1;
    PositionIndex probe(std::max<std::size_t>(g.size(), 1), k);
    std::uint64_t multisets = probe.binom(static_cast<unsigned>(g.size() + k - 1), k);
    return std::min(product, multisets);
}

std::shared_ptr<SolveReport::Data>
trivial_report(const Instance& inst)
{
    auto data = std::make_shared<SolveReport::Data>();
    data->inst = inst;
    data->winner = Side::Facilitator;
    data->min_rounds = inst.s == inst.t ? 0u : 1u;
    return data;
}

const SolveReport::Data&
checked(const std::shared_ptr<const SolveReport::Data>& data)
{
    if (!data) throw std::logic_error("empty SolveReport");
    return *data;
}

} // namespace

SolveReport::SolveReport(std::shared_ptr<const Data> d) : data(std::move(d)) {}

Side
SolveReport::winner() const
{
    return checked(data).winner;
}

const Instance&
SolveReport::instance() const
{
    return checked(data).inst;
}

const SolveStats&
SolveReport::stats() const
{
    return checked(data).stats;
}

bool
SolveReport::has_index() const
{
    return checked(data).idx.has_value();
}

const PositionIndex&
SolveReport::index() const
{
    if (!has_index()) throw std::logic_error("trivial report has no position index");
    return *data->idx;
}

std::optional<unsigned>
SolveReport::min_rounds() const
{
    return checked(data).min_rounds;
}

std::optional<unsigned>
SolveReport::level(const Position& p) const
{
    const Data& dt = checked(data);
    if (p.f.met()) return 0u;
    if (!dt.idx) {
        // adjacent agents always meet next move: Divider can never occupy them
        if (dt.inst.graph.adjacent(p.f.a, p.f.b)) return 1u;
        throw std::logic_error("trivial report only covers meeting and adjacent positions");
    }
    std::uint64_t q = dt.idx->pair_of(p.f, p.d);
    std::uint16_t l = p.to_move == Side::Facilitator ? dt.fac_level[q] : dt.div_level[q];
    if (l == kUnwon) return std::nullopt;
    return l;
}

FPlacement
SolveReport::facilitator_move(const Position& p) const
{
    const Data& dt = checked(data);
    if (p.to_move != Side::Facilitator) throw std::logic_error("not Facilitator's turn");
    if (p.f.met()) throw std::logic_error("game already over");
    const Graph& g = dt.inst.graph;
    if (!dt.idx) {
        if (g.adjacent(p.f.a, p.f.b)) return FPlacement(p.f.b, p.f.b);
        throw std::logic_error("trivial report only covers meeting and adjacent positions");
    }
    const PositionIndex& idx = *dt.idx;
    const unsigned k = idx.agents();
    detail::MoveGen gen(g, k);
    std::vector<FPlacement> moves;
    gen.facilitator(p.f, p.d.agents.data(), moves);
    std::uint16_t l = dt.fac_level[idx.pair_of(p.f, p.d)];
    std::uint64_t best = UINT64_MAX;
    FPlacement pick = p.f;
    for (const FPlacement& f : moves) {
        std::uint64_t q = idx.pair_of(f, p.d);
        bool good = l == kUnwon || dt.div_level[q] == l - 1;
        if (good && q < best) {
            best = q;
            pick = f;
        }
    }
    if (best == UINT64_MAX) throw std::logic_error("no level-decreasing Facilitator move");
    return pick;
}

DPlacement
SolveReport::divider_move(const Position& p) const
{
    const Data& dt = checked(data);
    if (p.to_move != Side::Divider) throw std::logic_error("not Divider's turn");
    if (p.f.met()) throw std::logic_error("game already over");
    if (!dt.idx) return p.d;
    const PositionIndex& idx = *dt.idx;
    const unsigned k = idx.agents();
    detail::MoveGen gen(dt.inst.graph, k);
    std::vector<Vertex> recs;
    gen.divider(p.d.agents.data(), p.f, recs);
    const std::size_t fi = idx.f_index(p.f.a, p.f.b);
    const bool holding = dt.div_level[idx.pair_of(fi, p.d.agents.data())] == kUnwon;
    std::uint64_t best = UINT64_MAX;
    int best_level = -1;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < recs.size() / k; i++) {
        std::uint64_t r = idx.pair_of(fi, recs.data() + i * k);
        std::uint16_t l = dt.fac_level[r];
        if (holding) {
            if (l == kUnwon && r < best) {
                best = r;
                pick = i;
            }
        } else if (static_cast<int>(l) > best_level || (static_cast<int>(l) == best_level && r < best)) {
            best_level = l;
            best = r;
            pick = i;
        }
    }
    if (best == UINT64_MAX) throw std::logic_error("Divider left its region");
    return DPlacement(std::vector<Vertex>(recs.begin() + pick * k, recs.begin() + (pick + 1) * k));
}

DPlacement
SolveReport::divider_placement() const
{
    const Data& dt = checked(data);
    const Instance& inst = dt.inst;
    if (!dt.idx) {
        // any legal placement; the game is decided before it matters
        Vertex v = 0;
        while (v == inst.s || v == inst.t) v++;
        if (v >= inst.graph.size()) throw std::logic_error("no vertex available for Divider");
        return DPlacement(std::vector<Vertex>(inst.k, v));
    }
    const PositionIndex& idx = *dt.idx;
    std::size_t fi = idx.f_index(std::min(inst.s, inst.t), std::max(inst.s, inst.t));
    std::uint64_t pick = idx.f_begin(fi);
    int best = -1;
    for (std::uint64_t p = idx.f_begin(fi); p < idx.f_end(fi); p++) {
        std::uint16_t l = dt.fac_level[p];
        if (l == kUnwon) {
            pick = p;
            break;
        }
        if (static_cast<int>(l) > best) {
            best = l;
            pick = p;
        }
    }
    return idx.position(pick, Side::Facilitator).d;
}

std::vector<bool>
SolveReport::facilitator_region() const
{
    const Data& dt = checked(data);
    if (!dt.idx) return {};
    std::vector<bool> bits(2 * dt.idx->pairs());
    for (std::uint64_t p = 0; p < dt.idx->pairs(); p++) {
        bits[2 * p] = dt.fac_level[p] != kUnwon;
        bits[2 * p + 1] = dt.div_level[p] != kUnwon;
    }
    return bits;
}

SolveReport
solve(const Instance& inst, const SolveOptions& options)
{
    if (!inst.connected) throw DisconnectedGraph();
    if (inst.k < 1 || inst.k > kMaxAgents) throw std::invalid_argument("agent count outside [1, 16]");
    const Graph& g = inst.graph;
    if (inst.s == inst.t || g.adjacent(inst.s, inst.t)) return SolveReport(trivial_report(inst));

    auto start = std::chrono::steady_clock::now();
    PositionIndex idx = enumerate_positions(g, inst.k, options.budget);
    if (idx.pairs() >= std::numeric_limits<std::uint32_t>::max()) {
        throw CapacityExceeded(idx.position_sides(), options.budget);
    }
    auto data = std::make_shared<SolveReport::Data>();
    data->inst = inst;
    data->fac_level.assign(idx.pairs(), kUnwon);
    data->div_level.assign(idx.pairs(), kUnwon);

    std::uint64_t bound = divider_branching_bound(g, inst.k);
    unsigned layers = 0;
    if (bound < 0xFF) {
        layers = run_attractor<std::uint8_t>(g, idx, data->fac_level, data->div_level);
    } else if (bound < 0xFFFF) {
        layers = run_attractor<std::uint16_t>(g, idx, data->fac_level, data->div_level);
    } else {
        layers = run_attractor<std::uint32_t>(g, idx, data->fac_level, data->div_level);
    }

    std::size_t fi = idx.f_index(std::min(inst.s, inst.t), std::max(inst.s, inst.t));
    unsigned worst = 0;
    bool all_won = true;
    for (std::uint64_t p = idx.f_begin(fi); p < idx.f_end(fi); p++) {
        if (data->fac_level[p] == kUnwon) {
            all_won = false;
            break;
        }
        worst = std::max<unsigned>(worst, data->fac_level[p]);
    }
    data->winner = all_won ? Side::Facilitator : Side::Divider;
    if (all_won) data->min_rounds = worst;

    data->stats.pairs = idx.pairs();
    data->stats.position_sides = idx.position_sides();
    data->stats.iterations = layers;
    data->stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    data->idx.emplace(std::move(idx));
    return SolveReport(std::move(data));
}

TimedResult
solve_in_time(const SolveReport& report, unsigned tau)
{
    if (tau < 1) throw std::invalid_argument("tau must be at least 1");
    TimedResult out;
    out.min_rounds = report.min_rounds();
    out.facilitator_wins = out.min_rounds.has_value() && *out.min_rounds <= tau;
    return out;
}

TimedResult
solve_in_time(const Instance& inst, unsigned tau, const SolveOptions& options)
{
    if (tau < 1) throw std::invalid_argument("tau must be at least 1");
    return solve_in_time(solve(inst, options), tau);
}

ExtendedCount
dynamic_separation(const Graph& g, Vertex s, Vertex t, const SeparationOptions& options, SeparationStats* stats)
{
    if (!g.valid(s) || !g.valid(t)) throw std::invalid_argument("terminal out of range");
    if (!g.connected()) throw DisconnectedGraph();
    SeparationStats local;
    SeparationStats& st = stats != nullptr ? *stats : local;
    st = SeparationStats{};
    st.lambda = static_separation(g, s, t);
    if (st.lambda.is_infinite()) return ExtendedCount::infinite();
    const unsigned lambda = st.lambda.value();
    unsigned k = std::max<unsigned>(1, static_cast<unsigned>(common_neighbor_count(g, s, t)));
    for (; k <= lambda; k++) {
        if (k == lambda && !options.verify_upper) return lambda;
        Instance inst = make_instance(g, s, t, k);
        SolveReport report = solve(inst, SolveOptions{options.budget});
        st.solves++;
        st.position_sides = std::max(st.position_sides, report.stats().position_sides);
        if (report.winner() == Side::Divider) return k;
    }
    throw std::logic_error("Divider lost with a full minimum cut of guards");
}

std::vector<Position>
successors(const Position& p, const Graph& g)
{
    std::vector<Position> out;
    if (p.f.met()) return out;
    const unsigned k = static_cast<unsigned>(p.d.size());
    detail::MoveGen gen(g, k);
    if (p.to_move == Side::Facilitator) {
        std::vector<FPlacement> moves;
        gen.facilitator(p.f, p.d.agents.data(), moves);
        for (const FPlacement& f : moves) out.push_back(Position{f, p.d, Side::Divider});
    } else {
        std::vector<Vertex> recs;
        gen.divider(p.d.agents.data(), p.f, recs);
        for (std::size_t i = 0; i < recs.size() / k; i++) {
            DPlacement d;
            d.agents.assign(recs.begin() + i * k, recs.begin() + (i + 1) * k);
            out.push_back(Position{p.f, std::move(d), Side::Facilitator});
        }
    }
    return out;
}

bool
legal_move(const Position& from, const Position& to, const Graph& g)
{
    if (from.f.met() || to.to_move == from.to_move) return false;
    for (Vertex v : {to.f.a, to.f.b}) {
        if (!g.valid(v)) return false;
    }
    for (Vertex v : to.d.agents) {
        if (!g.valid(v)) return false;
    }
    if (!compatible(to.f, to.d) || to.d.size() != from.d.size()) return false;
    if (!std::is_sorted(to.d.agents.begin(), to.d.agents.end())) return false;
    if (from.to_move == Side::Facilitator) {
        return to.d == from.d && multiset_adjacent(from.f, to.f, g);
    }
    return to.f == from.f && multiset_adjacent(from.d, to.d, g);
}

} // namespace rendezvous
