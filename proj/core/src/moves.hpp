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

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <vector>

#include "rendezvous/graph.hpp"

namespace rendezvous::detail {

/*
 * Half-move generation with canonical dedup. Divider moves are built group by
 * group (agents sharing a vertex form a group and choose a multiset of
 * targets), so stacked agents do not blow up the product. Scratch buffers are
 * reused between calls; one generator per thread.
 */
class MoveGen {
public:
    MoveGen(const Graph& g_, unsigned k_) : g(g_), k(k_) {}

    // D' records of length k, each sorted, flat in out (out cleared); sorted
    // and unique across records unless unique is false
    void divider(const Vertex* d, FPlacement f, std::vector<Vertex>& out, bool unique = true)
    {
        dedup_partial = unique;
        out.clear();
        cur.clear();
        width = 0;
        std::size_t i = 0;
        while (i < k) {
            std::size_t j = i;
            while (j < k && d[j] == d[i]) j++;
            extend(d[i], static_cast<unsigned>(j - i), f);
            i = j;
        }
        if (unique) dedup(cur, width);
        out.swap(cur);
    }

    // sorted unique F' (met pairs included)
    void facilitator(FPlacement f, const Vertex* d, std::vector<FPlacement>& out)
    {
        out.clear();
        auto blocked = [&](Vertex v) { return std::binary_search(d, d + k, v); };
        ra.assign(1, f.a);
        for (Vertex w : g.neighbors(f.a)) {
            if (!blocked(w)) ra.push_back(w);
        }
        rb.assign(1, f.b);
        for (Vertex w : g.neighbors(f.b)) {
            if (!blocked(w)) rb.push_back(w);
        }
        for (Vertex x : ra) {
            for (Vertex y : rb) out.emplace_back(x, y);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

private:
    void extend(Vertex v, unsigned count, FPlacement f)
    {
        // stay or step, kept sorted: neighbour lists are already sorted
        opts.clear();
        bool placed = false;
        for (Vertex w : g.neighbors(v)) {
            if (!placed && w > v) {
                opts.push_back(v);
                placed = true;
            }
            if (!f.contains(w)) opts.push_back(w);
        }
        if (!placed) opts.push_back(v);
        const std::size_t q = opts.size();
        if (count == 1) {
            extend_single(q);
            return;
        }
        // all multisets of size count over opts
        choices.clear();
        pick.assign(count, 0);
        while (true) {
            for (unsigned x = 0; x < count; x++) choices.push_back(opts[pick[x]]);
            int pos = static_cast<int>(count) - 1;
            while (pos >= 0 && pick[pos] == q - 1) pos--;
            if (pos < 0) break;
            pick[pos]++;
            for (unsigned x = pos + 1; x < count; x++) pick[x] = pick[pos];
        }
        const std::size_t nchoices = choices.size() / count;
        const std::size_t new_width = width + count;
        if (width == 0) {
            cur.swap(choices);
            width = new_width;
            return;
        }
        const std::size_t nold = cur.size() / width;
        next.resize(nold * nchoices * new_width);
        Vertex* dst = next.data();
        for (std::size_t a = 0; a < nold; a++) {
            const Vertex* m = cur.data() + a * width;
            for (std::size_t b = 0; b < nchoices; b++) {
                const Vertex* c = choices.data() + b * count;
                std::merge(m, m + width, c, c + count, dst);
                dst += new_width;
            }
        }
        width = new_width;
        cur.swap(next);
        if (dedup_partial && cur.size() / width > 64) dedup(cur, width);
    }

    void extend_single(std::size_t q)
    {
        if (width == 0) {
            cur.assign(opts.begin(), opts.end());
            width = 1;
            return;
        }
        const std::size_t nold = cur.size() / width;
        const std::size_t new_width = width + 1;
        next.resize(nold * q * new_width);
        Vertex* dst = next.data();
        for (std::size_t a = 0; a < nold; a++) {
            const Vertex* m = cur.data() + a * width;
            for (std::size_t b = 0; b < q; b++) {
                const Vertex o = opts[b];
                std::size_t x = 0;
                while (x < width && m[x] <= o) {
                    dst[x] = m[x];
                    x++;
                }
                dst[x] = o;
                for (; x < width; x++) dst[x + 1] = m[x];
                dst += new_width;
            }
        }
        width = new_width;
        cur.swap(next);
        if (dedup_partial && cur.size() / width > 64) dedup(cur, width);
    }

    void dedup(std::vector<Vertex>& recs, std::size_t w)
    {
        if (w == 0) return;
        const std::size_t count = recs.size() / w;
        if (count <= 1) return;
        order.resize(count);
        std::iota(order.begin(), order.end(), 0u);
        const Vertex* base = recs.data();
        auto less = [&](std::uint32_t x, std::uint32_t y) {
            return std::lexicographical_compare(base + x * w, base + x * w + w, base + y * w, base + y * w + w);
        };
        std::sort(order.begin(), order.end(), less);
        scratch.clear();
        const Vertex* prev = nullptr;
        for (std::uint32_t idx : order) {
            const Vertex* rec = base + idx * w;
            if (prev != nullptr && std::memcmp(prev, rec, w * sizeof(Vertex)) == 0) continue;
            scratch.insert(scratch.end(), rec, rec + w);
            prev = rec;
        }
        recs.swap(scratch);
    }

    const Graph& g;
    unsigned k;
    std::size_t width = 0;
    bool dedup_partial = true;
    std::vector<Vertex> cur, next, choices, opts, scratch, ra, rb;
    std::vector<std::size_t> pick;
    std::vector<std::uint32_t> order;
};

} // namespace rendezvous::detail
