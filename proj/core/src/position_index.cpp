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

#include "rendezvous/position_index.hpp"

#include <algorithm>

namespace rendezvous {

namespace {

using wide = unsigned __int128;

constexpr std::uint64_t saturated = UINT64_MAX;

wide
binom_wide(std::uint64_t a, std::uint64_t b)
{
    if (b > a) return 0;
    b = std::min(b, a - b);
    wide r = 1;
    for (std::uint64_t i = 1; i <= b; i++) {
        r = r * (a - b + i) / i;
        if (r > (wide(1) << 100)) return wide(1) << 100;
    }
    return r;
}

std::uint64_t
clamp64(wide x)
{
    return x > saturated ? saturated : static_cast<std::uint64_t>(x);
}

} // namespace

CapacityExceeded::CapacityExceeded(std::uint64_t position_sides, std::uint64_t budget)
    : std::runtime_error("CapacityExceeded: " + std::to_string(position_sides) + " position-sides exceed budget "
                         + std::to_string(budget)),
      count(position_sides), limit(budget)
{
}

std::uint64_t
compatible_pair_count(std::uint64_t n, std::uint64_t k)
{
    if (n == 0 || k == 0) return 0;
    wide met = wide(n) * binom_wide(n + k - 2, k);
    wide apart = n >= 2 ? binom_wide(n, 2) * binom_wide(n + k - 3, k) : 0;
    return clamp64(met + apart);
}

PositionIndex::PositionIndex(std::size_t n_, unsigned k_) : n(n_), k(k_)
{
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (n < 1) throw std::invalid_argument("empty graph");
    std::size_t rows = n + k + 1;
    choose.assign(rows * (k + 1), 0);
    for (std::size_t a = 0; a < rows; a++) {
        for (unsigned b = 0; b <= k; b++) choose[a * (k + 1) + b] = clamp64(binom_wide(a, b));
    }
    offsets.push_back(0);
    for (Vertex a = 0; a < n; a++) {
        for (Vertex b = a; b < n; b++) {
            f_pairs.emplace_back(a, b);
            std::size_t free = a == b ? n - 1 : n - 2;
            std::uint64_t groups = free == 0 ? 0 : binom(static_cast<unsigned>(free + k - 1), k);
            offsets.push_back(offsets.back() + groups);
        }
    }
}

std::uint64_t
PositionIndex::binom(unsigned a, unsigned b) const
{
    if (b > k || a >= n + k + 1) return clamp64(binom_wide(a, b));
    return choose[a * (k + 1) + b];
}

std::size_t
PositionIndex::f_index(Vertex a, Vertex b) const
{
    // rows before a hold n, n-1, ..., n-a+1 pairs
    std::size_t x = a;
    return x * n - (x * (x == 0 ? 0 : x - 1)) / 2 + (b - a);
}

std::uint64_t
PositionIndex::pair_of(std::size_t fi, const Vertex* d) const
{
    const FPlacement f = f_pairs[fi];
    std::uint64_t rank = 0;
    const std::uint64_t* col = choose.data();
    const std::size_t stride = k + 1;
    if (f.a == f.b) {
        for (unsigned i = 0; i < k; i++) {
            Vertex x = d[i] - (d[i] > f.a ? 1 : 0);
            rank += col[(x + i) * stride + i + 1];
        }
    } else {
        for (unsigned i = 0; i < k; i++) {
            Vertex x = d[i] - (d[i] > f.a ? 1 : 0) - (d[i] > f.b ? 1 : 0);
            rank += col[(x + i) * stride + i + 1];
        }
    }
    return offsets[fi] + rank;
}

std::uint64_t
PositionIndex::pair_of(const FPlacement& f, const Vertex* d) const
{
    return pair_of(f_index(f.a, f.b), d);
}

std::size_t
PositionIndex::decode(std::uint64_t pair, Vertex* d) const
{
    auto it = std::upper_bound(offsets.begin(), offsets.end(), pair);
    std::size_t fi = static_cast<std::size_t>(it - offsets.begin()) - 1;
    const FPlacement f = f_pairs[fi];
    std::uint64_t r = pair - offsets[fi];
    std::size_t free = f.a == f.b ? n - 1 : n - 2;
    const std::size_t stride = k + 1;
    unsigned hi = static_cast<unsigned>(free + k - 2);
    for (unsigned i = k; i-- > 0;) {
        // largest c in [i, hi] with C(c, i+1) <= r
        unsigned lo = i;
        unsigned top = hi;
        while (lo < top) {
            unsigned mid = (lo + top + 1) / 2;
            if (choose[mid * stride + i + 1] <= r) {
                lo = mid;
            } else {
                top = mid - 1;
            }
        }
        r -= choose[lo * stride + i + 1];
        Vertex x = lo - i;
        if (x >= f.a) x++;
        if (f.a != f.b && x >= f.b) x++;
        d[i] = x;
        hi = lo - 1;
    }
    return fi;
}

Position
PositionIndex::position(std::uint64_t pair, Side to_move) const
{
    std::vector<Vertex> d(k);
    std::size_t fi = decode(pair, d.data());
    Position p;
    p.f = f_pairs[fi];
    p.d.agents = std::move(d);
    p.to_move = to_move;
    return p;
}

PositionIndex
enumerate_positions(const Graph& g, unsigned k, std::uint64_t budget)
{
    std::uint64_t pairs = compatible_pair_count(g.size(), k);
    std::uint64_t sides = pairs > saturated / 2 ? saturated : 2 * pairs;
    if (sides > budget) throw CapacityExceeded(sides, budget);
    return PositionIndex(g.size(), k);
}

} // namespace rendezvous
