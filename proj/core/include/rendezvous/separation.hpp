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

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "rendezvous/graph.hpp"

namespace rendezvous {

/** Non-negative count or Infinite; Infinite is larger than every count. */
class ExtendedCount {
public:
    ExtendedCount() = default;
    ExtendedCount(unsigned v) : val(v) {}
    static ExtendedCount infinite();

    bool is_infinite() const { return inf; }
    // throws std::logic_error on Infinite
    unsigned value() const;
    std::string to_string() const;

    bool operator==(const ExtendedCount& o) const { return inf == o.inf && (inf || val == o.val); }
    std::strong_ordering operator<=>(const ExtendedCount& o) const;

private:
    unsigned val = 0;
    bool inf = false;
};

class CutUndefined : public std::logic_error {
public:
    CutUndefined() : std::logic_error("CutUndefined: s = t or s and t are adjacent") {}
};

/**
 * Minimum number of vertices other than s, t whose removal disconnects s from
 * t; Infinite when s = t or st is an edge. Unit-capacity vertex-split flow
 * with BFS augmenting paths.
 */
ExtendedCount static_separation(const Graph& g, Vertex s, Vertex t);

/**
 * A minimum (s,t)-vertex cut, sorted. Vertices whose in-half is reachable in
 * the final residual network and whose out-half is not.
 */
std::vector<Vertex> min_vertex_cut(const Graph& g, Vertex s, Vertex t);

// true when removing cut leaves no s-t path
bool separates(const Graph& g, Vertex s, Vertex t, const std::vector<Vertex>& cut);

} // namespace rendezvous
