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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rendezvous/graph.hpp"

namespace rendezvous {

/** Triples over {alpha, beta, gamma} x [n]; sets[j] = {a, b, c}, 1-based. */
struct ThreeDMInstance {
    unsigned n = 0;
    std::vector<std::array<unsigned, 3>> sets;
};

/** NAE(x_var <= bound, ...) over domain [dstar]; variables 1-based. */
struct NAELiteral {
    unsigned var = 1;
    unsigned bound = 1;
    bool operator==(const NAELiteral&) const = default;
    auto operator<=>(const NAELiteral&) const = default;
};

struct NAEInstance {
    unsigned n = 0;
    unsigned dstar = 1;
    std::vector<std::array<NAELiteral, 3>> clauses;
};

/** Universe [universe], subsets 1-based, at most `budget` sets may be chosen. */
struct SetCoverInstance {
    unsigned universe = 0;
    std::vector<std::vector<unsigned>> family;
    unsigned budget = 1;
};

class SourceInvalid : public std::invalid_argument {
public:
    explicit SourceInvalid(const std::string& what) : std::invalid_argument("SourceInvalid: " + what) {}
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t candidates);
    std::uint64_t candidates() const { return count; }

private:
    std::uint64_t count;
};

void validate_source(const ThreeDMInstance& src);
void validate_source(const NAEInstance& src);
void validate_source(const SetCoverInstance& src);

/** A constructed path from `from` to `to`; vertices are the internal ones in order. */
struct RegisteredPath {
    std::string id;
    Vertex from = 0;
    Vertex to = 0;
    std::uint64_t internal = 0;
    std::vector<Vertex> vertices;
};

enum class ReductionKind { ThreeDM, NAE, SetCover };

const char* reduction_name(ReductionKind kind);
ReductionKind parse_reduction(const std::string& name);

/** Named vertices and the path registry of one generated instance. */
struct GadgetIndex {
    ReductionKind kind = ReductionKind::NAE;
    unsigned k = 0;
    // 3DM: n^2 + m^2; NAE: dstar; set cover: budget
    std::uint64_t scale = 0;
    std::map<std::string, Vertex> named;
    std::vector<RegisteredPath> paths;

    Vertex at(const std::string& name) const;
    const RegisteredPath& path(const std::string& id) const;
    // vertex count implied by the registry
    std::uint64_t registry_vertex_count() const;
};

struct Reduction {
    Instance instance;
    GadgetIndex index;
};

/** k = n + 2; scale M = n^2 + m^2 sets the element and critical path lengths. */
Reduction reduce_3dm(const ThreeDMInstance& src);

/** k = n + 2; variable rows of dstar internals, clause paths of 2dstar-d and dstar+d. */
Reduction reduce_nae(const NAEInstance& src);

/** Divider gets budget + 1 agents; every vertex is named. */
Reduction reduce_setcover(const SetCoverInstance& src);

constexpr std::uint64_t kOracleBudget = 1'000'000;

// witness-returning brute force; BudgetExceeded past the candidate budget
std::optional<std::vector<unsigned>> matching_3dm(const ThreeDMInstance& src,
                                                  std::uint64_t budget = kOracleBudget);
std::optional<std::vector<unsigned>> assignment_nae(const NAEInstance& src, std::uint64_t budget = kOracleBudget);
std::optional<std::vector<unsigned>> cover_setcover(const SetCoverInstance& src,
                                                    std::uint64_t budget = kOracleBudget);

bool oracle_3dm(const ThreeDMInstance& src, std::uint64_t budget = kOracleBudget);
bool oracle_nae(const NAEInstance& src, std::uint64_t budget = kOracleBudget);
bool oracle_setcover(const SetCoverInstance& src, std::uint64_t budget = kOracleBudget);

// true when the clause is satisfied: neither all literals true nor all false
bool nae_satisfied(const std::array<NAELiteral, 3>& clause, const std::vector<unsigned>& values);

/*
 * JSON forms:
 *   3DM       {"n": 2, "sets": [[a, b, c], ...]}
 *   NAE       {"n": 2, "dstar": 2, "clauses": [[i1, d1, i2, d2, i3, d3], ...]}
 *   set cover {"universe": 3, "family": [[1, 2], [3]], "budget": 2}
 *   gadget    {"kind", "k", "scale", "named": {name: v}, "paths": [{id, from, to, internal, vertices}]}
 * Parsers throw SourceInvalid on malformed documents.
 */
ThreeDMInstance parse_3dm_json(const std::string& text);
NAEInstance parse_nae_json(const std::string& text);
SetCoverInstance parse_setcover_json(const std::string& text);
std::string serialize_source_json(const ThreeDMInstance& src);
std::string serialize_source_json(const NAEInstance& src);
std::string serialize_source_json(const SetCoverInstance& src);

std::string serialize_gadget_index(const GadgetIndex& gi);
GadgetIndex parse_gadget_index(const std::string& text);

} // namespace rendezvous
