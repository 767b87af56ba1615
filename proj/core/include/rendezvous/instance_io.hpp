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

#include <stdexcept>
#include <string>
#include <string_view>

#include "rendezvous/graph.hpp"

namespace rendezvous {

enum class ParseErrorKind {
    MalformedHeader,
    MalformedLine,
    EdgeCountMismatch,
    VertexOutOfRange,
    DuplicateEdge,
    SelfLoop,
    InvalidTerminal,
    InvalidAgentCount,
    MissingTerminals,
};

const char* parse_error_name(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);
    ParseErrorKind kind() const { return kind_; }
    // 1-based; 0 when the input has no line structure (JSON)
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

/*
 * Text format:
 *   rv 1
 *   <n> <m>
 *   <u> <v>                 (m lines)
 *   s <s> t <t> k <k>
 *   label <v> <string>      (optional)
 *   coord <v> <row> <col>   (optional)
 * '#' starts a comment. Disconnected graphs parse fine; Instance::connected
 * records it.
 */
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// JSON mirror: {n, edges, s, t, k, labels?, coords?}
Instance parse_instance_json(std::string_view text);
std::string serialize_instance_json(const Instance& inst);

// dispatch on the .json extension
Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);

} // namespace rendezvous
