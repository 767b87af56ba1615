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

#include "rendezvous/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace rendezvous {

using json = nlohmann::json;

const char*
parse_error_name(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::MalformedHeader: return "MalformedHeader";
    case ParseErrorKind::MalformedLine: return "MalformedLine";
    case ParseErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
    case ParseErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ParseErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ParseErrorKind::SelfLoop: return "SelfLoop";
    case ParseErrorKind::InvalidTerminal: return "InvalidTerminal";
    case ParseErrorKind::InvalidAgentCount: return "InvalidAgentCount";
    case ParseErrorKind::MissingTerminals: return "MissingTerminals";
    }
    return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : std::runtime_error(std::string(parse_error_name(kind)) + (line > 0 ? " at line " + std::to_string(line) : "")
                         + ": " + detail),
      kind_(kind), line_(line)
{
}

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
    std::string_view rest_after(std::size_t token_index) const;
    std::string_view raw;
};

std::string_view
trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string_view
Line::rest_after(std::size_t token_index) const
{
    // tokens are views into raw, so the offset is recoverable
    const auto& tok = tokens[token_index];
    auto offset = static_cast<std::size_t>(tok.data() + tok.size() - raw.data());
    return trim(raw.substr(offset));
}

std::vector<Line>
split_lines(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty()) {
        auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        number++;
        auto hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        raw = trim(raw);
        if (raw.empty()) continue;
        Line line{number, {}, raw};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) i++;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') j++;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

bool
to_int(std::string_view tok, long long& out)
{
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

long long
need_int(const Line& line, std::size_t i, ParseErrorKind kind)
{
    long long v = 0;
    if (i >= line.tokens.size() || !to_int(line.tokens[i], v)) {
        throw ParseError(kind, line.number, "expected integer in '" + std::string(line.raw) + "'");
    }
    return v;
}

Vertex
need_vertex(const Line& line, std::size_t i, std::size_t n)
{
    long long v = need_int(line, i, ParseErrorKind::MalformedLine);
    if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        throw ParseError(ParseErrorKind::VertexOutOfRange, line.number,
                         "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");
    }
    return static_cast<Vertex>(v);
}

// accepts "s 0 t 2 k 1" and "s=0 t=2 k=1"
void
parse_terminals(const Line& line, std::size_t n, long long& s, long long& t, long long& k)
{
    std::vector<std::string_view> parts;
    for (auto tok : line.tokens) {
        auto eq = tok.find('=');
        if (eq == std::string_view::npos) {
            parts.push_back(tok);
        } else {
            parts.push_back(tok.substr(0, eq));
            parts.push_back(tok.substr(eq + 1));
        }
    }
    if (parts.size() != 6 || parts[0] != "s" || parts[2] != "t" || parts[4] != "k") {
        throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 's <s> t <t> k <k>'");
    }
    auto value = [&](std::size_t i, ParseErrorKind kind) {
        long long v = 0;
        if (!to_int(parts[i], v)) throw ParseError(kind, line.number, "expected integer");
        return v;
    };
    s = value(1, ParseErrorKind::InvalidTerminal);
    t = value(3, ParseErrorKind::InvalidTerminal);
    k = value(5, ParseErrorKind::InvalidAgentCount);
    auto bad = [n](long long v) { return v < 0 || static_cast<unsigned long long>(v) >= n; };
    if (bad(s) || bad(t)) {
        throw ParseError(ParseErrorKind::InvalidTerminal, line.number, "terminal out of range");
    }
    if (k < 1) throw ParseError(ParseErrorKind::InvalidAgentCount, line.number, "k must be at least 1");
}

void
add_edge_checked(Graph& g, Vertex u, Vertex v, int line)
{
    if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line, "self-loop at " + std::to_string(u));
    if (g.adjacent(u, v)) {
        throw ParseError(ParseErrorKind::DuplicateEdge, line,
                         "edge " + std::to_string(u) + " " + std::to_string(v) + " repeated");
    }
    g.add_edge(u, v);
}

} // namespace

Instance
parse_instance(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t at = 0;
    if (at < lines.size() && lines[at].tokens[0] == "rv") {
        const auto& magic = lines[at];
        if (magic.tokens.size() != 2 || magic.tokens[1] != "1") {
            throw ParseError(ParseErrorKind::MalformedHeader, magic.number, "unsupported format version");
        }
        at++;
    }
    if (at >= lines.size()) throw ParseError(ParseErrorKind::MalformedHeader, 1, "missing '<n> <m>' header");
    const auto& header = lines[at++];
    long long n = 0;
    long long m = 0;
    if (header.tokens.size() != 2 || !to_int(header.tokens[0], n) || !to_int(header.tokens[1], m) || n < 1
        || m < 0) {
        throw ParseError(ParseErrorKind::MalformedHeader, header.number, "expected '<n> <m>' with n >= 1");
    }
    Graph g(static_cast<std::size_t>(n));
    for (long long e = 0; e < m; e++) {
        if (at >= lines.size() || lines[at].tokens[0] == "s" || lines[at].tokens[0].starts_with("s=")) {
            int where = at < lines.size() ? lines[at].number : (lines.empty() ? 1 : lines.back().number);
            throw ParseError(ParseErrorKind::EdgeCountMismatch, where,
                             "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        }
        const auto& line = lines[at++];
        if (line.tokens.size() != 2) throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected '<u> <v>'");
        Vertex u = need_vertex(line, 0, g.size());
        Vertex v = need_vertex(line, 1, g.size());
        add_edge_checked(g, u, v, line.number);
    }
    bool have_terminals = false;
    long long s = 0;
    long long t = 0;
    long long k = 0;
    for (; at < lines.size(); at++) {
        const auto& line = lines[at];
        auto head = line.tokens[0];
        if (head == "s" || head.starts_with("s=")) {
            if (have_terminals) throw ParseError(ParseErrorKind::MalformedLine, line.number, "terminals given twice");
            parse_terminals(line, g.size(), s, t, k);
            have_terminals = true;
        } else if (head == "label") {
            if (line.tokens.size() < 3) throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 'label <v> <string>'");
            Vertex v = need_vertex(line, 1, g.size());
            g.set_label(v, std::string(line.rest_after(1)));
        } else if (head == "coord") {
            if (line.tokens.size() != 4) throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 'coord <v> <row> <col>'");
            Vertex v = need_vertex(line, 1, g.size());
            auto r = need_int(line, 2, ParseErrorKind::MalformedLine);
            auto c = need_int(line, 3, ParseErrorKind::MalformedLine);
            g.set_coord(v, Coord{static_cast<int>(r), static_cast<int>(c)});
        } else {
            long long dummy = 0;
            if (line.tokens.size() == 2 && to_int(line.tokens[0], dummy)) {
                throw ParseError(ParseErrorKind::EdgeCountMismatch, line.number, "more edge lines than declared");
            }
            throw ParseError(ParseErrorKind::MalformedLine, line.number, "unknown directive '" + std::string(head) + "'");
        }
    }
    if (!have_terminals) {
        int where = lines.empty() ? 1 : lines.back().number;
        throw ParseError(ParseErrorKind::MissingTerminals, where, "missing 's <s> t <t> k <k>' line");
    }
    return make_instance(std::move(g), static_cast<Vertex>(s), static_cast<Vertex>(t), static_cast<unsigned>(k));
}

std::string
serialize_instance(const Instance& inst)
{
    const Graph& g = inst.graph;
    std::ostringstream out;
    out << "rv 1\n" << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    out << "s " << inst.s << " t " << inst.t << " k " << inst.k << '\n';
    for (Vertex v = 0; v < g.size(); v++) {
        if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
    }
    for (Vertex v = 0; v < g.size(); v++) {
        if (auto c = g.coord(v)) out << "coord " << v << ' ' << c->row << ' ' << c->col << '\n';
    }
    return out.str();
}

Instance
parse_instance_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseErrorKind::MalformedHeader, 0, e.what());
    }
    auto int_field = [&](const char* name, ParseErrorKind kind) -> long long {
        if (!doc.contains(name) || !doc[name].is_number_integer()) {
            throw ParseError(kind, 0, std::string("missing integer field '") + name + "'");
        }
        return doc[name].get<long long>();
    };
    long long n = int_field("n", ParseErrorKind::MalformedHeader);
    if (n < 1) throw ParseError(ParseErrorKind::MalformedHeader, 0, "n must be at least 1");
    Graph g(static_cast<std::size_t>(n));
    auto vertex = [&](const json& v) -> Vertex {
        if (!v.is_number_integer()) throw ParseError(ParseErrorKind::MalformedLine, 0, "vertex must be an integer");
        auto x = v.get<long long>();
        if (x < 0 || x >= n) throw ParseError(ParseErrorKind::VertexOutOfRange, 0, "vertex " + std::to_string(x));
        return static_cast<Vertex>(x);
    };
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError(ParseErrorKind::MalformedHeader, 0, "missing 'edges' array");
    }
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError(ParseErrorKind::MalformedLine, 0, "edge must be [u, v]");
        add_edge_checked(g, vertex(e[0]), vertex(e[1]), 0);
    }
    if (!doc.contains("s") || !doc.contains("t")) throw ParseError(ParseErrorKind::MissingTerminals, 0, "missing s/t");
    long long s = int_field("s", ParseErrorKind::InvalidTerminal);
    long long t = int_field("t", ParseErrorKind::InvalidTerminal);
    if (s < 0 || s >= n || t < 0 || t >= n) throw ParseError(ParseErrorKind::InvalidTerminal, 0, "terminal out of range");
    long long k = int_field("k", ParseErrorKind::InvalidAgentCount);
    if (k < 1) throw ParseError(ParseErrorKind::InvalidAgentCount, 0, "k must be at least 1");
    if (doc.contains("labels")) {
        const auto& labels = doc["labels"];
        if (!labels.is_array() || labels.size() > static_cast<std::size_t>(n)) {
            throw ParseError(ParseErrorKind::MalformedLine, 0, "labels must be an array of at most n strings");
        }
        for (std::size_t v = 0; v < labels.size(); v++) {
            if (!labels[v].is_string()) throw ParseError(ParseErrorKind::MalformedLine, 0, "label must be a string");
            if (!labels[v].get<std::string>().empty()) g.set_label(static_cast<Vertex>(v), labels[v].get<std::string>());
        }
    }
    if (doc.contains("coords")) {
        for (const auto& c : doc["coords"]) {
            if (!c.is_array() || c.size() != 3) throw ParseError(ParseErrorKind::MalformedLine, 0, "coord must be [v, row, col]");
            g.set_coord(vertex(c[0]), Coord{c[1].get<int>(), c[2].get<int>()});
        }
    }
    return make_instance(std::move(g), static_cast<Vertex>(s), static_cast<Vertex>(t), static_cast<unsigned>(k));
}

std::string
serialize_instance_json(const Instance& inst)
{
    const Graph& g = inst.graph;
    json doc;
    doc["n"] = g.size();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    doc["s"] = inst.s;
    doc["t"] = inst.t;
    doc["k"] = inst.k;
    if (g.has_labels()) {
        json labels = json::array();
        for (Vertex v = 0; v < g.size(); v++) labels.push_back(g.label(v));
        doc["labels"] = std::move(labels);
    }
    if (g.has_any_coord()) {
        json coords = json::array();
        for (Vertex v = 0; v < g.size(); v++) {
            if (auto c = g.coord(v)) coords.push_back({v, c->row, c->col});
        }
        doc["coords"] = std::move(coords);
    }
    return doc.dump() + "\n";
}

namespace {
bool
is_json_path(const std::string& path)
{
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}
} // namespace

Instance
load_instance(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return is_json_path(path) ? parse_instance_json(buf.str()) : parse_instance(buf.str());
}

void
save_instance(const std::string& path, const Instance& inst)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << (is_json_path(path) ? serialize_instance_json(inst) : serialize_instance(inst));
}

} // namespace rendezvous
