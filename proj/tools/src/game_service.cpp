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

#include "rendezvous/tools/game_service.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "rendezvous/engine.hpp"
#include "rendezvous/instance_io.hpp"
#include "rendezvous/policies.hpp"
#include "rendezvous/separation.hpp"
#include "rendezvous/special.hpp"

namespace rendezvous::tools {

using json = nlohmann::json;

struct HistoryEntry {
    unsigned round = 0;
    std::string actor;
    Position position;
};

struct Session {
    std::mutex mu;
    std::string id;
    Instance inst;
    Side human = Side::Facilitator;
    std::optional<SolveReport> report;
    std::optional<ExtendedCount> d;
    ExtendedCount lambda;
    std::unique_ptr<HeuristicDivider> heuristic_divider;
    std::unique_ptr<GreedyRushFacilitator> heuristic_facilitator;

    Position pos;
    bool placed = false;
    unsigned round = 0;
    bool finished = false;
    Vertex meeting_vertex = 0;
    std::vector<HistoryEntry> history;

    bool exact() const { return report.has_value(); }
    Side engine() const { return other_side(human); }
};

namespace {

class Fail {
public:
    Fail(int status_, std::string error_, std::string reason_ = {})
        : status(status_), error(std::move(error_)), reason(std::move(reason_))
    {
    }
    Reply reply() const
    {
        json doc{{"error", error}};
        if (!reason.empty()) doc["reason"] = reason;
        return Reply{status, doc.dump()};
    }
    int status;
    std::string error;
    std::string reason;
};

Reply
ok(const json& doc, int status = 200)
{
    return Reply{status, doc.dump()};
}

json
parse_body(const std::string& body)
{
    if (body.empty()) return json::object();
    try {
        json doc = json::parse(body);
        if (!doc.is_object()) throw Fail(400, "malformed", "body must be a JSON object");
        return doc;
    } catch (const json::parse_error&) {
        throw Fail(400, "malformed", "body is not JSON");
    }
}

std::vector<Vertex>
vertex_list(const json& doc, const Graph& g, const char* field)
{
    if (!doc.is_array()) throw Fail(400, "malformed", std::string(field) + " must be an array of vertices");
    std::vector<Vertex> out;
    for (const json& v : doc) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || !g.valid(static_cast<Vertex>(v.get<long long>()))) {
            throw Fail(400, "malformed", std::string(field) + " names a vertex outside the graph");
        }
        out.push_back(static_cast<Vertex>(v.get<long long>()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Side
parse_role(const json& doc)
{
    if (!doc.is_string()) throw Fail(400, "malformed", "human_role must be a string");
    std::string role = doc.get<std::string>();
    std::transform(role.begin(), role.end(), role.begin(), [](unsigned char c) { return std::tolower(c); });
    if (role == "facilitator") return Side::Facilitator;
    if (role == "divider") return Side::Divider;
    throw Fail(400, "malformed", "human_role must be Facilitator or Divider");
}

json
count_json(const ExtendedCount& c)
{
    if (c.is_infinite()) return "infinite";
    return c.value();
}

json
position_json(const Position& p)
{
    return json{{"f", {p.f.a, p.f.b}}, {"d", p.d.agents}, {"to_move", side_name(p.to_move)}};
}

std::string
status_of(const Session& s)
{
    if (s.finished) return "Finished";
    if (!s.placed) return "AwaitingPlacement";
    return s.pos.to_move == s.human ? "HumanTurn" : "EngineTurn";
}

json
state_json(const Session& s)
{
    json doc;
    doc["id"] = s.id;
    doc["status"] = status_of(s);
    doc["engine_mode"] = s.exact() ? "exact" : "heuristic";
    doc["human_role"] = side_name(s.human);
    doc["instance"] = {{"n", s.inst.graph.size()}, {"s", s.inst.s}, {"t", s.inst.t}, {"k", s.inst.k}};
    doc["round"] = s.round;
    if (s.placed) {
        doc["position"] = position_json(s.pos);
    } else {
        doc["position"] = json{{"f", {s.pos.f.a, s.pos.f.b}}, {"d", json::array()}, {"to_move", "Divider"}};
    }
    json history = json::array();
    for (const HistoryEntry& h : s.history) {
        json entry = position_json(h.position);
        entry["round"] = h.round;
        entry["actor"] = h.actor;
        history.push_back(entry);
    }
    doc["history"] = history;
    if (s.finished) doc["outcome"] = {{"met", true}, {"vertex", s.meeting_vertex}, {"round", s.round}};
    if (s.d) doc["d"] = count_json(*s.d);
    doc["lambda"] = count_json(s.lambda);
    return doc;
}

void
record(Session& s, const std::string& actor)
{
    s.history.push_back({s.round, actor, s.pos});
    if (s.pos.f.met()) {
        s.finished = true;
        s.meeting_vertex = s.pos.f.a;
    }
}

// the Divider's placement opens the game; Facilitator moves next
void
apply_placement(Session& s, DPlacement d)
{
    s.pos.d = std::move(d);
    s.pos.to_move = Side::Facilitator;
    s.placed = true;
    record(s, "placement");
}

void
apply_move(Session& s, const Position& next)
{
    if (s.pos.to_move == Side::Facilitator) s.round++;
    const Side mover = s.pos.to_move;
    s.pos = next;
    record(s, side_name(mover));
}

// the reason a half-move is refused, empty when it is legal
std::string
refusal(const Session& s, const Position& next)
{
    const Graph& g = s.inst.graph;
    if (s.pos.to_move == Side::Facilitator) {
        for (Vertex v : {next.f.a, next.f.b}) {
            if (std::binary_search(s.pos.d.agents.begin(), s.pos.d.agents.end(), v)) return "occupied-by-adversary";
        }
        if (!multiset_adjacent(s.pos.f, next.f, g)) return "not-adjacent";
    } else {
        for (Vertex v : next.d.agents) {
            if (s.pos.f.contains(v)) return "occupied-by-adversary";
        }
        if (!multiset_adjacent(s.pos.d, next.d, g)) return "not-adjacent";
    }
    if (!legal_move(s.pos, next, g)) return "not-adjacent";
    return {};
}

void
engine_reply(Session& s)
{
    Position next = s.pos;
    next.to_move = other_side(s.pos.to_move);
    if (s.pos.to_move == Side::Facilitator) {
        next.f = s.exact() ? s.report->facilitator_move(s.pos) : s.heuristic_facilitator->move(s.pos, s.round + 1);
    } else {
        next.d = s.exact() ? s.report->divider_move(s.pos) : s.heuristic_divider->move(s.pos, s.round);
    }
    if (!legal_move(s.pos, next, s.inst.graph)) throw Fail(500, "engine-illegal-move");
    if (s.exact() && s.report->winner() == s.engine() && !next.f.met()) {
        const bool won = s.report->in_facilitator_region(next);
        if (won != (s.engine() == Side::Facilitator)) throw Fail(500, "engine-left-winning-region");
    }
    apply_move(s, next);
}

std::vector<std::string>
split_path(const std::string& path)
{
    std::vector<std::string> parts;
    std::string cur;
    std::string clean = path.substr(0, path.find('?'));
    for (char c : clean) {
        if (c == '/') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

} // namespace

GameService::GameService(ServiceConfig config_) : config(config_)
{
    ids.seed(config.seed != 0 ? config.seed : std::random_device{}());
}

GameService::~GameService() = default;

std::size_t
GameService::session_count() const
{
    std::lock_guard<std::mutex> lock(table_mutex);
    return sessions.size();
}

std::string
GameService::fresh_id()
{
    std::ostringstream out;
    out << std::hex << ids() << ids();
    return out.str().substr(0, 24);
}

std::shared_ptr<Session>
GameService::lookup(const std::string& id)
{
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw Fail(404, "unknown-session");
    recency.splice(recency.begin(), recency, it->second.second);
    return it->second.first;
}

Reply
GameService::create(const std::string& body)
{
    json doc = parse_body(body);
    if (!doc.contains("instance")) throw Fail(400, "malformed", "missing instance");
    if (!doc.contains("human_role")) throw Fail(400, "malformed", "missing human_role");
    auto session = std::make_shared<Session>();
    try {
        const json& inst = doc["instance"];
        session->inst = inst.is_string() ? parse_instance(inst.get<std::string>()) : parse_instance_json(inst.dump());
    } catch (const ParseError& e) {
        throw Fail(400, "malformed", e.what());
    }
    session->human = parse_role(doc["human_role"]);
    Session& s = *session;
    if (!s.inst.connected) throw Fail(400, "malformed", "DisconnectedGraph: the game needs a connected graph");
    const Graph& g = s.inst.graph;

    std::uint64_t budget = config.budget;
    if (doc.contains("budget") && doc["budget"].is_number_unsigned()) {
        budget = std::min(budget, doc["budget"].get<std::uint64_t>());
    }
    try {
        s.report = solve(s.inst, SolveOptions{budget});
    } catch (const CapacityExceeded&) {
        s.report.reset();
    }
    s.lambda = static_separation(g, s.inst.s, s.inst.t);
    if (s.exact()) {
        std::optional<SpecialResult> fast = solve_special(s.inst);
        if (fast) {
            s.d = fast->d;
        } else {
            try {
                s.d = dynamic_separation(g, s.inst.s, s.inst.t, SeparationOptions{budget, false});
            } catch (const CapacityExceeded&) {
                s.d.reset();
            }
        }
    }
    s.heuristic_divider = std::make_unique<HeuristicDivider>(s.inst.graph);
    s.heuristic_facilitator = std::make_unique<GreedyRushFacilitator>(s.inst.graph);

    s.pos.f = FPlacement(s.inst.s, s.inst.t);
    s.pos.to_move = Side::Divider;
    if (s.pos.f.met()) {
        s.placed = true;
        s.finished = true;
        s.meeting_vertex = s.inst.s;
    } else if (s.human == Side::Facilitator) {
        apply_placement(s, s.exact() ? s.report->divider_placement() : s.heuristic_divider->place(s.inst));
    }

    {
        std::lock_guard<std::mutex> lock(table_mutex);
        do {
            s.id = fresh_id();
        } while (sessions.count(s.id));
        recency.push_front(s.id);
        sessions[s.id] = {session, recency.begin()};
        while (sessions.size() > config.max_sessions) {
            sessions.erase(recency.back());
            recency.pop_back();
        }
    }
    json out = state_json(s);
    json reply{{"id", s.id}, {"status", out["status"]}, {"engine_mode", out["engine_mode"]}};
    if (s.d) reply["d"] = count_json(*s.d);
    reply["lambda"] = count_json(s.lambda);
    reply["state"] = out;
    return ok(reply, 201);
}

Reply
GameService::handle(const std::string& method, const std::string& path, const std::string& body)
{
    try {
        std::vector<std::string> parts = split_path(path);
        if (parts.empty() || parts[0] != "games") throw Fail(404, "unknown-route");
        if (parts.size() == 1) {
            if (method != "POST") throw Fail(404, "unknown-route");
            return create(body);
        }
        std::shared_ptr<Session> session = lookup(parts[1]);
        std::lock_guard<std::mutex> lock(session->mu);
        Session& s = *session;
        const std::string action = parts.size() > 2 ? parts[2] : "";
        if (parts.size() > 3) throw Fail(404, "unknown-route");

        if (method == "GET" && action.empty()) return ok(state_json(s));
        if (method == "GET" && action == "moves") {
            json doc{{"status", status_of(s)}};
            if (s.finished) {
                doc["to_move"] = nullptr;
                doc["moves"] = json::array();
            } else if (!s.placed) {
                json allowed = json::array();
                for (Vertex v = 0; v < s.inst.graph.size(); v++) {
                    if (v != s.inst.s && v != s.inst.t) allowed.push_back(v);
                }
                doc["to_move"] = "Divider";
                doc["placement"] = {{"k", s.inst.k}, {"allowed", allowed}};
                doc["moves"] = json::array();
            } else {
                doc["to_move"] = side_name(s.pos.to_move);
                json moves = json::array();
                for (const Position& next : successors(s.pos, s.inst.graph)) {
                    if (s.pos.to_move == Side::Facilitator) {
                        moves.push_back({{"f", {next.f.a, next.f.b}}});
                    } else {
                        moves.push_back({{"d", next.d.agents}});
                    }
                }
                doc["moves"] = moves;
            }
            return ok(doc);
        }
        if (method == "GET" && action == "eval") {
            if (!s.exact()) throw Fail(409, "not-exact", "heuristic-session");
            json doc;
            doc["winner_optimal"] = side_name(s.report->winner());
            doc["d"] = s.d ? count_json(*s.d) : json(nullptr);
            doc["lambda"] = count_json(s.lambda);
            if (s.report->min_rounds()) doc["min_rounds"] = *s.report->min_rounds();
            if (s.placed && !s.finished) {
                std::optional<unsigned> level = s.report->level(s.pos);
                doc["facilitator_wins_from_here"] = level.has_value();
                if (level) doc["rounds_to_meet"] = *level;
            }
            return ok(doc);
        }
        if (method != "POST") throw Fail(404, "unknown-route");
        if (s.finished) throw Fail(410, "finished");
        json doc = parse_body(body);

        if (action == "placement") {
            if (s.placed || s.human != Side::Divider) throw Fail(409, "illegal-move", "out-of-turn");
            if (!doc.contains("agents")) throw Fail(400, "malformed", "missing agents");
            DPlacement d(vertex_list(doc["agents"], s.inst.graph, "agents"));
            if (d.size() != s.inst.k) throw Fail(400, "malformed", "placement needs exactly k agents");
            for (Vertex v : d.agents) {
                if (v == s.inst.s || v == s.inst.t) throw Fail(409, "illegal-move", "occupied-by-adversary");
            }
            apply_placement(s, std::move(d));
            return ok(state_json(s));
        }
        if (action == "move") {
            if (!s.placed || s.pos.to_move != s.human) throw Fail(409, "illegal-move", "out-of-turn");
            Position next = s.pos;
            next.to_move = other_side(s.pos.to_move);
            if (s.human == Side::Facilitator) {
                if (!doc.contains("f")) {
                    if (doc.contains("d")) throw Fail(409, "illegal-move", "out-of-turn");
                    throw Fail(400, "malformed", "missing f");
                }
                std::vector<Vertex> f = vertex_list(doc["f"], s.inst.graph, "f");
                if (f.size() != 2) throw Fail(400, "malformed", "f needs two vertices");
                next.f = FPlacement(f[0], f[1]);
            } else {
                if (!doc.contains("d")) {
                    if (doc.contains("f")) throw Fail(409, "illegal-move", "out-of-turn");
                    throw Fail(400, "malformed", "missing d");
                }
                DPlacement d(vertex_list(doc["d"], s.inst.graph, "d"));
                if (d.size() != s.inst.k) throw Fail(400, "malformed", "d needs exactly k vertices");
                next.d = std::move(d);
            }
            std::string why = refusal(s, next);
            if (!why.empty()) throw Fail(409, "illegal-move", why);
            apply_move(s, next);
            return ok(state_json(s));
        }
        if (action == "engine-move") {
            if (!s.placed || s.pos.to_move != s.engine()) throw Fail(409, "illegal-move", "out-of-turn");
            engine_reply(s);
            return ok(state_json(s));
        }
        throw Fail(404, "unknown-route");
    } catch (const Fail& f) {
        return f.reply();
    } catch (const std::exception& e) {
        return Fail(500, "internal", e.what()).reply();
    }
}

} // namespace rendezvous::tools
