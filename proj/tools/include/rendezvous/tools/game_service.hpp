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

#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "rendezvous/position_index.hpp"

namespace rendezvous::tools {

struct ServiceConfig {
    std::uint64_t budget = kDefaultBudget;
    std::size_t max_sessions = 256;
    // seed for session ids; 0 draws one from std::random_device
    std::uint64_t seed = 0;
};

struct Reply {
    int status = 200;
    // JSON document
    std::string body;
};

struct Session;

/**
 * The play service without the transport: routes a method, path and JSON
 * body to a reply. Sessions live in memory, least recently used evicted past
 * max_sessions, each mutated under its own lock.
 *
 *   POST /games                      {instance, human_role}
 *   GET  /games/{id}
 *   GET  /games/{id}/moves
 *   POST /games/{id}/placement       {agents: [...]}
 *   POST /games/{id}/move            {f: [a, b]} or {d: [...]}
 *   POST /games/{id}/engine-move
 *   GET  /games/{id}/eval
 *
 * Errors: 400 malformed, 404 unknown session or route, 409 illegal or
 * out-of-turn move (with a reason), 410 finished game.
 */
class GameService {
public:
    explicit GameService(ServiceConfig config = {});
    ~GameService();

    Reply handle(const std::string& method, const std::string& path, const std::string& body);

    std::size_t session_count() const;

private:
    std::shared_ptr<Session> lookup(const std::string& id);
    Reply create(const std::string& body);
    std::string fresh_id();

    ServiceConfig config;
    mutable std::mutex table_mutex;
    std::list<std::string> recency;
    std::map<std::string, std::pair<std::shared_ptr<Session>, std::list<std::string>::iterator>> sessions;
    std::mt19937_64 ids;
};

// blocking HTTP front end for a GameService
int serve_http(GameService& service, const std::string& host, int port);

} // namespace rendezvous::tools
