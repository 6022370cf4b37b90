#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>

#include "tictactoe/session.hpp"

namespace tictactoe::service {

struct Request {
    std::string method;  // "GET", "POST", "PUT", ...
    std::string path;    // "/sessions/abc/moves"
    std::string body;
};

struct Response {
    int status = 200;
    std::string body;  // application/json
};

// In-memory registry of game sets behind a JSON request/response surface.
//
// Routes:
//   POST /sessions                    {mode, leadPlayer}   -> view
//   POST /sessions/load               {path}               -> view (new id)
//   GET  /sessions/{id}                                    -> view
//   POST /sessions/{id}/moves         {row, col}           -> view
//   POST /sessions/{id}/ai-move                            -> view
//   POST /sessions/{id}/navigate      {target}             -> view
//   POST /sessions/{id}/initialize                         -> view
//   PUT  /sessions/{id}/setup         {mode, leadPlayer}   -> view
//   POST /sessions/{id}/stop                               -> final stats
//   POST /sessions/{id}/save          {path}               -> view
//
// Errors carry {"code": ..., "message": ...}. Operations on one session are
// serialized; different sessions proceed independently.
class GameService {
public:
    GameService();

    Response handle(const Request& request);

    std::size_t session_count() const;

private:
    struct Slot {
        std::mutex mutex;
        GameSession session;
    };

    std::string add(GameSession session);
    std::shared_ptr<Slot> find(const std::string& id) const;

    Response route(const Request& request);

    mutable std::mutex registry_mutex_;
    std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;
    std::mt19937_64 id_rng_;
    std::uint64_t id_counter_ = 0;
};

// JSON rendering of a session as returned by every view endpoint.
std::string session_view_json(const std::string& id, const GameSession& session);

}  // namespace tictactoe::service
