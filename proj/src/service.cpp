#include "tictactoe/service.hpp"

#include <filesystem>
#include <sstream>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tictactoe/ai.hpp"
#include "tictactoe/errors.hpp"
#include "tictactoe/game_loop.hpp"
#include "tictactoe/persistence.hpp"

namespace tictactoe::service {

using json = nlohmann::ordered_json;

namespace {

// Failure raised inside a handler, already carrying its HTTP status.
struct ApiError {
    int status;
    std::string code;
    std::string message;
};

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfRange:
        case ErrorCode::MalformedTuple:
            return 400;
        case ErrorCode::CellOccupied:
        case ErrorCode::GameOver:
        case ErrorCode::NotAtLatestState:
        case ErrorCode::AtFirstState:
        case ErrorCode::AtLastState:
        case ErrorCode::NotHumanTurn:
        case ErrorCode::NotComputerTurn:
        case ErrorCode::NoLegalMoves:
            return 409;
        case ErrorCode::SessionStopped:
            return 410;
        case ErrorCode::InvalidSaveFile:
            return 422;
    }
    return 500;
}

Response json_response(int status, const json& body) { return {status, body.dump()}; }

Response error_response(int status, std::string_view code, std::string_view message) {
    return json_response(status, {{"code", code}, {"message", message}});
}

json parse_body(const std::string& body) {
    if (body.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
    try {
        json doc = json::parse(body);
        if (!doc.is_object()) throw ApiError{400, "BadRequest", "request body must be a JSON object"};
        return doc;
    } catch (const nlohmann::json::parse_error&) {
        throw ApiError{400, "BadRequest", "request body is not valid JSON"};
    }
}

Mode mode_field(const json& body, Mode fallback) {
    const auto it = body.find("mode");
    if (it == body.end()) return fallback;
    if (it->is_string()) {
        if (const auto m = parse_mode(it->get<std::string>())) return *m;
    }
    throw ApiError{400, "BadMode", "mode must be one of H2H, H2C, C2H, C2C"};
}

Mark lead_field(const json& body, Mark fallback) {
    const auto it = body.find("leadPlayer");
    if (it == body.end()) return fallback;
    if (it->is_string() && it->get<std::string>().size() == 1) {
        if (const auto m = mark_from_char(it->get<std::string>()[0])) return *m;
    }
    throw ApiError{400, "BadLeadPlayer", "leadPlayer must be \"x\" or \"o\""};
}

int int_field(const json& body, const char* key) {
    const auto it = body.find(key);
    if (it == body.end() || !it->is_number_integer()) {
        throw ApiError{400, "BadRequest", std::string("\"") + key + "\" must be an integer"};
    }
    const auto v = it->get<std::int64_t>();
    // Anything outside int is off the board anyway.
    if (v < -1000 || v > 1000) return -1;
    return static_cast<int>(v);
}

std::string string_field(const json& body, const char* key) {
    const auto it = body.find(key);
    if (it == body.end() || !it->is_string() || it->get<std::string>().empty()) {
        throw ApiError{400, "BadRequest", std::string("\"") + key + "\" must be a non-empty string"};
    }
    return it->get<std::string>();
}

json stats_json(const GameStats& stats) {
    return {{"xWinCount", stats.x_wins}, {"oWinCount", stats.o_wins}, {"drawCount", stats.draws}};
}

json view_json(const std::string& id, const GameSession& session) {
    const Board board = session.view_board();
    json cells = json::array();
    for (int i = 0; i < kCellCount; ++i) {
        const Cell c = board.at_index(i);
        cells.push_back(c ? std::string(1, to_char(*c)) : std::string());
    }
    json history = json::array();
    for (const Move& m : session.history()) history.push_back(encode_move(m));
    const auto next = session.next_player();

    return {
        {"id", id},
        {"mode", to_string(session.mode())},
        {"leadPlayer", std::string(1, to_char(session.lead_player()))},
        {"board", std::move(cells)},
        {"result", std::string(1, result_code(session.result()))},
        {"status", session.status()},
        {"movesCount", session.moves_count()},
        {"cursor", session.cursor()},
        {"nextPlayer", next ? json(std::string(1, to_char(*next))) : json(nullptr)},
        {"stats", stats_json(session.stats())},
        {"history", std::move(history)},
    };
}

std::vector<std::string_view> split_path(std::string_view path) {
    std::vector<std::string_view> parts;
    while (!path.empty()) {
        const auto start = path.find_first_not_of('/');
        if (start == std::string_view::npos) break;
        path.remove_prefix(start);
        const auto end = path.find('/');
        parts.push_back(path.substr(0, end));
        if (end == std::string_view::npos) break;
        path.remove_prefix(end);
    }
    return parts;
}

void ensure_open(const GameSession& session) {
    if (session.stopped()) throw ApiError{410, "SessionStopped", "the game set has been stopped"};
}

bool mover_is(const GameSession& session, Controller controller) {
    const auto mover = session.next_player();
    return mover && session.controller_of(*mover) == controller;
}

}  // namespace

std::string session_view_json(const std::string& id, const GameSession& session) {
    return view_json(id, session).dump();
}

GameService::GameService() : id_rng_(std::random_device{}()) {}

std::size_t GameService::session_count() const {
    std::lock_guard lock(registry_mutex_);
    return sessions_.size();
}

std::string GameService::add(GameSession session) {
    auto slot = std::make_shared<Slot>();
    slot->session = std::move(session);

    std::lock_guard lock(registry_mutex_);
    std::ostringstream id;
    id << std::hex << (id_rng_() & 0xffffffffffULL) << '-' << ++id_counter_;
    sessions_.emplace(id.str(), std::move(slot));
    return id.str();
}

std::shared_ptr<GameService::Slot> GameService::find(const std::string& id) const {
    std::lock_guard lock(registry_mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ApiError{404, "UnknownSession", "no session with id " + id};
    return it->second;
}

Response GameService::handle(const Request& request) {
    try {
        return route(request);
    } catch (const ApiError& e) {
        return error_response(e.status, e.code, e.message);
    } catch (const GameError& e) {
        return error_response(status_for(e.code()), to_string(e.code()), e.what());
    } catch (const std::exception& e) {
        return error_response(500, "Internal", e.what());
    }
}

Response GameService::route(const Request& request) {
    const auto parts = split_path(request.path);
    const std::string_view method = request.method;

    if (parts.empty() || parts[0] != "sessions") {
        throw ApiError{404, "NotFound", "no route for " + request.path};
    }

    if (parts.size() == 1) {
        if (method != "POST") throw ApiError{405, "MethodNotAllowed", "use POST /sessions"};
        const json body = parse_body(request.body);
        GameSession session(mode_field(body, Mode::H2H), lead_field(body, Mark::X));
        const std::string id = add(session);
        return json_response(201, view_json(id, session));
    }

    if (parts.size() == 2 && parts[1] == "load" && method == "POST") {
        const json body = parse_body(request.body);
        const std::filesystem::path path = string_field(body, "path");
        if (!std::filesystem::exists(path)) {
            throw ApiError{404, "FileNotFound", "no save file at " + path.string()};
        }
        GameSession session = load_session(path);
        const std::string id = add(session);
        return json_response(201, view_json(id, session));
    }

    if (parts.size() > 3) throw ApiError{404, "NotFound", "no route for " + request.path};

    const std::string id(parts[1]);
    const std::shared_ptr<Slot> slot = find(id);
    std::lock_guard lock(slot->mutex);
    GameSession& session = slot->session;

    if (parts.size() == 2) {
        if (method != "GET") throw ApiError{405, "MethodNotAllowed", "use GET /sessions/{id}"};
        return json_response(200, view_json(id, session));
    }

    const std::string_view action = parts[2];

    if (action == "setup") {
        if (method != "PUT") throw ApiError{405, "MethodNotAllowed", "use PUT for setup"};
        ensure_open(session);
        const json body = parse_body(request.body);
        session.set_up(mode_field(body, session.mode()), lead_field(body, session.lead_player()));
        return json_response(200, view_json(id, session));
    }

    if (method != "POST") throw ApiError{405, "MethodNotAllowed", "use POST for " + request.path};

    if (action == "moves") {
        ensure_open(session);
        const json body = parse_body(request.body);
        const int row = int_field(body, "row");
        const int col = int_field(body, "col");
        if (!session.next_player()) {
            throw ApiError{409, "GameOver", "the game is over; initialize first"};
        }
        if (!mover_is(session, Controller::Human)) {
            throw ApiError{409, "NotHumanTurn", "the computer plays this seat"};
        }
        session.play_move(row, col);
        return json_response(200, view_json(id, session));
    }

    if (action == "ai-move") {
        ensure_open(session);
        if (!session.next_player()) {
            throw ApiError{409, "GameOver", "the game is over; initialize first"};
        }
        if (!mover_is(session, Controller::Computer)) {
            throw ApiError{409, "NotComputerTurn", "a human plays this seat"};
        }
        if (!session.at_latest_state()) {
            throw ApiError{409, "NotAtLatestState", "go to the last state first"};
        }
        const auto choice = ai::best_move(session.latest_board(), *session.next_player());
        session.play_move(choice.cell.row, choice.cell.col);
        return json_response(200, view_json(id, session));
    }

    if (action == "navigate") {
        ensure_open(session);
        const json body = parse_body(request.body);
        const auto it = body.find("target");
        std::optional<NavTarget> target;
        if (it != body.end() && it->is_string()) target = parse_nav_target(it->get<std::string>());
        if (!target) {
            throw ApiError{400, "BadTarget", "target must be one of first, prev, next, last"};
        }
        navigate(session, *target);
        return json_response(200, view_json(id, session));
    }

    if (action == "initialize") {
        ensure_open(session);
        session.initialize();
        return json_response(200, view_json(id, session));
    }

    if (action == "stop") {
        ensure_open(session);
        return json_response(200, stats_json(session.stop()));
    }

    if (action == "save") {
        const json body = parse_body(request.body);
        const std::filesystem::path path = string_field(body, "path");
        try {
            save_session(session, path);
        } catch (const std::runtime_error& e) {
            throw ApiError{500, "IoError", e.what()};
        }
        return json_response(200, view_json(id, session));
    }

    throw ApiError{404, "NotFound", "no route for " + request.path};
}

}  // namespace tictactoe::service
