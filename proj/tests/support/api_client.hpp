#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bridge.hpp"
#include "httplib.h"
#include "json.hpp"
#include "tictactoe/http_server.hpp"

namespace testing {

using nlohmann::json;

struct Reply {
    int status = 0;
    json body;
};

// A GameService behind a real HTTP server on an ephemeral local port.
class LiveService {
public:
    LiveService() : server_(service_) {
        if (!server_.bind("127.0.0.1", 0)) throw std::runtime_error("bind failed");
        server_.start();
    }

    Reply call(const std::string& method, const std::string& path, const json& body = nullptr) {
        httplib::Client client("127.0.0.1", server_.port());
        const std::string payload = body.is_null() ? std::string() : body.dump();
        httplib::Result res;
        if (method == "GET") res = client.Get(path);
        else if (method == "PUT") res = client.Put(path, payload, "application/json");
        else res = client.Post(path, payload, "application/json");
        if (!res) throw std::runtime_error("request failed: " + path);
        Reply r;
        r.status = res->status;
        r.body = res->body.empty() ? json() : json::parse(res->body);
        return r;
    }

    Reply post(const std::string& path, const json& body = nullptr) { return call("POST", path, body); }
    Reply get(const std::string& path) { return call("GET", path); }
    Reply put(const std::string& path, const json& body) { return call("PUT", path, body); }

    int port() const { return server_.port(); }

private:
    tictactoe::service::GameService service_;
    tictactoe::service::HttpServer server_;
};

// Checks a SessionView body against every session invariant.
inline std::vector<std::string> view_violations(const json& view) {
    std::vector<std::string> v;
    for (const char* key : {"id", "mode", "leadPlayer", "board", "result", "status", "movesCount",
                            "cursor", "nextPlayer", "stats", "history"}) {
        if (!view.contains(key)) v.push_back(std::string("missing field ") + key);
    }
    if (!v.empty()) return v;
    if (!view["board"].is_array() || view["board"].size() != 9) {
        v.push_back("board is not a 9-element list");
        return v;
    }
    Snapshot s;
    s.lead = view["leadPlayer"].get<std::string>().at(0);
    for (const auto& t : view["history"]) s.history.push_back(t.get<std::string>());
    s.cursor = view["cursor"].get<int>();
    s.moves_count = view["movesCount"].get<int>();
    s.result = view["result"].get<std::string>().at(0);
    s.status = view["status"].get<std::string>();
    s.next_player = view["nextPlayer"].is_null() ? ' ' : view["nextPlayer"].get<std::string>().at(0);
    for (int i = 0; i < 9; ++i) {
        const std::string cell = view["board"][i].get<std::string>();
        if (cell != "" && cell != "x" && cell != "o") v.push_back("bad board cell " + cell);
        s.viewed[i] = cell.empty() ? '.' : cell[0];
    }
    s.x_wins = view["stats"]["xWinCount"].get<int>();
    s.o_wins = view["stats"]["oWinCount"].get<int>();
    s.draws = view["stats"]["drawCount"].get<int>();
    const auto more = violations(s);
    v.insert(v.end(), more.begin(), more.end());
    return v;
}

}  // namespace testing
