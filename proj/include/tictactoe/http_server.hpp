#pragma once

#include <memory>
#include <string>
#include <thread>

#include "tictactoe/service.hpp"

namespace httplib {
class Server;
}

namespace tictactoe::service {

// cpp-httplib front end forwarding every request to a GameService.
class HttpServer {
public:
    explicit HttpServer(GameService& service);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    // Port 0 picks a free port. Returns false when the address cannot be bound.
    bool bind(const std::string& host, int port);
    int port() const noexcept { return port_; }

    // Blocks until stop() is called from another thread.
    void listen();

    // listen() on a background thread.
    void start();
    void stop();

private:
    GameService& service_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_ = -1;
};

}  // namespace tictactoe::service
