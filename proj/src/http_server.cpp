#include "tictactoe/http_server.hpp"

#include "httplib.h"

namespace tictactoe::service {

namespace {

void add_cors_headers(httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

}  // namespace

HttpServer::HttpServer(GameService& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
    // SO_REUSEPORT (the library default) would let a second server share a
    // port that is already in use.
    server_->set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
        const Response out = service_.handle({req.method, req.path, req.body});
        res.status = out.status;
        res.set_content(out.body, "application/json");
        add_cors_headers(res);
    };
    server_->Get(".*", forward);
    server_->Post(".*", forward);
    server_->Put(".*", forward);
    server_->Delete(".*", forward);
    server_->Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        add_cors_headers(res);
    });
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::bind(const std::string& host, int port) {
    if (port == 0) {
        port_ = server_->bind_to_any_port(host);
        return port_ > 0;
    }
    if (!server_->bind_to_port(host, port)) return false;
    port_ = port;
    return true;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::start() {
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
}

void HttpServer::stop() {
    server_->stop();
    if (thread_.joinable()) thread_.join();
}

}  // namespace tictactoe::service
