#include "tictactoe/cli.hpp"

#include <charconv>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tictactoe/ai.hpp"
#include "tictactoe/errors.hpp"
#include "tictactoe/http_server.hpp"
#include "tictactoe/persistence.hpp"
#include "tictactoe/render.hpp"
#include "tictactoe/simulate.hpp"

namespace tictactoe::cli {

namespace {

std::vector<std::string_view> words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<int> to_int(std::string_view text) {
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
    return value;
}

std::optional<NavTarget> nav_symbol(std::string_view w) {
    if (w == "<<") return NavTarget::First;
    if (w == "<") return NavTarget::Previous;
    if (w == ">") return NavTarget::Next;
    if (w == ">>") return NavTarget::Last;
    return std::nullopt;
}

struct Settings {
    std::string mode = "H2H";
    std::string lead = "x";
    int games = 1;
    std::uint64_t seed = 0;
    std::string x_strategy = "perfect";
    std::string o_strategy = "perfect";
    std::string file;
    std::string host = "127.0.0.1";
    int port = 8080;
};

void report_event(std::ostream& out, const LoopEvent& event, const GameSession& session) {
    switch (event.kind) {
        case LoopEvent::Kind::StateChanged:
            out << render_state(session);
            break;
        case LoopEvent::Kind::Rejected:
            out << "error: " << to_string(*event.error) << ": " << event.message << '\n';
            break;
        case LoopEvent::Kind::GameFinished:
            out << "status " << status_text(event.result) << '\n'
                << render_stats(session.stats()) << '\n';
            break;
        case LoopEvent::Kind::Stopped:
            out << "final " << render_stats(session.stats()) << '\n';
            break;
    }
}

int play(const Settings& s, std::istream& in, std::ostream& out) {
    GameSession session(*parse_mode(s.mode), *mark_from_char(s.lead[0]));
    if (!s.file.empty()) {
        try {
            session = load_session(s.file);
        } catch (const InvalidSaveFile& e) {
            out << "error: InvalidSaveFile: " << e.what() << '\n';
            return kBadSaveFile;
        }
    }

    const ComputerPlayer computer = [](const Board& board, Mark mover) {
        return ai::best_move(board, mover).cell;
    };
    const HumanInput input = [&](const GameSession&) -> Action {
        std::string line;
        for (;;) {
            out << "> " << std::flush;
            if (!std::getline(in, line)) return action::Stop{};
            const auto w = words(line);
            if (w.size() == 2 && w[0] == "save") {
                try {
                    save_session(session, std::string(w[1]));
                    out << "saved " << w[1] << '\n';
                } catch (const std::exception& e) {
                    out << "error: " << e.what() << '\n';
                }
                continue;
            }
            std::string error;
            if (auto action = parse_command(line, error)) return *action;
            out << "error: " << error << '\n';
        }
    };

    out << render_state(session);
    run_game_loop(session, input, computer,
                  [&](const LoopEvent& e, const GameSession& s) { report_event(out, e, s); });
    return kSuccess;
}

int replay(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
    GameSession session;
    try {
        session = load_session(s.file);
    } catch (const InvalidSaveFile& e) {
        err << "error: InvalidSaveFile: " << e.what() << '\n';
        return kBadSaveFile;
    }

    out << render_state(session);
    std::string line;
    while (out << "> " << std::flush, std::getline(in, line)) {
        const auto w = words(line);
        if (w.size() == 1 && (w[0] == "quit" || w[0] == "exit")) break;
        const auto target = w.size() == 1 ? nav_symbol(w[0]) : std::nullopt;
        if (!target) {
            out << "error: replay is read-only; use <, >, <<, >> or quit\n";
            continue;
        }
        try {
            navigate(session, *target);
            out << render_state(session);
        } catch (const GameError& e) {
            out << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        }
    }
    return kSuccess;
}

int simulate_cmd(const Settings& s, std::ostream& out) {
    const SimulationConfig config{
        s.games,
        s.seed,
        *mark_from_char(s.lead[0]),
        *parse_strategy(s.x_strategy),
        *parse_strategy(s.o_strategy),
    };
    out << summary_line(simulate(config)) << '\n';
    return kSuccess;
}

int serve(const Settings& s, std::ostream& out, std::ostream& err) {
    service::GameService api;
    service::HttpServer server(api);
    if (!server.bind(s.host, s.port)) {
        err << "error: cannot bind " << s.host << ':' << s.port << '\n';
        return kBindFailure;
    }
    out << "listening on http://" << s.host << ':' << server.port() << '\n' << std::flush;
    server.listen();
    return kSuccess;
}

}  // namespace

std::optional<Action> parse_command(std::string_view line, std::string& error) {
    const auto w = words(line);
    if (w.empty()) return action::Step{};
    if (w.size() == 1) {
        if (const auto t = nav_symbol(w[0])) return action::Navigate{*t};
        if (w[0] == "init") return action::Initialize{};
        if (w[0] == "move") return action::Step{};
        if (w[0] == "quit" || w[0] == "exit" || w[0] == "stop") return action::Stop{};
    }
    if (w.size() == 2) {
        const auto row = to_int(w[0]);
        const auto col = to_int(w[1]);
        if (row && col) return action::Place{*row, *col};
    }
    if (w[0] == "setup") {
        const auto mode = w.size() == 3 ? parse_mode(w[1]) : std::nullopt;
        const auto lead =
            w.size() == 3 && w[2].size() == 1 ? mark_from_char(w[2][0]) : std::nullopt;
        if (mode && lead) return action::SetUp{*mode, *lead};
        error = "usage: setup {H2H|H2C|C2H|C2C} {x|o}";
        return std::nullopt;
    }
    error = "unknown command \"" + std::string(line) +
            "\"; try: r c, <, >, <<, >>, init, setup MODE LEAD, move, save PATH, quit";
    return std::nullopt;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Tic-tac-toe game sets: play, simulate, replay, serve", "tictactoe"};
    app.require_subcommand(1);

    Settings s;
    const std::vector<std::string> modes{"H2H", "H2C", "C2H", "C2C"};
    const std::vector<std::string> marks{"x", "o"};
    const std::vector<std::string> strategies{"perfect", "random"};

    auto* play_cmd = app.add_subcommand("play", "interactive game set in the terminal");
    play_cmd->add_option("--mode", s.mode, "who controls each seat")->check(CLI::IsMember(modes));
    play_cmd->add_option("--lead", s.lead, "mark that moves first")->check(CLI::IsMember(marks));
    play_cmd->add_option("--file", s.file, "continue a saved game set")->check(CLI::ExistingFile);

    auto* sim_cmd = app.add_subcommand("simulate", "headless computer-vs-computer games");
    sim_cmd->add_option("--games", s.games, "number of games")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", s.seed, "seed for random strategies");
    sim_cmd->add_option("--lead", s.lead, "mark that moves first")->check(CLI::IsMember(marks));
    sim_cmd->add_option("--x-strategy", s.x_strategy)->check(CLI::IsMember(strategies));
    sim_cmd->add_option("--o-strategy", s.o_strategy)->check(CLI::IsMember(strategies));

    auto* replay_cmd = app.add_subcommand("replay", "browse a saved game set");
    replay_cmd->add_option("--file", s.file, "save file")->required();

    auto* serve_cmd = app.add_subcommand("serve", "run the HTTP API");
    serve_cmd->add_option("--host", s.host, "bind address");
    serve_cmd->add_option("--port", s.port, "bind port")->check(CLI::Range(0, 65535));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    if (play_cmd->parsed()) return play(s, in, out);
    if (sim_cmd->parsed()) return simulate_cmd(s, out);
    if (replay_cmd->parsed()) return replay(s, in, out, err);
    return serve(s, out, err);
}

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, in, out, err);
}

}  // namespace tictactoe::cli
