#include "tictactoe/game_loop.hpp"

namespace tictactoe {

std::optional<NavTarget> parse_nav_target(std::string_view text) noexcept {
    if (text == "first") return NavTarget::First;
    if (text == "prev") return NavTarget::Previous;
    if (text == "next") return NavTarget::Next;
    if (text == "last") return NavTarget::Last;
    return std::nullopt;
}

void navigate(GameSession& session, NavTarget target) {
    switch (target) {
        case NavTarget::First: session.move_to_first_state(); break;
        case NavTarget::Previous: session.move_to_previous_state(); break;
        case NavTarget::Next: session.move_to_next_state(); break;
        case NavTarget::Last: session.move_to_last_state(); break;
    }
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool computer_to_move(const GameSession& session) {
    const auto mover = session.next_player();
    return mover && session.controller_of(*mover) == Controller::Computer;
}

}  // namespace

void run_game_loop(GameSession& session, const HumanInput& input,
                   const ComputerPlayer& computer, const LoopReporter& report) {
    auto emit = [&](LoopEvent event) {
        if (report) report(event, session);
    };

    if (session.stopped()) {
        throw GameError(ErrorCode::SessionStopped, "the game set has been stopped");
    }

    // A loaded session may already hold a finished game.
    if (is_terminal(session.result())) {
        session.initialize();
        emit({});
    }

    for (;;) {
        const bool auto_move = computer_to_move(session) && session.at_latest_state() &&
                               session.mode() != Mode::C2C;
        const Action next = auto_move ? Action{action::Step{}} : input(session);

        if (std::holds_alternative<action::Exit>(next)) return;
        if (std::holds_alternative<action::Stop>(next)) {
            session.stop();
            emit({LoopEvent::Kind::Stopped, GameResult::Continue, std::nullopt, {}});
            return;
        }

        try {
            std::visit(
                overloaded{
                    [&](const action::Place& p) {
                        if (computer_to_move(session)) {
                            throw GameError(ErrorCode::NotHumanTurn,
                                            "the computer plays this seat");
                        }
                        session.play_move(p.row, p.col);
                    },
                    [&](const action::Step&) {
                        if (!session.next_player()) {
                            throw GameError(ErrorCode::GameOver, "the game is over");
                        }
                        if (!computer_to_move(session)) {
                            throw GameError(ErrorCode::NotComputerTurn, "a human plays this seat");
                        }
                        const Coord c = computer(session.latest_board(), *session.next_player());
                        session.play_move(c.row, c.col);
                    },
                    [&](const action::Navigate& n) { navigate(session, n.target); },
                    [&](const action::Initialize&) { session.initialize(); },
                    [&](const action::SetUp& s) { session.set_up(s.mode, s.lead); },
                    [](const action::Exit&) {},
                    [](const action::Stop&) {},
                },
                next);
        } catch (const GameError& e) {
            emit({LoopEvent::Kind::Rejected, GameResult::Continue, e.code(), e.what()});
            continue;
        }

        if (is_terminal(session.result())) {
            emit({LoopEvent::Kind::GameFinished, session.result(), std::nullopt,
                  std::string(session.status())});
            session.initialize();
        }
        emit({});
    }
}

}  // namespace tictactoe
