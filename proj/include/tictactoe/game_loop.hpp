#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "tictactoe/errors.hpp"
#include "tictactoe/session.hpp"

namespace tictactoe {

enum class NavTarget : std::uint8_t { First, Previous, Next, Last };

std::optional<NavTarget> parse_nav_target(std::string_view text) noexcept;

// Applies one history navigation step to `session`.
void navigate(GameSession& session, NavTarget target);

namespace action {
struct Place {
    int row = 0;
    int col = 0;
};
struct Navigate {
    NavTarget target = NavTarget::Last;
};
struct Initialize {};
struct SetUp {
    Mode mode = Mode::H2H;
    Mark lead = Mark::X;
};
// Asks the computer seat to play one move.
struct Step {};
// Leaves the loop; the game set stays open.
struct Exit {};
// Ends the game set.
struct Stop {};
}  // namespace action

using Action = std::variant<action::Place, action::Navigate, action::Initialize, action::SetUp,
                            action::Step, action::Exit, action::Stop>;

struct LoopEvent {
    enum class Kind : std::uint8_t {
        StateChanged,
        Rejected,
        GameFinished,
        Stopped,
    };

    Kind kind = Kind::StateChanged;
    GameResult result = GameResult::Continue;  // GameFinished only
    std::optional<ErrorCode> error;            // Rejected only
    std::string message;
};

using HumanInput = std::function<Action(const GameSession&)>;
using ComputerPlayer = std::function<Coord(const Board&, Mark)>;
using LoopReporter = std::function<void(const LoopEvent&, const GameSession&)>;

// Drives a game set until the input source asks to exit or stop.
//
// Computer seats move automatically whenever the session shows the latest
// state, except in C2C where every computer move waits for a Step action
// (any other action is applied as usual). Finished games are reported and
// the board is re-initialized for the next game. Rejected actions are
// reported and never end the loop.
void run_game_loop(GameSession& session, const HumanInput& input,
                   const ComputerPlayer& computer, const LoopReporter& report = {});

}  // namespace tictactoe
