#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tictactoe/game_loop.hpp"

namespace tictactoe::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kBadSaveFile = 2,
    kBindFailure = 3,
};

// Parses one line typed during interactive play:
//   "r c"              place a mark
//   "<" ">" "<<" ">>"  navigate
//   "init"             new game
//   "setup MODE LEAD"  e.g. "setup H2C o"
//   "move" or empty    let the computer play (C2C)
//   "quit"             end the game set
// Returns nullopt and fills `error` for anything else.
std::optional<Action> parse_command(std::string_view line, std::string& error);

// Subcommands: play, simulate, replay, serve.
int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tictactoe::cli
