#pragma once

#include <string>

#include "tictactoe/session.hpp"

namespace tictactoe::cli {

// Board at the cursor with a row/column header, followed by the game-set
// statistics and a status line:
//
//     0 1 2
//   0 x . .
//   1 . o .
//   2 . . .
//   mode H2C  leadPlayer x  nextPlayer x  movesCount 2  cursor 2
//   xWinCount 0  oWinCount 0  drawCount 0
//   status Continue
std::string render_state(const GameSession& session);

std::string render_stats(const GameStats& stats);

}  // namespace tictactoe::cli
