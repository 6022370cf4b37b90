#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tictactoe/session.hpp"

namespace tictactoe {

inline constexpr int kSaveFormatVersion = 1;

// Compact JSON, keys in a fixed order:
// {"version":1,"mode":"H2C","leadPlayer":"x",
//  "stats":{"xWinCount":3,"oWinCount":1,"drawCount":2},
//  "history":["x11","o00","x02"],"cursor":3}
// Board, result and next player are derived by replay and never stored.
std::string to_save_json(const GameSession& session);

// Throws InvalidSaveFile naming the violated rule. Format-level names are
// MalformedJson, Version, Mode, LeadPlayer, Stats, MoveTuple and Cursor;
// the rest come from GameSession::restore.
GameSession from_save_json(std::string_view text);

void save_session(const GameSession& session, const std::filesystem::path& path);

// Unreadable files are reported as InvalidSaveFile("Unreadable").
GameSession load_session(const std::filesystem::path& path);

}  // namespace tictactoe
