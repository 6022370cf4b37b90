#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tictactoe/session.hpp"

namespace tictactoe::cli {

enum class Strategy : std::uint8_t { Perfect, Random };

std::optional<Strategy> parse_strategy(std::string_view text) noexcept;

struct SimulationConfig {
    int games = 1;
    std::uint64_t seed = 0;
    Mark lead = Mark::X;
    Strategy x_strategy = Strategy::Perfect;
    Strategy o_strategy = Strategy::Perfect;
};

// Plays `games` headless C2C games through the game loop. Both random seats
// draw from one generator seeded with `seed`.
GameStats simulate(const SimulationConfig& config);

// "x=<n> o=<n> draw=<n> games=<N>"
std::string summary_line(const GameStats& stats);

}  // namespace tictactoe::cli
