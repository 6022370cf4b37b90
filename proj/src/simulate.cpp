#include "tictactoe/simulate.hpp"

#include <random>
#include <sstream>

#include "tictactoe/ai.hpp"
#include "tictactoe/game_loop.hpp"

namespace tictactoe::cli {

std::optional<Strategy> parse_strategy(std::string_view text) noexcept {
    if (text == "perfect") return Strategy::Perfect;
    if (text == "random") return Strategy::Random;
    return std::nullopt;
}

GameStats simulate(const SimulationConfig& config) {
    std::mt19937_64 rng(config.seed);
    GameSession session(Mode::C2C, config.lead);

    const ComputerPlayer computer = [&](const Board& board, Mark mover) {
        const Strategy s = mover == Mark::X ? config.x_strategy : config.o_strategy;
        return s == Strategy::Perfect ? ai::best_move(board, mover).cell
                                      : ai::random_legal_move(board, mover, rng).cell;
    };
    const HumanInput steps = [&](const GameSession& s) -> Action {
        if (s.stats().total() >= config.games) return action::Exit{};
        return action::Step{};
    };

    run_game_loop(session, steps, computer);
    return session.stop();
}

std::string summary_line(const GameStats& stats) {
    std::ostringstream out;
    out << "x=" << stats.x_wins << " o=" << stats.o_wins << " draw=" << stats.draws
        << " games=" << stats.total();
    return out.str();
}

}  // namespace tictactoe::cli
