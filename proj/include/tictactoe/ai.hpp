#pragma once

#include <random>

#include "tictactoe/rules.hpp"

namespace tictactoe::ai {

// Outcome under perfect play, seen by the player to move.
enum class GameValue : int { Loss = -1, Draw = 0, Win = 1 };

constexpr GameValue negate(GameValue v) noexcept { return static_cast<GameValue>(-static_cast<int>(v)); }

struct Evaluation {
    GameValue value = GameValue::Draw;
    int plies_to_end = 0;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

struct MoveChoice {
    Coord cell;
    GameValue value = GameValue::Draw;
    int plies_to_end = 0;

    friend bool operator==(const MoveChoice&, const MoveChoice&) = default;
};

// Exact negamax evaluation. A board where the opponent of `to_move` has a
// line scores Loss with zero plies left; a full board scores Draw.
//
// Results come from a table over every (board, mover) pair that is built
// once on first use and is read-only afterwards, so concurrent calls are safe.
Evaluation evaluate(const Board& board, Mark to_move);

GameValue minimax_value(const Board& board, Mark to_move);

// Perfect move with a total, deterministic tie-break: best value first,
// then the quickest win or the slowest draw/loss, then the smallest cell in
// row-major order. Throws GameError(NoLegalMoves) on a finished board.
MoveChoice best_move(const Board& board, Mark to_move);

// Uniform choice among the legal moves. Throws GameError(NoLegalMoves)
// on a finished board.
MoveChoice random_legal_move(const Board& board, Mark to_move, std::mt19937_64& rng);

}  // namespace tictactoe::ai
