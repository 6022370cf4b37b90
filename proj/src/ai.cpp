#include "tictactoe/ai.hpp"

#include <array>
#include <optional>
#include <vector>

#include "tictactoe/errors.hpp"

namespace tictactoe::ai {

namespace {

constexpr std::size_t kBoardKeys = 19683;  // 3^9

// True when `a` is preferable to `b` for the player choosing between them.
bool better(const Evaluation& a, const Evaluation& b) {
    if (a.value != b.value) return static_cast<int>(a.value) > static_cast<int>(b.value);
    if (a.value == GameValue::Win) return a.plies_to_end < b.plies_to_end;
    return a.plies_to_end > b.plies_to_end;
}

class Table {
public:
    Table() {
        fill_all();
    }

    const Evaluation& at(const Board& board, Mark to_move) const {
        return entries_[slot(board.key(), to_move)];
    }

private:
    static std::size_t slot(std::uint32_t key, Mark to_move) {
        return key * 2 + (to_move == Mark::X ? 0 : 1);
    }

    // Walk all 3^9 cell assignments so that arbitrary boards passed in by
    // callers have an entry, not only those reachable from empty.
    void fill_all() {
        for (std::uint32_t key = 0; key < kBoardKeys; ++key) {
            const Board board = decode(key);
            solve(board, Mark::X);
            solve(board, Mark::O);
        }
    }

    static Board decode(std::uint32_t key) {
        Board board = empty_board();
        for (int i = 0; i < kCellCount; ++i) {
            const std::uint32_t digit = key % 3;
            key /= 3;
            if (digit != 0) {
                board = apply_move(board, {digit == 1 ? Mark::X : Mark::O, i / kBoardSize,
                                           i % kBoardSize});
            }
        }
        return board;
    }

    Evaluation solve(const Board& board, Mark to_move) {
        const std::size_t s = slot(board.key(), to_move);
        if (filled_[s]) return entries_[s];

        Evaluation result;
        const GameResult outcome = check_result(board);
        if (const auto w = winner(outcome)) {
            result = {*w == to_move ? GameValue::Win : GameValue::Loss, 0};
        } else if (outcome == GameResult::Draw) {
            result = {GameValue::Draw, 0};
        } else {
            bool first = true;
            for (const Coord c : legal_moves(board)) {
                const Evaluation reply =
                    solve(apply_move(board, {to_move, c.row, c.col}), other(to_move));
                const Evaluation mine{negate(reply.value), reply.plies_to_end + 1};
                if (first || better(mine, result)) result = mine;
                first = false;
            }
        }
        entries_[s] = result;
        filled_[s] = true;
        return result;
    }

    std::array<Evaluation, kBoardKeys * 2> entries_{};
    std::array<bool, kBoardKeys * 2> filled_{};
};

const Table& table() {
    static const Table instance;
    return instance;
}

void require_open(const Board& board) {
    if (check_result(board) != GameResult::Continue) {
        throw GameError(ErrorCode::NoLegalMoves, "the game on this board is already over");
    }
}

}  // namespace

Evaluation evaluate(const Board& board, Mark to_move) { return table().at(board, to_move); }

GameValue minimax_value(const Board& board, Mark to_move) {
    return evaluate(board, to_move).value;
}

MoveChoice best_move(const Board& board, Mark to_move) {
    require_open(board);
    std::optional<MoveChoice> best;
    // Row-major scan with strict improvement keeps the smallest cell on ties.
    for (const Coord c : legal_moves(board)) {
        const Evaluation reply = evaluate(apply_move(board, {to_move, c.row, c.col}), other(to_move));
        const Evaluation mine{negate(reply.value), reply.plies_to_end + 1};
        if (!best || better(mine, {best->value, best->plies_to_end})) {
            best = MoveChoice{c, mine.value, mine.plies_to_end};
        }
    }
    return *best;
}

MoveChoice random_legal_move(const Board& board, Mark to_move, std::mt19937_64& rng) {
    require_open(board);
    const auto moves = legal_moves(board);
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Coord c = moves[pick(rng)];
    const Evaluation reply = evaluate(apply_move(board, {to_move, c.row, c.col}), other(to_move));
    return {c, negate(reply.value), reply.plies_to_end + 1};
}

}  // namespace tictactoe::ai
