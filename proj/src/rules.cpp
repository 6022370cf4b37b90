#include "tictactoe/rules.hpp"

#include <algorithm>
#include <string>

#include "tictactoe/errors.hpp"

namespace tictactoe {

int Board::count(Mark m) const noexcept {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell{m}));
}

int Board::empty_count() const noexcept {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell{}));
}

std::uint32_t Board::key() const noexcept {
    std::uint32_t key = 0;
    for (int i = kCellCount - 1; i >= 0; --i) {
        std::uint32_t digit = 0;
        if (cells_[i]) digit = *cells_[i] == Mark::X ? 1 : 2;
        key = key * 3 + digit;
    }
    return key;
}

std::optional<GameResult> result_from_code(char c) noexcept {
    switch (c) {
        case 'c': return GameResult::Continue;
        case 'x': return GameResult::XWins;
        case 'o': return GameResult::OWins;
        case 'd': return GameResult::Draw;
        default: return std::nullopt;
    }
}

Board empty_board() { return Board{}; }

std::vector<Coord> legal_moves(const Board& board) {
    std::vector<Coord> moves;
    moves.reserve(kCellCount);
    for (int r = 0; r < kBoardSize; ++r) {
        for (int c = 0; c < kBoardSize; ++c) {
            if (!board.at(r, c)) moves.push_back({r, c});
        }
    }
    return moves;
}

Board apply_move(const Board& board, const Move& move) {
    if (!move.coord().in_range()) {
        throw GameError(ErrorCode::OutOfRange, "cell (" + std::to_string(move.row) + ", " +
                                                   std::to_string(move.col) +
                                                   ") is off the board");
    }
    if (board.at(move.coord())) {
        throw GameError(ErrorCode::CellOccupied, "cell (" + std::to_string(move.row) + ", " +
                                                     std::to_string(move.col) +
                                                     ") is already taken");
    }
    Board next = board;
    next.cells_[move.coord().index()] = move.mark;
    return next;
}

GameResult check_result(const Board& board) {
    for (const auto& line : kLines) {
        const Cell first = board.at(line[0]);
        if (first && board.at(line[1]) == first && board.at(line[2]) == first) {
            return win_for(*first);
        }
    }
    return board.empty_count() == 0 ? GameResult::Draw : GameResult::Continue;
}

std::string encode_move(const Move& move) {
    return {to_char(move.mark), static_cast<char>('0' + move.row),
            static_cast<char>('0' + move.col)};
}

Move decode_move(std::string_view text) {
    auto malformed = [&] {
        return GameError(ErrorCode::MalformedTuple,
                         "malformed move tuple \"" + std::string(text) + "\"");
    };
    if (text.size() != 3) throw malformed();
    const auto mark = mark_from_char(text[0]);
    if (!mark) throw malformed();
    auto digit = [](char c) { return c >= '0' && c <= '2' ? c - '0' : -1; };
    const int row = digit(text[1]);
    const int col = digit(text[2]);
    if (row < 0 || col < 0) throw malformed();
    return {*mark, row, col};
}

}  // namespace tictactoe
