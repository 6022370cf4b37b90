#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tictactoe {

inline constexpr int kBoardSize = 3;
inline constexpr int kCellCount = kBoardSize * kBoardSize;

enum class Mark : std::uint8_t { X, O };

constexpr Mark other(Mark m) noexcept { return m == Mark::X ? Mark::O : Mark::X; }

constexpr char to_char(Mark m) noexcept { return m == Mark::X ? 'x' : 'o'; }

constexpr std::optional<Mark> mark_from_char(char c) noexcept {
    if (c == 'x') return Mark::X;
    if (c == 'o') return Mark::O;
    return std::nullopt;
}

// Empty, or holding a mark.
using Cell = std::optional<Mark>;

struct Coord {
    int row = 0;
    int col = 0;

    constexpr bool in_range() const noexcept {
        return row >= 0 && row < kBoardSize && col >= 0 && col < kBoardSize;
    }
    constexpr int index() const noexcept { return row * kBoardSize + col; }

    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

struct Move {
    Mark mark = Mark::X;
    int row = 0;
    int col = 0;

    constexpr Coord coord() const noexcept { return {row, col}; }

    friend constexpr bool operator==(const Move&, const Move&) = default;
};

// Immutable-by-convention 3x3 grid. Mutation happens only through
// apply_move, which returns a new board.
class Board {
public:
    constexpr Board() = default;

    constexpr Cell at(int row, int col) const { return cells_[row * kBoardSize + col]; }
    constexpr Cell at(Coord c) const { return cells_[c.index()]; }
    constexpr Cell at_index(int index) const { return cells_[index]; }

    int count(Mark m) const noexcept;
    int empty_count() const noexcept;

    // Base-3 key: empty = 0, x = 1, o = 2, row-major with cell (0,0) least significant.
    std::uint32_t key() const noexcept;

    friend bool operator==(const Board&, const Board&) = default;

private:
    friend Board apply_move(const Board& board, const Move& move);

    std::array<Cell, kCellCount> cells_{};
};

enum class GameResult : std::uint8_t { Continue, XWins, OWins, Draw };

constexpr char result_code(GameResult r) noexcept {
    switch (r) {
        case GameResult::Continue: return 'c';
        case GameResult::XWins: return 'x';
        case GameResult::OWins: return 'o';
        case GameResult::Draw: return 'd';
    }
    return '?';
}

std::optional<GameResult> result_from_code(char c) noexcept;

constexpr GameResult win_for(Mark m) noexcept {
    return m == Mark::X ? GameResult::XWins : GameResult::OWins;
}

constexpr std::optional<Mark> winner(GameResult r) noexcept {
    if (r == GameResult::XWins) return Mark::X;
    if (r == GameResult::OWins) return Mark::O;
    return std::nullopt;
}

constexpr bool is_terminal(GameResult r) noexcept { return r != GameResult::Continue; }

// The eight winning triples: three rows, three columns, two diagonals.
inline constexpr std::array<std::array<Coord, 3>, 8> kLines{{
    {{{0, 0}, {0, 1}, {0, 2}}},
    {{{1, 0}, {1, 1}, {1, 2}}},
    {{{2, 0}, {2, 1}, {2, 2}}},
    {{{0, 0}, {1, 0}, {2, 0}}},
    {{{0, 1}, {1, 1}, {2, 1}}},
    {{{0, 2}, {1, 2}, {2, 2}}},
    {{{0, 0}, {1, 1}, {2, 2}}},
    {{{0, 2}, {1, 1}, {2, 0}}},
}};

Board empty_board();

// Coordinates of empty cells in row-major order.
std::vector<Coord> legal_moves(const Board& board);

// Returns a copy of `board` with `move` placed. Throws GameError with
// OutOfRange or CellOccupied.
Board apply_move(const Board& board, const Move& move);

// Only meaningful for boards reachable by legal play (at most one winner).
GameResult check_result(const Board& board);

// "x00" style tuples: mark, row digit, column digit.
std::string encode_move(const Move& move);
Move decode_move(std::string_view text);

}  // namespace tictactoe
