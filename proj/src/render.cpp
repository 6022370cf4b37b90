#include "tictactoe/render.hpp"

#include <sstream>

namespace tictactoe::cli {

std::string render_stats(const GameStats& stats) {
    std::ostringstream out;
    out << "xWinCount " << stats.x_wins << "  oWinCount " << stats.o_wins << "  drawCount "
        << stats.draws;
    return out.str();
}

std::string render_state(const GameSession& session) {
    std::ostringstream out;
    const Board board = session.view_board();

    out << "  0 1 2\n";
    for (int r = 0; r < kBoardSize; ++r) {
        out << r;
        for (int c = 0; c < kBoardSize; ++c) {
            const Cell cell = board.at(r, c);
            out << ' ' << (cell ? to_char(*cell) : '.');
        }
        out << '\n';
    }

    const auto next = session.next_player();
    out << "mode " << to_string(session.mode()) << "  leadPlayer "
        << to_char(session.lead_player()) << "  nextPlayer " << (next ? to_char(*next) : '-')
        << "  movesCount " << session.moves_count() << "  cursor " << session.cursor() << '\n';
    out << render_stats(session.stats()) << '\n';
    out << "status " << session.status() << '\n';
    return out.str();
}

}  // namespace tictactoe::cli
