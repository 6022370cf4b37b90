#include "tictactoe/session.hpp"

#include <random>
#include <string>
#include <utility>

#include "tictactoe/errors.hpp"

namespace tictactoe {

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::H2H: return "H2H";
        case Mode::H2C: return "H2C";
        case Mode::C2H: return "C2H";
        case Mode::C2C: return "C2C";
    }
    return "H2H";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
    for (Mode m : {Mode::H2H, Mode::H2C, Mode::C2H, Mode::C2C}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

Controller controller_of(Mode mode, Mark lead_player, Mark mark) noexcept {
    const std::string_view name = to_string(mode);
    const char letter = mark == lead_player ? name.front() : name.back();
    return letter == 'C' ? Controller::Computer : Controller::Human;
}

std::string_view status_text(GameResult result) noexcept {
    switch (result) {
        case GameResult::XWins: return "x Won";
        case GameResult::OWins: return "o Won";
        case GameResult::Draw: return "Draw";
        case GameResult::Continue: break;
    }
    return "Continue";
}

namespace {

void count_result(GameStats& stats, GameResult result) {
    switch (result) {
        case GameResult::XWins: ++stats.x_wins; break;
        case GameResult::OWins: ++stats.o_wins; break;
        case GameResult::Draw: ++stats.draws; break;
        case GameResult::Continue: break;
    }
}

Board replay(std::span<const Move> moves) {
    Board board = empty_board();
    for (const Move& m : moves) board = apply_move(board, m);
    return board;
}

}  // namespace

GameSession::GameSession(Mode mode, Mark lead_player) : mode_(mode), lead_(lead_player) {
    history_.reserve(kCellCount);
}

GameSession GameSession::restore(Mode mode, Mark lead_player, GameStats stats,
                                 std::vector<Move> history, int cursor) {
    if (stats.x_wins < 0 || stats.o_wins < 0 || stats.draws < 0) {
        throw InvalidSaveFile("NonNegativeStats", "statistics counters must be non-negative");
    }
    if (history.size() > static_cast<std::size_t>(kCellCount)) {
        throw InvalidSaveFile("HistoryLength", "a game holds at most 9 moves, found " +
                                                   std::to_string(history.size()));
    }
    if (!history.empty() && history.front().mark != lead_player) {
        throw InvalidSaveFile("LeadPlayerFirst", "first move must be made by the lead player '" +
                                                     std::string(1, to_char(lead_player)) + "'");
    }

    Board board = empty_board();
    GameResult result = GameResult::Continue;
    for (std::size_t i = 0; i < history.size(); ++i) {
        const Move& m = history[i];
        if (!m.coord().in_range()) {
            throw InvalidSaveFile("CellRange", "move " + std::to_string(i) + " is off the board");
        }
        if (i > 0 && m.mark == history[i - 1].mark) {
            throw InvalidSaveFile("Alternation",
                                  "moves " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                      " are both by '" + std::string(1, to_char(m.mark)) + "'");
        }
        if (is_terminal(result)) {
            throw InvalidSaveFile("MoveAfterGameOver",
                                  "move " + std::to_string(i) + " follows a finished game");
        }
        if (board.at(m.coord())) {
            throw InvalidSaveFile("DistinctCells", "move " + std::to_string(i) + " (" +
                                                       encode_move(m) + ") repeats a taken cell");
        }
        board = apply_move(board, m);
        result = check_result(board);
    }

    if (cursor < 0 || cursor > static_cast<int>(history.size())) {
        throw InvalidSaveFile("CursorBounds", "cursor " + std::to_string(cursor) +
                                                  " outside 0.." + std::to_string(history.size()));
    }

    // A finished game has already been counted.
    if ((result == GameResult::XWins && stats.x_wins == 0) ||
        (result == GameResult::OWins && stats.o_wins == 0) ||
        (result == GameResult::Draw && stats.draws == 0)) {
        throw InvalidSaveFile("StatsCoverResult",
                              "finished game '" + std::string(status_text(result)) +
                                  "' is missing from the statistics");
    }

    GameSession session(mode, lead_player);
    session.history_ = std::move(history);
    session.cursor_ = cursor;
    session.result_ = result;
    session.stats_ = stats;
    return session;
}

std::optional<Mark> GameSession::next_player() const noexcept {
    if (is_terminal(result_)) return std::nullopt;
    return history_.size() % 2 == 0 ? lead_ : other(lead_);
}

Controller GameSession::controller_of(Mark mark) const noexcept {
    return tictactoe::controller_of(mode_, lead_, mark);
}

Board GameSession::view_board() const {
    return replay(std::span<const Move>(history_).first(static_cast<std::size_t>(cursor_)));
}

Board GameSession::latest_board() const { return replay(history_); }

void GameSession::ensure_open() const {
    if (stopped_) throw GameError(ErrorCode::SessionStopped, "the game set has been stopped");
}

void GameSession::set_up(Mode mode, Mark lead_player) {
    ensure_open();
    mode_ = mode;
    lead_ = lead_player;
    initialize();
}

void GameSession::initialize() {
    ensure_open();
    history_.clear();
    cursor_ = 0;
    result_ = GameResult::Continue;
}

void GameSession::play_move(int row, int col) {
    ensure_open();
    if (is_terminal(result_)) {
        throw GameError(ErrorCode::GameOver,
                        "the game is over (" + std::string(status()) + "); initialize first");
    }
    if (!at_latest_state()) {
        throw GameError(ErrorCode::NotAtLatestState,
                        "viewing move " + std::to_string(cursor_) + " of " +
                            std::to_string(moves_count()) + "; go to the last state first");
    }
    const Move move{*next_player(), row, col};
    const Board board = apply_move(latest_board(), move);

    history_.push_back(move);
    cursor_ = moves_count();
    result_ = check_result(board);
    count_result(stats_, result_);
}

void GameSession::move_to_previous_state() {
    ensure_open();
    if (cursor_ == 0) throw GameError(ErrorCode::AtFirstState, "already at the first state");
    --cursor_;
}

void GameSession::move_to_next_state() {
    ensure_open();
    if (at_latest_state()) throw GameError(ErrorCode::AtLastState, "already at the last state");
    ++cursor_;
}

void GameSession::move_to_first_state() {
    ensure_open();
    cursor_ = 0;
}

void GameSession::move_to_last_state() {
    ensure_open();
    cursor_ = moves_count();
}

GameStats GameSession::stop() {
    stopped_ = true;
    return stats_;
}

GameSession random_valid_session(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    const Mode mode = static_cast<Mode>(uniform(0, 3));
    const Mark lead = uniform(0, 1) == 0 ? Mark::X : Mark::O;

    std::vector<Move> playout;
    Board board = empty_board();
    Mark mover = lead;
    while (check_result(board) == GameResult::Continue) {
        const auto moves = legal_moves(board);
        const Coord pick = moves[static_cast<std::size_t>(uniform(0, static_cast<int>(moves.size()) - 1))];
        const Move move{mover, pick.row, pick.col};
        board = apply_move(board, move);
        playout.push_back(move);
        mover = other(mover);
    }
    playout.resize(static_cast<std::size_t>(uniform(0, static_cast<int>(playout.size()))));

    GameStats stats{uniform(0, 5), uniform(0, 5), uniform(0, 5)};
    count_result(stats, check_result(replay(playout)));

    const int cursor = uniform(0, static_cast<int>(playout.size()));
    return GameSession::restore(mode, lead, stats, std::move(playout), cursor);
}

}  // namespace tictactoe
