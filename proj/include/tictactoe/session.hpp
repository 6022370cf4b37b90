#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tictactoe/rules.hpp"

namespace tictactoe {

// First letter: controller of the lead player. Last letter: the other seat.
enum class Mode : std::uint8_t { H2H, H2C, C2H, C2C };

enum class Controller : std::uint8_t { Human, Computer };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

Controller controller_of(Mode mode, Mark lead_player, Mark mark) noexcept;

struct GameStats {
    int x_wins = 0;
    int o_wins = 0;
    int draws = 0;

    int total() const noexcept { return x_wins + o_wins + draws; }

    friend bool operator==(const GameStats&, const GameStats&) = default;
};

// "x Won", "o Won", "Draw" or "Continue".
std::string_view status_text(GameResult result) noexcept;

// A game set: configuration, the current game's move history with a
// viewing cursor, and cumulative statistics. The board is never stored;
// it is always replayed from the history.
class GameSession {
public:
    // H2H with x leading.
    GameSession() = default;
    GameSession(Mode mode, Mark lead_player);

    // Rebuilds a session from persisted fields. Throws InvalidSaveFile
    // naming the first violated invariant.
    static GameSession restore(Mode mode, Mark lead_player, GameStats stats,
                               std::vector<Move> history, int cursor);

    Mode mode() const noexcept { return mode_; }
    Mark lead_player() const noexcept { return lead_; }
    GameResult result() const noexcept { return result_; }
    std::string_view status() const noexcept { return status_text(result_); }
    int moves_count() const noexcept { return static_cast<int>(history_.size()); }
    int cursor() const noexcept { return cursor_; }
    std::span<const Move> history() const noexcept { return history_; }
    const GameStats& stats() const noexcept { return stats_; }
    bool stopped() const noexcept { return stopped_; }
    bool at_latest_state() const noexcept { return cursor_ == moves_count(); }

    // Empty once the current game is over.
    std::optional<Mark> next_player() const noexcept;
    Controller controller_of(Mark mark) const noexcept;

    // Board at the cursor.
    Board view_board() const;
    // Board after every move of the current game.
    Board latest_board() const;

    void set_up(Mode mode, Mark lead_player);
    void initialize();

    // Places the next player's mark. On a finishing move the matching
    // statistics counter is bumped exactly once.
    void play_move(int row, int col);

    void move_to_previous_state();
    void move_to_next_state();
    void move_to_first_state();
    void move_to_last_state();

    // Closes the game set and returns the final statistics.
    GameStats stop();

    friend bool operator==(const GameSession&, const GameSession&) = default;

private:
    void ensure_open() const;

    Mode mode_ = Mode::H2H;
    Mark lead_ = Mark::X;
    std::vector<Move> history_;
    int cursor_ = 0;
    GameResult result_ = GameResult::Continue;
    GameStats stats_;
    bool stopped_ = false;
};

// A session holding a prefix of a random legal playout, with a random
// mode, lead player, cursor and prior statistics. Deterministic per seed.
GameSession random_valid_session(std::uint64_t seed);

}  // namespace tictactoe
