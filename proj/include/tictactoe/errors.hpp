#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tictactoe {

// Every failure the engine can report. The service maps each code onto
// exactly one HTTP status.
enum class ErrorCode {
    CellOccupied,
    OutOfRange,
    MalformedTuple,
    GameOver,
    NotAtLatestState,
    AtFirstState,
    AtLastState,
    SessionStopped,
    NotHumanTurn,
    NotComputerTurn,
    NoLegalMoves,
    InvalidSaveFile,
};

std::string_view to_string(ErrorCode code);

class GameError : public std::runtime_error {
public:
    GameError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised when a persisted game set violates a session invariant.
// `invariant()` names the violated rule, e.g. "Alternation".
class InvalidSaveFile : public GameError {
public:
    InvalidSaveFile(std::string invariant, const std::string& detail)
        : GameError(ErrorCode::InvalidSaveFile, invariant + ": " + detail),
          invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

}  // namespace tictactoe
