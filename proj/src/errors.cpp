#include "tictactoe/errors.hpp"

namespace tictactoe {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CellOccupied: return "CellOccupied";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::MalformedTuple: return "MalformedTuple";
        case ErrorCode::GameOver: return "GameOver";
        case ErrorCode::NotAtLatestState: return "NotAtLatestState";
        case ErrorCode::AtFirstState: return "AtFirstState";
        case ErrorCode::AtLastState: return "AtLastState";
        case ErrorCode::SessionStopped: return "SessionStopped";
        case ErrorCode::NotHumanTurn: return "NotHumanTurn";
        case ErrorCode::NotComputerTurn: return "NotComputerTurn";
        case ErrorCode::NoLegalMoves: return "NoLegalMoves";
        case ErrorCode::InvalidSaveFile: return "InvalidSaveFile";
    }
    return "Unknown";
}

}  // namespace tictactoe
