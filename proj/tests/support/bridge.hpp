#pragma once

// Conversions between engine values and oracle grids, plus the session
// invariant checker shared by unit, property and acceptance tests.

#include <string>
#include <vector>

#include "oracle.hpp"
#include "tictactoe/rules.hpp"
#include "tictactoe/session.hpp"

namespace testing {

inline oracle::Grid to_grid(const tictactoe::Board& board) {
    oracle::Grid g = oracle::blank();
    for (int i = 0; i < 9; ++i) {
        const auto c = board.at_index(i);
        if (c) g[i] = tictactoe::to_char(*c);
    }
    return g;
}

inline tictactoe::Board from_grid(const oracle::Grid& g) {
    tictactoe::Board b = tictactoe::empty_board();
    for (int i = 0; i < 9; ++i) {
        if (g[i] == '.') continue;
        b = tictactoe::apply_move(b, {*tictactoe::mark_from_char(g[i]), i / 3, i % 3});
    }
    return b;
}

// Grid after the first `k` tuples of a history, replayed without the engine.
// Returns false when a tuple targets an occupied cell.
inline bool replay_prefix(const std::vector<std::string>& history, std::size_t k,
                          oracle::Grid& out) {
    out = oracle::blank();
    for (std::size_t i = 0; i < k; ++i) {
        const std::string& t = history[i];
        const int idx = (t[1] - '0') * 3 + (t[2] - '0');
        if (out[idx] != '.') return false;
        out[idx] = t[0];
    }
    return true;
}

inline char status_result(const std::string& status) {
    if (status == "x Won") return 'x';
    if (status == "o Won") return 'o';
    if (status == "Draw") return 'd';
    if (status == "Continue") return 'c';
    return '?';
}

// Field-level snapshot shared by GameSession and the service's JSON view.
struct Snapshot {
    char lead = 'x';
    std::vector<std::string> history;
    int cursor = 0;
    int moves_count = 0;
    char result = 'c';
    std::string status;
    char next_player = ' ';  // ' ' when none
    oracle::Grid viewed{};
    int x_wins = 0, o_wins = 0, draws = 0;
};

inline Snapshot snapshot(const tictactoe::GameSession& s) {
    Snapshot snap;
    snap.lead = tictactoe::to_char(s.lead_player());
    for (const auto& m : s.history()) snap.history.push_back(tictactoe::encode_move(m));
    snap.cursor = s.cursor();
    snap.moves_count = s.moves_count();
    snap.result = tictactoe::result_code(s.result());
    snap.status = std::string(s.status());
    snap.next_player = s.next_player() ? tictactoe::to_char(*s.next_player()) : ' ';
    snap.viewed = to_grid(s.view_board());
    snap.x_wins = s.stats().x_wins;
    snap.o_wins = s.stats().o_wins;
    snap.draws = s.stats().draws;
    return snap;
}

// Empty when every session invariant holds; otherwise one entry per violation.
inline std::vector<std::string> violations(const Snapshot& s) {
    std::vector<std::string> v;
    const int n = static_cast<int>(s.history.size());
    if (s.moves_count != n) v.push_back("movesCount != history length");
    if (n > 9) v.push_back("history longer than 9");
    if (s.cursor < 0 || s.cursor > n) v.push_back("cursor out of bounds");
    for (int i = 0; i < n; ++i) {
        const std::string& t = s.history[i];
        const bool ok = t.size() == 3 && (t[0] == 'x' || t[0] == 'o') && t[1] >= '0' &&
                        t[1] <= '2' && t[2] >= '0' && t[2] <= '2';
        if (!ok) {
            v.push_back("malformed tuple " + t);
            return v;
        }
        const char expected = (i % 2 == 0) ? s.lead : oracle::flip(s.lead);
        if (t[0] != expected) v.push_back("alternation broken at move " + std::to_string(i));
    }
    oracle::Grid full;
    if (!replay_prefix(s.history, n, full)) {
        v.push_back("history repeats a cell");
        return v;
    }
    for (int k = 0; k < n; ++k) {
        oracle::Grid g;
        replay_prefix(s.history, k, g);
        if (oracle::result_of(g) != 'c') v.push_back("move after finished game");
    }
    const char r = oracle::result_of(full);
    if (oracle::line_owners(full).size() > 1) v.push_back("two winners");
    const int nx = static_cast<int>(std::count(full.begin(), full.end(), 'x'));
    const int no = static_cast<int>(std::count(full.begin(), full.end(), 'o'));
    const int lead_count = s.lead == 'x' ? nx : no;
    const int other_count = s.lead == 'x' ? no : nx;
    if (lead_count - other_count != 0 && lead_count - other_count != 1) v.push_back("parity");
    if (s.result != r) v.push_back("result differs from replay");
    if (status_result(s.status) != s.result) v.push_back("status text mismatch");
    if (r == 'c') {
        const char expected = n % 2 == 0 ? s.lead : oracle::flip(s.lead);
        if (s.next_player != expected) v.push_back("nextPlayer wrong");
    } else if (s.next_player != ' ') {
        v.push_back("nextPlayer set after game over");
    }
    if (s.cursor >= 0 && s.cursor <= n) {
        oracle::Grid at_cursor;
        replay_prefix(s.history, static_cast<std::size_t>(s.cursor), at_cursor);
        if (at_cursor != s.viewed) v.push_back("viewed board differs from replay at cursor");
    }
    if (s.x_wins < 0 || s.o_wins < 0 || s.draws < 0) v.push_back("negative stats");
    if ((r == 'x' && s.x_wins == 0) || (r == 'o' && s.o_wins == 0) || (r == 'd' && s.draws == 0))
        v.push_back("finished game not counted");
    return v;
}

// Walks the cursor over every state of a copy and checks each view against
// an independent replay.
inline std::vector<std::string> session_violations(const tictactoe::GameSession& session) {
    auto v = violations(snapshot(session));
    if (session.stopped() || !v.empty()) return v;
    tictactoe::GameSession walk = session;
    walk.move_to_first_state();
    for (int k = 0;; ++k) {
        const auto s = violations(snapshot(walk));
        v.insert(v.end(), s.begin(), s.end());
        if (walk.cursor() != k) v.push_back("cursor walk out of step");
        if (walk.cursor() == walk.moves_count()) break;
        walk.move_to_next_state();
    }
    return v;
}

}  // namespace testing
