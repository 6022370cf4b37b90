#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the engine: boards are plain char arrays ('.', 'x', 'o') in
// row-major order and every routine is naive recursion or brute force.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Grid = std::array<char, 9>;

inline Grid blank() {
    Grid g;
    g.fill('.');
    return g;
}

inline char flip(char mark) { return mark == 'x' ? 'o' : 'x'; }

// True when the three cells lie on one row, one column, or one of the two
// diagonals. Found by testing coordinates, not from a line table.
inline bool collinear_triple(int a, int b, int c) {
    const int r[3] = {a / 3, b / 3, c / 3};
    const int k[3] = {a % 3, b % 3, c % 3};
    const bool same_row = r[0] == r[1] && r[1] == r[2];
    const bool same_col = k[0] == k[1] && k[1] == k[2];
    const bool main_diag = r[0] == k[0] && r[1] == k[1] && r[2] == k[2];
    const bool anti_diag = r[0] + k[0] == 2 && r[1] + k[1] == 2 && r[2] + k[2] == 2;
    return same_row || same_col || main_diag || anti_diag;
}

// Every mark that owns some collinear triple ("" / "x" / "o" / "xo").
inline std::string line_owners(const Grid& g) {
    bool x = false, o = false;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c) {
                if (!collinear_triple(a, b, c)) continue;
                if (g[a] != '.' && g[a] == g[b] && g[b] == g[c]) (g[a] == 'x' ? x : o) = true;
            }
    std::string out;
    if (x) out += 'x';
    if (o) out += 'o';
    return out;
}

// 'x', 'o', 'd' or 'c' for a board with at most one winner.
inline char result_of(const Grid& g) {
    const std::string owners = line_owners(g);
    if (!owners.empty()) return owners[0];
    return std::count(g.begin(), g.end(), '.') == 0 ? 'd' : 'c';
}

struct GameTotals {
    std::uint64_t games = 0;
    std::uint64_t x_wins = 0;
    std::uint64_t o_wins = 0;
    std::uint64_t draws = 0;
};

inline void enumerate_games(Grid& g, char mover, GameTotals& t) {
    const char r = result_of(g);
    if (r != 'c') {
        ++t.games;
        if (r == 'x') ++t.x_wins;
        if (r == 'o') ++t.o_wins;
        if (r == 'd') ++t.draws;
        return;
    }
    for (int i = 0; i < 9; ++i) {
        if (g[i] != '.') continue;
        g[i] = mover;
        enumerate_games(g, flip(mover), t);
        g[i] = '.';
    }
}

inline GameTotals enumerate_games(char lead) {
    Grid g = blank();
    GameTotals t;
    enumerate_games(g, lead, t);
    return t;
}

// Plain negamax, no memo: +1 win, 0 draw, -1 loss for `mover`.
inline int value(Grid& g, char mover) {
    const char r = result_of(g);
    if (r == 'd') return 0;
    if (r != 'c') return r == mover ? 1 : -1;
    int best = -2;
    for (int i = 0; i < 9; ++i) {
        if (g[i] != '.') continue;
        g[i] = mover;
        best = std::max(best, -value(g, flip(mover)));
        g[i] = '.';
    }
    return best;
}

struct Position {
    Grid grid;
    char mover;
};

// Every distinct (board, mover) reachable from empty with either lead.
inline std::vector<Position> reachable_positions() {
    std::vector<Position> out;
    std::vector<bool> seen(19683 * 2, false);
    auto key = [](const Grid& g, char mover) {
        int k = 0;
        for (int i = 8; i >= 0; --i) k = k * 3 + (g[i] == '.' ? 0 : g[i] == 'x' ? 1 : 2);
        return k * 2 + (mover == 'x' ? 0 : 1);
    };
    auto walk = [&](auto&& self, Grid& g, char mover) -> void {
        const int k = key(g, mover);
        if (seen[k]) return;
        seen[k] = true;
        out.push_back({g, mover});
        if (result_of(g) != 'c') return;
        for (int i = 0; i < 9; ++i) {
            if (g[i] != '.') continue;
            g[i] = mover;
            self(self, g, flip(mover));
            g[i] = '.';
        }
    };
    for (char lead : {'x', 'o'}) {
        Grid g = blank();
        walk(walk, g, lead);
    }
    return out;
}

}  // namespace oracle
