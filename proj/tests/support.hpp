#pragma once

// Shared fixtures and helpers for the test binaries.

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "pariton/game.hpp"

namespace testutil {

using namespace pariton;

struct SpecRow {
    int64_t id;
    int prio;
    int owner;
    std::vector<int64_t> succ;
    std::string name = "";
};

inline ParityGame make_game(const std::vector<SpecRow>& rows) {
    std::vector<PositionSpec> specs;
    specs.reserve(rows.size());
    for (const auto& row : rows) specs.push_back({row.id, row.prio, row.owner, row.succ, row.name});
    return ParityGame::from_specs(specs);
}

/**
 * v0: priority 0, owner 0, moves {v0, v1};  v1: priority 1, owner 1, moves {v0}.
 * Player 0 wins everywhere: v0 can loop on itself forever and v1 is forced
 * back into v0, so the only priority seen infinitely often is 0.
 */
inline ParityGame pair_game() {
    return make_game({{0, 0, 0, {0, 1}}, {1, 1, 1, {0}}});
}

/** Single position with a self-loop. */
inline ParityGame loop_game(int priority, int owner) {
    return make_game({{0, priority, owner, {0}}});
}

inline PositionSet set_of(int n, std::initializer_list<int> vs) {
    PositionSet s(n);
    for (int v : vs) s.set(v);
    return s;
}

inline std::string to_pg(const ParityGame& g) {
    std::ostringstream out;
    g.write_pgsolver(out);
    return out.str();
}

inline ParityGame from_pg(const std::string& text) {
    std::istringstream in(text);
    return ParityGame::parse_pgsolver(in);
}

}  // namespace testutil
