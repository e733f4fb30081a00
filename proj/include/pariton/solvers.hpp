#pragma once

#include <atomic>
#include <iosfwd>
#include <stdexcept>

#include "pariton/game.hpp"
#include "pariton/hooks.hpp"
#include "pariton/region_state.hpp"

namespace pariton {

/** Thrown when a solve is cancelled through SolveOptions::cancel. */
struct SolveCancelled : std::runtime_error {
    SolveCancelled() : std::runtime_error("solve cancelled") {}
};

struct SolveOptions {
    ValidationHooks* hooks = nullptr;
    std::atomic<bool>* cancel = nullptr;  // set to true to stop cooperatively
    std::ostream* trace = nullptr;        // state dumps at solver entry points
};

struct SolveResult {
    PositionSet w0, w1;
    Strategy wit0, wit1;  // certifying strategies, one per winning region
    CallStats stats;
};

/** Recursive priority-promotion solver. */
SolveResult solve_rpp(const ParityGame& g, const SolveOptions& opt = {});

/** Bounded-recursion (quasi-polynomial) solver in the same state machinery. */
SolveResult solve_parys(const ParityGame& g, const SolveOptions& opt = {});

/** Hybrid solver: promotion-accelerated bounded recursion. */
SolveResult solve_hpp(const ParityGame& g, const SolveOptions& opt = {});

/** Classic attractor-decomposition solver (independent reference). */
SolveResult solve_zielonka(const ParityGame& g, const SolveOptions& opt = {});

}  // namespace pariton
