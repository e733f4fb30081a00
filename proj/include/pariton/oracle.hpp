#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pariton/game.hpp"
#include "pariton/hooks.hpp"
#include "pariton/promotion.hpp"
#include "pariton/region_state.hpp"

namespace pariton {

/**
 * Classic attractor-decomposition solve.  Independent of the promotion
 * machinery on purpose: uses only pre/attractor over subgame masks.
 * When `cancel` flips to true the solve stops by throwing SolveCancelled.
 */
std::pair<PositionSet, PositionSet> zielonka_solve(const ParityGame& g,
                                                   const std::atomic<bool>* cancel = nullptr);

/**
 * Ground-truth solve by enumerating player 0's positional strategies.
 * A position is won by player 0 iff some strategy choice leaves player 1
 * no reachable cycle whose maximum priority is odd in the residual graph.
 * Refuses games whose strategy space exceeds ~10^7 combinations.
 */
std::pair<PositionSet, PositionSet> brute_force_solve(const ParityGame& g);

/**
 * True iff player `a` wins exactly from `D` when the token starts there
 * and never leaves: every successor chosen by `wit` (for a's positions)
 * or by the opponent (all moves) stays in D, and every cycle of the
 * residual graph inside D has a-parity maximum priority.
 */
bool check_dominion(const ParityGame& g, const PositionSet& D, int a, const Strategy& wit,
                    std::string* why = nullptr);

/**
 * Weaker containment: positions may escape D, but plays that stay inside
 * forever (following `wit` on a's positions) must be won by a.  Escape
 * positions — a's with the witness leading out or undefined, the
 * opponent's with any move out — are exempt from the cycle requirement.
 */
bool check_quasi_dominion(const ParityGame& g, const PositionSet& D, int a,
                          const Strategy& wit, std::string* why = nullptr);

/**
 * Certifying strategy for player a on W, built by attractor decomposition.
 * Precondition: every position of W is won by a and the opponent cannot
 * leave W, i.e. W is an a-dominion; the result passes check_dominion.
 */
Strategy winning_witness(const ParityGame& g, const PositionSet& W, int a);

struct ValidationReport {
    uint64_t states_checked = 0;
    uint64_t dominion_checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void add(const std::string& v);
};

/**
 * Structural checks on one solver state.  Scope depends on the solver:
 *  - all solvers: value >= priority, witness containment on each
 *    thresholded side set of r, cycle-correctness of each thresholded
 *    r-side set under the witness;
 *  - hybrid & recursive-promotion: escape positions of every thresholded
 *    side set carry congruent priorities at or above the threshold;
 *  - bounded-recursion instead: escapes of the current level's region,
 *    within its own subgame, carry exactly the level's priority (above the
 *    working level this solver keeps plain native values, so the global
 *    side-set condition does not apply to it);
 *  - hybrid & bounded-recursion: r/u domain partition, the (p, c) value
 *    gap, u's top bucket restrictions;
 *  - hybrid only: no u-position is an escape position of a thresholded
 *    side set at or above p;
 *  - recursive-promotion only: r is total.
 */
void validate_state(const ParityGame& g, const SolveSnapshot& snap, ValidationReport& report,
                    bool check_cycles = true);

/** Hook implementation that runs validate_state at every reported state. */
class StrictValidator : public ValidationHooks {
public:
    explicit StrictValidator(bool check_cycles = true) : check_cycles_(check_cycles) {}
    void on_state(const ParityGame& g, const SolveSnapshot& snap) override;
    void on_top_growth(const ParityGame& g, const SolveSnapshot& snap, int player) override;

    ValidationReport report;

private:
    bool check_cycles_;
};

/**
 * Enumerate every game with n <= max_n positions, priorities in
 * [0, max_prio], and 1..max_deg distinct successors per position
 * (ids 0..n-1; deterministic order).  Calls f on each.
 */
void enumerate_small_games(int max_n, int max_prio, int max_deg,
                           const std::function<void(const ParityGame&)>& f);

}  // namespace pariton
