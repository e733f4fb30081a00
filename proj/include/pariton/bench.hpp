#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pariton/game.hpp"
#include "pariton/solvers.hpp"

namespace pariton {

/** Solver dispatch by CLI name: "hpp", "rpp", "parys" or "zlk". */
SolveResult solve_with_algorithm(const std::string& algo, const ParityGame& g,
                                 const SolveOptions& opt = {});
bool is_known_algorithm(const std::string& algo);

/** Outcome of one watched solve.  The partition is valid only when it ran to completion. */
struct TimedSolve {
    bool timed_out = false;
    double time_ms = 0.0;
    PositionSet w0, w1;
};

/**
 * Run one solve under a watchdog thread that flips the cooperative
 * cancellation flag after `timeout_s` seconds (<= 0 disables the limit).
 * Cancellation is observed at recursion entries, so the wall time of a
 * timed-out run can exceed the limit by one solver step.
 */
TimedSolve solve_with_timeout(const ParityGame& g, const std::string& algo, double timeout_s);

/** One benchmark measurement; `agreed` stays empty when either side timed out. */
struct BenchRecord {
    std::string game;
    std::string algo;
    int n = 0;
    int priorities = 0;
    double time_ms = 0.0;
    bool timed_out = false;
    std::optional<bool> agreed;
};

struct NamedGame {
    std::string name;
    ParityGame game;
};

/**
 * Run every (game, algorithm) pair under the timeout.  When `reference` is
 * non-empty its partition (reused from the pair run when it is one of
 * `algos`) anchors the `agreed` flag of every record for that game.
 * Produces exactly games.size() * algos.size() records, in input order.
 */
std::vector<BenchRecord> run_bench(const std::vector<NamedGame>& games,
                                   const std::vector<std::string>& algos, double timeout_s,
                                   const std::string& reference);

/** Header line: game,algo,n,priorities,time_ms,timed_out,agreed */
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRecord& rec);

}  // namespace pariton
