#pragma once

#include <cstdint>

#include "pariton/ext_priority.hpp"
#include "pariton/game.hpp"
#include "pariton/promotion.hpp"
#include "pariton/region_state.hpp"

namespace pariton {

enum class SolverKind { recursive_promotion, bounded_recursion, hybrid };

/** Which mutating operation produced the state being reported. */
enum class HookPoint { solve_entry, attract, promote, maximize, undo, done };

/** Read-only view of the solver state passed to validation hooks. */
struct SolveSnapshot {
    SolverKind kind;
    HookPoint point;
    const RegionContext* rc;
    const PromotionFunction* u;  // null for the recursive-promotion solver
    ExtPriority p;               // current priority level
    ExtPriority c;               // caller priority (bot when not applicable)
    uint64_t b0 = 0, b1 = 0;     // precision bounds (0 when not applicable)
};

/**
 * Observation interface for solver runs.  Null hook pointers cost one
 * branch per call site; implementations are free to validate, count, or
 * record.  Witness maps are repaired before every callback.
 */
class ValidationHooks {
public:
    virtual ~ValidationHooks() = default;
    virtual void on_state(const ParityGame&, const SolveSnapshot&) {}
    /** A top bucket of r grew (promotion or maximization into a top). */
    virtual void on_top_growth(const ParityGame&, const SolveSnapshot&, int /*player*/) {}
};

}  // namespace pariton
