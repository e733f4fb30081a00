#pragma once

#include <iosfwd>

#include "pariton/game.hpp"
#include "pariton/promotion.hpp"

namespace pariton {

/**
 * The r-map together with the witness strategies that back its side sets:
 * wit[a] holds, for positions owned by player a whose r-value has parity a,
 * the move player a uses to stay inside the current level sets.
 */
struct RegionContext {
    PromotionFunction r;
    Strategy wit[2];

    explicit RegionContext(const ParityGame& g)
        : r(PromotionFunction::natives(g)), wit{Strategy(g.size()), Strategy(g.size())} {}

    /** Assign r(v) = q keeping the witness maps on the correct side. */
    void assign(Pos v, ExtPriority q) {
        r.assign(v, q);
        wit[1 - q.parity()].clear(v);
    }
    void erase(Pos v) {
        r.erase(v);
        wit[0].clear(v);
        wit[1].clear(v);
    }
};

/**
 * Value comparison that never asks top0 vs top1: a top dominates every
 * natural and equals only itself; two distinct tops are simply unordered
 * (returns false) instead of asserting.
 */
inline bool dominates_or_equal(ExtPriority m, ExtPriority q) {
    if (m.is_top() && q.is_top()) return m == q;
    if (m.is_top()) return true;
    if (q.is_top()) return false;
    return m.nat_value() >= q.nat_value();
}

/**
 * Combined side set of player `a`: positions whose r-value has parity a,
 * plus positions whose u-value has the opposite parity (a position parked
 * in u under an opponent-parity key is material for player a's side).
 * `u` may be null (the non-hybrid solvers).
 */
PositionSet hside(const PromotionFunction& r, const PromotionFunction* u, int a);

/** Side set of player `a` thresholded at q: value >= q members only. */
PositionSet hside_ge(const PromotionFunction& r, const PromotionFunction* u, int a,
                     ExtPriority q);

/** L_s: dom(r^{(<=p)}), numeric values only. */
PositionSet local_area(const PromotionFunction& r, ExtPriority p);

/** Current subgame mask: everything except dom(r^{(>p)}) and dom(u). */
PositionSet subgame_mask(const ParityGame& g, const PromotionFunction& r,
                         const PromotionFunction* u, ExtPriority p);

/**
 * A state at priority p is open when its region r^{-1}(p) is empty or some
 * region position is an escape position of the p-thresholded side set of
 * the region's player (escape evaluated in the full game).
 */
bool is_open(const ParityGame& g, const PromotionFunction& r, const PromotionFunction* u,
             ExtPriority p);
inline bool is_closed(const ParityGame& g, const PromotionFunction& r,
                      const PromotionFunction* u, ExtPriority p) {
    return !is_open(g, r, u, p);
}

/**
 * No position of the `beta` side set outside the pool's closure can be
 * attracted into the pool: atr^beta(side \ pool, pool) adds nothing.
 * pool is L for beta = parity(p), and L (plain) or L ∪ u^{-1}(p) (wide)
 * for the opponent.
 */
bool is_side_maximal(const ParityGame& g, const PromotionFunction& r,
                     const PromotionFunction* u, ExtPriority p, int beta, bool wide_pool);
bool is_maximal(const ParityGame& g, const PromotionFunction& r, const PromotionFunction* u,
                ExtPriority p);
bool is_strongly_maximal(const ParityGame& g, const PromotionFunction& r,
                         const PromotionFunction* u, ExtPriority p);
/** Closed, opponent-maximal, and region-maximal for the region's player. */
bool is_promotable(const ParityGame& g, const PromotionFunction& r,
                   const PromotionFunction* u, ExtPriority p);

/**
 * Best escape priorities of region R at level p (owned by `region_player`,
 * write alpha): minima over the moves leading from R's escape positions
 * (positions the opponent could use to leave R) to mapped positions
 * outside R.
 *
 * Only targets the region player actually benefits from reaching count:
 *   - from_r aggregates r-values of parity alpha greater than p, plus the
 *     alpha top.  A closed region's alpha-owned escape positions may hold
 *     additional moves into lower or opponent-parity buckets; those moves
 *     stay under alpha's control and never carry the region anywhere, so
 *     they are not promotion candidates.
 *   - from_u symmetrically aggregates u-values of the opposite parity
 *     greater than p, plus the opposite top.
 * Each aggregation is totally ordered, and either side without candidates
 * yields the region player's top.
 */
struct BepResult {
    ExtPriority from_r;
    ExtPriority from_u;
};
BepResult best_escape_priorities(const ParityGame& g, const PromotionFunction& r,
                                 const PromotionFunction* u, const PositionSet& R,
                                 int region_player, ExtPriority p);

/** Solver-state order: (L1,p1) before (L2,p2) iff L1 ⊂ L2, or L1 = L2 and p1 < p2. */
bool state_less(const PositionSet& L1, ExtPriority p1, const PositionSet& L2, ExtPriority p2);

/**
 * Trace dump, one line per occupied bucket: "q: {ids} [r|u]", tops first,
 * then numeric values descending; ids are the positions' original ids.
 */
void dump_state(std::ostream& out, const ParityGame& g, const PromotionFunction& r,
                const PromotionFunction* u);

/**
 * Witness rule.  For v owned by the parity a of r(v), candidate targets are
 * successors on the same side: r-values of parity a, or u-values of the
 * opposite parity (side-set membership is inverted for u).  A witness is
 * acceptable when its value is at least min(r(v), best candidate value);
 * otherwise repoint to the best candidate, ranking any top above every
 * numeric value (r-tops above u-tops) and numeric candidates by (value,
 * native first, priority, lowest index) — preferring natives breaks mutual
 * pointing between promoted stragglers.  Positions with no candidates keep
 * no witness (they are escape positions of every level set they belong to).
 */
void refresh_witness(const ParityGame& g, RegionContext& rc, Pos v,
                     const PromotionFunction* u = nullptr);

/** Run refresh_witness on every mapped position (lazy global repair). */
void repair_witnesses(const ParityGame& g, RegionContext& rc,
                      const PromotionFunction* u = nullptr);

/** Solver work counters. */
struct CallStats {
    uint64_t recursive_calls = 0;   // non-trivial bounded-solver activations
    uint64_t hsol_iterations = 0;   // inner solve-loop iterations
    uint64_t promotions = 0;
    uint64_t max_ops = 0;
    uint64_t und_ops = 0;
};

}  // namespace pariton
