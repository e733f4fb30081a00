#include <cassert>
#include <ostream>

#include "pariton/oracle.hpp"
#include "pariton/solvers.hpp"

namespace pariton {

namespace {

/** Expensive structural assertions only run on games up to this size. */
constexpr int kCheckedSizeLimit = 64;

/**
 * Shared machinery of the three promotion-based solvers.  One instance per
 * solve; the region context `rc_` and the undetermined map `u_` are the
 * state, every operation mutates them in place.  Levels, caller priorities
 * and precision bounds live on the call stack.
 */
class Engine {
public:
    Engine(const ParityGame& g, SolverKind kind, const SolveOptions& opt)
        : g_(g),
          kind_(kind),
          opt_(opt),
          rc_(g),
          u_(g.size(), g.max_priority(), &g),
          has_u_(kind != SolverKind::recursive_promotion) {}

    SolveResult run() {
        const ExtPriority p0 = ExtPriority::nat(g_.max_priority());
        const uint64_t n = uint64_t(g_.size());
        switch (kind_) {
            case SolverKind::recursive_promotion:
                rpp_sol(p0);
                break;
            case SolverKind::bounded_recursion:
                psol(p0, ExtPriority::top(0), n, n);
                break;
            case SolverKind::hybrid:
                sol(p0, ExtPriority::top(0), n, n);
                break;
        }
        finish();

        SolveResult res;
        res.w1 = rc_.r.top_bucket(1);
        if (has_u_) {
            assert(u_.top_bucket(1).empty());
            res.w1 |= u_.top_bucket(0);
        } else {
            // Without an undetermined map the search only ends once every
            // position has been promoted to one of the two tops.
            assert(rc_.r.domain() == (rc_.r.top_bucket(0) | rc_.r.top_bucket(1)));
        }
        res.w0 = res.w1.complement();
        // The maintained witness maps certify the intermediate states (and
        // are what the hooks inspect); the returned certificates are
        // synthesized from the final partition so they hold without any
        // repair history.
        res.wit0 = winning_witness(g_, res.w0, 0);
        res.wit1 = winning_witness(g_, res.w1, 1);
        res.stats = stats_;
        return res;
    }

private:
    // ---- plumbing ----

    void poll_cancel() const {
        if (opt_.cancel && opt_.cancel->load(std::memory_order_relaxed))
            throw SolveCancelled();
    }

    const PromotionFunction* umap() const { return has_u_ ? &u_ : nullptr; }

    SolveSnapshot snapshot(HookPoint pt, ExtPriority p, ExtPriority c, uint64_t b0,
                           uint64_t b1) const {
        return SolveSnapshot{kind_, pt, &rc_, umap(), p, c, b0, b1};
    }

    void dump() {
        if (!first_dump_) *opt_.trace << '\n';
        first_dump_ = false;
        dump_state(*opt_.trace, g_, rc_.r, umap());
    }

    void notify(HookPoint pt, ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        if (pt == HookPoint::solve_entry && opt_.trace) dump();
        if (!opt_.hooks) return;
        repair_witnesses(g_, rc_, umap());
        opt_.hooks->on_state(g_, snapshot(pt, p, c, b0, b1));
    }

    void notify_top_growth(HookPoint pt, int player, ExtPriority p, ExtPriority c,
                           uint64_t b0, uint64_t b1) {
        if (!opt_.hooks) return;
        repair_witnesses(g_, rc_, umap());
        opt_.hooks->on_top_growth(g_, snapshot(pt, p, c, b0, b1), player);
    }

    void finish() {
        repair_witnesses(g_, rc_, umap());
        if (opt_.trace) dump();
        if (opt_.hooks) {
            const uint64_t n = has_u_ ? uint64_t(g_.size()) : 0;
            const ExtPriority c = has_u_ ? ExtPriority::top(0) : ExtPriority::bot();
            opt_.hooks->on_state(g_, snapshot(HookPoint::done, ExtPriority::bot(), c, n, n));
        }
    }

    /** Highest occupied region value strictly below p (bot when none). */
    ExtPriority next_priority(ExtPriority p) const {
        return rc_.r.max_value_lt(p.nat_value());
    }

    // ---- operations ----

    /**
     * Grow the region at p by attraction inside the current subgame (the
     * local area).  Attractor moves of the region player's new members are
     * recorded as their witnesses.
     */
    void attract(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        assert(p.is_nat());
        const int a = p.parity();
        PositionSet R = rc_.r.members_at(p);
        if (!R.empty()) {
            PositionSet L = local_area(rc_.r, p);
            PositionSet A = attractor(g_, a, R, &L, &L, &rc_.wit[a]);
            A.for_each([&](int v) {
                if (!R.test(v)) rc_.assign(v, p);
            });
        }
        notify(HookPoint::attract, p, c, b0, b1);
    }

    /**
     * Promote the closed region at p to the best escape priority of its
     * opponent: the lowest value reachable in one move from the region's
     * escape positions.  The region moves to r or u depending on which map
     * provides that value; no escape at all means the region is a dominion
     * and joins the region player's top.
     */
    void promote(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        const int a = p.parity();
        PositionSet R = rc_.r.members_at(p);
        assert(!R.empty());
#ifndef NDEBUG
        if (g_.size() <= kCheckedSizeLimit) {
            PositionSet L = local_area(rc_.r, p);
            assert(is_side_maximal(g_, rc_.r, umap(), p, 1 - a, has_u_));
            assert(attractor(g_, a, R, &L) == R);
        }
#endif
        BepResult bep = best_escape_priorities(g_, rc_.r, umap(), R, a, p);
        bool r_case;
        if (bep.from_u.is_top())
            r_case = true;
        else if (bep.from_r.is_top())
            r_case = false;
        else
            r_case = bep.from_r.nat_value() <= bep.from_u.nat_value();
        stats_.promotions++;
        if (r_case) {
            const ExtPriority q = bep.from_r;
            assert(q.is_top() ? q == ExtPriority::top(a)
                              : (q.parity() == a && q.nat_value() > p.nat_value()));
            R.for_each([&](int v) { rc_.assign(v, q); });
            notify(HookPoint::promote, p, c, b0, b1);
            if (q.is_top()) notify_top_growth(HookPoint::promote, a, p, c, b0, b1);
        } else {
            const ExtPriority q = bep.from_u;
            assert(q.is_nat() && q.parity() == 1 - a && q.nat_value() > p.nat_value());
            R.for_each([&](int v) {
                rc_.erase(v);
                u_.assign(v, q);
            });
            notify(HookPoint::promote, p, c, b0, b1);
        }
    }

    /**
     * One maximization pass: player beta's material above p attracts what
     * it can from the pool (the local area, widened by the undetermined
     * positions parked at p when the opponent side drains them too).  The
     * attracted positions land at the lowest occupied value of that
     * material, in r or u according to the value's parity; a top value
     * grows the corresponding dominion.  Returns whether anything moved.
     */
    bool maximize_pass(ExtPriority p, int beta, bool wide, ExtPriority c, uint64_t b0,
                       uint64_t b1) {
        PositionSet pool = local_area(rc_.r, p);
        if (wide) pool |= u_.members_at(p);
        PositionSet base = hside(rc_.r, umap(), beta) - pool;
        if (base.empty()) return false;

        int64_t lowest = -1;
        base.for_each([&](int v) {
            ExtPriority t = rc_.r.has(v) ? rc_.r.value(v) : u_.value(v);
            if (t.is_nat() && (lowest < 0 || t.nat_value() < lowest)) lowest = t.nat_value();
        });
        const ExtPriority q =
            lowest < 0 ? ExtPriority::top(beta) : ExtPriority::nat(lowest);
        assert(q.is_top() || q.nat_value() > p.nat_value());
        const bool to_r = q.is_top() || q.parity() == beta;

        PositionSet A =
            attractor(g_, beta, base, &pool, nullptr, to_r ? &rc_.wit[beta] : nullptr);
        PositionSet X = A - base;
        if (X.empty()) return false;
        X.for_each([&](int v) {
            if (has_u_ && u_.has(v)) u_.erase(v);
            if (to_r) {
                rc_.assign(v, q);
            } else {
                rc_.erase(v);
                u_.assign(v, q);
            }
        });
        if (to_r && q.is_top()) notify_top_growth(HookPoint::maximize, beta, p, c, b0, b1);
        return true;
    }

    /**
     * Maximize the state at p: both sides absorb from the local pool until
     * neither can attract anything (the opponent also drains what is parked
     * at p), then the surviving local positions return to their native
     * priorities, since the regions they belonged to may have lost members.
     */
    void maximize(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        const int a = p.parity();
        bool changed = true;
        while (changed) {
            poll_cancel();
            changed = maximize_pass(p, a, false, c, b0, b1);
            changed = maximize_pass(p, 1 - a, has_u_, c, b0, b1) || changed;
        }
        PositionSet L = local_area(rc_.r, p);
        L.for_each([&](int v) {
            const ExtPriority nv = ExtPriority::nat(g_.priority(v));
            if (!(rc_.r.value(v) == nv)) rc_.assign(v, nv);
        });
        stats_.max_ops++;
        notify(HookPoint::maximize, p, c, b0, b1);
        assert(g_.size() > kCheckedSizeLimit ||
               is_strongly_maximal(g_, rc_.r, umap(), p));
    }

    /**
     * The bounded-recursion solver's light-weight maximization: only the
     * opponent side attracts, and everything it reaches inside the local
     * area is parked undetermined at p.  The survivors then return to
     * their native priorities, so the next attraction at p starts from the
     * genuine top-priority positions of what is left: a position that was
     * only held at p by support that has since been parked must fall back
     * down and be re-examined at its own level.
     */
    void parys_maximize(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        const int a = p.parity();
        PositionSet L = local_area(rc_.r, p);
        PositionSet base = hside(rc_.r, umap(), 1 - a) - L;
        if (!base.empty()) {
            PositionSet A = attractor(g_, 1 - a, base, &L);
            PositionSet X = A - base;
            X.for_each([&](int v) {
                rc_.erase(v);
                u_.assign(v, p);
            });
        }
        PositionSet survivors = local_area(rc_.r, p);
        survivors.for_each([&](int v) {
            const ExtPriority nv = ExtPriority::nat(g_.priority(v));
            if (!(rc_.r.value(v) == nv)) rc_.assign(v, nv);
        });
        stats_.max_ops++;
        notify(HookPoint::maximize, p, c, b0, b1);
    }

    /**
     * Resolve the undetermined positions parked at p against the caller
     * priority c.  When c is on the side of p's parity the parked set is
     * simply re-keyed to c and the region structure survives.  Otherwise
     * the local area becomes undetermined at c and the parked positions
     * return to the region map at their native priorities.
     */
    void und(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        assert(p.is_nat());
        const int a = p.parity();
        assert(kind_ != SolverKind::hybrid || g_.size() > kCheckedSizeLimit ||
               is_strongly_maximal(g_, rc_.r, umap(), p));
        PositionSet U = u_.members_at(p);
        if (c.parity() == a) {
            U.for_each([&](int v) { u_.assign(v, c); });
        } else {
            PositionSet L = local_area(rc_.r, p);
            L.for_each([&](int v) { rc_.erase(v); });
            U.for_each([&](int v) {
                u_.erase(v);
                rc_.assign(v, ExtPriority::nat(g_.priority(v)));
            });
            L.for_each([&](int v) { u_.assign(v, c); });
        }
        stats_.und_ops++;
        notify(HookPoint::undo, p, c, b0, b1);
    }

    // ---- recursive-promotion solver ----

    void rpp_sol(ExtPriority p) {
        poll_cancel();
        if (p.is_bot()) return;
        stats_.recursive_calls++;
        notify(HookPoint::solve_entry, p, ExtPriority::bot(), 0, 0);
        while (!p.is_bot()) {
            poll_cancel();
            stats_.hsol_iterations++;
            attract(p, ExtPriority::bot(), 0, 0);
            if (is_closed(g_, rc_.r, umap(), p)) {
                promote(p, ExtPriority::bot(), 0, 0);
            } else {
                rpp_sol(next_priority(p));
                if (is_closed(g_, rc_.r, umap(), p))
                    promote(p, ExtPriority::bot(), 0, 0);
                else
                    maximize(p, ExtPriority::bot(), 0, 0);
            }
            // The level may have been promoted away entirely; continue at
            // the highest region that still has local work.
            p = rc_.r.max_value_le(p.nat_value());
        }
    }

    // ---- hybrid solver ----

    void sol(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        poll_cancel();
        if (p.is_bot() || b0 == 0 || b1 == 0) return;
        stats_.recursive_calls++;
        notify(HookPoint::solve_entry, p, c, b0, b1);

        hsol(p, c, b0, b1);
        const PositionSet snap = local_area(rc_.r, p);
        sol(next_priority(p), p, b0, b1);
        if (is_closed(g_, rc_.r, umap(), p))
            promote(p, c, b0, b1);
        else
            maximize(p, c, b0, b1);
        if (state_less(local_area(rc_.r, p), p, snap, p)) hsol(p, c, b0, b1);
        und(p, c, b0, b1);
    }

    /** The recursive-promotion loop at p, recursing with halved precision
     *  for the opponent, until an iteration shrinks nothing. */
    void hsol(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        const int a = p.parity();
        uint64_t hb0 = b0, hb1 = b1;
        (a == 0 ? hb1 : hb0) /= 2;
        while (true) {
            poll_cancel();
            stats_.hsol_iterations++;
            const PositionSet snap = local_area(rc_.r, p);
            attract(p, c, b0, b1);
            if (is_closed(g_, rc_.r, umap(), p)) {
                promote(p, c, b0, b1);
            } else {
                sol(next_priority(p), p, hb0, hb1);
                if (is_closed(g_, rc_.r, umap(), p))
                    promote(p, c, b0, b1);
                else
                    maximize(p, c, b0, b1);
            }
            if (!state_less(local_area(rc_.r, p), p, snap, p)) break;
        }
    }

    // ---- bounded-recursion solver ----

    void psol(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        poll_cancel();
        if (p.is_bot() || b0 == 0 || b1 == 0) return;
        stats_.recursive_calls++;
        notify(HookPoint::solve_entry, p, c, b0, b1);

        phsol(p, c, b0, b1);
        const PositionSet snap = local_area(rc_.r, p);
        psol(next_priority(p), p, b0, b1);
        parys_maximize(p, c, b0, b1);
        if (state_less(local_area(rc_.r, p), p, snap, p)) phsol(p, c, b0, b1);
        und(p, c, b0, b1);
    }

    void phsol(ExtPriority p, ExtPriority c, uint64_t b0, uint64_t b1) {
        const int a = p.parity();
        uint64_t hb0 = b0, hb1 = b1;
        (a == 0 ? hb1 : hb0) /= 2;
        while (true) {
            poll_cancel();
            stats_.hsol_iterations++;
            const PositionSet snap = local_area(rc_.r, p);
            attract(p, c, b0, b1);
            psol(next_priority(p), p, hb0, hb1);
            parys_maximize(p, c, b0, b1);
            if (!state_less(local_area(rc_.r, p), p, snap, p)) break;
        }
    }

    const ParityGame& g_;
    const SolverKind kind_;
    const SolveOptions& opt_;
    RegionContext rc_;
    PromotionFunction u_;
    const bool has_u_;
    CallStats stats_;
    bool first_dump_ = true;
};

SolveResult run_engine(const ParityGame& g, SolverKind kind, const SolveOptions& opt) {
    Engine engine(g, kind, opt);
    return engine.run();
}

}  // namespace

SolveResult solve_rpp(const ParityGame& g, const SolveOptions& opt) {
    return run_engine(g, SolverKind::recursive_promotion, opt);
}

SolveResult solve_parys(const ParityGame& g, const SolveOptions& opt) {
    return run_engine(g, SolverKind::bounded_recursion, opt);
}

SolveResult solve_hpp(const ParityGame& g, const SolveOptions& opt) {
    return run_engine(g, SolverKind::hybrid, opt);
}

SolveResult solve_zielonka(const ParityGame& g, const SolveOptions& opt) {
    auto [w0, w1] = zielonka_solve(g, opt.cancel);
    SolveResult res;
    res.w0 = w0;
    res.w1 = w1;
    res.wit0 = winning_witness(g, res.w0, 0);
    res.wit1 = winning_witness(g, res.w1, 1);
    return res;
}

}  // namespace pariton
