#include "pariton/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "pariton/solvers.hpp"

namespace pariton {

namespace {

std::pair<PositionSet, PositionSet> zielonka_rec(const ParityGame& g, const PositionSet& mask,
                                                 const std::atomic<bool>* cancel) {
    const int n = g.size();
    if (cancel && cancel->load(std::memory_order_relaxed)) throw SolveCancelled();
    if (mask.empty()) return {PositionSet(n), PositionSet(n)};

    ExtPriority m = max_priority_in(g, mask);
    const int a = m.parity();

    PositionSet top(n);
    mask.for_each([&](int v) {
        if (g.priority(v) == m.nat_value()) top.set(v);
    });
    PositionSet A = attractor(g, a, top, nullptr, &mask);

    auto sub = zielonka_rec(g, mask - A, cancel);
    const PositionSet& opp_sub = (a == 0) ? sub.second : sub.first;
    if (opp_sub.empty()) {
        std::pair<PositionSet, PositionSet> res{PositionSet(n), PositionSet(n)};
        (a == 0 ? res.first : res.second) = mask;
        return res;
    }
    PositionSet B = attractor(g, 1 - a, opp_sub, nullptr, &mask);
    auto sub2 = zielonka_rec(g, mask - B, cancel);
    (a == 0 ? sub2.second : sub2.first) |= B;
    return sub2;
}

/**
 * True if the given subgraph (edge list per vertex, restricted to `verts`)
 * contains a cycle whose maximum priority has parity `bad`.  Checked per
 * priority level with an iterative Tarjan SCC pass.
 */
class CycleChecker {
public:
    CycleChecker(const ParityGame& g, std::function<bool(Pos, Pos)> edge)
        : g_(g), edge_(std::move(edge)) {}

    bool has_bad_cycle(const PositionSet& verts, int bad, std::string* why) {
        std::vector<int> prios;
        verts.for_each([&](int v) {
            if (g_.priority(v) % 2 == bad) prios.push_back(g_.priority(v));
        });
        std::sort(prios.begin(), prios.end());
        prios.erase(std::unique(prios.begin(), prios.end()), prios.end());
        for (int m : prios) {
            PositionSet sub(g_.size());
            verts.for_each([&](int v) {
                if (g_.priority(v) <= m) sub.set(v);
            });
            if (scc_hits(sub, m, why)) return true;
        }
        return false;
    }

private:
    /** Any nontrivial SCC (or self-loop) of `sub` containing priority m? */
    bool scc_hits(const PositionSet& sub, int m, std::string* why) {
        const int n = g_.size();
        std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
        std::vector<Pos> stack;
        std::vector<uint8_t> on_stack(n, 0);
        int next_index = 0, next_comp = 0;
        std::vector<int> comp_size;
        std::vector<uint8_t> comp_has_m, comp_self_loop;

        struct Frame {
            Pos v;
            size_t ei;
        };
        std::vector<Frame> call;

        auto edges_of = [&](Pos v) {
            std::vector<Pos> out;
            for (Pos w : g_.successors(v))
                if (sub.test(w) && edge_(v, w)) out.push_back(w);
            return out;
        };

        std::vector<std::vector<Pos>> adj(n);
        sub.for_each([&](int v) { adj[v] = edges_of(v); });

        bool bad = false;
        sub.for_each([&](int root) {
            if (index[root] != -1 || bad) return;
            call.push_back({root, 0});
            index[root] = low[root] = next_index++;
            stack.push_back(root);
            on_stack[root] = 1;
            while (!call.empty()) {
                Frame& f = call.back();
                if (f.ei < adj[f.v].size()) {
                    Pos w = adj[f.v][f.ei++];
                    if (index[w] == -1) {
                        index[w] = low[w] = next_index++;
                        stack.push_back(w);
                        on_stack[w] = 1;
                        call.push_back({w, 0});
                    } else if (on_stack[w]) {
                        low[f.v] = std::min(low[f.v], index[w]);
                    }
                } else {
                    Pos v = f.v;
                    call.pop_back();
                    if (!call.empty())
                        low[call.back().v] = std::min(low[call.back().v], low[v]);
                    if (low[v] == index[v]) {
                        int c = next_comp++;
                        comp_size.push_back(0);
                        comp_has_m.push_back(0);
                        comp_self_loop.push_back(0);
                        while (true) {
                            Pos w = stack.back();
                            stack.pop_back();
                            on_stack[w] = 0;
                            comp[w] = c;
                            comp_size[c]++;
                            if (g_.priority(w) == m) comp_has_m[c] = 1;
                            for (Pos t : adj[w])
                                if (t == w) comp_self_loop[c] = 1;
                            if (w == v) break;
                        }
                        if (comp_has_m[c] && (comp_size[c] > 1 || comp_self_loop[c])) {
                            bad = true;
                            if (why) {
                                std::ostringstream os;
                                os << "cycle with maximum priority " << m;
                                *why = os.str();
                            }
                        }
                    }
                }
            }
        });
        return bad;
    }

    const ParityGame& g_;
    std::function<bool(Pos, Pos)> edge_;
};

}  // namespace

std::pair<PositionSet, PositionSet> zielonka_solve(const ParityGame& g,
                                                   const std::atomic<bool>* cancel) {
    return zielonka_rec(g, g.all_positions(), cancel);
}

namespace {

/**
 * Attractor decomposition of a region M entirely won by a, recording a's
 * moves.  Mirrors the zielonka recursion with the winner fixed: layers of
 * the highest priority are peeled off, own-parity layers keep the play at
 * that priority, opponent-parity layers are escaped toward the already
 * synthesized remainder.
 */
void witness_rec(const ParityGame& g, PositionSet M, int a, Strategy& wit) {
    while (!M.empty()) {
        const int h = int(max_priority_in(g, M).nat_value());
        PositionSet H(g.size());
        M.for_each([&](int v) {
            if (g.priority(v) == h) H.set(v);
        });
        if (h % 2 == a) {
            // Plays that keep meeting this layer see h, the current maximum,
            // infinitely often; any move staying inside M is good enough on
            // the priority-h positions themselves.
            PositionSet A = attractor(g, a, H, &M, &M, &wit);
            H.for_each([&](int v) {
                if (g.owner(v) != a) return;
                for (Pos w : g.successors(v))
                    if (M.test(w)) {
                        wit.set(v, w);
                        break;
                    }
            });
            M -= A;
        } else {
            // The opponent owns the top priority: synthesize the rest first,
            // then pull the opponent's layer toward it.
            PositionSet A = attractor(g, 1 - a, H, &M, &M);
            PositionSet rest = M - A;
            assert(!rest.empty());  // otherwise the opponent would win M
            if (rest.empty()) break;
            witness_rec(g, rest, a, wit);
            PositionSet B = attractor(g, a, rest, &M, &M, &wit);
            M -= B;
        }
    }
}

}  // namespace

Strategy winning_witness(const ParityGame& g, const PositionSet& W, int a) {
    Strategy wit(g.size());
    witness_rec(g, W, a, wit);
    return wit;
}

std::pair<PositionSet, PositionSet> brute_force_solve(const ParityGame& g) {
    const int n = g.size();
    std::vector<Pos> choosers;
    double combos = 1;
    for (Pos v = 0; v < n; ++v)
        if (g.owner(v) == 0) {
            choosers.push_back(v);
            combos *= double(g.successors(v).size());
        }
    if (combos > 1e7)
        throw std::invalid_argument("brute_force_solve: strategy space too large");

    std::vector<size_t> choice(choosers.size(), 0);
    std::vector<Pos> pick(n, -1);
    PositionSet w0(n);

    auto evaluate = [&]() {
        for (size_t i = 0; i < choosers.size(); ++i)
            pick[choosers[i]] = g.successors(choosers[i])[choice[i]];
        auto edge = [&](Pos v, Pos w) {
            return g.owner(v) == 1 || pick[v] == w;
        };

        // Positions on a cycle whose maximum priority is odd, in the
        // residual graph where player 0 follows this strategy.
        PositionSet bad(n);
        std::vector<int> odd_prios;
        for (Pos v = 0; v < n; ++v)
            if (g.priority(v) % 2 == 1) odd_prios.push_back(g.priority(v));
        std::sort(odd_prios.begin(), odd_prios.end());
        odd_prios.erase(std::unique(odd_prios.begin(), odd_prios.end()), odd_prios.end());
        for (int m : odd_prios) {
            // Vertices usable in a cycle with maximum m.
            PositionSet sub(n);
            for (Pos v = 0; v < n; ++v)
                if (g.priority(v) <= m) sub.set(v);
            // A vertex belongs to such a cycle iff it shares a residual-graph
            // SCC with a priority-m vertex; n is tiny, so plain
            // reachability-based SCC membership suffices.
            sub.for_each([&](int s) {
                if (g.priority(s) != m) return;
                // s reaches t and t reaches s within sub => same SCC.
                auto reach_from = [&](Pos src) {
                    PositionSet r(n);
                    std::vector<Pos> q{src};
                    while (!q.empty()) {
                        Pos v = q.back();
                        q.pop_back();
                        for (Pos w : g.successors(v)) {
                            if (!sub.test(w) || !edge(v, w) || r.test(w)) continue;
                            r.set(w);
                            q.push_back(w);
                        }
                    }
                    return r;
                };
                PositionSet fwd = reach_from(s);
                if (!fwd.test(s)) return;  // s not on any cycle
                // every vertex on a cycle through s: v in fwd and s in reach(v)
                fwd.for_each([&](int v) {
                    if (reach_from(v).test(s)) bad.set(v);
                });
            });
        }
        // Player 0 wins from v under this strategy iff no bad vertex is
        // reachable in the residual graph.
        PositionSet reach_bad = bad;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Pos v = 0; v < n; ++v) {
                if (reach_bad.test(v)) continue;
                for (Pos w : g.successors(v))
                    if (edge(v, w) && reach_bad.test(w)) {
                        reach_bad.set(v);
                        changed = true;
                        break;
                    }
            }
        }
        w0 |= reach_bad.complement();
    };

    while (true) {
        evaluate();
        size_t i = 0;
        for (; i < choosers.size(); ++i) {
            if (++choice[i] < g.successors(choosers[i]).size()) break;
            choice[i] = 0;
        }
        if (i == choosers.size()) break;
    }
    return {w0, w0.complement()};
}

void ValidationReport::add(const std::string& v) {
    if (violations.size() < 64) violations.push_back(v);
    else if (violations.size() == 64) violations.push_back("... further violations elided");
}

namespace {

bool residual_cycle_check(const ParityGame& g, const PositionSet& D, int a,
                          const Strategy& wit, std::string* why) {
    auto edge = [&](Pos v, Pos w) {
        if (g.owner(v) != a) return true;
        return wit.has(v) && wit.get(v) == w;
    };
    CycleChecker chk(g, edge);
    return !chk.has_bad_cycle(D, 1 - a, why);
}

}  // namespace

bool check_dominion(const ParityGame& g, const PositionSet& D, int a, const Strategy& wit,
                    std::string* why) {
    bool ok = true;
    D.for_each([&](int v) {
        if (!ok) return;
        if (g.owner(v) == a) {
            if (!wit.has(v) || !g.has_move(v, wit.get(v)) || !D.test(wit.get(v))) {
                if (why)
                    *why = "position " + std::to_string(g.original_id(v)) +
                           " lacks a witness move inside the set";
                ok = false;
            }
        } else {
            for (Pos w : g.successors(v))
                if (!D.test(w)) {
                    if (why)
                        *why = "opponent position " + std::to_string(g.original_id(v)) +
                               " can leave the set";
                    ok = false;
                    return;
                }
        }
    });
    if (!ok) return false;
    return residual_cycle_check(g, D, a, wit, why);
}

bool check_quasi_dominion(const ParityGame& g, const PositionSet& D, int a,
                          const Strategy& wit, std::string* why) {
    return residual_cycle_check(g, D, a, wit, why);
}

namespace {

std::string describe(const ParityGame& g, const PositionSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ' ';
        out += std::to_string(g.original_id(v));
        first = false;
    });
    return out + "}";
}

const char* point_name(HookPoint p) {
    switch (p) {
        case HookPoint::solve_entry: return "solve_entry";
        case HookPoint::attract: return "attract";
        case HookPoint::promote: return "promote";
        case HookPoint::maximize: return "maximize";
        case HookPoint::undo: return "undo";
        case HookPoint::done: return "done";
    }
    return "?";
}

}  // namespace

void validate_state(const ParityGame& g, const SolveSnapshot& snap, ValidationReport& report,
                    bool check_cycles) {
    const PromotionFunction& r = snap.rc->r;
    const PromotionFunction* u = snap.u;
    const int n = g.size();
    report.states_checked++;
    std::string ctx = std::string(point_name(snap.point)) + " p=" + snap.p.str();

    // Values never drop below the position's own priority.
    for (Pos v = 0; v < n; ++v) {
        ExtPriority q = r.value(v);
        if (!q.is_bot() && !dominates_or_equal(q, ExtPriority::nat(g.priority(v))))
            report.add(ctx + ": r-value below priority at " +
                       std::to_string(g.original_id(v)));
        if (u) {
            q = u->value(v);
            if (!q.is_bot() && !dominates_or_equal(q, ExtPriority::nat(g.priority(v))))
                report.add(ctx + ": u-value below priority at " +
                           std::to_string(g.original_id(v)));
        }
    }

    if (snap.kind == SolverKind::recursive_promotion) {
        if (r.domain() != g.all_positions()) report.add(ctx + ": r is not total");
    }

    if (u) {
        // Domain partition.
        if (r.domain().intersects(u->domain()))
            report.add(ctx + ": r and u domains overlap");
        if ((r.domain() | u->domain()) != g.all_positions())
            report.add(ctx + ": r and u domains do not cover the game");
        // u never holds the odd top; the even top only under an even-top caller.
        if (!u->top_bucket(1).empty()) report.add(ctx + ": u maps into top1");
        if (!(snap.c == ExtPriority::top(0)) && !u->top_bucket(0).empty())
            report.add(ctx + ": u maps into top0 under a numeric caller priority");
        if (snap.p.is_nat()) {
            const int64_t p = snap.p.nat_value();
            // No u-values below p.
            for (Pos v = 0; v < n; ++v) {
                ExtPriority q = u->value(v);
                if (q.is_nat() && q.nat_value() < p)
                    report.add(ctx + ": u-value below the current priority at " +
                               std::to_string(g.original_id(v)));
            }
            // No r/u values strictly between p and the caller priority.
            auto in_gap = [&](ExtPriority q) {
                if (!q.is_nat() || q.nat_value() <= p) return false;
                return snap.c.is_top() || q.nat_value() < snap.c.nat_value();
            };
            for (Pos v = 0; v < n; ++v)
                if (in_gap(r.value(v)) || in_gap(u->value(v)))
                    report.add(ctx + ": value inside the precision gap at " +
                               std::to_string(g.original_id(v)));
        }
    }

    // Per-side threshold checks over r's occupied values.
    for (int a : {0, 1}) {
        std::vector<ExtPriority> thresholds;
        for (int64_t q : r.occupied_values())
            if ((q & 1) == a) thresholds.push_back(ExtPriority::nat(q));
        if (!r.top_bucket(a).empty()) thresholds.push_back(ExtPriority::top(a));

        for (ExtPriority q : thresholds) {
            PositionSet H = hside_ge(r, u, a, q);
            PositionSet esc = escape(g, 1 - a, H);

            // Escape positions carry a-parity priorities at or above the
            // threshold (for the top threshold: no escapes at all).  The
            // bounded-recursion solver keeps this only inside the current
            // level's own subgame (checked below), not across side sets:
            // its maximization returns survivors to native priorities, so
            // the material above the working level is plain unprocessed
            // positions with no escape guarantees.
            if (snap.kind != SolverKind::bounded_recursion) {
                esc.for_each([&](int v) {
                    if (q.is_top()) {
                        report.add(ctx + ": top side set of player " + std::to_string(a) +
                                   " has escape " + std::to_string(g.original_id(v)));
                        return;
                    }
                    int pr = g.priority(v);
                    if (pr % 2 != a || pr < q.nat_value())
                        report.add(ctx + ": escape " + std::to_string(g.original_id(v)) +
                                   " of side " + std::to_string(a) + " threshold " + q.str() +
                                   " has priority " + std::to_string(pr));
                });
            }

            // Witness containment: an a-owned r-member of H with some move
            // into H must have its witness inside H.
            H.for_each([&](int v) {
                if (g.owner(v) != a) return;
                ExtPriority rv = r.value(v);
                if (rv.is_bot() || rv.parity() != a || !dominates_or_equal(rv, q))
                    return;  // u-member or other-parity overlay
                bool can_stay = false;
                for (Pos w : g.successors(v))
                    if (H.test(w)) {
                        can_stay = true;
                        break;
                    }
                if (!can_stay) return;
                const Strategy& wit = snap.rc->wit[a];
                if (!wit.has(v) || !H.test(wit.get(v)))
                    report.add(ctx + ": witness of " + std::to_string(g.original_id(v)) +
                               " leaves side " + std::to_string(a) + " threshold " + q.str());
            });

            // Plays that stay inside the r-part of the side set forever must
            // be won by a.
            if (check_cycles) {
                PositionSet Hr = r.side_ge(a, q);
                std::string why;
                if (!check_quasi_dominion(g, Hr, a, snap.rc->wit[a], &why))
                    report.add(ctx + ": side " + std::to_string(a) + " threshold " + q.str() +
                               " " + describe(g, Hr) + ": " + why);
            }
        }
    }

    // Bounded recursion only: inside the current level's subgame, the
    // positions the opponent could use to leave the level's region all
    // carry the level's priority (the region is the attractor of those
    // positions, so anything else reachable on the way out would mean the
    // attraction or the survivor reset went wrong).
    if (snap.kind == SolverKind::bounded_recursion && snap.p.is_nat()) {
        const int a = snap.p.parity();
        PositionSet R = r.members_at(snap.p);
        PositionSet mask = local_area(r, snap.p);
        R.for_each([&](int v) {
            bool esc;
            if (g.owner(v) == a) {
                esc = true;
                for (Pos w : g.successors(v))
                    if (mask.test(w) && R.test(w)) {
                        esc = false;
                        break;
                    }
            } else {
                esc = false;
                for (Pos w : g.successors(v))
                    if (mask.test(w) && !R.test(w)) {
                        esc = true;
                        break;
                    }
            }
            if (esc && g.priority(v) != snap.p.nat_value())
                report.add(ctx + ": subgame escape " + std::to_string(g.original_id(v)) +
                           " of the level-" + snap.p.str() + " region has priority " +
                           std::to_string(g.priority(v)));
        });
    }

    // Hybrid only: u-positions are never escape positions of any side set
    // thresholded at or above the current priority.
    if (u && snap.kind == SolverKind::hybrid && snap.p.is_nat()) {
        for (int a : {0, 1}) {
            std::vector<ExtPriority> thresholds;
            for (int64_t q : r.occupied_values())
                if ((q & 1) == a && q >= snap.p.nat_value())
                    thresholds.push_back(ExtPriority::nat(q));
            if (!r.top_bucket(a).empty()) thresholds.push_back(ExtPriority::top(a));
            for (ExtPriority q : thresholds) {
                PositionSet H = hside_ge(r, u, a, q);
                PositionSet esc = escape(g, 1 - a, H);
                if (esc.intersects(u->domain()))
                    report.add(ctx + ": u-position is an escape of side " +
                               std::to_string(a) + " threshold " + q.str());
            }
        }
    }
}

void StrictValidator::on_state(const ParityGame& g, const SolveSnapshot& snap) {
    validate_state(g, snap, report, check_cycles_);
}

void StrictValidator::on_top_growth(const ParityGame& g, const SolveSnapshot& snap,
                                    int player) {
    report.dominion_checks++;
    std::string why;
    if (!check_dominion(g, snap.rc->r.top_bucket(player), player, snap.rc->wit[player],
                        &why))
        report.add("top bucket of player " + std::to_string(player) +
                   " fails the dominion check: " + why);
}

void enumerate_small_games(int max_n, int max_prio, int max_deg,
                           const std::function<void(const ParityGame&)>& f) {
    for (int n = 1; n <= max_n; ++n) {
        // Enumerate nonempty successor sets of size <= max_deg as bitmasks.
        std::vector<std::vector<int64_t>> succ_sets;
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (std::popcount(unsigned(mask)) > max_deg) continue;
            std::vector<int64_t> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) s.push_back(i);
            succ_sets.push_back(std::move(s));
        }
        const size_t per_pos = size_t(2) * (max_prio + 1) * succ_sets.size();
        size_t total = 1;
        for (int i = 0; i < n; ++i) total *= per_pos;

        std::vector<PositionSpec> specs(n);
        for (size_t code = 0; code < total; ++code) {
            size_t rest = code;
            for (int v = 0; v < n; ++v) {
                size_t c = rest % per_pos;
                rest /= per_pos;
                specs[v].id = v;
                specs[v].owner = int(c % 2);
                c /= 2;
                specs[v].priority = int(c % (max_prio + 1));
                c /= (max_prio + 1);
                specs[v].successors = succ_sets[c];
            }
            f(ParityGame::from_specs(specs));
        }
    }
}

}  // namespace pariton
