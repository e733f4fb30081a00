#include "pariton/region_state.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <vector>

namespace pariton {

PositionSet hside(const PromotionFunction& r, const PromotionFunction* u, int a) {
    PositionSet s = r.side(a);
    if (u) s |= u->side(1 - a);
    return s;
}

PositionSet hside_ge(const PromotionFunction& r, const PromotionFunction* u, int a,
                     ExtPriority q) {
    const int n = r.universe();
    PositionSet s(n);
    for (Pos v = 0; v < n; ++v) {
        ExtPriority m = r.value(v);
        if (!m.is_bot() && m.parity() == a && dominates_or_equal(m, q)) {
            s.set(v);
            continue;
        }
        if (u) {
            m = u->value(v);
            if (!m.is_bot() && m.parity() == 1 - a && dominates_or_equal(m, q)) s.set(v);
        }
    }
    return s;
}

PositionSet local_area(const PromotionFunction& r, ExtPriority p) {
    if (p.is_bot()) return PositionSet(r.universe());
    assert(p.is_nat());
    return r.domain_le(p.nat_value());
}

PositionSet subgame_mask(const ParityGame& g, const PromotionFunction& r,
                         const PromotionFunction* u, ExtPriority p) {
    assert(p.is_nat());
    PositionSet m = g.all_positions();
    m -= r.domain_gt(p.nat_value());
    if (u) m -= u->domain();
    return m;
}

bool is_open(const ParityGame& g, const PromotionFunction& r, const PromotionFunction* u,
             ExtPriority p) {
    assert(p.is_nat());
    PositionSet R = r.members_at(p);
    if (R.empty()) return true;
    const int a = p.parity();
    PositionSet H = hside_ge(r, u, a, p);
    PositionSet esc = escape(g, 1 - a, H);
    return R.intersects(esc);
}

bool is_side_maximal(const ParityGame& g, const PromotionFunction& r,
                     const PromotionFunction* u, ExtPriority p, int beta, bool wide_pool) {
    assert(p.is_nat());
    PositionSet pool = local_area(r, p);
    if (wide_pool && u) pool |= u->members_at(p);
    PositionSet base = hside(r, u, beta) - pool;
    PositionSet closure = attractor(g, beta, base, &pool);
    return closure == base;
}

bool is_maximal(const ParityGame& g, const PromotionFunction& r, const PromotionFunction* u,
                ExtPriority p) {
    const int a = p.parity();
    return is_side_maximal(g, r, u, p, a, false) && is_side_maximal(g, r, u, p, 1 - a, false);
}

bool is_strongly_maximal(const ParityGame& g, const PromotionFunction& r,
                         const PromotionFunction* u, ExtPriority p) {
    const int a = p.parity();
    return is_side_maximal(g, r, u, p, a, false) && is_side_maximal(g, r, u, p, 1 - a, true);
}

bool is_promotable(const ParityGame& g, const PromotionFunction& r,
                   const PromotionFunction* u, ExtPriority p) {
    if (is_open(g, r, u, p)) return false;
    const int a = p.parity();
    if (!is_side_maximal(g, r, u, p, 1 - a, false)) return false;
    // The region itself must be attractor-closed for its own player within L.
    PositionSet R = r.members_at(p);
    PositionSet pool = local_area(r, p);
    return attractor(g, a, R, &pool) == R;
}

BepResult best_escape_priorities(const ParityGame& g, const PromotionFunction& r,
                                 const PromotionFunction* u, const PositionSet& R,
                                 int region_player, ExtPriority p) {
    int a = region_player;
    // A candidate is useful only when it outranks the region's own level:
    // the alpha top, or a nat of parity `want` strictly above p.
    auto useful = [&](ExtPriority m, int want) {
        if (m.is_top()) return m == ExtPriority::top(want);
        return m.parity() == want && (!p.is_nat() || m.nat_value() > p.nat_value());
    };
    PositionSet esc = escape(g, 1 - a, R);
    ExtPriority vr = ExtPriority::bot(), vu = ExtPriority::bot();
    bool have_r = false, have_u = false;
    esc.for_each([&](int v) {
        for (Pos w : g.successors(v)) {
            if (R.test(w)) continue;
            if (r.has(w)) {
                ExtPriority m = r.value(w);
                if (useful(m, a)) {
                    vr = have_r ? ext_min(vr, m) : m;
                    have_r = true;
                }
            }
            if (u && u->has(w)) {
                ExtPriority m = u->value(w);
                if (useful(m, 1 - a)) {
                    vu = have_u ? ext_min(vu, m) : m;
                    have_u = true;
                }
            }
        }
    });
    BepResult res;
    res.from_r = have_r ? vr : ExtPriority::top(a);
    res.from_u = have_u ? vu : ExtPriority::top(a);
    return res;
}

bool state_less(const PositionSet& L1, ExtPriority p1, const PositionSet& L2,
                ExtPriority p2) {
    if (L1.is_proper_subset_of(L2)) return true;
    return L1 == L2 && ext_less(p1, p2);
}

namespace {

void dump_bucket(std::ostream& out, const ParityGame& g, const PositionSet& members,
                 const std::string& label, const char* map) {
    if (members.empty()) return;
    out << label << ": {";
    bool first = true;
    members.for_each([&](int v) {
        if (!first) out << ' ';
        out << g.original_id(v);
        first = false;
    });
    out << "} [" << map << "]\n";
}

}  // namespace

void dump_state(std::ostream& out, const ParityGame& g, const PromotionFunction& r,
                const PromotionFunction* u) {
    for (int a : {0, 1}) {
        dump_bucket(out, g, r.top_bucket(a), a == 0 ? "top0" : "top1", "r");
        if (u) dump_bucket(out, g, u->top_bucket(a), a == 0 ? "top0" : "top1", "u");
    }
    std::vector<int64_t> vals = r.occupied_values();
    if (u) {
        for (int64_t q : u->occupied_values()) vals.push_back(q);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    for (auto it = vals.rbegin(); it != vals.rend(); ++it) {
        ExtPriority q = ExtPriority::nat(*it);
        dump_bucket(out, g, r.members_at(q), std::to_string(*it), "r");
        if (u) dump_bucket(out, g, u->members_at(q), std::to_string(*it), "u");
    }
}

void refresh_witness(const ParityGame& g, RegionContext& rc, Pos v,
                     const PromotionFunction* u) {
    ExtPriority mine = rc.r.value(v);
    if (mine.is_bot()) return;
    const int a = mine.parity();
    if (g.owner(v) != a) return;
    Strategy& wit = rc.wit[a];

    // Candidate value of a successor, bot when it is not on side a.  The
    // flag reports whether the value came from u (inverted parity).
    auto cand = [&](Pos w, bool* from_u) {
        ExtPriority t = rc.r.value(w);
        if (!t.is_bot() && t.parity() == a) {
            *from_u = false;
            return t;
        }
        if (u) {
            t = u->value(w);
            if (!t.is_bot() && t.parity() == 1 - a) {
                *from_u = true;
                return t;
            }
        }
        return ExtPriority::bot();
    };

    bool any = false, any_top = false;
    int64_t best_nat = -1;
    for (Pos w : g.successors(v)) {
        bool fu = false;
        ExtPriority t = cand(w, &fu);
        if (t.is_bot()) continue;
        any = true;
        if (t.is_top())
            any_top = true;
        else
            best_nat = std::max(best_nat, t.nat_value());
    }
    if (!any) {
        wit.clear(v);
        return;
    }

    if (wit.has(v)) {
        Pos cur = wit.get(v);
        bool fu = false;
        ExtPriority t = g.has_move(v, cur) ? cand(cur, &fu) : ExtPriority::bot();
        // Acceptable when at least min(r(v), best candidate): any top always
        // is; a numeric target needs to reach r(v) or, when no candidate is
        // a top, the best numeric candidate.
        if (!t.is_bot() &&
            (t.is_top() || (mine.is_nat() && t.nat_value() >= mine.nat_value()) ||
             (!any_top && t.nat_value() >= best_nat)))
            return;
    }

    Pos best = -1;
    int bcls = 0;  // 3 = r-top, 2 = u-top, 1 = numeric
    int64_t bval = -1;
    bool bnative = false;
    int bpr = -1;
    for (Pos w : g.successors(v)) {
        bool fu = false;
        ExtPriority t = cand(w, &fu);
        if (t.is_bot()) continue;
        const int cls = t.is_top() ? (fu ? 2 : 3) : 1;
        if (cls < bcls) continue;
        if (cls == bcls) {
            if (cls != 1) continue;  // first top of a class wins
            bool native = !fu && t.nat_value() == g.priority(w);
            if (t.nat_value() < bval) continue;
            if (t.nat_value() == bval) {
                if (bnative && !native) continue;
                if (bnative == native && g.priority(w) <= bpr) continue;
            }
            best = w;
            bval = t.nat_value();
            bnative = native;
            bpr = g.priority(w);
            continue;
        }
        bcls = cls;
        best = w;
        if (cls == 1) {
            bval = t.nat_value();
            bnative = !fu && t.nat_value() == g.priority(w);
            bpr = g.priority(w);
        }
    }
    wit.set(v, best);
}

void repair_witnesses(const ParityGame& g, RegionContext& rc, const PromotionFunction* u) {
    for (Pos v = 0; v < g.size(); ++v) refresh_witness(g, rc, v, u);
}

}  // namespace pariton
