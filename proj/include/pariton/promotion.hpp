#pragma once

#include <vector>

#include "pariton/ext_priority.hpp"
#include "pariton/game.hpp"
#include "pariton/position_set.hpp"

namespace pariton {

/**
 * Partial map from positions to extended priorities, with the invariant
 * f(v) >= pr(v) for every mapped position (checked when a game is attached).
 *
 * Derived views maintained incrementally:
 *   - domain set,
 *   - one side set per parity (positions whose value has that parity,
 *     top0 counting as even and top1 as odd),
 *   - the two top buckets,
 *   - a member count per numeric value (for fast occupied-level scans).
 */
class PromotionFunction {
public:
    PromotionFunction() = default;
    PromotionFunction(int n, int value_cap, const ParityGame* g = nullptr);

    /** Total map v -> pr(v): the canonical initial state. */
    static PromotionFunction natives(const ParityGame& g);

    int universe() const { return n_; }
    int value_cap() const { return cap_; }

    bool has(Pos v) const { return !val_[v].is_bot(); }
    ExtPriority value(Pos v) const { return val_[v]; }

    void assign(Pos v, ExtPriority q);
    void erase(Pos v);

    const PositionSet& domain() const { return dom_; }
    /** H_f^a: positions whose value parity is a. */
    const PositionSet& side(int a) const { return side_[a]; }
    const PositionSet& top_bucket(int a) const { return top_[a]; }

    bool any_at(ExtPriority q) const;
    int count_at_nat(int64_t q) const { return occ_[q]; }

    /** f^{-1}(q) as a set (O(n) scan for numeric q). */
    PositionSet members_at(ExtPriority q) const;

    /** dom(f^{(<= p)}) over numeric values only. */
    PositionSet domain_le(int64_t p) const;
    /** dom(f^{(> p)}), tops included. */
    PositionSet domain_gt(int64_t p) const;

    /** H_f^{a,q}: side(a) members with value >= q (q of parity a, or a top). */
    PositionSet side_ge(int a, ExtPriority q) const;

    /** Largest occupied numeric value < p (bot if none). */
    ExtPriority max_value_lt(int64_t p) const;
    /** Largest occupied numeric value <= p (bot if none). */
    ExtPriority max_value_le(int64_t p) const;

    /** Occupied numeric values, ascending. */
    std::vector<int64_t> occupied_values() const;

    bool operator==(const PromotionFunction& o) const {
        return n_ == o.n_ && val_ == o.val_;
    }

private:
    friend bool same_mapping(const PromotionFunction&, const PromotionFunction&);

    int n_ = 0;
    int64_t cap_ = -1;
    const ParityGame* g_ = nullptr;
    std::vector<ExtPriority> val_;  // bot = not in the domain
    PositionSet dom_, side_[2], top_[2];
    std::vector<int32_t> occ_;
};

}  // namespace pariton
