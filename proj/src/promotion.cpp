#include "pariton/promotion.hpp"

#include <cassert>

namespace pariton {

PromotionFunction::PromotionFunction(int n, int value_cap, const ParityGame* g)
    : n_(n),
      cap_(value_cap),
      g_(g),
      val_(n),
      dom_(n),
      side_{PositionSet(n), PositionSet(n)},
      top_{PositionSet(n), PositionSet(n)},
      occ_(value_cap + 1, 0) {}

PromotionFunction PromotionFunction::natives(const ParityGame& g) {
    PromotionFunction f(g.size(), g.max_priority(), &g);
    for (Pos v = 0; v < g.size(); ++v) f.assign(v, ExtPriority::nat(g.priority(v)));
    return f;
}

void PromotionFunction::assign(Pos v, ExtPriority q) {
    assert(!q.is_bot());
    assert(!g_ || ext_leq(ExtPriority::nat(g_->priority(v)), q));
    if (has(v)) erase(v);
    val_[v] = q;
    dom_.set(v);
    side_[q.parity()].set(v);
    if (q.is_top())
        top_[q.parity()].set(v);
    else {
        assert(q.nat_value() <= cap_);
        occ_[q.nat_value()]++;
    }
}

void PromotionFunction::erase(Pos v) {
    ExtPriority q = val_[v];
    if (q.is_bot()) return;
    dom_.reset(v);
    side_[q.parity()].reset(v);
    if (q.is_top())
        top_[q.parity()].reset(v);
    else
        occ_[q.nat_value()]--;
    val_[v] = ExtPriority::bot();
}

bool PromotionFunction::any_at(ExtPriority q) const {
    if (q.is_top()) return !top_[q.parity()].empty();
    return occ_[q.nat_value()] != 0;
}

PositionSet PromotionFunction::members_at(ExtPriority q) const {
    if (q.is_top()) return top_[q.parity()];
    PositionSet r(n_);
    if (occ_[q.nat_value()] == 0) return r;
    for (Pos v = 0; v < n_; ++v)
        if (val_[v] == q) r.set(v);
    return r;
}

PositionSet PromotionFunction::domain_le(int64_t p) const {
    PositionSet r(n_);
    for (Pos v = 0; v < n_; ++v)
        if (val_[v].is_nat() && val_[v].nat_value() <= p) r.set(v);
    return r;
}

PositionSet PromotionFunction::domain_gt(int64_t p) const {
    PositionSet r(n_);
    for (Pos v = 0; v < n_; ++v)
        if (!val_[v].is_bot() && (val_[v].is_top() || val_[v].nat_value() > p)) r.set(v);
    return r;
}

PositionSet PromotionFunction::side_ge(int a, ExtPriority q) const {
    assert(!q.is_bot() && q.parity() == a);
    if (q.is_top()) return top_[a];
    PositionSet r = top_[a];
    for (Pos v = 0; v < n_; ++v)
        if (val_[v].is_nat() && val_[v].parity() == a && val_[v].nat_value() >= q.nat_value())
            r.set(v);
    return r;
}

ExtPriority PromotionFunction::max_value_lt(int64_t p) const {
    for (int64_t q = std::min(p - 1, cap_); q >= 0; --q)
        if (occ_[q]) return ExtPriority::nat(q);
    return ExtPriority::bot();
}

ExtPriority PromotionFunction::max_value_le(int64_t p) const {
    return max_value_lt(p + 1);
}

std::vector<int64_t> PromotionFunction::occupied_values() const {
    std::vector<int64_t> r;
    for (int64_t q = 0; q <= cap_; ++q)
        if (occ_[q]) r.push_back(q);
    return r;
}

}  // namespace pariton
