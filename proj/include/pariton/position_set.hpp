#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace pariton {

/**
 * Fixed-universe bit set over positions 0..n-1.
 *
 * All binary operations require both operands to share the same universe
 * size.  Iteration order is always ascending position index, which keeps
 * every fixpoint computation in the solvers deterministic.
 */
class PositionSet {
public:
    PositionSet() : n_(0) {}
    explicit PositionSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static PositionSet full(int n) {
        PositionSet s(n);
        for (auto& w : s.w_) w = ~uint64_t(0);
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    /** Smallest member, or -1 when empty. */
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    /** Smallest member > v, or -1. */
    int next(int v) const {
        ++v;
        if (v >= n_) return -1;
        size_t i = size_t(v) >> 6;
        uint64_t w = w_[i] & (~uint64_t(0) << (v & 63));
        while (true) {
            if (w) return int(i * 64 + std::countr_zero(w));
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v != -1; v = next(v)) f(v);
    }

    PositionSet& operator|=(const PositionSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    PositionSet& operator&=(const PositionSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    PositionSet& operator-=(const PositionSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend PositionSet operator|(PositionSet a, const PositionSet& b) { return a |= b; }
    friend PositionSet operator&(PositionSet a, const PositionSet& b) { return a &= b; }
    friend PositionSet operator-(PositionSet a, const PositionSet& b) { return a -= b; }

    PositionSet complement() const {
        PositionSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const PositionSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const PositionSet& o) const { return !(*this == o); }

    bool is_subset_of(const PositionSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const PositionSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    /** Strict subset comparison used by the solver-state order. */
    bool is_proper_subset_of(const PositionSet& o) const {
        return is_subset_of(o) && *this != o;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace pariton
