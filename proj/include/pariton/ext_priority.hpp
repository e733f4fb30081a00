#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace pariton {

/**
 * Priority value extended with a bottom element and two top elements.
 *
 * Ordering: bot < any natural < top0, top1.  top0 counts as an even value,
 * top1 as an odd one.  The two tops are deliberately incomparable: asking
 * which of them is smaller has no meaning in any of the algorithms here,
 * so doing so trips an assertion instead of returning garbage.
 *
 * Encoded in a single int64 so arrays of these stay flat.
 */
class ExtPriority {
public:
    constexpr ExtPriority() : code_(kBot) {}

    static constexpr ExtPriority bot() { return ExtPriority(kBot); }
    static constexpr ExtPriority top(int player) {
        return ExtPriority(player == 0 ? kTop0 : kTop1);
    }
    static constexpr ExtPriority nat(int64_t v) {
        return ExtPriority((assert(v >= 0), v));
    }

    bool is_bot() const { return code_ == kBot; }
    bool is_top() const { return code_ == kTop0 || code_ == kTop1; }
    bool is_nat() const { return code_ >= 0 && code_ < kTop0; }

    int64_t nat_value() const {
        assert(is_nat());
        return code_;
    }

    /** Parity: 0 for even naturals and top0, 1 for odd naturals and top1. */
    int parity() const {
        assert(!is_bot());
        if (code_ == kTop0) return 0;
        if (code_ == kTop1) return 1;
        return static_cast<int>(code_ & 1);
    }

    bool operator==(const ExtPriority& o) const { return code_ == o.code_; }
    bool operator!=(const ExtPriority& o) const { return code_ != o.code_; }

    /** a <= b in the extended order; asserts on {top0,top1} comparisons. */
    friend bool ext_leq(ExtPriority a, ExtPriority b) {
        if (a.code_ == b.code_) return true;
        assert(!(a.is_top() && b.is_top()) && "top0 and top1 are incomparable");
        if (a.is_bot()) return true;
        if (b.is_bot()) return false;
        if (b.is_top()) return true;
        if (a.is_top()) return false;
        return a.code_ <= b.code_;
    }
    friend bool ext_less(ExtPriority a, ExtPriority b) {
        return a != b && ext_leq(a, b);
    }
    friend ExtPriority ext_min(ExtPriority a, ExtPriority b) {
        return ext_leq(a, b) ? a : b;
    }
    friend ExtPriority ext_max(ExtPriority a, ExtPriority b) {
        return ext_leq(a, b) ? b : a;
    }

    std::string str() const {
        if (code_ == kBot) return "bot";
        if (code_ == kTop0) return "top0";
        if (code_ == kTop1) return "top1";
        return std::to_string(code_);
    }

    /** Raw code, usable as a stable sort/hash key (never compare across tops). */
    int64_t code() const { return code_; }

private:
    explicit constexpr ExtPriority(int64_t code) : code_(code) {}

    static constexpr int64_t kBot = -1;
    static constexpr int64_t kTop0 = INT64_MAX - 1;
    static constexpr int64_t kTop1 = INT64_MAX;

    int64_t code_;
};

}  // namespace pariton
