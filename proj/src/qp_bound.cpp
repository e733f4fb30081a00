#include "pariton/qp_bound.hpp"

#include <algorithm>
#include <cassert>

namespace pariton {

BigNat::BigNat(uint64_t v) {
    limb_.push_back(uint32_t(v));
    limb_.push_back(uint32_t(v >> 32));
    trim();
}

void BigNat::trim() {
    while (limb_.size() > 1 && limb_.back() == 0) limb_.pop_back();
}

void BigNat::mul_u32(uint32_t m) {
    uint64_t carry = 0;
    for (auto& l : limb_) {
        uint64_t x = uint64_t(l) * m + carry;
        l = uint32_t(x);
        carry = x >> 32;
    }
    if (carry) limb_.push_back(uint32_t(carry));
}

void BigNat::div_u32_exact(uint32_t d) {
    assert(d != 0);
    uint64_t rem = 0;
    for (size_t i = limb_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limb_[i];
        limb_[i] = uint32_t(cur / d);
        rem = cur % d;
    }
    assert(rem == 0 && "division was expected to be exact");
    trim();
}

void BigNat::dec() {
    assert(!(limb_.size() == 1 && limb_[0] == 0));
    for (auto& l : limb_) {
        if (l-- != 0) break;  // no borrow once a limb was nonzero
    }
    trim();
}

bool BigNat::fits_u64() const { return limb_.size() <= 2; }

uint64_t BigNat::as_u64() const {
    assert(fits_u64());
    uint64_t v = limb_[0];
    if (limb_.size() == 2) v |= uint64_t(limb_[1]) << 32;
    return v;
}

int BigNat::cmp_u64(uint64_t v) const {
    if (!fits_u64()) return 1;
    uint64_t x = as_u64();
    return x < v ? -1 : x > v ? 1 : 0;
}

std::string BigNat::to_string() const {
    BigNat t = *this;
    std::string digits;
    while (true) {
        // divide by 10, collecting the remainder as the next digit
        uint64_t rem = 0;
        bool zero = true;
        for (size_t i = t.limb_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | t.limb_[i];
            t.limb_[i] = uint32_t(cur / 10);
            rem = cur % 10;
            if (t.limb_[i]) zero = false;
        }
        digits.push_back(char('0' + rem));
        if (zero) break;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigNat qp_call_bound(int64_t n, int64_t h) {
    assert(n >= 1 && h >= 0);
    int64_t l = 1;
    for (int64_t x = n; x >= 2; x >>= 1) l += 2;  // 2*floor(log2 n) + 1
    assert(n <= int64_t(UINT32_MAX) && h + l <= int64_t(UINT32_MAX));

    // C(h+l, l) built incrementally: c_i = c_{i-1} * (h+i) / i stays integral.
    BigNat c(1);
    for (int64_t i = 1; i <= l; ++i) {
        c.mul_u32(uint32_t(h + i));
        c.div_u32_exact(uint32_t(i));
    }
    for (int64_t i = 0; i < l; ++i) c.mul_u32(uint32_t(n));
    c.dec();
    return c;
}

}  // namespace pariton
