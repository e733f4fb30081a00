#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pariton {

/**
 * Unsigned big integer, just large enough for the recursion-bound formula:
 * multiply/divide by machine words, subtract one, compare with uint64,
 * decimal printing.  Little-endian base-2^32 limbs.
 */
class BigNat {
public:
    BigNat() : limb_{0} {}
    explicit BigNat(uint64_t v);

    void mul_u32(uint32_t m);
    /** Exact division (asserts remainder 0). */
    void div_u32_exact(uint32_t d);
    /** Subtract 1 (asserts nonzero). */
    void dec();

    bool fits_u64() const;
    uint64_t as_u64() const;  // asserts fits_u64
    /** -1, 0, 1 comparing against a uint64. */
    int cmp_u64(uint64_t v) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<uint32_t> limb_;
};

/**
 * Upper bound on non-trivial recursive solver activations for a game with
 * n positions and h distinct priorities:
 *     l = 2*floor(log2 n) + 1,   bound = n^l * C(h+l, l) - 1.
 */
BigNat qp_call_bound(int64_t n, int64_t h);

}  // namespace pariton
