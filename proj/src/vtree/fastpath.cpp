#include "vtree/fastpath.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vtree::fast {

namespace {

// Bits of the address at index n, MSB first, plus the appended 1 and 0-tail.
struct IndexStream {
    uint64_t word;   // address bits in the low `len` positions, plus the final 1
    unsigned len;    // address length + 1

    explicit IndexStream(uint64_t n) {
        unsigned top = 63u - static_cast<unsigned>(std::countl_zero(n));
        // drop the leading 1 of n, append a 1: (v|1)
        word = ((n ^ (1ull << top)) << 1) | 1ull;
        len = top + 1;
    }
    int bit(unsigned i) const {   // 0-tail beyond the end
        return i < len ? static_cast<int>((word >> (len - 1 - i)) & 1ull) : 0;
    }
    bool all_zero_from(unsigned i) const {
        if (i >= len) return true;
        return (word & ((1ull << (len - i)) - 1ull)) == 0;
    }
};

Frac fold_pds(const std::vector<uint64_t>& pds) {
    // convergents with b0 = 0
    int64_t a1 = 1, a = 0;   // A_{-1}, A_0
    int64_t b1 = 0, b = 1;   // B_{-1}, B_0
    for (uint64_t pd : pds) {
        int64_t an = static_cast<int64_t>(pd) * a + a1;
        int64_t bn = static_cast<int64_t>(pd) * b + b1;
        a1 = a; a = an;
        b1 = b; b = bn;
    }
    return {a, b};
}

} // namespace

void decode_index_pds(uint64_t n, std::vector<uint64_t>& pds) {
    pds.clear();
    if (n == 0) throw std::domain_error("decode_index_pds: index must be >= 1");
    IndexStream s(n);
    unsigned pos = 0;
    bool ci = true;
    for (;;) {
        if (ci) {
            if (s.all_zero_from(pos)) break;
            unsigned l = 0;
            while (s.bit(pos) == 0) { ++l; ++pos; }
            ++pos;
            uint64_t b = 1;
            for (unsigned i = 0; i < l; ++i) b = (b << 1) | (s.bit(pos++) ? 0u : 1u);
            pds.push_back(b);
        } else {
            unsigned l = 0;
            while (s.bit(pos) == 1) { ++l; ++pos; }
            ++pos;
            uint64_t b = 1;
            for (unsigned i = 0; i < l; ++i) b = (b << 1) | (s.bit(pos++) ? 1u : 0u);
            pds.push_back(b);
        }
        ci = !ci;
    }
}

Frac v10_value(uint64_t n) {
    thread_local std::vector<uint64_t> pds;
    decode_index_pds(n, pds);
    return fold_pds(pds);
}

Frac v1_value(uint64_t n) {
    if (n == 1) return {1, 1};
    unsigned top = 63u - static_cast<unsigned>(std::countl_zero(n));
    uint64_t first = (n >> (top - 1)) & 1ull;
    // sub-address inside the child subtree, as an index
    uint64_t mask = (1ull << (top - 1)) - 1ull;
    uint64_t sub = (n & mask) | (1ull << (top - 1));
    if (first == 0) return v10_value(sub);
    // complement the sub-address bits
    uint64_t inv = (~sub) & mask;
    Frac f = v10_value(inv | (1ull << (top - 1)));
    return {f.q, f.p};
}

Frac v_value(uint64_t n) {
    if (n == 1) return {0, 1};
    unsigned top = 63u - static_cast<unsigned>(std::countl_zero(n));
    uint64_t first = (n >> (top - 1)) & 1ull;
    uint64_t mask = (1ull << (top - 1)) - 1ull;
    uint64_t sub = (n & mask) | (1ull << (top - 1));
    if (first == 1) return v1_value(sub);
    uint64_t inv = (~sub) & mask;
    Frac f = v1_value(inv | (1ull << (top - 1)));
    return {-f.p, f.q};
}

Frac sb_value(uint64_t n) {
    thread_local std::vector<uint64_t> pds;
    pds.clear();
    IndexStream s(n);
    unsigned pos = 0;
    bool cu = true;
    for (;;) {
        if (cu) {
            if (s.all_zero_from(pos)) break;
            uint64_t b = 1;
            while (s.bit(pos) == 0) { ++b; ++pos; }
            ++pos;
            pds.push_back(b);
        } else {
            uint64_t b = 1;
            while (s.bit(pos) == 1) { ++b; ++pos; }
            ++pos;
            pds.push_back(b);
        }
        cu = !cu;
    }
    return fold_pds(pds);
}

Frac vdc_value(uint64_t n) {
    IndexStream s(n);
    // (v|1)_2 / 2^(|v|+1)
    return {static_cast<int64_t>(s.word), static_cast<int64_t>(1ull << s.len)};
}

double qmf_bar_f64(uint64_t a, unsigned k) {
    // reduce a/2^k
    while (a != 0 && (a & 1ull) == 0) { a >>= 1; --k; }
    if (a == 0 || k == 0 || (a >> k) != 0)
        throw std::domain_error("qmf_bar_f64: input must lie in (0,1)");
    // Euclid for the even CFE
    uint64_t pds[128];
    int m = 0;
    uint64_t p = a, q = 1ull << k;
    // x = p/q in (0,1): expand
    while (p != 0) {
        pds[m++] = q / p;
        uint64_t r = q % p;
        q = p;
        p = r;
    }
    if (m % 2 == 1) {
        if (pds[m - 1] >= 2) { pds[m - 1] -= 1; pds[m++] = 1; }
        else { --m; pds[m - 1] += 1; }
    }
    // value of 0.w for the concatenated codewords w (equals iota_AD after strip)
    double val = 0.0;
    int pos = 0;
    for (int i = 0; i < m; ++i) {
        uint64_t b = pds[i];
        int l = 63 - std::countl_zero(b);
        if (i % 2 == 0) {
            pos += l;                      // zeros
            val += std::ldexp(1.0, -(pos + 1));
            ++pos;                         // separator 1
            for (int j = l - 1; j >= 0; --j) {
                ++pos;
                if (!((b >> j) & 1ull)) val += std::ldexp(1.0, -pos);
            }
        } else {
            for (int t = 0; t < l; ++t) { ++pos; val += std::ldexp(1.0, -pos); }
            ++pos;                         // separator 0
            for (int j = l - 1; j >= 0; --j) {
                ++pos;
                if ((b >> j) & 1ull) val += std::ldexp(1.0, -pos);
            }
        }
    }
    return val;
}

} // namespace vtree::fast
