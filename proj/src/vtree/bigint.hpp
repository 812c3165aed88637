#pragma once
// bigint.hpp - arbitrary-precision signed integer, sign + magnitude.
//
// Base 2^32 limbs, little-endian. Sized for this project: values stay in
// the hundreds-of-bits range, so schoolbook multiplication and shift-based
// long division are plenty. No silent overflow anywhere.

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vtree {

struct DivMod;

class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    static BigInt from_uint64(uint64_t v);
    static BigInt pow2(uint64_t k);
    static BigInt parse(std::string_view s);   // decimal, optional leading '-'

    bool is_zero() const noexcept { return mag_.empty(); }
    bool is_negative() const noexcept { return neg_; }
    bool is_odd() const noexcept { return !mag_.empty() && (mag_[0] & 1u); }
    int sign() const noexcept { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    // Number of bits in |x|; 0 for zero.
    uint64_t bit_length() const noexcept;
    // Bit i of |x| (i = 0 is the least significant).
    bool bit(uint64_t i) const noexcept;
    uint64_t trailing_zeros() const;           // throws on zero

    BigInt abs() const;
    BigInt negated() const;
    BigInt operator-() const { return negated(); }

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator<<(uint64_t k) const;
    BigInt operator>>(uint64_t k) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated division (C semantics); divisor must be nonzero.
    DivMod divmod(const BigInt& d) const;
    // Floor division: quotient rounded toward -infinity.
    DivMod floor_divmod(const BigInt& d) const;
    BigInt operator/(const BigInt& d) const;
    BigInt operator%(const BigInt& d) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

    std::strong_ordering operator<=>(const BigInt& o) const noexcept;
    bool operator==(const BigInt& o) const noexcept = default;

    std::string to_string() const;              // decimal
    double to_double() const;
    bool fits_uint64() const noexcept;
    uint64_t to_uint64() const;                 // throws if out of range
    bool fits_int64() const noexcept;
    int64_t to_int64() const;

    // True iff |x| is a power of two (x > 0).
    bool is_pow2() const noexcept;

private:
    std::vector<uint32_t> mag_;   // no leading zero limbs; empty == 0
    bool neg_ = false;            // zero is never negative

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) noexcept;
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

struct DivMod {
    BigInt quot, rem;
};

inline BigInt BigInt::operator/(const BigInt& d) const { return divmod(d).quot; }
inline BigInt BigInt::operator%(const BigInt& d) const { return divmod(d).rem; }

inline BigInt operator+(int64_t a, const BigInt& b) { return BigInt(a) + b; }
inline BigInt operator*(int64_t a, const BigInt& b) { return BigInt(a) * b; }

} // namespace vtree
