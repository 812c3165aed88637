#pragma once
// rational.hpp - exact reduced fractions and dyadic fractions a/2^k in (0,1).

#include "vtree/bigint.hpp"

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

namespace vtree {

// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(int64_t num, int64_t den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    static Rational parse(std::string_view s);   // "p/q", "p"

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == BigInt(1); }
    int sign() const noexcept { return num_.sign(); }
    bool in_unit_interval() const;                // 0 < x < 1

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;
    Rational reciprocal() const;                  // throws on zero
    Rational abs() const;

    BigInt floor() const;

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    std::string to_string() const;                // "p/q"
    double to_double() const;

private:
    BigInt num_, den_;
    void normalize();
};

// Odd a, 0 < a < 2^k: the dyadic fraction a/2^k in (0,1).
class Dyadic {
public:
    Dyadic() : a_(1), k_(1) {}                    // 1/2
    Dyadic(BigInt a, uint64_t k);
    static Dyadic from_rational(const Rational& r);  // throws if not dyadic in (0,1)
    static Dyadic parse(std::string_view s);      // "a/2^k", ".bits"

    const BigInt& numerator() const noexcept { return a_; }
    uint64_t exponent() const noexcept { return k_; }

    Rational to_rational() const;
    // this +/- 2^-m, exact; throws if the result leaves (0,1)
    Dyadic add_pow2(int sign, uint64_t m) const;

    std::strong_ordering operator<=>(const Dyadic& o) const;
    bool operator==(const Dyadic& o) const = default;

    std::string to_string() const;                // "a/2^k"
    std::string to_binary_string() const;         // ".b1b2..bk"
    double to_double() const;

private:
    BigInt a_;
    uint64_t k_;
};

} // namespace vtree
