#include "vtree/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace vtree {

namespace {
constexpr uint64_t LIMB_BASE = 1ull << 32;
}

BigInt::BigInt(int64_t v) {
    neg_ = v < 0;
    // two's-complement negate via unsigned math, safe for INT64_MIN
    uint64_t m = neg_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    if (m) mag_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
    trim();
}

BigInt BigInt::from_uint64(uint64_t v) {
    BigInt r;
    if (v) r.mag_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) r.mag_.push_back(static_cast<uint32_t>(v >> 32));
    r.trim();
    return r;
}

BigInt BigInt::pow2(uint64_t k) {
    BigInt r;
    r.mag_.assign(k / 32 + 1, 0);
    r.mag_.back() = 1u << (k % 32);
    return r;
}

BigInt BigInt::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt::parse: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) throw std::invalid_argument("BigInt::parse: no digits");
    BigInt r;
    // chunks of 9 decimal digits
    for (; i < s.size();) {
        size_t take = std::min<size_t>(9, s.size() - i);
        uint32_t chunk = 0, scale = 1;
        for (size_t j = 0; j < take; ++j) {
            char c = s[i + j];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt::parse: bad digit");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            scale *= 10;
        }
        r = r * BigInt(static_cast<int64_t>(scale)) + BigInt(static_cast<int64_t>(chunk));
        i += take;
    }
    r.neg_ = neg && !r.is_zero();
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

uint64_t BigInt::bit_length() const noexcept {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    uint64_t bits = (mag_.size() - 1) * 32ull;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

bool BigInt::bit(uint64_t i) const noexcept {
    size_t limb = i / 32;
    if (limb >= mag_.size()) return false;
    return (mag_[limb] >> (i % 32)) & 1u;
}

uint64_t BigInt::trailing_zeros() const {
    if (is_zero()) throw std::domain_error("BigInt::trailing_zeros: zero");
    uint64_t tz = 0;
    size_t i = 0;
    while (mag_[i] == 0) { tz += 32; ++i; }
    uint32_t w = mag_[i];
    while (!(w & 1u)) { ++tz; w >>= 1; }
    return tz;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt BigInt::negated() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r.back() = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (s < 0) { s += static_cast<int64_t>(LIMB_BASE); borrow = 1; } else borrow = 0;
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t s = static_cast<uint64_t>(r[k]) + carry;
            r[k] = static_cast<uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.mag_ = sub_mag(mag_, o.mag_); r.neg_ = neg_; }
        else       { r.mag_ = sub_mag(o.mag_, mag_); r.neg_ = o.neg_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + o.negated(); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.neg_ = !r.mag_.empty() && (neg_ != o.neg_);
    return r;
}

BigInt BigInt::operator<<(uint64_t k) const {
    if (is_zero() || k == 0) return *this;
    size_t limbs = k / 32, bits = k % 32;
    BigInt r;
    r.mag_.assign(mag_.size() + limbs + 1, 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(mag_[i]) << bits;
        r.mag_[i + limbs] |= static_cast<uint32_t>(v);
        r.mag_[i + limbs + 1] |= static_cast<uint32_t>(v >> 32);
    }
    r.neg_ = neg_;
    r.trim();
    return r;
}

BigInt BigInt::operator>>(uint64_t k) const {
    // arithmetic shift on magnitude; only used on nonnegative values here
    size_t limbs = k / 32, bits = k % 32;
    if (limbs >= mag_.size()) return BigInt();
    BigInt r;
    r.mag_.assign(mag_.size() - limbs, 0);
    for (size_t i = 0; i < r.mag_.size(); ++i) {
        uint64_t v = mag_[i + limbs] >> bits;
        if (bits && i + limbs + 1 < mag_.size())
            v |= static_cast<uint64_t>(mag_[i + limbs + 1]) << (32 - bits);
        r.mag_[i] = static_cast<uint32_t>(v);
    }
    r.neg_ = neg_;
    r.trim();
    return r;
}

DivMod BigInt::divmod(const BigInt& d) const {
    if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(mag_, d.mag_);
    if (c < 0) return {BigInt(), *this};

    // single-limb fast path
    if (d.mag_.size() == 1) {
        uint64_t dv = d.mag_[0];
        std::vector<uint32_t> q(mag_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag_[i];
            q[i] = static_cast<uint32_t>(cur / dv);
            rem = cur % dv;
        }
        BigInt quot, rest;
        quot.mag_ = std::move(q);
        quot.trim();
        rest = BigInt::from_uint64(rem);
        quot.neg_ = !quot.is_zero() && (neg_ != d.neg_);
        rest.neg_ = !rest.is_zero() && neg_;
        return {quot, rest};
    }

    // restoring long division, one bit at a time
    uint64_t nbits = bit_length();
    BigInt quot, rem;
    quot.mag_.assign(mag_.size(), 0);
    rem.mag_.reserve(d.mag_.size() + 1);
    for (uint64_t i = nbits; i-- > 0;) {
        // rem = rem*2 + bit(i)
        uint32_t carry = bit(i) ? 1u : 0u;
        for (size_t j = 0; j < rem.mag_.size(); ++j) {
            uint64_t v = (static_cast<uint64_t>(rem.mag_[j]) << 1) | carry;
            rem.mag_[j] = static_cast<uint32_t>(v);
            carry = static_cast<uint32_t>(v >> 32);
        }
        if (carry) rem.mag_.push_back(carry);
        if (cmp_mag(rem.mag_, d.mag_) >= 0) {
            rem.mag_ = sub_mag(rem.mag_, d.mag_);
            quot.mag_[i / 32] |= 1u << (i % 32);
        }
    }
    quot.trim();
    rem.trim();
    quot.neg_ = !quot.is_zero() && (neg_ != d.neg_);
    rem.neg_ = !rem.is_zero() && neg_;
    return {quot, rem};
}

DivMod BigInt::floor_divmod(const BigInt& d) const {
    DivMod t = divmod(d);
    if (!t.rem.is_zero() && (neg_ != d.neg_)) {
        t.quot = t.quot - BigInt(1);
        t.rem = t.rem + d;
    }
    return t;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    uint64_t shift = std::min(x.trailing_zeros(), y.trailing_zeros());
    x = x >> x.trailing_zeros();
    do {
        y = y >> y.trailing_zeros();
        if (x > y) std::swap(x, y);
        y = y - x;
    } while (!y.is_zero());
    return x << shift;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const noexcept {
    if (neg_ != o.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(mag_, o.mag_);
    if (neg_) c = -c;
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> chunks;  // base 10^9, little-endian
    BigInt t = abs();
    BigInt billion(1000000000);
    while (!t.is_zero()) {
        DivMod dm = t.divmod(billion);
        chunks.push_back(dm.rem.is_zero() ? 0u : dm.rem.mag_[0]);
        t = dm.quot;
    }
    std::string s = neg_ ? "-" : "";
    s += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

double BigInt::to_double() const {
    double r = 0.0;
    for (size_t i = mag_.size(); i-- > 0;)
        r = r * 4294967296.0 + mag_[i];
    return neg_ ? -r : r;
}

bool BigInt::fits_uint64() const noexcept { return !neg_ && mag_.size() <= 2; }

uint64_t BigInt::to_uint64() const {
    if (!fits_uint64()) throw std::range_error("BigInt::to_uint64: out of range");
    uint64_t v = 0;
    if (mag_.size() > 1) v = static_cast<uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) v |= mag_[0];
    return v;
}

bool BigInt::fits_int64() const noexcept {
    if (mag_.size() > 2) return false;
    uint64_t v = 0;
    if (mag_.size() > 1) v = static_cast<uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) v |= mag_[0];
    return neg_ ? v <= (1ull << 63) : v < (1ull << 63);
}

int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::range_error("BigInt::to_int64: out of range");
    uint64_t v = 0;
    if (mag_.size() > 1) v = static_cast<uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) v |= mag_[0];
    return neg_ ? -static_cast<int64_t>(v - 1) - 1 : static_cast<int64_t>(v);
}

bool BigInt::is_pow2() const noexcept {
    if (is_zero() || neg_) return false;
    for (size_t i = 0; i + 1 < mag_.size(); ++i)
        if (mag_[i]) return false;
    uint32_t top = mag_.back();
    return (top & (top - 1)) == 0;
}

} // namespace vtree
