#include "vtree/rational.hpp"

#include <stdexcept>

namespace vtree {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) { num_ = num_.negated(); den_ = den_.negated(); }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (g > BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::parse(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::parse(s), BigInt(1));
    return Rational(BigInt::parse(s.substr(0, slash)), BigInt::parse(s.substr(slash + 1)));
}

bool Rational::in_unit_interval() const {
    return num_.sign() > 0 && num_ < den_;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}
Rational Rational::operator-() const { return Rational(num_.negated(), den_); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::abs() const { return Rational(num_.abs(), den_); }

BigInt Rational::floor() const {
    return num_.floor_divmod(den_).quot;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num_ * o.den_ <=> o.num_ * den_;   // denominators positive
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
    // scale to keep both parts in double range
    uint64_t nb = num_.bit_length(), db = den_.bit_length();
    if (nb < 900 && db < 900)
        return num_.to_double() / den_.to_double();
    uint64_t shift = std::max(nb, db) - 512;
    return (num_ >> shift).to_double() / (den_ >> shift).to_double();
}

Dyadic::Dyadic(BigInt a, uint64_t k) : a_(std::move(a)), k_(k) {
    if (!a_.is_odd() || a_.is_negative())
        throw std::domain_error("Dyadic: numerator must be odd and positive");
    if (k_ == 0 || a_.bit_length() > k_)
        throw std::domain_error("Dyadic: value must lie in (0,1)");
}

Dyadic Dyadic::from_rational(const Rational& r) {
    if (!r.in_unit_interval()) throw std::domain_error("Dyadic: value must lie in (0,1)");
    if (!r.den().is_pow2()) throw std::domain_error("Dyadic: denominator is not a power of two");
    return Dyadic(r.num(), r.den().bit_length() - 1);
}

Dyadic Dyadic::parse(std::string_view s) {
    if (!s.empty() && s[0] == '.') {
        // binary digits after the point
        BigInt a(0);
        uint64_t k = 0;
        for (char c : s.substr(1)) {
            if (c != '0' && c != '1') throw std::invalid_argument("Dyadic::parse: bad binary digit");
            a = (a << 1) + BigInt(c == '1' ? 1 : 0);
            ++k;
        }
        if (k == 0) throw std::invalid_argument("Dyadic::parse: no digits");
        // reduce to odd numerator
        while (!a.is_zero() && !a.is_odd()) { a = a >> 1; --k; }
        return Dyadic(a, k);
    }
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("Dyadic::parse: expected a/2^k or .bits");
    BigInt a = BigInt::parse(s.substr(0, slash));
    std::string_view d = s.substr(slash + 1);
    if (d.rfind("2^", 0) == 0) {
        uint64_t k = BigInt::parse(d.substr(2)).to_uint64();
        return Dyadic(a, k);
    }
    BigInt den = BigInt::parse(d);
    return from_rational(Rational(a, den));
}

Rational Dyadic::to_rational() const {
    return Rational(a_, BigInt::pow2(k_));
}

Dyadic Dyadic::add_pow2(int sign, uint64_t m) const {
    uint64_t e = std::max(k_, m);
    BigInt a = (a_ << (e - k_)) + (sign >= 0 ? BigInt::pow2(e - m) : BigInt::pow2(e - m).negated());
    if (a.sign() <= 0 || a.bit_length() > e)
        throw std::domain_error("Dyadic::add_pow2: result leaves (0,1)");
    uint64_t tz = a.is_odd() ? 0 : a.trailing_zeros();
    return Dyadic(a >> tz, e - tz);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    uint64_t e = std::max(k_, o.k_);
    return (a_ << (e - k_)) <=> (o.a_ << (e - o.k_));
}

std::string Dyadic::to_string() const {
    return a_.to_string() + "/2^" + std::to_string(k_);
}

std::string Dyadic::to_binary_string() const {
    std::string bits(k_, '0');
    for (uint64_t i = 0; i < k_; ++i)
        if (a_.bit(i)) bits[k_ - 1 - i] = '1';
    return "." + bits;
}

double Dyadic::to_double() const {
    return to_rational().to_double();
}

} // namespace vtree
