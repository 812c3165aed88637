#include "vtree/qmf.hpp"

#include "vtree/codes.hpp"

#include <stdexcept>

namespace vtree {

namespace {

constexpr uint64_t MAX_DENJOY_BITS = 1ull << 26;

EvenCfe even_cfe_of(const Rational& x, const char* who) {
    if (!x.in_unit_interval())
        throw std::domain_error(std::string(who) + ": input must lie in (0,1)");
    return even_normalize(cfe_expand(x));
}

BitWord concat_codes(const EvenCfe& e, CodeFlavor odd_flavor, CodeFlavor even_flavor) {
    std::string bits;
    for (size_t i = 0; i < e.pds.size(); ++i) {
        BitWord cw = encode(e.pds[i], i % 2 == 0 ? odd_flavor : even_flavor);
        bits += cw.str();
    }
    return BitWord(std::move(bits));
}

// Decode v|1|0^inf into an even pd list, alternating first/second flavor.
EvenCfe decode_word(const BitWord& v, CodeFlavor first, CodeFlavor second) {
    BitWord stream = v.append(1);
    size_t pos = 0;
    EvenCfe out;
    bool expect_first = true;
    for (;;) {
        DecodeResult r = decode_prefix(stream.suffix_from(pos), expect_first ? first : second, 0);
        if (r.aleph) {
            if (!expect_first)
                throw std::logic_error("qmf decode: terminator while expecting the second flavor");
            break;
        }
        out.pds.push_back(r.value);
        pos += r.consumed;
        expect_first = !expect_first;
    }
    if (out.pds.size() % 2 != 0)
        throw std::logic_error("qmf decode: odd pd count");
    return out;
}

} // namespace

BitWord qmf_pre_strip_word(const Rational& x) {
    return concat_codes(even_cfe_of(x, "qmf_forward"), CodeFlavor::CI, CodeFlavor::CII);
}

BitWord strip_10star(const BitWord& w) {
    std::string bits = w.str();
    size_t end = bits.size();
    while (end > 0 && bits[end - 1] == '0') --end;
    if (end == 0)
        throw std::logic_error("strip_10star: word has no 1 to strip");
    --end;   // the final 1
    return BitWord(bits.substr(0, end));
}

BitWord qmf_forward(const Rational& x) {
    return strip_10star(qmf_pre_strip_word(x));
}

EvenCfe qmf_inverse_cfe(const BitWord& v) {
    return decode_word(v, CodeFlavor::CI, CodeFlavor::CII);
}

Rational qmf_inverse(const BitWord& v) {
    return even_value(qmf_inverse_cfe(v));
}

Dyadic qmf_bar(const Rational& x) {
    return word_to_dyadic(qmf_forward(x));
}

Rational qmf_bar_inverse(const Dyadic& d) {
    return qmf_inverse(dyadic_to_word(d));
}

BitWord hat_forward(const Rational& x) {
    if (x.sign() <= 0) throw std::domain_error("hat_forward: input must be positive");
    if (x.num() == x.den()) return BitWord();
    if (x.in_unit_interval())
        return BitWord("0").concat(qmf_forward(x));
    return BitWord("1").concat(qmf_forward(x.reciprocal()).complemented());
}

Rational hat_inverse(const BitWord& v) {
    if (v.empty()) return Rational(1);
    BitWord rest = v.suffix_from(1);
    if (v.bit(0) == 0) return qmf_inverse(rest);
    return qmf_inverse(rest.complemented()).reciprocal();
}

BitWord doublehat_forward(const Rational& x) {
    if (x.is_zero()) return BitWord();
    if (x.sign() > 0) return BitWord("1").concat(hat_forward(x));
    return BitWord("0").concat(hat_forward(-x).complemented());
}

Rational doublehat_inverse(const BitWord& v) {
    if (v.empty()) return Rational(0);
    BitWord rest = v.suffix_from(1);
    if (v.bit(0) == 1) return hat_inverse(rest);
    return -hat_inverse(rest.complemented());
}

BitWord sb_forward(const Rational& x) {
    return strip_10star(concat_codes(even_cfe_of(x, "sb_forward"), CodeFlavor::CU, CodeFlavor::CV));
}

Rational sb_inverse(const BitWord& v) {
    return even_value(decode_word(v, CodeFlavor::CU, CodeFlavor::CV));
}

Dyadic minkowski_q(const Rational& x) {
    EvenCfe e = even_cfe_of(x, "minkowski_q");
    // 2 * sum_k (-1)^(k+1) 2^(-(b_1+..+b_k)), exact over denominator 2^(S-1)
    BigInt total_shift(0);
    for (const BigInt& b : e.pds) total_shift += b;
    if (total_shift > BigInt::from_uint64(MAX_DENJOY_BITS))
        throw std::length_error("minkowski_q: partial denominators sum too large");
    uint64_t s_total = total_shift.to_uint64();
    BigInt acc(0);
    uint64_t s = 0;
    for (size_t k = 0; k < e.pds.size(); ++k) {
        s += e.pds[k].to_uint64();
        BigInt term = BigInt::pow2(s_total - s);
        acc = k % 2 == 0 ? acc + term : acc - term;
    }
    // value = 2 * acc / 2^s_total = acc / 2^(s_total-1)
    uint64_t k_exp = s_total - 1;
    uint64_t tz = acc.is_odd() ? 0 : acc.trailing_zeros();
    return Dyadic(acc >> tz, k_exp - tz);
}

Dyadic minkowski_q_unary(const Rational& x) {
    return word_to_dyadic(sb_forward(x));
}

} // namespace vtree
