#include "vtree/words.hpp"

#include <stdexcept>

namespace vtree {

BitWord::BitWord(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw std::invalid_argument("BitWord: symbols must be 0 or 1");
}

BitWord BitWord::parse(std::string_view s) {
    if (s == "eps" || s == "e") return BitWord();
    return BitWord(std::string(s));
}

BitWord BitWord::complemented() const {
    std::string r = bits_;
    for (char& c : r) c = c == '0' ? '1' : '0';
    return BitWord(std::move(r));
}

BitWord BitWord::append(int bit) const {
    BitWord r = *this;
    r.bits_.push_back(bit ? '1' : '0');
    return r;
}

BitWord BitWord::concat(const BitWord& o) const {
    BitWord r = *this;
    r.bits_ += o.bits_;
    return r;
}

BitWord BitWord::prefix(size_t len) const {
    return BitWord(bits_.substr(0, len));
}

BitWord BitWord::suffix_from(size_t pos) const {
    return BitWord(bits_.substr(std::min(pos, bits_.size())));
}

BigInt word_to_index(const BitWord& v) {
    BigInt n(1);
    for (size_t i = 0; i < v.size(); ++i)
        n = (n << 1) + BigInt(v.bit(i));
    return n;
}

BitWord index_to_word(const BigInt& n) {
    if (n.sign() < 1) throw std::domain_error("index_to_word: index must be >= 1");
    uint64_t len = n.bit_length() - 1;
    std::string bits(len, '0');
    for (uint64_t i = 0; i < len; ++i)
        if (n.bit(len - 1 - i)) bits[i] = '1';
    return BitWord(std::move(bits));
}

Dyadic word_to_dyadic(const BitWord& v) {
    BigInt a(1);
    for (size_t i = v.size(); i-- > 0;)
        if (v.bit(v.size() - 1 - i)) a = a + BigInt::pow2(i + 1);
    return Dyadic(a, v.size() + 1);
}

BitWord dyadic_to_word(const Dyadic& d) {
    // a/2^k -> the k-1 high bits of a (a = (v|1)_2)
    uint64_t len = d.exponent() - 1;
    std::string bits(len, '0');
    for (uint64_t i = 0; i < len; ++i)
        if (d.numerator().bit(len - i)) bits[i] = '1';
    return BitWord(std::move(bits));
}

} // namespace vtree
