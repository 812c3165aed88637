#pragma once
// words.hpp - finite 0/1 words and the bijections N <-> A* <-> D1.
//
// A word v is identified with the index n = (1v)_2 and with the dyadic
// fraction (v|1)_2 / 2^(|v|+1); the empty word is index 1 and value 1/2.

#include "vtree/bigint.hpp"
#include "vtree/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace vtree {

class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::string bits);
    static BitWord parse(std::string_view s);   // "" or "eps" is the empty word

    size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int bit(size_t i) const { return bits_[i] - '0'; }
    const std::string& str() const noexcept { return bits_; }

    BitWord complemented() const;
    BitWord append(int bit) const;
    BitWord concat(const BitWord& o) const;
    BitWord prefix(size_t len) const;
    BitWord suffix_from(size_t pos) const;       // drop the first pos bits

    // lexicographic; a proper prefix sorts before its extensions
    std::strong_ordering operator<=>(const BitWord& o) const = default;
    bool operator==(const BitWord& o) const = default;

    std::string to_string() const { return bits_.empty() ? "eps" : bits_; }

private:
    std::string bits_;
};

// n = (1v)_2
BigInt word_to_index(const BitWord& v);
// inverse; rejects n < 1
BitWord index_to_word(const BigInt& n);
// d = (v|1)_2 / 2^(|v|+1)
Dyadic word_to_dyadic(const BitWord& v);
// inverse
BitWord dyadic_to_word(const Dyadic& d);

} // namespace vtree
