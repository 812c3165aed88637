#include "vtree/codes.hpp"

#include <stdexcept>

namespace vtree {

namespace {
constexpr uint64_t MAX_UNARY_BITS = 1ull << 26;

std::string ci_bits(const BigInt& b) {
    uint64_t l = b.bit_length() - 1;
    std::string w(2 * l + 1, '0');
    w[l] = '1';
    // low l bits of b, complemented, most significant first
    for (uint64_t i = 0; i < l; ++i)
        w[l + 1 + i] = b.bit(l - 1 - i) ? '0' : '1';
    return w;
}
} // namespace

const char* flavor_name(CodeFlavor f) {
    switch (f) {
        case CodeFlavor::CI: return "ci";
        case CodeFlavor::CII: return "cii";
        case CodeFlavor::CU: return "cu";
        case CodeFlavor::CV: return "cv";
        case CodeFlavor::CUPrime: return "cu'";
        case CodeFlavor::CVPrime: return "cv'";
    }
    return "?";
}

std::optional<CodeFlavor> parse_flavor(std::string_view s) {
    if (s == "ci") return CodeFlavor::CI;
    if (s == "cii") return CodeFlavor::CII;
    if (s == "cu") return CodeFlavor::CU;
    if (s == "cv") return CodeFlavor::CV;
    if (s == "cu'" || s == "cup") return CodeFlavor::CUPrime;
    if (s == "cv'" || s == "cvp") return CodeFlavor::CVPrime;
    return std::nullopt;
}

BitWord encode(const BigInt& b, CodeFlavor flavor) {
    if (b.sign() < 1) throw std::domain_error("encode: argument must be >= 1");
    switch (flavor) {
        case CodeFlavor::CI:
            return BitWord(ci_bits(b));
        case CodeFlavor::CII: {
            std::string w = ci_bits(b);
            for (char& c : w) c = c == '0' ? '1' : '0';
            return BitWord(std::move(w));
        }
        case CodeFlavor::CU:
        case CodeFlavor::CV:
        case CodeFlavor::CUPrime:
        case CodeFlavor::CVPrime: {
            if (b > BigInt::from_uint64(MAX_UNARY_BITS))
                throw std::length_error("encode: unary codeword too long");
            uint64_t n = b.to_uint64();
            switch (flavor) {
                case CodeFlavor::CU: return BitWord(std::string(n - 1, '0') + "1");
                case CodeFlavor::CV: return BitWord(std::string(n - 1, '1') + "0");
                case CodeFlavor::CUPrime: return BitWord(std::string(n, '0'));
                default: return BitWord(std::string(n, '1'));
            }
        }
    }
    throw std::logic_error("encode: unknown flavor");
}

BigInt codeword_length(const BigInt& b, CodeFlavor flavor) {
    if (b.sign() < 1) throw std::domain_error("codeword_length: argument must be >= 1");
    if (flavor == CodeFlavor::CI || flavor == CodeFlavor::CII)
        return BigInt(static_cast<int64_t>(2 * (b.bit_length() - 1) + 1));
    return b;
}

DecodeResult decode_prefix(const BitWord& stream, CodeFlavor flavor, int tail_bit) {
    auto bit_at = [&](size_t i) -> int {
        return i < stream.size() ? stream.bit(i) : tail_bit;
    };
    int run_bit;       // the leading-run symbol
    switch (flavor) {
        case CodeFlavor::CI: run_bit = 0; break;
        case CodeFlavor::CII: run_bit = 1; break;
        case CodeFlavor::CU: run_bit = 0; break;
        case CodeFlavor::CV: run_bit = 1; break;
        default:
            throw std::domain_error("decode_prefix: flavor is not prefix-free");
    }

    // If the whole remaining stream is the run symbol, this is the flavor's
    // infinite terminator (aleph).
    if (tail_bit == run_bit) {
        bool all_run = true;
        for (size_t i = 0; i < stream.size(); ++i)
            if (stream.bit(i) != run_bit) { all_run = false; break; }
        if (all_run) return {true, BigInt(), stream.size()};
    }

    size_t pos = 0;
    uint64_t l = 0;
    while (bit_at(pos) == run_bit) { ++l; ++pos; }
    ++pos;   // the separator bit

    if (flavor == CodeFlavor::CU || flavor == CodeFlavor::CV)
        return {false, BigInt(static_cast<int64_t>(l + 1)), pos};

    BigInt b(1);
    for (uint64_t i = 0; i < l; ++i) {
        int raw = bit_at(pos++);
        int payload = flavor == CodeFlavor::CI ? 1 - raw : raw;
        b = (b << 1) + BigInt(payload);
    }
    return {false, b, pos};
}

std::string FsmState::to_string() const {
    std::string s = barred ? "~" : "";
    switch (kind) {
        case Kind::A: s += "A"; break;
        case Kind::B: s += "B" + std::to_string(k); break;
        case Kind::C: s += "C" + std::to_string(k); break;
    }
    return s;
}

FsmState fsm_step(FsmState s, int bit) {
    using K = FsmState::Kind;
    if (!s.barred) {
        switch (s.kind) {
            case K::A: return bit == 0 ? FsmState{K::B, 1, false} : FsmState{K::A, 0, true};
            case K::B: return bit == 0 ? FsmState{K::B, s.k + 1, false} : FsmState{K::C, s.k, false};
            case K::C:
                if (s.k >= 2) return FsmState{K::C, s.k - 1, false};
                return FsmState{K::A, 0, true};
        }
    } else {
        switch (s.kind) {
            case K::A: return bit == 0 ? FsmState{K::A, 0, false} : FsmState{K::B, 1, true};
            case K::B: return bit == 0 ? FsmState{K::C, s.k, true} : FsmState{K::B, s.k + 1, true};
            case K::C:
                if (s.k >= 2) return FsmState{K::C, s.k - 1, true};
                return FsmState{K::A, 0, false};
        }
    }
    throw std::logic_error("fsm_step: bad state");
}

FsmState fsm_run(const BitWord& v) {
    FsmState s;
    for (size_t i = 0; i < v.size(); ++i) s = fsm_step(s, v.bit(i));
    return s;
}

} // namespace vtree
