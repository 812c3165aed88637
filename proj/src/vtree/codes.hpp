#pragma once
// codes.hpp - the binary PD codes CI/CII, the unary codes CU/CV (and their
// non-prefix-free primed variants), prefix decoding of words with an implicit
// infinite tail, and the state machine that labels tree nodes.

#include "vtree/bigint.hpp"
#include "vtree/words.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace vtree {

enum class CodeFlavor { CI, CII, CU, CV, CUPrime, CVPrime };

const char* flavor_name(CodeFlavor f);
std::optional<CodeFlavor> parse_flavor(std::string_view s);

// CI(b) = 0^l 1 ~b_{l-1}..~b_0 with l = floor(log2 b); CII is its complement.
// CU(b) = 0^(b-1) 1, CV(b) = 1^(b-1) 0, CU'(b) = 0^b, CV'(b) = 1^b.
// Rejects b < 1. Unary codewords longer than 2^26 bits are refused.
BitWord encode(const BigInt& b, CodeFlavor flavor);

// |CI(b)| = |CII(b)| = 2*floor(log2 b) + 1; unary lengths are b itself.
BigInt codeword_length(const BigInt& b, CodeFlavor flavor);

struct DecodeResult {
    bool aleph = false;    // hit the flavor's infinite terminator
    BigInt value;          // valid when !aleph
    size_t consumed = 0;   // bits read (may exceed the finite support)
};

// Decode one codeword from the front of `stream`, understood to continue
// with an infinite run of `tail_bit` after its finite support.
// Prefix-free flavors only (CI, CII, CU, CV).
DecodeResult decode_prefix(const BitWord& stream, CodeFlavor flavor, int tail_bit = 0);

// ---- the address-labelling state machine ----

struct FsmState {
    enum class Kind { A, B, C };
    Kind kind = Kind::A;
    uint64_t k = 0;        // subscript for B/C states
    bool barred = false;

    bool operator==(const FsmState&) const = default;
    std::string to_string() const;   // "A", "B3", "~C2"
};

FsmState fsm_step(FsmState s, int bit);
FsmState fsm_run(const BitWord& v);   // from start state A

} // namespace vtree
