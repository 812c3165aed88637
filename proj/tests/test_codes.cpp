#include <doctest.h>

#include "vtree/codes.hpp"

#include "fixtures.hpp"

#include <cmath>

using namespace vtree;

TEST_SUITE_BEGIN("codes");

TEST_CASE("codeword table") {
    for (const auto& row : fixtures::kCodeRows) {
        BigInt b = BigInt::from_uint64(row.b);
        CHECK(encode(b, CodeFlavor::CI).str() == row.ci);
        CHECK(encode(b, CodeFlavor::CII).str() == row.cii);
        CHECK(codeword_length(b, CodeFlavor::CI) == BigInt::from_uint64(row.len));
        CHECK(codeword_length(b, CodeFlavor::CII) == BigInt::from_uint64(row.len));
    }
}

TEST_CASE("unary codes") {
    CHECK(encode(BigInt(3), CodeFlavor::CU).str() == "001");
    CHECK(encode(BigInt(3), CodeFlavor::CV).str() == "110");
    CHECK(encode(BigInt(3), CodeFlavor::CUPrime).str() == "000");
    CHECK(encode(BigInt(3), CodeFlavor::CVPrime).str() == "111");
    CHECK(encode(BigInt(1), CodeFlavor::CU).str() == "1");
    CHECK(codeword_length(BigInt(9), CodeFlavor::CU) == BigInt(9));
    CHECK(codeword_length(BigInt::parse("123456789123456789"), CodeFlavor::CV) ==
          BigInt::parse("123456789123456789"));
    CHECK_THROWS(encode(BigInt(0), CodeFlavor::CU));
    CHECK_THROWS(encode(BigInt::parse("99999999999"), CodeFlavor::CU));
}

TEST_CASE("decode fixtures") {
    auto r = decode_prefix(BitWord("0111"), CodeFlavor::CI);
    CHECK_FALSE(r.aleph);
    CHECK(r.value == BigInt(2));
    CHECK(r.consumed == 3);

    r = decode_prefix(BitWord("11000"), CodeFlavor::CII);
    CHECK(r.value == BigInt(4));
    CHECK(r.consumed == 5);
    // the zeros may come from the implicit tail
    r = decode_prefix(BitWord("11"), CodeFlavor::CII);
    CHECK(r.value == BigInt(4));
    CHECK(r.consumed == 5);

    r = decode_prefix(BitWord("0000"), CodeFlavor::CI);
    CHECK(r.aleph);

    r = decode_prefix(BitWord(), CodeFlavor::CI);
    CHECK(r.aleph);

    // CII against an all-ones tail is its own terminator
    r = decode_prefix(BitWord("111"), CodeFlavor::CII, 1);
    CHECK(r.aleph);

    CHECK_THROWS(decode_prefix(BitWord("01"), CodeFlavor::CUPrime));
}

TEST_CASE("round trips and duality, b <= 2048") {
    for (uint64_t b = 1; b <= 2048; ++b) {
        BitWord ci = encode(BigInt::from_uint64(b), CodeFlavor::CI);
        BitWord cii = encode(BigInt::from_uint64(b), CodeFlavor::CII);
        CHECK(cii == ci.complemented());
        auto r1 = decode_prefix(ci, CodeFlavor::CI);
        CHECK(r1.value == BigInt::from_uint64(b));
        CHECK(r1.consumed == ci.size());
        auto r2 = decode_prefix(cii, CodeFlavor::CII);
        CHECK(r2.value == BigInt::from_uint64(b));
        CHECK(r2.consumed == cii.size());
    }
}

TEST_CASE("prefix-freeness and lexicographic anti-order, b <= 2048") {
    std::vector<std::string> words;
    for (uint64_t b = 1; b <= 2048; ++b)
        words.push_back(encode(BigInt::from_uint64(b), CodeFlavor::CI).str());
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            // no prefixing either way
            CHECK(words[i].compare(0, words[j].size(), words[j]) != 0);
            CHECK(words[j].compare(0, words[i].size(), words[i]) != 0);
            // b < b' gives CI(b) > CI(b') lexicographically
            CHECK(words[i] > words[j]);
        }
}

TEST_CASE("kraft sums") {
    // block [2^k, 2^(k+1)) holds 2^k words of length 2k+1, contributing 2^-(k+1)
    double sum = 0.0;
    for (uint64_t b = 1; b < (1u << 12); ++b)
        sum += std::pow(2.0, -double(codeword_length(BigInt::from_uint64(b), CodeFlavor::CI).to_int64()));
    CHECK(sum == doctest::Approx(1.0 - std::pow(2.0, -12.0)).epsilon(1e-12));
    double closed = 0.0;
    for (int k = 0; k < 12; ++k)
        closed += std::ldexp(1.0, -(k + 1));
    CHECK(sum == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("state machine table") {
    using K = FsmState::Kind;
    CHECK(fsm_run(BitWord()) == FsmState{K::A, 0, false});
    CHECK(fsm_run(BitWord("0")) == FsmState{K::B, 1, false});
    CHECK(fsm_run(BitWord("1")) == FsmState{K::A, 0, true});
    CHECK(fsm_run(BitWord("0111")) == FsmState{K::B, 1, true});
    // spelled-out walk: A -0> B1 -0> B2 -1> C2 -0> C1 -1> ~A -1> ~B1 -1> ~B2 -0> ~C2
    CHECK(fsm_run(BitWord("00101110")) == FsmState{K::C, 2, true});
    CHECK(fsm_step(FsmState{K::C, 1, true}, 0) == FsmState{K::A, 0, false});
    CHECK(fsm_step(FsmState{K::C, 1, true}, 1) == FsmState{K::A, 0, false});
    CHECK(fsm_step(FsmState{K::A, 0, true}, 0) == FsmState{K::A, 0, false});
    CHECK(FsmState{K::C, 2, true}.to_string() == "~C2");
}

TEST_SUITE_END();
