#include <doctest.h>

#include "vtree/qmf.hpp"
#include "vtree/words.hpp"

#include "fixtures.hpp"

#include <numeric>
#include <random>

using namespace vtree;

TEST_SUITE_BEGIN("qmf");

TEST_CASE("forward fixtures") {
    CHECK(qmf_forward(Rational(1, 2)) == BitWord());
    CHECK(qmf_forward(Rational(2, 3)) == BitWord("1"));
    CHECK(qmf_forward(Rational(38, 51)) == BitWord("110011110"));
    CHECK(qmf_pre_strip_word(Rational(38, 51)).str() == "110011110100");
    CHECK_THROWS(qmf_forward(Rational(3, 2)));
    CHECK_THROWS(qmf_forward(Rational(0, 1)));
}

TEST_CASE("inverse fixtures") {
    CHECK(qmf_inverse(BitWord("0111")) == Rational(4, 9));
    CHECK(qmf_inverse(BitWord("10")) == Rational(3, 5));
    CHECK(qmf_inverse(BitWord()) == Rational(1, 2));
}

TEST_CASE("bar fixtures") {
    CHECK(qmf_bar(Rational(2, 3)) == Dyadic(BigInt(3), 2));
    CHECK(qmf_bar(Rational(38, 51)) == Dyadic(BigInt(829), 10));
    CHECK(qmf_bar(Rational(1, 2)) == Dyadic(BigInt(1), 1));
    CHECK(qmf_bar_inverse(Dyadic(BigInt(3), 2)) == Rational(2, 3));
    CHECK(qmf_bar_inverse(Dyadic(BigInt(3), 3)) == Rational(1, 3));
}

TEST_CASE("every |v| <= 5 table row") {
    for (const auto& row : fixtures::kAddressRows) {
        BitWord v(row.v);
        Rational x(row.p, row.q);
        CHECK(qmf_inverse(v) == x);
        CHECK(qmf_forward(x) == v);
        EvenCfe e = qmf_inverse_cfe(v);
        REQUIRE(e.pds.size() == row.pds.size());
        for (size_t i = 0; i < e.pds.size(); ++i)
            CHECK(e.pds[i] == BigInt::from_uint64(row.pds[i]));
    }
}

TEST_CASE("hat fixtures") {
    CHECK(hat_inverse(BitWord()) == Rational(1, 1));
    CHECK(hat_inverse(BitWord("1")) == Rational(2, 1));
    CHECK(hat_inverse(BitWord("11")) == Rational(4, 1));
    CHECK(hat_inverse(BitWord("00")) == Rational(1, 4));
    CHECK(hat_forward(Rational(1, 1)) == BitWord());
    CHECK(hat_forward(Rational(2, 1)) == BitWord("1"));
    CHECK(hat_forward(Rational(3, 2)) == BitWord("10"));
    CHECK_THROWS(hat_forward(Rational(0, 1)));
    CHECK_THROWS(hat_forward(Rational(-1, 2)));
}

TEST_CASE("doublehat fixtures") {
    CHECK(doublehat_inverse(BitWord()) == Rational(0, 1));
    CHECK(doublehat_inverse(BitWord("0010")) == Rational(-5, 3));
    CHECK(doublehat_inverse(BitWord("0000")) == Rational(-8, 1));
    CHECK(doublehat_forward(Rational(-5, 3)) == BitWord("0010"));
    CHECK(doublehat_forward(Rational(0, 1)) == BitWord());
}

TEST_CASE("inverse pairs on all short addresses") {
    for (uint64_t n = 1; n < (1u << 13); ++n) {
        BitWord v = index_to_word(BigInt::from_uint64(n));
        CHECK(qmf_forward(qmf_inverse(v)) == v);
        CHECK(hat_forward(hat_inverse(v)) == v);
        CHECK(doublehat_forward(doublehat_inverse(v)) == v);
    }
}

TEST_CASE("inverse pairs on all q <= 120") {
    for (int64_t q = 2; q <= 120; ++q)
        for (int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational x(p, q);
            CHECK(qmf_inverse(qmf_forward(x)) == x);
            CHECK(hat_inverse(hat_forward(x)) == x);
            Rational xi = x.reciprocal();
            CHECK(hat_inverse(hat_forward(xi)) == xi);
            CHECK(doublehat_inverse(doublehat_forward(-x)) == -x);
        }
}

TEST_CASE("subtree structure and negation symmetry") {
    for (uint64_t n = 1; n < (1u << 15); ++n) {
        BitWord v = index_to_word(BigInt::from_uint64(n));
        CHECK(doublehat_inverse(BitWord("1").concat(v)) == hat_inverse(v));
        CHECK(hat_inverse(BitWord("0").concat(v)) == qmf_inverse(v));
        CHECK(doublehat_inverse(v.complemented()) == -doublehat_inverse(v));
    }
}

TEST_CASE("minkowski fixtures and route agreement") {
    CHECK(minkowski_q(Rational(1, 3)) == Dyadic(BigInt(1), 2));
    CHECK(minkowski_q(Rational(1, 2)) == Dyadic(BigInt(1), 1));
    CHECK(minkowski_q(Rational(4, 9)) == Dyadic(BigInt(15), 5));
    CHECK_THROWS(minkowski_q(Rational(5, 3)));
    for (int64_t q = 2; q <= 200; ++q)
        for (int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational x(p, q);
            CHECK(minkowski_q(x) == minkowski_q_unary(x));
        }
}

TEST_CASE("stern-brocot fixtures") {
    CHECK(sb_inverse(BitWord("0111")) == Rational(4, 9));
    CHECK(sb_inverse(BitWord("0")) == Rational(1, 3));
    CHECK(sb_inverse(BitWord()) == Rational(1, 2));
    CHECK(sb_forward(Rational(4, 9)) == BitWord("0111"));
    for (uint64_t n = 1; n < (1u << 10); ++n) {
        BitWord v = index_to_word(BigInt::from_uint64(n));
        CHECK(sb_forward(sb_inverse(v)) == v);
    }
}

TEST_CASE("monotone images on random pairs") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 2000; ++i) {
        int64_t q1 = static_cast<int64_t>(rng() % 5000) + 2;
        int64_t p1 = static_cast<int64_t>(rng() % (q1 - 1)) + 1;
        int64_t q2 = static_cast<int64_t>(rng() % 5000) + 2;
        int64_t p2 = static_cast<int64_t>(rng() % (q2 - 1)) + 1;
        Rational x(p1, q1), y(p2, q2);
        if (x == y) continue;
        if (y < x) std::swap(x, y);
        CHECK(qmf_bar(x) < qmf_bar(y));
    }
}

TEST_CASE("strip rejects all-zero words") {
    CHECK_THROWS(strip_10star(BitWord("000")));
    CHECK(strip_10star(BitWord("1100")) == BitWord("1"));
}

TEST_SUITE_END();
