#include <doctest.h>

#include "vtree/cfe.hpp"

#include <random>

using namespace vtree;

namespace {
Cfe make(int64_t b0, std::vector<int64_t> pds) {
    Cfe c;
    c.b0 = BigInt(b0);
    for (int64_t v : pds) c.pds.push_back(BigInt(v));
    return c;
}

std::vector<int64_t> pds_of(const std::vector<BigInt>& v) {
    std::vector<int64_t> out;
    for (const BigInt& b : v) out.push_back(b.to_int64());
    return out;
}
} // namespace

TEST_SUITE_BEGIN("cfe");

TEST_CASE("expansion fixtures") {
    CHECK(pds_of(cfe_expand(Rational(38, 51)).pds) == std::vector<int64_t>{1, 2, 1, 12});
    CHECK(cfe_expand(Rational(38, 51)).b0 == BigInt(0));
    CHECK(pds_of(cfe_expand(Rational(4, 9)).pds) == std::vector<int64_t>{2, 4});
    CHECK(pds_of(cfe_expand(Rational(1, 2)).pds) == std::vector<int64_t>{2});
    CHECK(cfe_expand(Rational(3, 1)).b0 == BigInt(3));
    CHECK(cfe_expand(Rational(3, 1)).pds.empty());
    // floor convention for negatives
    Cfe neg = cfe_expand(Rational(-22, 7));
    CHECK(neg.b0 == BigInt(-4));
    CHECK(cfe_value(neg) == Rational(-22, 7));
}

TEST_CASE("even normalization") {
    CHECK(pds_of(even_normalize(make(0, {2})).pds) == std::vector<int64_t>{1, 1});
    CHECK(pds_of(even_normalize(make(0, {3})).pds) == std::vector<int64_t>{2, 1});
    CHECK(pds_of(even_normalize(make(0, {1, 2, 1, 12})).pds) == std::vector<int64_t>{1, 2, 1, 12});
    // odd length ending in 1 merges backwards
    CHECK(pds_of(even_normalize(make(0, {2, 1, 1})).pds) == std::vector<int64_t>{2, 2});
    CHECK_THROWS(even_normalize(make(1, {2})));      // not in (0,1)
    CHECK_THROWS(even_normalize(make(0, {})));       // zero
    CHECK_THROWS(even_normalize(make(0, {1})));      // value 1
}

TEST_CASE("values") {
    CHECK(cfe_value(make(0, {1, 1, 1, 1})) == Rational(3, 5));
    CHECK(cfe_value(make(0, {7, 1})) == Rational(1, 8));
    CHECK(cfe_value(make(3, {})) == Rational(3, 1));
    CHECK(even_value(even_normalize(make(0, {2}))) == Rational(1, 2));
}

TEST_CASE("perron convergents") {
    auto cs = convergents(make(0, {7, 15, 1, 292}));
    REQUIRE(cs.size() == 5);
    CHECK(cs[0].a == BigInt(0));
    CHECK(cs[0].b == BigInt(1));
    CHECK(cs[1].a == BigInt(1));
    CHECK(cs[1].b == BigInt(7));
    CHECK(cs[2].a == BigInt(15));
    CHECK(cs[2].b == BigInt(106));
    CHECK(cs[3].a == BigInt(16));
    CHECK(cs[3].b == BigInt(113));
    CHECK(cs[4].a == BigInt(4687));   // 292*16 + 15
    CHECK(cs[4].b == BigInt(33102));

    auto trivial = convergents(make(0, {1, 1}));
    REQUIRE(trivial.size() == 3);
    CHECK(trivial[1].a == BigInt(1));
    CHECK(trivial[1].b == BigInt(1));
    CHECK(trivial[2].a == BigInt(1));
    CHECK(trivial[2].b == BigInt(2));

    auto fours = convergents(make(0, {4, 4, 4, 4}));
    std::vector<int64_t> denoms;
    for (const auto& c : fours) denoms.push_back(c.b.to_int64());
    CHECK(denoms == std::vector<int64_t>{1, 4, 17, 72, 305});
}

TEST_CASE("round trip on random rationals") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        int64_t p = static_cast<int64_t>(rng() % 2'000'000) - 1'000'000;
        int64_t q = static_cast<int64_t>(rng() % 999'999) + 1;
        Rational r(p, q);
        CHECK(cfe_value(cfe_expand(r)) == r);
    }
}

TEST_CASE("even normalization preserves value, q <= 500") {
    for (int64_t q = 2; q <= 500; ++q)
        for (int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational r(p, q);
            EvenCfe e = even_normalize(cfe_expand(r));
            CHECK(e.pds.size() % 2 == 0);
            CHECK(even_value(e) == r);
        }
}

TEST_CASE("canonical form ends >= 2 inside (0,1)") {
    for (int64_t q = 2; q <= 200; ++q)
        for (int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Cfe c = cfe_expand(Rational(p, q));
            REQUIRE(!c.pds.empty());
            CHECK(c.pds.back() >= BigInt(2));
        }
}

TEST_CASE("interlacing, error bound and determinant identity") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 400; ++i) {
        int64_t q = static_cast<int64_t>(rng() % 9000) + 2;
        int64_t p = static_cast<int64_t>(rng() % (q - 1)) + 1;
        Rational r(p, q);
        Cfe c = cfe_expand(r);
        auto cs = convergents(c);
        // determinant identity A_k B_{k-1} - A_{k-1} B_k = (-1)^(k+1)
        for (size_t k = 1; k < cs.size(); ++k) {
            BigInt det = cs[k].a * cs[k - 1].b - cs[k - 1].a * cs[k].b;
            CHECK(det == ((k + 1) % 2 == 0 ? BigInt(1) : BigInt(-1)));
        }
        // interlacing around the value and the Perron error bound
        // (the bound is an equality at the final step of a finite expansion)
        for (size_t k = 0; k + 1 < cs.size(); ++k) {
            Rational approx(cs[k].a, cs[k].b);
            Rational err = (r - approx).abs();
            Rational bound(BigInt(1), cs[k].b * cs[k + 1].b);
            if (k + 2 < cs.size()) CHECK(err < bound);
            else CHECK(err == bound);
            if (k % 2 == 0) CHECK(approx < r);
            else CHECK(approx > r);
        }
    }
}

TEST_CASE("parse and format") {
    Cfe c = parse_cfe("[0; 7, 15, 1, 292]");
    CHECK(c.b0 == BigInt(0));
    CHECK(pds_of(c.pds) == std::vector<int64_t>{7, 15, 1, 292});
    CHECK(format_cfe(c) == "[0; 7,15,1,292]");
    Cfe d = parse_cfe("[1,2,1,12]");
    CHECK(d.b0 == BigInt(0));
    CHECK(pds_of(d.pds) == std::vector<int64_t>{1, 2, 1, 12});
    CHECK_THROWS(parse_cfe("[0; 3, 0]"));
}

TEST_SUITE_END();
