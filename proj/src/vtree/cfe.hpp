#pragma once
// cfe.hpp - continued fraction expansion and reconstruction (Perron schema),
// with the even-length normalization the codec layer relies on.

#include "vtree/bigint.hpp"
#include "vtree/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vtree {

// [b0; b1, b2, ...] with all partial denominators >= 1.
struct Cfe {
    BigInt b0;
    std::vector<BigInt> pds;
};

// Even number of pds, b0 fixed to 0: the unique even-length representative
// of a value in (0,1). Every even-length list of pds >= 1 is one.
struct EvenCfe {
    std::vector<BigInt> pds;
};

struct Convergent {
    BigInt a, b;   // A_i / B_i
};

// Canonical expansion by floor/reciprocal; terminates for rationals.
// For values in (0,1) the last pd is always >= 2.
Cfe cfe_expand(const Rational& r);

// Even-length representative; rejects values outside (0,1).
EvenCfe even_normalize(const Cfe& c);

Rational cfe_value(const Cfe& c);
Rational even_value(const EvenCfe& c);

// A_i/B_i for i = 0..l (the last equals cfe_value).
std::vector<Convergent> convergents(const Cfe& c);

// "[b0; b1, b2, ...]"; on input the "b0;" part may be omitted (then b0 = 0).
Cfe parse_cfe(std::string_view s);
std::string format_cfe(const Cfe& c);
std::string format_even(const EvenCfe& c);

} // namespace vtree
