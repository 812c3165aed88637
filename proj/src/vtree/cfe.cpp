#include "vtree/cfe.hpp"

#include <stdexcept>

namespace vtree {

namespace {
void check_pds(const std::vector<BigInt>& pds) {
    for (const BigInt& b : pds)
        if (b.sign() < 1)
            throw std::domain_error("Cfe: partial denominators must be >= 1");
}
} // namespace

Cfe cfe_expand(const Rational& r) {
    Cfe c;
    c.b0 = r.floor();
    // Euclid on the fractional part: p/q with 0 <= p < q
    BigInt p = r.num() - c.b0 * r.den();
    BigInt q = r.den();
    while (!p.is_zero()) {
        DivMod dm = q.divmod(p);
        c.pds.push_back(dm.quot);
        q = p;
        p = dm.rem;
    }
    return c;
}

EvenCfe even_normalize(const Cfe& c) {
    if (!c.b0.is_zero() || c.pds.empty())
        throw std::domain_error("even_normalize: value must lie in (0,1)");
    if (c.pds.size() == 1 && c.pds[0] == BigInt(1))
        throw std::domain_error("even_normalize: value must lie in (0,1)");
    check_pds(c.pds);
    EvenCfe e;
    e.pds = c.pds;
    if (e.pds.size() % 2 == 1) {
        if (e.pds.back() >= BigInt(2)) {
            e.pds.back() -= BigInt(1);
            e.pds.push_back(BigInt(1));
        } else {
            e.pds.pop_back();
            e.pds.back() += BigInt(1);
        }
    }
    return e;
}

Rational cfe_value(const Cfe& c) {
    check_pds(c.pds);
    // fold from the tail: x = b_i + 1/x
    Rational x;
    bool have = false;
    for (size_t i = c.pds.size(); i-- > 0;) {
        if (!have) { x = Rational(c.pds[i], BigInt(1)); have = true; }
        else x = Rational(c.pds[i], BigInt(1)) + x.reciprocal();
    }
    Rational b0(c.b0, BigInt(1));
    return have ? b0 + x.reciprocal() : b0;
}

Rational even_value(const EvenCfe& c) {
    Cfe t;
    t.b0 = BigInt(0);
    t.pds = c.pds;
    return cfe_value(t);
}

std::vector<Convergent> convergents(const Cfe& c) {
    check_pds(c.pds);
    std::vector<Convergent> out;
    BigInt a2(0), a1(1);   // A_{-2}, A_{-1}
    BigInt b2(1), b1(0);   // B_{-2}, B_{-1}
    BigInt a = c.b0 * a1 + a2, b = c.b0 * b1 + b2;
    out.push_back({a, b});
    a2 = a1; a1 = a; b2 = b1; b1 = b;
    for (const BigInt& pd : c.pds) {
        a = pd * a1 + a2;
        b = pd * b1 + b2;
        out.push_back({a, b});
        a2 = a1; a1 = a;
        b2 = b1; b1 = b;
    }
    return out;
}

Cfe parse_cfe(std::string_view s) {
    // strip brackets and spaces
    std::string t;
    for (char c : s)
        if (c != '[' && c != ']' && c != ' ') t.push_back(c);
    Cfe out;
    out.b0 = BigInt(0);
    size_t semi = t.find(';');
    size_t pos = 0;
    if (semi != std::string::npos) {
        out.b0 = BigInt::parse(t.substr(0, semi));
        pos = semi + 1;
    }
    while (pos < t.size()) {
        size_t comma = t.find(',', pos);
        if (comma == std::string::npos) comma = t.size();
        if (comma > pos)
            out.pds.push_back(BigInt::parse(t.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    check_pds(out.pds);
    return out;
}

std::string format_cfe(const Cfe& c) {
    std::string s = "[" + c.b0.to_string() + ";";
    for (size_t i = 0; i < c.pds.size(); ++i)
        s += (i ? "," : " ") + c.pds[i].to_string();
    if (c.pds.empty()) s += " ";
    s += "]";
    return s;
}

std::string format_even(const EvenCfe& c) {
    std::string s = "[";
    for (size_t i = 0; i < c.pds.size(); ++i)
        s += (i ? "," : "") + c.pds[i].to_string();
    s += "]";
    return s;
}

} // namespace vtree
