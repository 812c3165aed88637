#include "vtree/trees.hpp"

#include "vtree/codes.hpp"
#include "vtree/fastpath.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vtree {

const char* tree_name(TreeKind k) {
    switch (k) {
        case TreeKind::V: return "v";
        case TreeKind::V1: return "v1";
        case TreeKind::V10: return "v10";
        case TreeKind::SB: return "sb";
        case TreeKind::VDC: return "vdc";
    }
    return "?";
}

std::optional<TreeKind> parse_tree(std::string_view s) {
    if (s == "v") return TreeKind::V;
    if (s == "v1") return TreeKind::V1;
    if (s == "v10") return TreeKind::V10;
    if (s == "sb") return TreeKind::SB;
    if (s == "vdc") return TreeKind::VDC;
    return std::nullopt;
}

Rational label_rational(const TreeLabel& l) {
    if (std::holds_alternative<Rational>(l)) return std::get<Rational>(l);
    return std::get<Dyadic>(l).to_rational();
}

std::string label_string(const TreeLabel& l) {
    if (std::holds_alternative<Rational>(l)) return std::get<Rational>(l).to_string();
    return std::get<Dyadic>(l).to_string();
}

TreeLabel node_value(TreeKind kind, const BitWord& v) {
    switch (kind) {
        case TreeKind::V: return doublehat_inverse(v);
        case TreeKind::V1: return hat_inverse(v);
        case TreeKind::V10: return qmf_inverse(v);
        case TreeKind::SB: return sb_inverse(v);
        case TreeKind::VDC: return word_to_dyadic(v);
    }
    throw std::logic_error("node_value: unknown kind");
}

std::vector<TreeLabel> sequence(TreeKind kind, uint64_t count) {
    if (count < 1) throw std::domain_error("sequence: count must be >= 1");
    std::vector<TreeLabel> out;
    out.reserve(count);
    for (uint64_t n = 1; n <= count; ++n)
        out.push_back(node_value(kind, index_to_word(BigInt::from_uint64(n))));
    return out;
}

namespace {
void inorder_rec(TreeKind kind, const BitWord& v, unsigned depth, std::vector<TreeLabel>& out) {
    if (v.size() + 1 == depth) {
        out.push_back(node_value(kind, v));
        return;
    }
    inorder_rec(kind, v.append(0), depth, out);
    out.push_back(node_value(kind, v));
    inorder_rec(kind, v.append(1), depth, out);
}
} // namespace

std::vector<TreeLabel> inorder_labels(TreeKind kind, unsigned depth) {
    if (depth < 1) throw std::domain_error("inorder_labels: depth must be >= 1");
    std::vector<TreeLabel> out;
    out.reserve((size_t(1) << depth) - 1);
    inorder_rec(kind, BitWord(), depth, out);
    return out;
}

BitWord address_of(TreeKind kind, const Rational& x) {
    switch (kind) {
        case TreeKind::V: return doublehat_forward(x);
        case TreeKind::V1: return hat_forward(x);
        case TreeKind::V10: return qmf_forward(x);
        case TreeKind::SB: return sb_forward(x);
        case TreeKind::VDC:
            return dyadic_to_word(Dyadic::from_rational(x));
    }
    throw std::logic_error("address_of: unknown kind");
}

CoverageStat coverage_lambda(TreeKind kind, uint64_t q) {
    if (q < 2) throw std::domain_error("coverage_lambda: q must be >= 2");
    CoverageStat st;
    st.q = q;
    bool any = false;
    for (uint64_t p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        Rational x(static_cast<int64_t>(p), static_cast<int64_t>(q));
        BitWord v = address_of(kind, x);
        if (!any || v.size() > st.max_len) {
            st.max_len = v.size();
            st.worst = x;
            uint64_t clen = 0;
            if (kind == TreeKind::SB || kind == TreeKind::V10) {
                EvenCfe e = even_normalize(cfe_expand(x));
                CodeFlavor f = kind == TreeKind::SB ? CodeFlavor::CU : CodeFlavor::CI;
                CodeFlavor g = kind == TreeKind::SB ? CodeFlavor::CV : CodeFlavor::CII;
                for (size_t i = 0; i < e.pds.size(); ++i)
                    clen += codeword_length(e.pds[i], i % 2 == 0 ? f : g).to_uint64();
            }
            st.code_len = clen;
            any = true;
        }
    }
    st.lambda = static_cast<double>(st.max_len) / std::log2(static_cast<double>(q));
    return st;
}

unsigned bijectivity_required_depth(TreeKind kind, uint64_t q_max) {
    // exact: one past the deepest address over the target set
    if (kind != TreeKind::V10 && kind != TreeKind::V1 && kind != TreeKind::V)
        throw std::domain_error("bijectivity_required_depth: unsupported kind");
    size_t deepest = 0;
    auto probe = [&](int64_t p, int64_t q) {
        deepest = std::max(deepest, address_of(kind, Rational(p, q)).size());
    };
    for (uint64_t q = 1; q <= q_max; ++q)
        for (uint64_t p = 1; p <= q_max; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto ip = static_cast<int64_t>(p);
            auto iq = static_cast<int64_t>(q);
            switch (kind) {
                case TreeKind::V10:
                    if (p < q) probe(ip, iq);
                    break;
                case TreeKind::V1:
                    probe(ip, iq);
                    break;
                default:
                    probe(ip, iq);
                    probe(-ip, iq);
                    break;
            }
        }
    return static_cast<unsigned>(deepest) + 1;
}

BijectivityReport bijectivity_scan(TreeKind kind, unsigned depth, uint64_t q_max) {
    if (kind != TreeKind::V10 && kind != TreeKind::V1 && kind != TreeKind::V)
        throw std::domain_error("bijectivity_scan: unsupported kind");
    if (depth < bijectivity_required_depth(kind, q_max))
        throw std::domain_error("bijectivity_scan: depth too small for presence to be decidable");
    if (depth > 26)
        throw std::domain_error("bijectivity_scan: depth too large for the scan");

    BijectivityReport rep;
    rep.kind = kind;
    rep.depth = depth;
    rep.q_max = q_max;

    auto in_target = [&](const fast::Frac& f) {
        if (f.q < 1 || static_cast<uint64_t>(f.q) > q_max) return false;
        uint64_t pa = static_cast<uint64_t>(f.p < 0 ? -f.p : f.p);
        if (pa > q_max) return false;
        switch (kind) {
            case TreeKind::V10: return f.p > 0 && f.p < f.q;
            case TreeKind::V1: return f.p > 0;
            default: return true;
        }
    };
    auto key_of = [](const fast::Frac& f) {
        uint64_t pa = static_cast<uint64_t>(f.p < 0 ? -f.p : f.p);
        return (f.p < 0 ? (1ull << 62) : 0ull) | (pa << 31) | static_cast<uint64_t>(f.q);
    };
    auto frac_str = [](const fast::Frac& f) {
        return std::to_string(f.p) + "/" + std::to_string(f.q);
    };

    std::unordered_map<uint64_t, uint32_t> seen;
    // size of the target set
    uint64_t pairs = 0;
    for (uint64_t q = 1; q <= q_max; ++q)
        for (uint64_t p = 1; p <= q_max; ++p) {
            if (std::gcd(p, q) != 1) continue;
            if (kind == TreeKind::V10 && p >= q) continue;
            ++pairs;
        }
    rep.target_count = kind == TreeKind::V ? 2 * pairs + 1 : pairs;

    auto value_at = [&](uint64_t n) {
        switch (kind) {
            case TreeKind::V10: return fast::v10_value(n);
            case TreeKind::V1: return fast::v1_value(n);
            default: return fast::v_value(n);
        }
    };

    uint64_t limit = 1ull << depth;   // indices 1 .. 2^depth - 1 have |v| < depth
    for (uint64_t n = 1; n < limit; ++n) {
        fast::Frac f = value_at(n);
        if (!in_target(f)) continue;
        ++rep.found_count;
        uint32_t& c = seen[key_of(f)];
        if (++c == 2 && rep.duplicates.size() < 16)
            rep.duplicates.push_back(frac_str(f));
    }

    // absences
    auto check_missing = [&](const fast::Frac& f) {
        if (!seen.count(key_of(f)) && rep.missing.size() < 16)
            rep.missing.push_back(frac_str(f));
    };
    for (uint64_t q = 1; q <= q_max; ++q)
        for (uint64_t p = 1; p <= q_max; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto ip = static_cast<int64_t>(p);
            auto iq = static_cast<int64_t>(q);
            switch (kind) {
                case TreeKind::V10:
                    if (p < q) check_missing({ip, iq});
                    break;
                case TreeKind::V1:
                    check_missing({ip, iq});
                    break;
                default:
                    check_missing({ip, iq});
                    check_missing({-ip, iq});
                    break;
            }
        }
    if (kind == TreeKind::V) check_missing({0, 1});
    return rep;
}

} // namespace vtree
