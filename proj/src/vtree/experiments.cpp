#include "vtree/experiments.hpp"

#include "vtree/fastpath.hpp"
#include "vtree/qmf.hpp"
#include "vtree/words.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace vtree {

namespace {

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

unsigned level_of(uint64_t n) { return static_cast<unsigned>(std::bit_width(n)); }

template <class Fn>
void inorder_indices_rec(uint64_t n, unsigned depth, Fn& fn) {
    if (level_of(n) == depth) {
        fn(n);
        return;
    }
    inorder_indices_rec(2 * n, depth, fn);
    fn(n);
    inorder_indices_rec(2 * n + 1, depth, fn);
}

fast::Frac value_for(TreeKind kind, uint64_t n) {
    switch (kind) {
        case TreeKind::V10: return fast::v10_value(n);
        case TreeKind::V1: return fast::v1_value(n);
        case TreeKind::V: return fast::v_value(n);
        case TreeKind::SB: return fast::sb_value(n);
        default: return fast::vdc_value(n);
    }
}

// FSM states after the address of n, with and without its last bit.
struct NodeStates {
    FsmState parent, child;
};

NodeStates fsm_states_of_index(uint64_t n) {
    NodeStates st;
    unsigned top = level_of(n) - 1;   // address length
    FsmState s;
    FsmState prev = s;
    for (unsigned i = 0; i < top; ++i) {
        prev = s;
        int bit = static_cast<int>((n >> (top - 1 - i)) & 1ull);
        s = fsm_step(s, bit);
    }
    st.parent = prev;
    st.child = s;
    return st;
}

__int128 det_of(const fast::Frac& a, const fast::Frac& b) {
    return static_cast<__int128>(b.p) * a.q - static_cast<__int128>(a.p) * b.q;
}

std::string frac_str(const fast::Frac& f) {
    return std::to_string(f.p) + "/" + std::to_string(f.q);
}

} // namespace

DeterminantReport verify_determinants(TreeKind kind, unsigned depth) {
    if (depth < 1 || depth > 30)
        throw std::domain_error("verify_determinants: depth must be in 1..30");
    if (kind == TreeKind::VDC)
        throw std::domain_error("verify_determinants: unsupported kind");
    DeterminantReport rep;
    rep.kind = kind;
    rep.depth = depth;
    rep.classified = kind == TreeKind::V10;

    bool have_prev = false;
    fast::Frac prev{0, 1};
    uint64_t prev_idx = 0;

    auto note_failure = [&](std::string msg) {
        ++rep.failure_count;
        if (rep.failures.size() < 16) rep.failures.push_back(std::move(msg));
    };

    auto visit = [&](uint64_t n) {
        fast::Frac cur = value_for(kind, n);
        if (have_prev) {
            ++rep.pairs;
            __int128 det = det_of(prev, cur);
            if (det <= 0) {
                note_failure("pair (" + frac_str(prev) + ", " + frac_str(cur) + "): determinant not positive");
            } else {
                uint64_t d = static_cast<uint64_t>(det);
                bool pow2 = det <= (static_cast<__int128>(1) << 62) && (d & (d - 1)) == 0;
                if (!pow2) {
                    note_failure("pair (" + frac_str(prev) + ", " + frac_str(cur) + "): determinant " +
                                 std::to_string(d) + " is not a power of two");
                } else {
                    unsigned e = static_cast<unsigned>(std::countr_zero(d));
                    ++rep.by_exponent[e];
                    if (kind == TreeKind::SB && e != 0) {
                        note_failure("pair (" + frac_str(prev) + ", " + frac_str(cur) + "): determinant " +
                                     std::to_string(d) + " on the Stern-Brocot tree");
                    } else if (rep.classified) {
                        uint64_t bottom = level_of(n) >= level_of(prev_idx) ? n : prev_idx;
                        uint64_t other = bottom == n ? prev_idx : n;
                        bool parent_side = other == bottom / 2;
                        NodeStates st = fsm_states_of_index(bottom);
                        unsigned expected;
                        switch (st.child.kind) {
                            case FsmState::Kind::A: expected = 0; break;
                            case FsmState::Kind::B:
                                expected = parent_side ? static_cast<unsigned>(st.child.k) : 0;
                                break;
                            default:
                                expected = static_cast<unsigned>(st.child.k) - 1;
                                break;
                        }
                        if (e != expected) {
                            note_failure("pair (" + frac_str(prev) + ", " + frac_str(cur) + "): got 2^" +
                                         std::to_string(e) + ", state " + st.parent.to_string() + "->" +
                                         st.child.to_string() + " predicts 2^" + std::to_string(expected));
                        }
                    }
                }
            }
        }
        prev = cur;
        prev_idx = n;
        have_prev = true;
    };
    inorder_indices_rec(1, depth, visit);
    return rep;
}

MediantReport verify_mediants(TreeKind kind, unsigned depth) {
    if (depth < 2 || depth > 30)
        throw std::domain_error("verify_mediants: depth must be in 2..30");
    if (kind == TreeKind::VDC)
        throw std::domain_error("verify_mediants: unsupported kind");
    MediantReport rep;
    rep.kind = kind;
    rep.depth = depth;

    fast::Frac window[3];
    int have = 0;

    auto note_failure = [&](const std::string& msg) {
        ++rep.failure_count;
        if (rep.failures.size() < 16) rep.failures.push_back(msg);
    };

    auto visit = [&](uint64_t n) {
        fast::Frac cur = value_for(kind, n);
        if (have < 3) {
            window[have++] = cur;
        } else {
            window[0] = window[1];
            window[1] = window[2];
            window[2] = cur;
        }
        if (have == 3) {
            const fast::Frac &lo = window[0], &mid = window[1], &hi = window[2];
            __int128 dplus = det_of(mid, hi);
            __int128 dminus = det_of(lo, mid);
            __int128 g = std::gcd(static_cast<int64_t>(dplus), static_cast<int64_t>(dminus));
            __int128 wp = dplus / g, wm = dminus / g;
            __int128 num = wp * lo.p + wm * hi.p;
            __int128 den = wp * lo.q + wm * hi.q;
            if (num * mid.q != static_cast<__int128>(mid.p) * den)
                note_failure("at " + frac_str(mid) + ": weighted mediant of " + frac_str(lo) +
                             " and " + frac_str(hi) + " differs");
            ++rep.interior;
        }
    };
    inorder_indices_rec(1, depth, visit);
    return rep;
}

IntegralResult riemann_integral(unsigned k, bool exact, const ProgressFn& progress) {
    if (k < 1 || k > 30)
        throw std::domain_error("riemann_integral: k must be in 1..30");
    IntegralResult r;
    r.k = k;
    uint64_t n = 1ull << k;
    constexpr uint64_t tick = 1ull << 24;
    Kahan s;
    for (uint64_t a = 1; a < n; ++a) {
        double fx = fast::qmf_bar_f64(a, k);
        s.add(fx - std::ldexp(static_cast<double>(a), -static_cast<int>(k)));
        if (progress && (a % tick) == 0) progress(a, n);
    }
    r.value = std::ldexp(s.sum, -static_cast<int>(k));
    if (exact) {
        if (k > 16)
            throw std::domain_error("riemann_integral: exact accumulation supports k <= 16");
        uint64_t m = 4ull * k + 64;
        BigInt total(0);
        for (uint64_t a = 1; a < n; ++a) {
            uint64_t aa = a, kk = k;
            while ((aa & 1ull) == 0) { aa >>= 1; --kk; }
            Dyadic fx = qmf_bar(Dyadic(BigInt::from_uint64(aa), kk).to_rational());
            if (fx.exponent() > m) throw std::logic_error("riemann_integral: exponent bound exceeded");
            total += (fx.numerator() << (m - fx.exponent())) - (BigInt::from_uint64(a) << (m - k));
        }
        r.exact = Rational(total, BigInt::pow2(m + k));
    }
    return r;
}

double arc_length(unsigned k, const ProgressFn& progress) {
    if (k < 1 || k > 30)
        throw std::domain_error("arc_length: k must be in 1..30");
    uint64_t n = 1ull << k;
    constexpr uint64_t tick = 1ull << 24;
    double dx = std::ldexp(1.0, -static_cast<int>(k));
    Kahan s;
    double prev = 0.0;
    for (uint64_t a = 1; a <= n; ++a) {
        double cur = a == n ? 1.0 : fast::qmf_bar_f64(a, k);
        s.add(std::hypot(dx, cur - prev));
        prev = cur;
        if (progress && (a % tick) == 0) progress(a, n);
    }
    return s.sum;
}

EnvelopeReport verify_envelope(unsigned k) {
    if (k < 1 || k > 20)
        throw std::domain_error("verify_envelope: k must be in 1..20");
    EnvelopeReport rep;
    rep.k = k;
    const Rational eight_ninths(8, 9), nine_eighths(9, 8);
    uint64_t n = 1ull << k;
    for (uint64_t a0 = 1; a0 < n; ++a0) {
        uint64_t a = a0, kk = k;
        while ((a & 1ull) == 0) { a >>= 1; --kk; }
        Dyadic xd(BigInt::from_uint64(a), kk);
        Rational x = xd.to_rational();
        Rational fx = qmf_bar(x).to_rational();
        Rational gx = qmf_bar_inverse(xd);
        Rational lo = eight_ninths * x, hi = nine_eighths * x;
        ++rep.points;
        if (!(lo <= gx && gx <= x && x <= fx && fx <= hi)) {
            ++rep.violation_count;
            if (rep.violations.size() < 16)
                rep.violations.push_back("x = " + xd.to_string());
        }
        bool is_one_num = a == 1;
        bool is_three_num = a == 3;
        if (gx == lo) {
            ++rep.left_touch;
            if (!is_three_num && rep.equality_anomalies.size() < 16)
                rep.equality_anomalies.push_back("left equality off-anchor at " + xd.to_string());
        } else if (is_three_num && rep.equality_anomalies.size() < 16) {
            rep.equality_anomalies.push_back("left anchor without equality at " + xd.to_string());
        }
        bool mid_eq = gx == x || fx == x;
        if (mid_eq) {
            ++rep.mid_touch;
            if (!is_one_num && rep.equality_anomalies.size() < 16)
                rep.equality_anomalies.push_back("fixed point off-anchor at " + xd.to_string());
        } else if (is_one_num && rep.equality_anomalies.size() < 16) {
            rep.equality_anomalies.push_back("anchor 2^-j is not a fixed point at " + xd.to_string());
        }
        if (fx == hi) {
            ++rep.right_touch;
            if (rep.equality_anomalies.size() < 16)
                rep.equality_anomalies.push_back("right equality on a dyadic at " + xd.to_string());
        }
    }
    return rep;
}

ParabolaReport verify_parabola(unsigned k_max) {
    if (k_max > 16)
        throw std::domain_error("verify_parabola: k_max must be <= 16");
    ParabolaReport rep;
    rep.k_max = k_max;
    const Rational four_thirds(4, 3), one_twelfth(1, 12), three_quarters(3, 4);
    for (unsigned j = 0; j <= k_max; ++j) {
        Rational two_j(BigInt(1), BigInt::pow2(j));
        for (uint64_t a = 512; a <= 1024; ++a) {
            Rational y(BigInt::from_uint64(a), BigInt::pow2(j + 10));
            if (!(y < Rational(1))) continue;   // y = 1 at j = 0, a = 1024
            uint64_t aa = a;
            unsigned kk = j + 10;
            while ((aa & 1ull) == 0) { aa >>= 1; --kk; }
            Rational lhs = qmf_bar_inverse(Dyadic(BigInt::from_uint64(aa), kk));
            Rational t = y - three_quarters * two_j;
            Rational rhs = four_thirds * Rational(BigInt::pow2(j), BigInt(1)) * t * t + y - one_twelfth * two_j;
            ++rep.points;
            bool anchor = a == 512 || a == 768 || a == 1024;
            if (lhs < rhs) {
                ++rep.violation_count;
                if (rep.violations.size() < 16)
                    rep.violations.push_back("j = " + std::to_string(j) + ", y = " + y.to_string() +
                                             ": value " + lhs.to_string() + " < bound " + rhs.to_string());
            }
            if ((lhs == rhs) != anchor) {
                rep.anchors_ok = false;
                if (rep.equality_anomalies.size() < 16)
                    rep.equality_anomalies.push_back("j = " + std::to_string(j) + ", y = " + y.to_string() +
                                                     (anchor ? ": anchor without equality" : ": equality off-anchor"));
            }
        }
    }
    return rep;
}

DerivativePrediction derivative_prediction(const Rational& x) {
    if (!x.in_unit_interval())
        throw std::domain_error("derivative_prediction: input must lie in (0,1)");
    Cfe c = cfe_expand(x);
    DerivativePrediction pred;
    bool odd = c.pds.size() % 2 == 1;
    bool pow = c.pds.back().is_pow2();
    if (odd) {
        pred.alpha_left = 0;
        pred.alpha_right = pow ? -1 : 1;
    } else {
        pred.alpha_left = pow ? -1 : 1;
        pred.alpha_right = 0;
    }
    uint64_t bits = 0;
    for (const BigInt& b : c.pds)
        bits += codeword_length(b, CodeFlavor::CI).to_uint64();
    pred.code_bits = bits;
    BigInt q2 = x.den() * x.den();
    auto limit = [&](int alpha) {
        int64_t e = static_cast<int64_t>(bits) + alpha;
        if (e < 0) throw std::logic_error("derivative_prediction: negative exponent");
        return Rational(q2, BigInt::pow2(static_cast<uint64_t>(e)));
    };
    pred.left = limit(pred.alpha_left);
    pred.right = limit(pred.alpha_right);
    return pred;
}

Rational predicted_limit(const Rational& x, Side side) {
    DerivativePrediction p = derivative_prediction(x);
    return side == Side::Left ? p.left : p.right;
}

ProbeResult derivative_probe(const Rational& x, Side side, uint64_t n) {
    if (n < 1) throw std::domain_error("derivative_probe: n must be >= 1");
    DerivativePrediction pred = derivative_prediction(x);
    ProbeResult r;
    r.side = side;
    r.n = n;
    r.predicted = side == Side::Left ? pred.left : pred.right;
    int alpha = side == Side::Left ? pred.alpha_left : pred.alpha_right;
    int64_t es = static_cast<int64_t>(pred.code_bits) + alpha;
    if (es < 1) throw std::logic_error("derivative_probe: degenerate exponent");
    uint64_t e = static_cast<uint64_t>(es);
    r.image = qmf_bar(x);
    r.perturbed = r.image.add_pow2(side == Side::Left ? -1 : +1, n + e);
    r.x_n = qmf_bar_inverse(r.perturbed);
    Rational dy = r.perturbed.to_rational() - r.image.to_rational();
    Rational dx = r.x_n - x;
    if (dx.is_zero()) throw std::logic_error("derivative_probe: zero denominator step");
    r.quotient = dy / dx;
    return r;
}

SelfSimilarityStat self_similarity_stat(unsigned k) {
    if (k < 1 || k > 20)
        throw std::domain_error("self_similarity_stat: k must be in 1..20");
    SelfSimilarityStat st;
    st.k = k;
    uint64_t n = 1ull << k;
    for (uint64_t a = 1; a < n; ++a) {
        double half_image = 0.5 * fast::qmf_bar_f64(a, k);
        double image_of_half = fast::qmf_bar_f64(a, k + 1);
        double dev = std::fabs(image_of_half - half_image);
        if (dev > st.max_deviation) {
            st.max_deviation = dev;
            st.arg_x = std::ldexp(static_cast<double>(a), -static_cast<int>(k));
        }
    }
    return st;
}

MonotonicityReport verify_monotone(uint64_t samples, uint64_t q_max, uint64_t seed) {
    if (q_max < 3) throw std::domain_error("verify_monotone: q_max must be >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> qdist(2, q_max);
    MonotonicityReport rep;

    auto draw = [&]() {
        for (;;) {
            uint64_t q = qdist(rng);
            std::uniform_int_distribution<uint64_t> pdist(1, q - 1);
            uint64_t p = pdist(rng);
            if (std::gcd(p, q) == 1) return Rational(static_cast<int64_t>(p), static_cast<int64_t>(q));
        }
    };
    // lexicographic comparison of pre-strip codewords as infinite words
    // (both end in 1 0^inf, so 0-padding decides exactly)
    auto lex_less = [](const BitWord& a, const BitWord& b) {
        size_t len = std::max(a.size(), b.size());
        for (size_t i = 0; i < len; ++i) {
            int ai = i < a.size() ? a.bit(i) : 0;
            int bi = i < b.size() ? b.bit(i) : 0;
            if (ai != bi) return ai < bi;
        }
        return false;
    };

    while (rep.samples < samples) {
        Rational x = draw(), y = draw();
        if (x == y) continue;
        if (y < x) std::swap(x, y);
        ++rep.samples;
        bool image_ok = qmf_bar(x) < qmf_bar(y);
        bool lex_ok = lex_less(qmf_pre_strip_word(x), qmf_pre_strip_word(y));
        if (!image_ok || !lex_ok) ++rep.failures;
    }
    return rep;
}

} // namespace vtree
