#pragma once
// experiments.hpp - the numerical verification harness: determinant and
// mediant laws over linearized trees, the integral and arc-length sums,
// envelope and parabola scans, one-sided derivative probes, self-similarity.

#include "vtree/cfe.hpp"
#include "vtree/codes.hpp"
#include "vtree/rational.hpp"
#include "vtree/trees.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vtree {

// ---- determinants of in-order neighbours ----

struct DeterminantReport {
    TreeKind kind;
    unsigned depth = 0;
    uint64_t pairs = 0;
    bool classified = false;               // FSM prediction checked (V10)
    std::map<unsigned, uint64_t> by_exponent;
    std::vector<std::string> failures;     // capped at 16
    uint64_t failure_count = 0;
    bool ok() const { return failure_count == 0; }
};

// Every consecutive determinant p_{k+1} q_k - p_k q_{k+1} over the in-order
// linearization must be a power of two. For V10 each pair is additionally
// checked against the state-machine prediction keyed on the deeper node w
// (parent state = fsm(w minus last bit), child state = fsm(w)):
//   child A          -> 1 on both pairs
//   child B_e        -> 2^e on the pair with w's direct parent, 1 on the other
//   child C_e        -> 2^(e-1) on both pairs
// (barred states mirror). For SB the determinant must be identically 1.
DeterminantReport verify_determinants(TreeKind kind, unsigned depth);

// ---- weighted mediants ----

struct MediantReport {
    TreeKind kind;
    unsigned depth = 0;
    uint64_t interior = 0;
    std::vector<std::string> failures;
    uint64_t failure_count = 0;
    bool ok() const { return failure_count == 0; }
};

MediantReport verify_mediants(TreeKind kind, unsigned depth);

// ---- Riemann sum and arc length ----

struct IntegralResult {
    unsigned k = 0;
    double value = 0.0;
    std::optional<Rational> exact;   // rational accumulation, k <= 16
};

// called periodically by the long grid sweeps: (grid points done, total)
using ProgressFn = std::function<void(uint64_t, uint64_t)>;

// 2^-k sum_{a=1}^{2^k-1} (qmf_bar(a/2^k) - a/2^k)
IntegralResult riemann_integral(unsigned k, bool exact = false, const ProgressFn& progress = {});

// polygonal chain through (a/2^k, qmf_bar(a/2^k)), endpoints (0,0) and (1,1)
double arc_length(unsigned k, const ProgressFn& progress = {});

// ---- envelope scan ----

struct EnvelopeReport {
    unsigned k = 0;
    uint64_t points = 0;
    uint64_t violation_count = 0;
    std::vector<std::string> violations;    // capped
    uint64_t left_touch = 0;    // qmf_bar_inverse(x) == (8/9) x, expected at a == 3
    uint64_t mid_touch = 0;     // fixed points, expected at a == 1
    uint64_t right_touch = 0;   // qmf_bar(x) == (9/8) x, never on dyadics
    std::vector<std::string> equality_anomalies;
    bool ok() const { return violation_count == 0 && equality_anomalies.empty(); }
};

// (8/9) x <= qmf_bar_inverse(x) <= x <= qmf_bar(x) <= (9/8) x on all
// dyadics with exponent <= k, exact arithmetic.
EnvelopeReport verify_envelope(unsigned k);

// ---- parabola scan ----

struct ParabolaReport {
    unsigned k_max = 0;
    uint64_t points = 0;
    uint64_t violation_count = 0;
    std::vector<std::string> violations;    // capped
    std::vector<std::string> equality_anomalies;
    bool anchors_ok = true;    // equality exactly at the three anchors per band
    bool ok() const { return violation_count == 0 && anchors_ok; }
};

// qmf_bar_inverse(y) >= (4/3) 2^j (y - (3/4)2^-j)^2 + y - (1/12)2^-j on a
// 2^-(j+10) grid of each band [2^-j-1, 2^-j], j <= k_max, exact arithmetic.
ParabolaReport verify_parabola(unsigned k_max);

// ---- one-sided derivative probes ----

enum class Side { Left, Right };

struct DerivativePrediction {
    int alpha_left = 0;
    int alpha_right = 0;
    uint64_t code_bits = 0;        // sum l_I,II(b_i) over the canonical CFE
    Rational left, right;          // q^2 2^-(alpha+code_bits)
};

DerivativePrediction derivative_prediction(const Rational& x);
Rational predicted_limit(const Rational& x, Side side);

struct ProbeResult {
    Side side = Side::Left;
    uint64_t n = 0;
    Dyadic image;            // qmf_bar(x)
    Dyadic perturbed;        // image -+ 2^-(n + e_side)
    Rational x_n;            // qmf_bar_inverse(perturbed)
    Rational quotient;       // exact difference quotient
    Rational predicted;
};

// Difference quotient at x with the image perturbed by 2^-(n+e), where
// 2^-e is the predicted limit's power-of-two part; quotients converge to
// predicted_limit(x, side) geometrically in n.
ProbeResult derivative_probe(const Rational& x, Side side, uint64_t n);

// ---- self-similarity statistic ----

struct SelfSimilarityStat {
    unsigned k = 0;
    double max_deviation = 0.0;   // max |qmf_bar(x/2) - qmf_bar(x)/2|
    double arg_x = 0.0;
};

SelfSimilarityStat self_similarity_stat(unsigned k);

// ---- monotonicity sampling ----

struct MonotonicityReport {
    uint64_t samples = 0;
    uint64_t failures = 0;
    bool ok() const { return failures == 0; }
};

// Random pairs x < x' in Q1: qmf_bar must preserve order and the pre-strip
// codewords must be lexicographically ordered (0-padded comparison).
MonotonicityReport verify_monotone(uint64_t samples, uint64_t q_max, uint64_t seed);

} // namespace vtree
