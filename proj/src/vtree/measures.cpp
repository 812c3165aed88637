#include "vtree/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vtree {

namespace {
constexpr double LOG2E = std::numbers::log2e;

double log2_1p(double x) { return std::log1p(x) * LOG2E; }

// Kahan-compensated accumulator
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};
} // namespace

double gauss_kuzmin(uint64_t b) {
    if (b < 1) throw std::domain_error("gauss_kuzmin: b must be >= 1");
    double db = static_cast<double>(b);
    return log2_1p(1.0 / (db * (db + 2.0)));
}

double gauss_kuzmin_tail(uint64_t n) {
    if (n < 1) throw std::domain_error("gauss_kuzmin_tail: n must be >= 1");
    return log2_1p(1.0 / static_cast<double>(n));
}

double ideal_length(uint64_t b) {
    return -std::log2(gauss_kuzmin(b));
}

const char* entropy_code_name(EntropyCode c) {
    switch (c) {
        case EntropyCode::Levy: return "levy";
        case EntropyCode::GK: return "gk";
        case EntropyCode::CICII: return "ci";
        case EntropyCode::SB: return "sb";
    }
    return "?";
}

double levy_entropy() {
    double ln2 = std::numbers::ln2;
    return std::numbers::pi * std::numbers::pi / (6.0 * ln2 * ln2);
}

double levy_constant() { return std::exp2(levy_entropy() / 2.0); }

EntropyResult entropy(EntropyCode code) {
    EntropyResult r;
    switch (code) {
        case EntropyCode::Levy: {
            r.value = levy_entropy();
            r.error_bound = 1e-15;
            return r;
        }
        case EntropyCode::CICII: {
            // exact block sums: 2^k codewords of length 2k+1 carry measure
            // log2(1+2^-k) - log2(1+2^-k-1)
            Kahan s;
            constexpr int K = 256;
            for (int k = 0; k < K; ++k) {
                double block = log2_1p(std::ldexp(1.0, -k)) - log2_1p(std::ldexp(1.0, -(k + 1)));
                s.add((2.0 * k + 1.0) * block);
            }
            r.value = s.sum;
            // tail: (2K+3) L_{K+1} + 2 sum_{k>K+1} L_k with L_k <= log2(e) 2^-k
            r.error_bound = (2.0 * K + 3.0) * LOG2E * std::ldexp(1.0, -(K + 1))
                          + 4.0 * LOG2E * std::ldexp(1.0, -(K + 2)) + 1e-13;
            r.terms = K;
            return r;
        }
        case EntropyCode::GK: {
            constexpr uint64_t N = 20'000'000;
            Kahan s;
            for (uint64_t b = 1; b <= N; ++b) {
                double mu = gauss_kuzmin(b);
                s.add(-mu * std::log2(mu));
            }
            r.value = s.sum;
            double dn = static_cast<double>(N);
            // term < 2 log2(b+1) * log2(e)/b^2, integral comparison
            r.error_bound = 2.0 * LOG2E * (std::log2(dn + 1.0) + 2.0 * LOG2E) / dn + 1e-10;
            r.terms = N;
            return r;
        }
        case EntropyCode::SB: {
            // sum_b b*mu(b): terms approach log2(e)/b, a harmonic tail
            r.divergent = true;
            constexpr uint64_t N = 1'000'000;
            Kahan s;
            for (uint64_t b = 1; b <= N; ++b)
                s.add(static_cast<double>(b) * gauss_kuzmin(b));
            r.value = s.sum;   // partial sum, for display only
            r.terms = N;
            return r;
        }
    }
    throw std::logic_error("entropy: unknown code");
}

KhinchinResult khinchin_estimate(uint64_t b_max) {
    if (b_max < 1) throw std::domain_error("khinchin_estimate: b_max must be >= 1");
    Kahan s;
    for (uint64_t b = 2; b <= b_max; ++b)
        s.add(gauss_kuzmin(b) * std::log2(static_cast<double>(b)));
    KhinchinResult r;
    r.b_max = b_max;
    r.value = std::exp2(s.sum);
    double dn = static_cast<double>(b_max);
    r.tail_bound = LOG2E * (std::log2(dn) + 2.0 * LOG2E) / dn;
    return r;
}

double phi(uint64_t b) {
    if (b < 1) throw std::domain_error("phi: b must be >= 1");
    double db = static_cast<double>(b);
    return (db + std::sqrt(db * db + 4.0)) / 2.0;
}

OptimalityDiagnostic optimality_diagnostic() {
    OptimalityDiagnostic d;
    d.lambda_floor = 3.0 / std::log2(phi(2));
    Kahan s;
    for (uint64_t b = 1; b <= 64; ++b) {
        double x = d.lambda_floor * std::log2(phi(b));
        // largest integer length strictly below the floor rate
        double l = std::floor(x);
        if (l >= x - 1e-9) l -= 1.0;
        s.add(std::exp2(-l));
    }
    d.kraft_sum = s.sum;
    d.kraft_exceeds_one = d.kraft_sum > 1.0;
    return d;
}

} // namespace vtree
