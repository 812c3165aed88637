#pragma once
// measures.hpp - Gauss-Kuzmin statistics: the pd measure, ideal codeword
// lengths, average codeword length per code, Khinchin's constant, and the
// growth rates phi_b.

#include <cstdint>
#include <string>

namespace vtree {

// mu_GK(b) = log2(1 + 1/(b(b+2)))
double gauss_kuzmin(uint64_t b);
// sum over b >= n telescopes to log2(1 + 1/n)
double gauss_kuzmin_tail(uint64_t n);
// -log2(mu_GK(b))
double ideal_length(uint64_t b);

enum class EntropyCode { Levy, GK, CICII, SB };
const char* entropy_code_name(EntropyCode c);

struct EntropyResult {
    bool divergent = false;
    double value = 0.0;        // partial sum for the divergent case
    double error_bound = 0.0;  // analytic tail bound (0 for closed forms)
    uint64_t terms = 0;        // summation cutoff (0 for closed forms)
};

// H_X = sum_b l_X(b) mu_GK(b); Levy is the closed form pi^2/(6 ln^2 2),
// SB diverges (term ~ log2(e)/b) and is reported symbolically.
EntropyResult entropy(EntropyCode code);

double levy_entropy();     // pi^2 / (6 ln^2 2)
double levy_constant();    // 2^(levy_entropy/2)

struct KhinchinResult {
    double value = 0.0;
    double tail_bound = 0.0;   // bound on the missing exponent mass
    uint64_t b_max = 0;
};

// exp2( sum_{b<=b_max} mu_GK(b) log2 b ), with a tail bound.
KhinchinResult khinchin_estimate(uint64_t b_max);

// (b + sqrt(b^2+4))/2, the larger root of x^2 = bx + 1
double phi(uint64_t b);

struct OptimalityDiagnostic {
    double lambda_floor = 0.0;    // 3 / log2(phi_2) = 9 / log2(phi_14)
    double kraft_sum = 0.0;       // sum_{b=1}^{64} 2^-l*(b), l* the longest
                                  // integral lengths beating lambda_floor
    bool kraft_exceeds_one = false;
};

// The integral-wordlength obstruction to improving on the lambda bound.
OptimalityDiagnostic optimality_diagnostic();

} // namespace vtree
