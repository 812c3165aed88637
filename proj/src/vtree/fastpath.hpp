#pragma once
// fastpath.hpp - allocation-free evaluators for the big scans.
//
// Addresses are carried as node indices n = (1v)_2 in a uint64, so the
// deep-tree walks never touch strings or heap rationals. Values stay well
// inside int64 for every depth used here (convergents are bounded by
// 2^(|v|+1)); products are taken in __int128. The general BigInt-backed
// paths remain the reference; tests cross-check the two.

#include <cstdint>
#include <vector>

namespace vtree::fast {

struct Frac {
    int64_t p;
    int64_t q;   // > 0
};

// CFE pds of the value at address v (= bits of n below its leading 1),
// decoding v|1|0^inf with CI/CII. Always an even count.
void decode_index_pds(uint64_t n, std::vector<uint64_t>& pds);

// Labels by tree kind, via the corresponding reductions.
Frac v10_value(uint64_t n);
Frac v1_value(uint64_t n);
Frac v_value(uint64_t n);
Frac sb_value(uint64_t n);
Frac vdc_value(uint64_t n);

// qmf_bar(a / 2^k) as a double, streaming over the codeword bits.
double qmf_bar_f64(uint64_t a, unsigned k);

} // namespace vtree::fast
