#pragma once
// ops_inventory.hpp - the canonical list of public library operations.
// The CLI keeps a dispatch table mapping subcommands to the operations they
// exercise; a test asserts the table covers this list.

#include <array>
#include <string_view>

namespace vtree {

inline constexpr std::array<std::string_view, 40> kOperations = {
    "word_to_index",    "index_to_word",   "word_to_dyadic",   "dyadic_to_word",
    "cfe_expand",       "even_normalize",  "cfe_value",        "convergents",
    "encode",           "decode_prefix",   "codeword_length",  "fsm_run",
    "qmf_forward",      "qmf_inverse",     "qmf_bar",          "qmf_bar_inverse",
    "hat",              "doublehat",       "minkowski_q",      "sb_inverse",
    "node_value",       "sequence",        "inorder_linearize", "address_of",
    "coverage_lambda",  "bijectivity_scan",
    "gauss_kuzmin",     "ideal_length",    "entropy",          "khinchin_estimate",
    "phi",
    "verify_determinants", "verify_mediants", "riemann_integral", "arc_length",
    "verify_envelope",  "verify_parabola", "derivative_probe", "self_similarity_stat",
    "verify_monotone",
};

} // namespace vtree
