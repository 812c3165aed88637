#pragma once
// trees.hpp - the five labelled binary trees and their enumerations.
//
// Trees are virtual: a label is computed from its address on demand.
// Addresses and numerical indices relate by n = (1v)_2; children of n are
// 2n and 2n+1.

#include "vtree/qmf.hpp"
#include "vtree/rational.hpp"
#include "vtree/words.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vtree {

enum class TreeKind { V, V1, V10, SB, VDC };

const char* tree_name(TreeKind k);
std::optional<TreeKind> parse_tree(std::string_view s);

// VDC nodes carry dyadics, the others rationals.
using TreeLabel = std::variant<Rational, Dyadic>;

Rational label_rational(const TreeLabel& l);
std::string label_string(const TreeLabel& l);

TreeLabel node_value(TreeKind kind, const BitWord& v);

// Labels at indices 1..count (breadth first).
std::vector<TreeLabel> sequence(TreeKind kind, uint64_t count);

// Symmetric traversal of levels 1..depth: 2^depth - 1 labels, sorted for
// the rational-valued trees.
std::vector<TreeLabel> inorder_labels(TreeKind kind, unsigned depth);

// Forward map; kind must be V, V1, V10 or SB and x in the kind's label set.
BitWord address_of(TreeKind kind, const Rational& x);

struct CoverageStat {
    uint64_t q = 0;
    uint64_t max_len = 0;      // deepest address length over p/q
    uint64_t code_len = 0;     // sum of l_I,II over the even CFE at that p
    Rational worst;            // the p/q attaining max_len
    double lambda = 0.0;       // max_len / log2(q)
};

// max over p coprime to q of |address(p/q)| / log2(q); q >= 2.
CoverageStat coverage_lambda(TreeKind kind, uint64_t q);

struct BijectivityReport {
    TreeKind kind;
    unsigned depth = 0;
    uint64_t q_max = 0;
    uint64_t target_count = 0;    // fractions that must appear
    uint64_t found_count = 0;
    std::vector<std::string> duplicates;   // capped
    std::vector<std::string> missing;      // capped
    bool ok() const { return duplicates.empty() && missing.empty(); }
};

// Scans all nodes with |v| < depth; every reduced fraction of the kind's
// label set with |p| <= q_max and q <= q_max must occur exactly once.
// Supported kinds: V10, V1, V.
BijectivityReport bijectivity_scan(TreeKind kind, unsigned depth, uint64_t q_max);

// Depth (in bits) needed before absence of denominator q is a failure.
unsigned bijectivity_required_depth(TreeKind kind, uint64_t q_max);

} // namespace vtree
