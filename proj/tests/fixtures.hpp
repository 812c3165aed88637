#pragma once
// fixtures.hpp - shared fixture tables for unit and acceptance tests:
// the codeword table, the |v| <= 5 address/CFE/value table, the labelled
// trees to depth 5, and the breadth-first sequence prefixes.

#include <cstdint>
#include <vector>

namespace fixtures {

struct CodeRow {
    uint64_t b;
    const char* ci;
    const char* cii;
    unsigned len;
};

// b, CI(b), CII(b), codeword length
inline const std::vector<CodeRow> kCodeRows = {
    {1, "1", "0", 1},
    {2, "011", "100", 3},
    {3, "010", "101", 3},
    {4, "00111", "11000", 5},
    {5, "00110", "11001", 5},
    {6, "00101", "11010", 5},
    {7, "00100", "11011", 5},
    {8, "0001111", "1110000", 7},
    {9, "0001110", "1110001", 7},
    {10, "0001101", "1110010", 7},
    {11, "0001100", "1110011", 7},
    {12, "0001011", "1110100", 7},
    {13, "0001010", "1110101", 7},
    {14, "0001001", "1110110", 7},
    {15, "0001000", "1110111", 7},
    {16, "000011111", "111100000", 9},
    {31, "000010000", "111101111", 9},
    {32, "00000111111", "11111000000", 11},
    {63, "00000100000", "11111011111", 11},
    {64, "0000001111111", "1111110000000", 13},
};

struct AddressRow {
    const char* v;                  // tree address ("" = root)
    std::vector<uint64_t> pds;      // even CFE
    int64_t p, q;                   // the value
};

// Every |v| <= 5 node: address, even CFE, value. The address column is
// the key; pds and values are its decoding, cross-checked by two
// independent decoders.
inline const std::vector<AddressRow> kAddressRows = {
    {"", {1, 1}, 1, 2},
    {"0", {3, 1}, 1, 4},
    {"1", {1, 2}, 2, 3},
    {"00", {7, 1}, 1, 8},
    {"01", {2, 1}, 1, 3},
    {"10", {1, 1, 1, 1}, 3, 5},
    {"11", {1, 4}, 4, 5},
    {"000", {15, 1}, 1, 16},
    {"001", {5, 1}, 1, 6},
    {"010", {3, 2}, 2, 7},
    {"011", {2, 2}, 2, 5},
    {"100", {1, 1, 3, 1}, 5, 9},
    {"101", {1, 1, 1, 2}, 5, 8},
    {"110", {1, 3}, 3, 4},
    {"111", {1, 8}, 8, 9},
    {"0000", {31, 1}, 1, 32},
    {"0001", {11, 1}, 1, 12},
    {"0010", {6, 1}, 1, 7},
    {"0011", {4, 1}, 1, 5},
    {"0100", {3, 1, 1, 1}, 3, 11},
    {"0101", {3, 4}, 4, 13},
    {"0110", {2, 1, 1, 1}, 3, 8},
    {"0111", {2, 4}, 4, 9},
    {"1000", {1, 1, 7, 1}, 9, 17},
    {"1001", {1, 1, 2, 1}, 4, 7},
    {"1010", {1, 1, 1, 1, 1, 1}, 8, 13},
    {"1011", {1, 1, 1, 4}, 9, 14},
    {"1100", {1, 2, 1, 1}, 5, 7},
    {"1101", {1, 3, 1, 1}, 7, 9},
    {"1110", {1, 6}, 6, 7},
    {"1111", {1, 16}, 16, 17},
    {"00000", {63, 1}, 1, 64},
    {"00001", {23, 1}, 1, 24},
    {"00010", {13, 1}, 1, 14},
    {"00011", {9, 1}, 1, 10},
    {"00100", {7, 2}, 2, 15},
    {"00101", {6, 2}, 2, 13},
    {"00110", {5, 2}, 2, 11},
    {"00111", {4, 2}, 2, 9},
    {"01000", {3, 1, 3, 1}, 5, 19},
    {"01001", {3, 1, 1, 2}, 5, 18},
    {"01010", {3, 3}, 3, 10},
    {"01011", {3, 8}, 8, 25},
    {"01100", {2, 1, 3, 1}, 5, 14},
    {"01101", {2, 1, 1, 2}, 5, 13},
    {"01110", {2, 3}, 3, 7},
    {"01111", {2, 8}, 8, 17},
    {"10000", {1, 1, 15, 1}, 17, 33},
    {"10001", {1, 1, 5, 1}, 7, 13},
    {"10010", {1, 1, 3, 2}, 9, 16},
    {"10011", {1, 1, 2, 2}, 7, 12},
    {"10100", {1, 1, 1, 1, 3, 1}, 14, 23},
    {"10101", {1, 1, 1, 1, 1, 2}, 13, 21},
    {"10110", {1, 1, 1, 3}, 7, 11},
    {"10111", {1, 1, 1, 8}, 17, 26},
    {"11000", {1, 2, 3, 1}, 9, 13},
    {"11001", {1, 2, 1, 2}, 8, 11},
    {"11010", {1, 3, 3, 1}, 13, 17},
    {"11011", {1, 3, 1, 2}, 11, 14},
    {"11100", {1, 5}, 5, 6},
    {"11101", {1, 7}, 7, 8},
    {"11110", {1, 12}, 12, 13},
    {"11111", {1, 32}, 32, 33},
};

struct SignedNodeRow {
    uint64_t index;
    const char* v;
    int64_t p, q;
};

// the signed tree to depth 5: index, address, label
inline const std::vector<SignedNodeRow> kVTreeRows = {
    {1, "", 0, 1},
    {2, "0", -1, 1},
    {3, "1", 1, 1},
    {4, "00", -2, 1},
    {5, "01", -1, 2},
    {6, "10", 1, 2},
    {7, "11", 2, 1},
    {8, "000", -4, 1},
    {9, "001", -3, 2},
    {10, "010", -2, 3},
    {11, "011", -1, 4},
    {12, "100", 1, 4},
    {13, "101", 2, 3},
    {14, "110", 3, 2},
    {15, "111", 4, 1},
    {16, "0000", -8, 1},
    {17, "0001", -3, 1},
    {18, "0010", -5, 3},
    {19, "0011", -5, 4},
    {20, "0100", -4, 5},
    {21, "0101", -3, 5},
    {22, "0110", -1, 3},
    {23, "0111", -1, 8},
    {24, "1000", 1, 8},
    {25, "1001", 1, 3},
    {26, "1010", 3, 5},
    {27, "1011", 4, 5},
    {28, "1100", 5, 4},
    {29, "1101", 5, 3},
    {30, "1110", 3, 1},
    {31, "1111", 8, 1},
};

struct TripleNodeRow {
    uint64_t index;
    const char* v;
    int64_t dy_a;      // dyadic numerator; exponent is |v|+1
    int64_t sb_p, sb_q;
    int64_t v10_p, v10_q;
};

// the triple-labelled address tree to depth 5: van der Corput, unary-code
// labels, binary-code labels
inline const std::vector<TripleNodeRow> kTripleRows = {
    {1, "", 1, 1, 2, 1, 2},
    {2, "0", 1, 1, 3, 1, 4},
    {3, "1", 3, 2, 3, 2, 3},
    {4, "00", 1, 1, 4, 1, 8},
    {5, "01", 3, 2, 5, 1, 3},
    {6, "10", 5, 3, 5, 3, 5},
    {7, "11", 7, 3, 4, 4, 5},
    {8, "000", 1, 1, 5, 1, 16},
    {9, "001", 3, 2, 7, 1, 6},
    {10, "010", 5, 3, 8, 2, 7},
    {11, "011", 7, 3, 7, 2, 5},
    {12, "100", 9, 4, 7, 5, 9},
    {13, "101", 11, 5, 8, 5, 8},
    {14, "110", 13, 5, 7, 3, 4},
    {15, "111", 15, 4, 5, 8, 9},
    {16, "0000", 1, 1, 6, 1, 32},
    {17, "0001", 3, 2, 9, 1, 12},
    {18, "0010", 5, 3, 11, 1, 7},
    {19, "0011", 7, 3, 10, 1, 5},
    {20, "0100", 9, 4, 11, 3, 11},
    {21, "0101", 11, 5, 13, 4, 13},
    {22, "0110", 13, 5, 12, 3, 8},
    {23, "0111", 15, 4, 9, 4, 9},
    {24, "1000", 17, 5, 9, 9, 17},
    {25, "1001", 19, 7, 12, 4, 7},
    {26, "1010", 21, 8, 13, 8, 13},
    {27, "1011", 23, 7, 11, 9, 14},
    {28, "1100", 25, 7, 10, 5, 7},
    {29, "1101", 27, 8, 11, 7, 9},   // mediant of 5/7 and 3/4
    {30, "1110", 29, 7, 9, 6, 7},
    {31, "1111", 31, 5, 6, 16, 17},
};

struct FracRow { int64_t p, q; };

// breadth-first sequence prefixes
inline const std::vector<FracRow> kSeqV = {
    {0, 1}, {-1, 1}, {1, 1}, {-2, 1}, {-1, 2}, {1, 2}, {2, 1},
    {-4, 1}, {-3, 2}, {-2, 3}, {-1, 4}, {1, 4}, {2, 3}, {3, 2}, {4, 1},
};

inline const std::vector<FracRow> kSeqV1 = {
    {1, 1}, {1, 2}, {2, 1}, {1, 4}, {2, 3}, {3, 2}, {4, 1},
    {1, 8}, {1, 3}, {3, 5}, {4, 5}, {5, 4}, {5, 3}, {3, 1}, {8, 1},
    {1, 16}, {1, 6}, {2, 7}, {2, 5}, {5, 9}, {5, 8}, {3, 4}, {8, 9},
    {9, 8}, {4, 3},
};

inline const std::vector<FracRow> kSeqV10 = {
    {1, 2}, {1, 4}, {2, 3}, {1, 8}, {1, 3}, {3, 5}, {4, 5},
    {1, 16}, {1, 6}, {2, 7}, {2, 5}, {5, 9}, {5, 8}, {3, 4}, {8, 9},
    {1, 32}, {1, 12}, {1, 7}, {1, 5}, {3, 11}, {4, 13}, {3, 8}, {4, 9},
};

} // namespace fixtures
