#pragma once
// qmf.hpp - the binary question-mark function family.
//
// Forward: even CFE -> CI|CII|... codeword stream -> strip trailing zeros
// and one final 1 (the "\10*" operation) -> tree address.
// Inverse: append 1, extend by 0^inf, decode CI/CII alternately until the
// CI-terminator; the pd count is always even.
//
// hat extends the inverse to all positive rationals (reciprocal on the
// 1-subtree), doublehat to all rationals (negation on the 0-subtree).
// The same construction with the unary codes yields Minkowski's ?(x) and
// the Stern-Brocot labels.

#include "vtree/cfe.hpp"
#include "vtree/rational.hpp"
#include "vtree/words.hpp"

namespace vtree {

// --- the core map on (0,1) ---

// Codeword concatenation over the even CFE, before the strip.
BitWord qmf_pre_strip_word(const Rational& x);
// Removes trailing zeros, then exactly one 1. Checked at runtime.
BitWord strip_10star(const BitWord& w);

BitWord qmf_forward(const Rational& x);              // rejects x outside (0,1)
Rational qmf_inverse(const BitWord& v);              // total on A*
EvenCfe qmf_inverse_cfe(const BitWord& v);           // the decoded even CFE

Dyadic qmf_bar(const Rational& x);                   // word_to_dyadic . qmf_forward
Rational qmf_bar_inverse(const Dyadic& d);           // qmf_inverse . dyadic_to_word

// --- extension to Q+ (reciprocal) and Q (negation) ---

BitWord hat_forward(const Rational& x);              // rejects x <= 0
Rational hat_inverse(const BitWord& v);

BitWord doublehat_forward(const Rational& x);        // total on Q
Rational doublehat_inverse(const BitWord& v);

// --- classical question mark / Stern-Brocot via unary codes ---

BitWord sb_forward(const Rational& x);               // rejects x outside (0,1)
Rational sb_inverse(const BitWord& v);

// Minkowski's ?(x) by the alternating dyadic sum over the even CFE.
Dyadic minkowski_q(const Rational& x);
// The same value through the unary-code construction (independent route).
Dyadic minkowski_q_unary(const Rational& x);

} // namespace vtree
