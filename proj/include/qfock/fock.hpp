#pragma once

// The level-one modules V(Lambda_0) (sector 0) and V(Lambda_1) (sector 1)
// on the Schur basis s_lambda e^{m alpha} e^{i alpha/2}.

#include <functional>

#include "qfock/vectors.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// Drinfeld currents X_n^{+-}.
FockVector x_plus(int n, const FockVector& v);
FockVector x_minus(int n, const FockVector& v);

/// Divided powers X_n^{+-(r)} = (X_n^{+-})^r / [r]!, closed forms.
FockVector x_plus_divided(int n, int r, const FockVector& v);
FockVector x_minus_divided(int n, int r, const FockVector& v);

/// e_i^{(r)}, f_i^{(r)} with e1 = X_0^+, f1 = X_0^-, e0 = X_1^- q^{-d}, f0 = q^{d} X_{-1}^+
/// (d here is the charge operator 2m+i).
FockVector chevalley(Gen g, int r, const FockVector& v);

/// Same, built on caller-supplied divided currents (n, r, v).
using DividedAction = std::function<FockVector(int, int, const FockVector&)>;
FockVector chevalley_using(const DividedAction& plus, const DividedAction& minus, Gen g, int r,
                           const FockVector& v);

/// K_1 = q^{d}, K_0 = q^{1-d}; exponent is +1 or -1.
FockVector k_action(int i, int exponent, const FockVector& v);

/// q^{+-d} with eigenvalue q^{-(|lambda| + m^2 + m i)} for d.
FockVector qd_action(int exponent, const FockVector& v);

FockVector apply_letter(const Letter& l, const FockVector& v);
/// Rightmost letter first.
FockVector apply_word(const Word& w, const FockVector& v);
FockVector apply_word_using(const DividedAction& plus, const DividedAction& minus, const Word& w,
                            const FockVector& v);

/// Cartan currents through the power-sum evaluator.
FockVector psi(int k, const FockVector& v);
FockVector phi(int k, const FockVector& v);

}  // namespace qfock
