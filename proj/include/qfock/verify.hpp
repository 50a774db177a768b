#pragma once

// Relation and identity suites over finite sets of basis vectors.

#include <functional>
#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/golden.hpp"
#include "qfock/serialize.hpp"

namespace qfock {

struct Violation {
  std::string input;
  std::string expected;
  std::string actual;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct CheckReport {
  std::string suite;
  Json config;
  std::vector<Violation> violations;
  std::size_t checked = 0;  // number of (vector, relation) pairs evaluated
  bool pass() const { return violations.empty(); }
};

Json to_json(const CheckReport& r);

/// The closed-form actions a suite exercises. Replaceable so that a
/// perturbed action can be fed through the suites.
struct ActionTable {
  std::function<FockVector(int, const FockVector&)> x_plus;
  std::function<FockVector(int, const FockVector&)> x_minus;
  std::function<FockVector(int, int, const FockVector&)> x_plus_divided;
  std::function<FockVector(int, int, const FockVector&)> x_minus_divided;

  FockVector chevalley(Gen g, int r, const FockVector& v) const;
  FockVector apply_word(const Word& w, const FockVector& v) const;
};

ActionTable default_actions();

/// Basis vectors s_lambda e^{m alpha} e^{i alpha/2}, |lambda| <= max_weight,
/// |m| <= max_charge, both sectors.
std::vector<FockVector> basis_vectors(int max_weight, int max_charge);

/// K-commutations, q^d-commutations, [e_i, f_j], K invertibility, K0 K1 = q,
/// integrality, and e/f divided powers against iterated currents (r <= 3,
/// weight <= min(max_weight, 4)).
CheckReport check_chevalley(int max_weight, int max_charge, const ActionTable& a = default_actions());

/// Both Serre sums for i != j.
CheckReport check_serre(int max_weight, int max_charge = 2, const ActionTable& a = default_actions());

/// X^{+-} exchange relations and [X_m^+, X_n^-] for |m|, |n| <= index_window.
CheckReport check_drinfeld(int max_weight, int index_window, int max_charge = 2,
                           const ActionTable& a = default_actions());

/// prod_{i<j}(z_i - q z_j) - sum_w (-q)^{l(w)} z^{w delta}: every residual
/// monomial has a repeated exponent and its coefficient vanishes at q = 1.
CheckReport check_q_vandermonde(int k);

/// Matrix-count LR vs Jacobi-Trudi/Pieri vs bialternants, nonnegativity,
/// conjugation symmetry, for |lambda| + |mu| <= max_total_weight.
CheckReport check_lr(int max_total_weight);

struct OracleConfig {
  int max_weight = 5;
  int max_charge = 2;
  int max_index = 3;
  int divided_max_weight = 3;
  int divided_max_r = 3;
};

/// Closed forms vs the power-sum evaluator; divided powers vs [r]!-scaled
/// iteration.
CheckReport check_oracle(const OracleConfig& cfg, const ActionTable& a = default_actions());

/// S_{-t_1} ... S_{-t_l}.1 through the oracle against the straightened
/// Schur function, for all tuples of length <= max_length with entries in
/// [lo, hi]. Suffix states are shared between tuples.
CheckReport check_straighten_oracle(int max_length, int lo, int hi);

/// X_n^{+-} e^{r alpha} e^{i alpha/2} vanishes exactly when n > -+2r - 1 -+ i,
/// for |r| <= max_r, |n| <= max_n; and the highest weight chains
/// X^+_{-2r+1-i} ... X^+_{-1-i} e^{i alpha/2} = e^{r alpha} e^{i alpha/2} for r <= max_r.
CheckReport check_extremal(int max_r, int max_n, const ActionTable& a = default_actions());

/// The four single divided-power evaluations on extremal vectors and the
/// four alternating f-chains from the highest weight vectors, 0 <= m <= max_m.
CheckReport check_extremal_words(int max_m, const ActionTable& a = default_actions());

/// One table of word values on the highest weight vector of a sector.
CheckReport check_golden(int sector, const ActionTable& a = default_actions());

}  // namespace qfock
