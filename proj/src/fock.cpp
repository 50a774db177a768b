#include "qfock/fock.hpp"

#include <stdexcept>

#include "qfock/oracle.hpp"
#include "qfock/schur.hpp"

namespace qfock {

namespace {

HalfLaurent qp(int k) { return HalfLaurent::q_power(k); }

int binom2(int r) { return r * (r - 1) / 2; }

HalfLaurent signed_q(int sign, int q_exp) {
  return HalfLaurent::monomial(mpz_class(sign), 2 * q_exp);
}

template <class F>
FockVector map_terms(const FockVector& v, F&& per_term) {
  FockVector out(v.sector);
  for (const auto& [key, c] : v.terms) per_term(key.first, key.second, c, out);
  return out;
}

// Tuple (-lambda_k - 2(r-1-k) - c for k < r, mu).
Tuple divided_tuple(const Partition& lambda, int r, int c, const Partition& mu) {
  Tuple t(r);
  for (int k = 0; k < r; ++k) t[k] = -lambda[k] - 2 * (r - 1 - k) - c;
  t.insert(t.end(), mu.parts().begin(), mu.parts().end());
  return t;
}

}  // namespace

FockVector x_plus(int n, const FockVector& v) {
  const int i = v.sector;
  return map_terms(v, [&](int m, const Partition& mu, const HalfLaurent& c, FockVector& out) {
    for (int j = 0;; ++j) {
      const int a = -2 * m - n - 1 - i - j;
      if (a + mu.length() < 0) break;
      Tuple t{a};
      t.insert(t.end(), mu.parts().begin(), mu.parts().end());
      auto s = straighten(t);
      if (!s) continue;
      const HalfLaurent coef = c * signed_q(s->sign, -2 * m - n - 1 - i - 2 * j);
      for (const auto& lam : horizontal_strips(s->partition, j)) out.terms.add({m + 1, lam}, coef);
    }
  });
}

FockVector x_minus(int n, const FockVector& v) {
  const int i = v.sector;
  const int base_sign = (n + 1 + i) % 2 == 0 ? 1 : -1;
  return map_terms(v, [&](int m, const Partition& mu, const HalfLaurent& c, FockVector& out) {
    const Partition mu_c = conjugate(mu);
    for (int j = 0;; ++j) {
      const int a = 2 * m - n - 1 + i - j;
      if (a + mu_c.length() < 0) break;
      Tuple t{a};
      t.insert(t.end(), mu_c.parts().begin(), mu_c.parts().end());
      auto s = straighten(t);
      if (!s) continue;
      const HalfLaurent coef = c * signed_q(base_sign * s->sign, 2 * j);
      for (const auto& kappa : horizontal_strips(s->partition, j))
        out.terms.add({m - 1, conjugate(kappa)}, coef);
    }
  });
}

FockVector x_plus_divided(int n, int r, const FockVector& v) {
  if (r < 1) throw std::invalid_argument("x_plus_divided: r must be at least 1");
  const int i = v.sector;
  return map_terms(v, [&](int m, const Partition& mu, const HalfLaurent& coeff, FockVector& out) {
    const int c = n + 1 + 2 * m + i;
    const int bound = mu.length() + 1 - r - c;
    if (bound < 0) return;
    for (const auto& lam : partitions_bounded(r, bound, r * bound)) {
      auto s = straighten(divided_tuple(lam, r, c, mu));
      if (!s) continue;
      const HalfLaurent k = coeff * signed_q(s->sign, -3 * binom2(r) - r * c - 2 * lam.weight());
      for (const auto& [nu, lr] : lr_product(lam, s->partition)) out.terms.add({m + r, nu}, k * lr);
    }
  });
}

FockVector x_minus_divided(int n, int r, const FockVector& v) {
  if (r < 1) throw std::invalid_argument("x_minus_divided: r must be at least 1");
  const int i = v.sector;
  const int base_sign = (r * (n + 1 + i)) % 2 == 0 ? 1 : -1;
  return map_terms(v, [&](int m, const Partition& kappa, const HalfLaurent& coeff, FockVector& out) {
    const Partition mu = conjugate(kappa);
    const int c = n + 1 - 2 * m - i;
    const int bound = mu.length() + 1 - r - c;
    if (bound < 0) return;
    for (const auto& lam : partitions_bounded(r, bound, r * bound)) {
      auto s = straighten(divided_tuple(lam, r, c, mu));
      if (!s) continue;
      const HalfLaurent k = coeff * signed_q(base_sign * s->sign, binom2(r) + 2 * lam.weight());
      // s_{lam'} s_{rho'} = sum c^nu_{lam rho} s_{nu'}
      for (const auto& [nu, lr] : lr_product(lam, s->partition))
        out.terms.add({m - r, conjugate(nu)}, k * lr);
    }
  });
}

FockVector chevalley(Gen g, int r, const FockVector& v) {
  return chevalley_using(x_plus_divided, x_minus_divided, g, r, v);
}

FockVector chevalley_using(const DividedAction& plus, const DividedAction& minus, Gen g, int r,
                           const FockVector& v) {
  if (r < 1) throw std::invalid_argument("chevalley: r must be at least 1");
  const int i = v.sector;
  switch (g) {
    case Gen::e1:
      return plus(0, r, v);
    case Gen::f1:
      return minus(0, r, v);
    case Gen::f0:
      // (q^d X_{-1}^+)^r / [r]! = q^{r(2m+i) + r(r+1)} X_{-1}^{+(r)} on charge m
      return map_terms(v, [&](int m, const Partition& mu, const HalfLaurent& c, FockVector& out) {
        auto part = plus(-1, r, FockVector::basis(i, m, mu, c));
        out += part * qp(r * (2 * m + i) + r * (r + 1));
      });
    case Gen::e0:
      // (X_1^- q^{-d})^r / [r]! = q^{-r(2m+i) + r(r-1)} X_1^{-(r)} on charge m
      return map_terms(v, [&](int m, const Partition& mu, const HalfLaurent& c, FockVector& out) {
        auto part = minus(1, r, FockVector::basis(i, m, mu, c));
        out += part * qp(-r * (2 * m + i) + 2 * binom2(r));
      });
    default:
      throw std::invalid_argument("chevalley: not an e/f generator");
  }
}

FockVector k_action(int i, int exponent, const FockVector& v) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("k_action: exponent must be +-1");
  if (i != 0 && i != 1) throw std::invalid_argument("k_action: index must be 0 or 1");
  const int sector = v.sector;
  return scale_by_v_power(v, [&](int m, const Partition&) {
    const int d = 2 * m + sector;
    return 2 * exponent * (i == 1 ? d : 1 - d);
  });
}

FockVector qd_action(int exponent, const FockVector& v) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("qd_action: exponent must be +-1");
  const int sector = v.sector;
  return scale_by_v_power(v, [&](int m, const Partition& lam) {
    return -2 * exponent * (lam.weight() + m * m + m * sector);
  });
}

namespace {

FockVector apply_letter_using(const DividedAction& plus, const DividedAction& minus, const Letter& l,
                              const FockVector& v) {
  switch (l.gen) {
    case Gen::e0:
    case Gen::e1:
    case Gen::f0:
    case Gen::f1:
      return chevalley_using(plus, minus, l.gen, l.power, v);
    case Gen::K0:
      return k_action(0, 1, v);
    case Gen::K1:
      return k_action(1, 1, v);
    case Gen::K0inv:
      return k_action(0, -1, v);
    case Gen::K1inv:
      return k_action(1, -1, v);
    case Gen::qd:
      return qd_action(1, v);
    case Gen::qdinv:
      return qd_action(-1, v);
  }
  throw std::invalid_argument("apply_letter: bad generator");
}

}  // namespace

FockVector apply_letter(const Letter& l, const FockVector& v) {
  return apply_letter_using(x_plus_divided, x_minus_divided, l, v);
}

FockVector apply_word(const Word& w, const FockVector& v) {
  return apply_word_using(x_plus_divided, x_minus_divided, w, v);
}

FockVector apply_word_using(const DividedAction& plus, const DividedAction& minus, const Word& w,
                            const FockVector& v) {
  FockVector cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_letter_using(plus, minus, *it, cur);
  return cur;
}

FockVector psi(int k, const FockVector& v) { return to_fock(psi_k(k, to_power(v))); }
FockVector phi(int k, const FockVector& v) { return to_fock(phi_k(k, to_power(v))); }

}  // namespace qfock
