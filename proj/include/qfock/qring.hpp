#pragma once

// Exact Laurent polynomials in v = q^{1/2}.
//
// Exponents are stored in units of v so that the half-integral q-powers
// carried by the Cartan currents fit in the same ring as everything else.
// Every value is kept normalized: no stored coefficient is zero.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qfock {

template <class Coeff>
class Laurent {
 public:
  using Terms = std::map<int, Coeff>;  // v-exponent -> coefficient

  Laurent() = default;
  Laurent(long c) {  // NOLINT(google-explicit-constructor): constants embed
    if (c != 0) terms_.emplace(0, Coeff(c));
  }
  explicit Laurent(Coeff c) {
    if (c != 0) terms_.emplace(0, std::move(c));
  }

  static Laurent monomial(Coeff c, int v_exp) {
    Laurent r;
    if (c != 0) r.terms_.emplace(v_exp, std::move(c));
    return r;
  }
  static Laurent v_power(int k) { return monomial(Coeff(1), k); }
  static Laurent q_power(int k) { return monomial(Coeff(1), 2 * k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(int v_exp) const {
    auto it = terms_.find(v_exp);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  int max_exponent() const { return terms_.rbegin()->first; }
  int min_exponent() const { return terms_.begin()->first; }

  /// True iff every exponent is even, i.e. the value lies in Z[q, q^{-1}].
  bool is_integral_in_q() const {
    for (const auto& [e, c] : terms_)
      if (e % 2 != 0) return false;
    return true;
  }

  void add_term(int v_exp, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(v_exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, Coeff(c1 * c2));
    return r;
  }
  friend Laurent operator*(Laurent a, const Coeff& s) { return a *= s; }
  friend Laurent operator*(const Coeff& s, Laurent a) { return a *= s; }

  /// Multiplies by v^k.
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  /// The bar involution v -> v^{-1}.
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Value at v = 1 (hence q = 1).
  Coeff at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using HalfLaurent = Laurent<mpz_class>;
using RatHalfLaurent = Laurent<mpq_class>;

RatHalfLaurent to_rational(const HalfLaurent& f);

/// Clears to integer coefficients; nullopt when some coefficient is not integral.
std::optional<HalfLaurent> to_integral(const RatHalfLaurent& f);

/// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0.
HalfLaurent qint(int n);

/// [n]! = [n][n-1]...[1], [0]! = 1.
HalfLaurent qfactorial(int n);

/// Gaussian binomial [n]!/([m]![n-m]!), computed by exact division.
HalfLaurent qbinomial(int n, int m);

/// h with f = g*h when the quotient is an integer Laurent polynomial.
/// Throws std::domain_error when g is zero.
std::optional<HalfLaurent> exact_divide(const HalfLaurent& f, const HalfLaurent& g);

/// Canonical text form, terms by decreasing exponent: "q^2 + 1 + q^-2".
/// Values with an odd v-exponent are printed in v.
template <class Coeff>
std::string to_string(const Laurent<Coeff>& f);

extern template std::string to_string(const HalfLaurent&);
extern template std::string to_string(const RatHalfLaurent&);

/// Parses the canonical text form back (accepts q, v, integer and rational
/// coefficients, "^-k" exponents). Throws std::invalid_argument.
HalfLaurent parse_laurent(const std::string& text);

}  // namespace qfock
