#pragma once

// Vectors of the Fock space Sym ⊗ C[Z alpha] e^{i alpha/2}: the Schur basis
// s_lambda e^{m alpha} (integral Laurent coefficients) and the power-sum
// basis b_{-lambda} e^{m alpha} (rational Laurent coefficients).

#include <utility>

#include "qfock/combination.hpp"
#include "qfock/qring.hpp"
#include "qfock/shapes.hpp"

namespace qfock {

/// (charge m, partition lambda); orders by charge, then canonical partition order.
using BasisKey = std::pair<int, Partition>;

template <class Coeff>
struct GradedVector {
  int sector = 0;  // i in {0, 1}
  Combination<BasisKey, Coeff> terms;

  GradedVector() = default;
  explicit GradedVector(int i) : sector(i) {}

  static GradedVector basis(int i, int m, const Partition& lambda, Coeff c = Coeff(1L)) {
    GradedVector v(i);
    v.terms.add({m, lambda}, c);
    return v;
  }

  bool is_zero() const { return terms.is_zero(); }

  GradedVector& operator+=(const GradedVector& o) {
    terms += o.terms;
    return *this;
  }
  GradedVector& operator-=(const GradedVector& o) {
    terms -= o.terms;
    return *this;
  }
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend GradedVector operator*(const GradedVector& a, const Coeff& s) {
    GradedVector r(a.sector);
    r.terms = a.terms * s;
    return r;
  }
  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return a.sector == b.sector && a.terms == b.terms;
  }
};

using FockVector = GradedVector<HalfLaurent>;
using PowerState = GradedVector<RatHalfLaurent>;

inline FockVector vacuum(int sector) { return FockVector::basis(sector, 0, Partition{}); }

/// Scales every term by q^{f(m, lambda)} with f given in units of v.
template <class Coeff, class F>
GradedVector<Coeff> scale_by_v_power(const GradedVector<Coeff>& v, F&& v_exponent) {
  GradedVector<Coeff> r(v.sector);
  for (const auto& [key, c] : v.terms) r.terms.add(key, c.shifted(v_exponent(key.first, key.second)));
  return r;
}

}  // namespace qfock
