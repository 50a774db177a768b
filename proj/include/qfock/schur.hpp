#pragma once

// Symmetric functions in the Schur basis with Laurent coefficients.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qfock/combination.hpp"
#include "qfock/mpoly.hpp"
#include "qfock/qring.hpp"
#include "qfock/shapes.hpp"

namespace qfock {

using SchurPoly = Combination<Partition, HalfLaurent>;
/// Keys index p_lambda = b_{-lambda}.
using PowerPoly = Combination<Partition, RatHalfLaurent>;
/// Signed h-monomials; the key lists the h indices (h_0 dropped).
using HExpansion = Combination<Partition, long long>;

SchurPoly schur_monomial(const Partition& lambda, HalfLaurent c = HalfLaurent(1L));

/// s_lambda * s_mu by the integral-matrix sum with straightening.
SchurPoly lr_product(const Partition& lambda, const Partition& mu);
/// Same product via Jacobi-Trudi of s_mu and repeated Pieri on s_lambda.
SchurPoly lr_product_oracle(const Partition& lambda, const Partition& mu);
/// Bilinear extension of lr_product.
SchurPoly multiply(const SchurPoly& f, const SchurPoly& g);

SchurPoly pieri_h(int n, const Partition& rho);
SchurPoly pieri_e(int n, const Partition& rho);

/// det(h_{lambda_i - i + j}) expanded.
HExpansion jacobi_trudi(const Partition& lambda);

/// s_lambda -> s_lambda' termwise (the involution omega on the Schur basis).
SchurPoly conjugate_terms(const SchurPoly& f);

PowerPoly schur_to_power(const SchurPoly& f);
/// Throws std::domain_error if the result is not integral.
SchurPoly power_to_schur(const PowerPoly& g);
/// Cached expansion of a single s_lambda in power sums (rational constants).
const Combination<Partition, mpq_class>& schur_in_power(const Partition& lambda);

HalfLaurent hall_inner(const SchurPoly& f, const SchurPoly& g);
RatHalfLaurent hall_inner(const PowerPoly& f, const PowerPoly& g);

/// (numerator, denominator) of the q-deformed inner product of p_lambda, p_mu.
std::pair<HalfLaurent, HalfLaurent> deformed_inner(const Partition& lambda, const Partition& mu);

/// S_{-mu_1}...S_{-mu_l} S*_{nu_1}...S*_{nu_k}.1 as a signed Schur function.
StraightenResult mixed_product(std::span<const int> mu, std::span<const int> nu);

/// s_lambda(x_1..x_n) as the quotient of alternants. Needs n >= l(lambda).
MPoly weyl_bialternant(const Partition& lambda, int n);

}  // namespace qfock
