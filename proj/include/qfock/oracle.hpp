#pragma once

// Brute-force Heisenberg evaluator in the power-sum basis.
//
// Coordinates: b_{-n} = a_{-n}, b_n = (1+q^{2n}) a_n, so [b_m, b_{-n}] = m
// delta_{mn} and b_n acts on polynomials in the b_{-k} as n d/db_{-n}.

#include <functional>

#include "qfock/vectors.hpp"

namespace qfock {

/// exp(sum c+_n b_{-n} z^n / n) exp(sum c-_n b_n z^{dir n} / n) e^{shift alpha}
/// z^{epsilon d} q^{tail d}, times prefactor. A null sequence means the
/// factor is absent.
struct VertexSpec {
  std::function<RatHalfLaurent(int)> creation;
  std::function<RatHalfLaurent(int)> annihilation;
  int annihilation_dir = -1;  // -1: z^{-n}, +1: z^{+n}
  int shift = 0;
  int epsilon = 0;
  int tail = 0;  // exponent of q^{d} applied to the input (d = 2m+i)
  RatHalfLaurent prefactor = RatHalfLaurent(1L);
};

VertexSpec s_spec();
/// Dual operator; annihilation part in z^{-n}, components sum S*_n z^n.
VertexSpec sstar_spec();
VertexSpec xplus_spec();
VertexSpec xminus_spec();
VertexSpec psi_spec();
VertexSpec phi_spec();

PowerState apply_b(int n, const PowerState& s);

/// Coefficient of z^{z_power} of the operator applied to s.
PowerState apply_vertex_component(const VertexSpec& spec, int z_power, const PowerState& s);

// Components: S(z) = sum S_k z^{-k}, S*(z) = sum S*_k z^k,
// X^{+-}(z) = sum X_n z^{-n-1}, psi(z) = sum_{k>=0} psi_k z^{-k},
// phi(z) = sum_{k<=0} phi_k z^{-k}.
PowerState S_k(int k, const PowerState& s);
PowerState Sstar_k(int k, const PowerState& s);
PowerState Xplus_k(int n, const PowerState& s);
PowerState Xminus_k(int n, const PowerState& s);
PowerState psi_k(int k, const PowerState& s);
PowerState phi_k(int k, const PowerState& s);

PowerState to_power(const FockVector& v);
/// Throws std::domain_error when a Schur coefficient is not integral.
FockVector to_fock(const PowerState& s);

}  // namespace qfock
