#include "qfock/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "qfock/schur.hpp"

namespace qfock {

namespace {

RatHalfLaurent qpow(int k) { return RatHalfLaurent::q_power(k); }
RatHalfLaurent vpow(int k) { return RatHalfLaurent::v_power(k); }
RatHalfLaurent constant(long c) { return RatHalfLaurent(c); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

struct Multiplicity {
  int part;
  int mult;
};

std::vector<Multiplicity> multiplicities(const Partition& lambda) {
  std::vector<Multiplicity> out;
  for (int p : lambda.parts()) {
    if (!out.empty() && out.back().part == p)
      ++out.back().mult;
    else
      out.push_back({p, 1});
  }
  return out;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  Tuple t = juxtapose(a.parts(), b.parts());
  std::sort(t.begin(), t.end(), std::greater<>());
  return Partition(std::move(t));
}

}  // namespace

VertexSpec s_spec() {
  VertexSpec s;
  s.creation = [](int) { return constant(1); };
  s.annihilation = [](int) { return constant(-1); };
  return s;
}

VertexSpec sstar_spec() {
  VertexSpec s;
  s.creation = [](int) { return constant(-1); };
  s.annihilation = [](int) { return constant(1); };
  return s;
}

VertexSpec xplus_spec() {
  VertexSpec s;
  s.creation = [](int n) { return qpow(n) + qpow(-n); };
  s.annihilation = [](int n) { return -qpow(-n); };
  s.shift = 1;
  s.epsilon = 1;
  return s;
}

VertexSpec xminus_spec() {
  VertexSpec s;
  s.creation = [](int n) { return -(constant(1) + qpow(2 * n)); };
  s.annihilation = [](int) { return constant(1); };
  s.shift = -1;
  s.epsilon = -1;
  return s;
}

// Cartan currents, coefficients already converted to b-coordinates.
VertexSpec psi_spec() {
  VertexSpec s;
  s.annihilation = [](int n) { return vpow(n) - vpow(-3 * n); };
  s.tail = 1;
  return s;
}

VertexSpec phi_spec() {
  VertexSpec s;
  s.creation = [](int n) { return vpow(-3 * n) - vpow(5 * n); };
  s.tail = -1;
  return s;
}

PowerState apply_b(int n, const PowerState& s) {
  if (n == 0) throw std::invalid_argument("apply_b: n must be nonzero");
  PowerState out(s.sector);
  for (const auto& [key, c] : s.terms) {
    const auto& [m, lam] = key;
    if (n < 0) {
      out.terms.add({m, merge_parts(lam, Partition{-n})}, c);
      continue;
    }
    Tuple rest;
    int count = 0;
    for (int p : lam.parts()) {
      if (p == n && count == 0) {
        ++count;
        continue;
      }
      rest.push_back(p);
    }
    if (count == 0) continue;
    long mult = 0;
    for (int p : lam.parts()) mult += (p == n);
    out.terms.add({m, Partition(std::move(rest))}, c * mpq_class(mult * n));
  }
  return out;
}

PowerState apply_vertex_component(const VertexSpec& spec, int z_power, const PowerState& s) {
  PowerState out(s.sector);
  // creation coefficients by degree, memoized per call
  std::map<int, std::vector<std::pair<Partition, RatHalfLaurent>>> creation_by_degree;
  std::map<int, RatHalfLaurent> cplus, cminus;
  auto cp = [&](int n) -> const RatHalfLaurent& {
    auto it = cplus.find(n);
    if (it == cplus.end()) it = cplus.emplace(n, spec.creation(n)).first;
    return it->second;
  };
  auto cm = [&](int n) -> const RatHalfLaurent& {
    auto it = cminus.find(n);
    if (it == cminus.end()) it = cminus.emplace(n, spec.annihilation(n)).first;
    return it->second;
  };
  auto creation = [&](int d) -> const std::vector<std::pair<Partition, RatHalfLaurent>>& {
    auto it = creation_by_degree.find(d);
    if (it != creation_by_degree.end()) return it->second;
    std::vector<std::pair<Partition, RatHalfLaurent>> terms;
    if (d == 0) {
      terms.emplace_back(Partition{}, constant(1));
    } else if (spec.creation) {
      for (const auto& mu : partitions_of(d)) {
        RatHalfLaurent c = constant(1);
        for (int p : mu.parts()) c *= cp(p);
        if (c.is_zero()) continue;
        terms.emplace_back(mu, c * mpq_class(mpz_class(1), z_lambda(mu)));
      }
    }
    return creation_by_degree.emplace(d, std::move(terms)).first->second;
  };

  // annihilation first, pooled by (charge, remaining monomial, creation degree)
  std::map<std::tuple<int, Partition, int>, RatHalfLaurent> pooled;
  for (const auto& [key, coeff] : s.terms) {
    const auto& [m, lam] = key;
    const int charge_d = 2 * m + s.sector;
    const int base_power = spec.epsilon * charge_d;
    RatHalfLaurent head = coeff * spec.prefactor;
    if (spec.tail != 0) head = head.shifted(2 * spec.tail * charge_d);

    const auto mults = multiplicities(lam);
    std::vector<int> take(mults.size(), 0);
    // sum over sub-multisets nu of lambda removed by the annihilation part
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
      if (idx == mults.size()) {
        int removed = 0;
        RatHalfLaurent c = head;
        Tuple rest;
        for (std::size_t t = 0; t < mults.size(); ++t) {
          const int k = take[t];
          removed += k * mults[t].part;
          if (k > 0) {
            RatHalfLaurent f = cm(mults[t].part);
            for (int e = 0; e < k; ++e) c *= f;
            c *= mpq_class(binomial(mults[t].mult, k));
          }
          for (int e = 0; e < mults[t].mult - k; ++e) rest.push_back(mults[t].part);
        }
        if (c.is_zero()) return;
        const int d = z_power - base_power - spec.annihilation_dir * removed;
        if (d < 0) return;
        auto [it, inserted] = pooled.try_emplace({m + spec.shift, Partition(std::move(rest)), d}, c);
        if (!inserted) it->second += c;
        return;
      }
      const int max_take = spec.annihilation ? mults[idx].mult : 0;
      for (int k = 0; k <= max_take; ++k) {
        take[idx] = k;
        rec(idx + 1);
      }
      take[idx] = 0;
    };
    rec(0);
  }
  for (const auto& [key, c] : pooled) {
    if (c.is_zero()) continue;
    const auto& [m, remaining, d] = key;
    for (const auto& [mu, cc] : creation(d)) out.terms.add({m, merge_parts(remaining, mu)}, c * cc);
  }
  return out;
}

PowerState S_k(int k, const PowerState& s) { return apply_vertex_component(s_spec(), -k, s); }
PowerState Sstar_k(int k, const PowerState& s) { return apply_vertex_component(sstar_spec(), k, s); }
PowerState Xplus_k(int n, const PowerState& s) { return apply_vertex_component(xplus_spec(), -n - 1, s); }
PowerState Xminus_k(int n, const PowerState& s) { return apply_vertex_component(xminus_spec(), -n - 1, s); }

PowerState psi_k(int k, const PowerState& s) {
  if (k < 0) return PowerState(s.sector);
  return apply_vertex_component(psi_spec(), -k, s);
}

PowerState phi_k(int k, const PowerState& s) {
  if (k > 0) return PowerState(s.sector);
  return apply_vertex_component(phi_spec(), -k, s);
}

PowerState to_power(const FockVector& v) {
  std::map<int, SchurPoly> by_charge;
  for (const auto& [key, c] : v.terms) by_charge[key.first].add(key.second, c);
  PowerState out(v.sector);
  for (const auto& [m, f] : by_charge)
    for (const auto& [rho, c] : schur_to_power(f)) out.terms.add({m, rho}, c);
  return out;
}

FockVector to_fock(const PowerState& s) {
  std::map<int, PowerPoly> by_charge;
  for (const auto& [key, c] : s.terms) by_charge[key.first].add(key.second, c);
  FockVector out(s.sector);
  for (const auto& [m, g] : by_charge)
    for (const auto& [lam, c] : power_to_schur(g)) out.terms.add({m, lam}, c);
  return out;
}

}  // namespace qfock
