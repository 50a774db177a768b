#include "qfock/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qfock {

namespace {

using IntComb = Combination<Partition, long long>;
using RatComb = Combination<Partition, mpq_class>;

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("schur: coefficient overflow");
  return r;
}

SchurPoly to_schur(const IntComb& c) {
  SchurPoly out;
  for (const auto& [lam, k] : c) out.add(lam, HalfLaurent(mpz_class(static_cast<long>(k))));
  return out;
}

IntComb pieri_h_int(int n, const Partition& rho) {
  IntComb out;
  for (auto& lam : horizontal_strips(rho, n)) out.add(lam, 1);
  return out;
}

// One row of the matrix sum: all ways to lower the block by a nonnegative
// vector c, keeping every entry of block - c + delta_local nonnegative.
// Calls emit(row_sum, straightened block, sign).
void lower_block(const Partition& block,
                 const std::function<void(int, const Partition&, int)>& emit) {
  const int b = block.length();
  std::vector<int> t(block.parts());
  std::function<void(int, int)> rec = [&](int j, int taken) {
    if (j == b) {
      if (auto s = straighten(t)) emit(taken, s->partition, s->sign);
      return;
    }
    const int orig = block[j];
    const int cap = orig + (b - 1 - j);
    for (int c = 0; c <= cap; ++c) {
      t[j] = orig - c;
      rec(j + 1, taken + c);
    }
    t[j] = orig;
  };
  rec(0, 0);
}

IntComb lr_matrix_sum(const Partition& rows, const Partition& cols) {
  // states: (raised prefix, straightened remainder of the lowered block)
  std::map<std::pair<Tuple, Partition>, long long> states;
  states[{Tuple{}, cols}] = 1;
  for (int i = 0; i < rows.length(); ++i) {
    std::map<std::pair<Tuple, Partition>, long long> next;
    for (const auto& [key, count] : states) {
      const auto& [prefix, block] = key;
      lower_block(block, [&](int k, const Partition& rest, int sign) {
        Tuple p = prefix;
        p.push_back(rows[i] + k);
        long long& slot = next[{std::move(p), rest}];
        slot += sign * count;
      });
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    states = std::move(next);
  }
  IntComb out;
  for (const auto& [key, count] : states) {
    const auto& [prefix, block] = key;
    if (auto s = straighten(juxtapose(prefix, block.parts()))) out.add(s->partition, s->sign * count);
  }
  return out;
}

const IntComb& lr_cached(const Partition& lambda, const Partition& mu) {
  static std::mutex mtx;
  static std::map<std::pair<Partition, Partition>, IntComb> cache;
  // rows: longer partition, columns: shorter one
  const bool swap = lambda.length() < mu.length() ||
                    (lambda.length() == mu.length() && lambda < mu);
  const Partition& rows = swap ? mu : lambda;
  const Partition& cols = swap ? lambda : mu;
  {
    std::lock_guard lock(mtx);
    if (auto it = cache.find({rows, cols}); it != cache.end()) return it->second;
  }
  IntComb value = lr_matrix_sum(rows, cols);
  std::lock_guard lock(mtx);
  return cache.try_emplace({rows, cols}, std::move(value)).first->second;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  Tuple t = juxtapose(a.parts(), b.parts());
  std::sort(t.begin(), t.end(), std::greater<>());
  return Partition(std::move(t));
}

RatComb rat_multiply(const RatComb& a, const RatComb& b) {
  RatComb out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(merge_parts(ka, kb), mpq_class(ca * cb));
  return out;
}

// h_n = sum_{rho |- n} p_rho / z_rho
RatComb h_in_power(int n) {
  RatComb out;
  for (const auto& rho : partitions_of(n)) out.add(rho, mpq_class(1, z_lambda(rho)));
  return out;
}

const RatComb& hprod_in_power(const Partition& kappa) {
  static std::mutex mtx;
  static std::map<Partition, RatComb> cache;
  {
    std::lock_guard lock(mtx);
    if (auto it = cache.find(kappa); it != cache.end()) return it->second;
  }
  RatComb acc(Partition{}, mpq_class(1));
  for (int k : kappa.parts()) acc = rat_multiply(acc, h_in_power(k));
  std::lock_guard lock(mtx);
  return cache.try_emplace(kappa, std::move(acc)).first->second;
}

}  // namespace

SchurPoly schur_monomial(const Partition& lambda, HalfLaurent c) { return SchurPoly(lambda, std::move(c)); }

SchurPoly lr_product(const Partition& lambda, const Partition& mu) { return to_schur(lr_cached(lambda, mu)); }

SchurPoly lr_product_oracle(const Partition& lambda, const Partition& mu) {
  IntComb total;
  for (const auto& [hs, sign] : jacobi_trudi(mu)) {
    IntComb cur(lambda, 1);
    for (int k : hs.parts()) {
      IntComb next;
      for (const auto& [rho, c] : cur)
        for (const auto& [lam, d] : pieri_h_int(k, rho)) next.add(lam, checked_mul(c, d));
      cur = std::move(next);
    }
    for (const auto& [lam, c] : cur) total.add(lam, checked_mul(c, sign));
  }
  return to_schur(total);
}

SchurPoly multiply(const SchurPoly& f, const SchurPoly& g) {
  SchurPoly out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      const HalfLaurent c = ca * cb;
      for (const auto& [lam, k] : lr_cached(a, b)) out.add(lam, c * mpz_class(static_cast<long>(k)));
    }
  return out;
}

SchurPoly pieri_h(int n, const Partition& rho) { return to_schur(pieri_h_int(n, rho)); }

SchurPoly pieri_e(int n, const Partition& rho) {
  IntComb out;
  for (auto& lam : vertical_strips(rho, n)) out.add(lam, 1);
  return to_schur(out);
}

HExpansion jacobi_trudi(const Partition& lambda) {
  const int l = lambda.length();
  HExpansion out;
  std::vector<int> perm;
  std::vector<bool> used(l, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == l) {
      int inv = 0;
      for (int a = 0; a < l; ++a)
        for (int b = a + 1; b < l; ++b)
          if (perm[a] > perm[b]) ++inv;
      Tuple idx;
      for (int r = 0; r < l; ++r)
        if (int k = lambda[r] - r + perm[r]; k > 0) idx.push_back(k);
      std::sort(idx.begin(), idx.end(), std::greater<>());
      out.add(Partition(std::move(idx)), inv % 2 == 0 ? 1 : -1);
      return;
    }
    for (int j = 0; j < l; ++j) {
      if (used[j] || lambda[i] - i + j < 0) continue;
      used[j] = true;
      perm.push_back(j);
      rec(i + 1);
      perm.pop_back();
      used[j] = false;
    }
  };
  rec(0);
  return out;
}

SchurPoly conjugate_terms(const SchurPoly& f) {
  SchurPoly out;
  for (const auto& [lam, c] : f) out.add(conjugate(lam), c);
  return out;
}

const Combination<Partition, mpq_class>& schur_in_power(const Partition& lambda) {
  static std::mutex mtx;
  static std::map<Partition, RatComb> cache;
  {
    std::lock_guard lock(mtx);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  RatComb acc;
  for (const auto& [hs, sign] : jacobi_trudi(lambda)) {
    const mpq_class s(static_cast<long>(sign));
    for (const auto& [rho, c] : hprod_in_power(hs)) acc.add(rho, mpq_class(c * s));
  }
  std::lock_guard lock(mtx);
  return cache.try_emplace(lambda, std::move(acc)).first->second;
}

PowerPoly schur_to_power(const SchurPoly& f) {
  PowerPoly out;
  for (const auto& [lam, c] : f) {
    const RatHalfLaurent rc = to_rational(c);
    for (const auto& [rho, k] : schur_in_power(lam)) out.add(rho, rc * k);
  }
  return out;
}

SchurPoly power_to_schur(const PowerPoly& g) {
  std::map<int, std::vector<std::pair<Partition, RatHalfLaurent>>> by_weight;
  for (const auto& [rho, c] : g) by_weight[rho.weight()].emplace_back(rho, c);
  SchurPoly out;
  for (const auto& [d, terms] : by_weight) {
    std::map<Partition, RatHalfLaurent> weighted;  // g_rho * z_rho
    for (const auto& [rho, c] : terms) weighted.emplace(rho, c * mpq_class(z_lambda(rho)));
    for (const auto& lam : partitions_of(d)) {
      RatHalfLaurent coeff;
      for (const auto& [rho, k] : schur_in_power(lam))
        if (auto it = weighted.find(rho); it != weighted.end()) coeff += it->second * k;
      if (coeff.is_zero()) continue;
      auto integral = to_integral(coeff);
      if (!integral) throw std::domain_error("power_to_schur: non-integral Schur coefficient");
      out.add(lam, *integral);
    }
  }
  return out;
}

RatHalfLaurent hall_inner(const PowerPoly& f, const PowerPoly& g) {
  RatHalfLaurent out;
  for (const auto& [rho, c] : f) {
    auto d = g.coeff(rho);
    if (d.is_zero()) continue;
    out += c * d * mpq_class(z_lambda(rho));
  }
  return out;
}

HalfLaurent hall_inner(const SchurPoly& f, const SchurPoly& g) {
  auto r = to_integral(hall_inner(schur_to_power(f), schur_to_power(g)));
  if (!r) throw std::domain_error("hall_inner: non-integral value");
  return *r;
}

std::pair<HalfLaurent, HalfLaurent> deformed_inner(const Partition& lambda, const Partition& mu) {
  if (!(lambda == mu)) return {HalfLaurent(), HalfLaurent(1L)};
  HalfLaurent den(1L);
  for (int part : lambda.parts()) den *= HalfLaurent::q_power(2 * part) + HalfLaurent(1L);
  return {HalfLaurent(z_lambda(lambda)), den};
}

StraightenResult mixed_product(std::span<const int> mu, std::span<const int> nu) {
  for (int x : nu)
    if (x < 0) throw std::invalid_argument("mixed_product: negative S* index");
  // S*_nu.1 = sgn * (-1)^{|nu|} s_{rho'} with (sgn, rho) = straighten(nu)
  auto inner = straighten(nu);
  if (!inner) return std::nullopt;
  auto outer = straighten(juxtapose(mu, conjugate(inner->partition).parts()));
  if (!outer) return std::nullopt;
  const int weight = std::accumulate(nu.begin(), nu.end(), 0);
  int sign = inner->sign * outer->sign * (weight % 2 == 0 ? 1 : -1);
  return SignedPartition{sign, outer->partition};
}

MPoly weyl_bialternant(const Partition& lambda, int n) {
  if (n < lambda.length()) throw std::invalid_argument("weyl_bialternant: too few variables");
  static std::mutex mtx;
  static std::map<std::pair<Partition, int>, MPoly> cache;
  {
    std::lock_guard lock(mtx);
    if (auto it = cache.find({lambda, n}); it != cache.end()) return it->second;
  }
  std::vector<int> shifted(n);
  for (int i = 0; i < n; ++i) shifted[i] = lambda[i] + (n - 1 - i);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MPoly num(n);
  std::vector<int> e(n);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inv;
    for (int i = 0; i < n; ++i) e[i] = shifted[perm[i]];
    num.add_term(MPoly::pack(e), inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto q = num.divide_by_vandermonde();
  if (!q) throw std::logic_error("weyl_bialternant: alternant not divisible");
  num = std::move(*q);
  std::lock_guard lock(mtx);
  return cache.try_emplace({lambda, n}, std::move(num)).first->second;
}

}  // namespace qfock
