#include <doctest.h>

#include <functional>

#include "qfock/schur.hpp"

using namespace qfock;

namespace {

SchurPoly S(std::initializer_list<std::pair<Partition, long>> terms) {
  SchurPoly f;
  for (const auto& [p, c] : terms) f.add(p, HalfLaurent(c));
  return f;
}

PowerPoly P(std::initializer_list<std::pair<Partition, mpq_class>> terms) {
  PowerPoly g;
  for (const auto& [p, c] : terms) g.add(p, RatHalfLaurent(c));
  return g;
}

// Sum over all nonnegative integer matrices k (rows: parts of lambda,
// columns: parts of mu) of s_{(lambda + row sums, mu - column sums)}; the
// expansion of prod (1 - R_ij)^{-1} s_{(lambda, mu)}. Column sums beyond the
// point where the straightening entry turns negative contribute nothing.
SchurPoly raising_operator_product(const Partition& lambda, const Partition& mu) {
  const int a = lambda.length(), b = mu.length(), total = a + b;
  std::vector<int> k(a * b, 0);
  SchurPoly out;
  std::function<void(int)> rec = [&](int cell) {
    if (cell == a * b) {
      Tuple t(total);
      for (int i = 0; i < a; ++i) {
        t[i] = lambda[i];
        for (int j = 0; j < b; ++j) t[i] += k[i * b + j];
      }
      for (int j = 0; j < b; ++j) {
        t[a + j] = mu[j];
        for (int i = 0; i < a; ++i) t[a + j] -= k[i * b + j];
      }
      if (auto s = straighten(t)) out.add(s->partition, HalfLaurent(static_cast<long>(s->sign)));
      return;
    }
    const int j = cell % b;
    int used = 0;
    for (int i = 0; i < cell / b; ++i) used += k[i * b + j];
    const int cap = mu[j] + (total - 1 - (a + j)) - used;
    for (int v = 0; v <= cap; ++v) {
      k[cell] = v;
      rec(cell + 1);
    }
    k[cell] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("lr product examples, both routes") {
  const SchurPoly e1 = S({{{2}, 1}, {{1, 1}, 1}});
  const SchurPoly e2 = S({{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}});
  const SchurPoly e3 = S({{{4, 2}, 1}, {{4, 1, 1}, 1}, {{3, 3}, 1}, {{3, 2, 1}, 2}, {{3, 1, 1, 1}, 1},
                          {{2, 2, 2}, 1}, {{2, 2, 1, 1}, 1}});
  CHECK(lr_product({1}, {1}) == e1);
  CHECK(lr_product({2, 1}, {1}) == e2);
  CHECK(lr_product({2, 1}, {2, 1}) == e3);
  CHECK(lr_product_oracle({1}, {1}) == e1);
  CHECK(lr_product_oracle({2, 1}, {1}) == e2);
  CHECK(lr_product_oracle({2, 1}, {2, 1}) == e3);
  CHECK(lr_product({}, {3, 1}) == S({{{3, 1}, 1}}));
}

TEST_CASE("lr agrees with the raising operator expansion") {
  for (int w = 0; w <= 6; ++w)
    for (int x = 0; x <= w; ++x)
      for (const auto& lam : partitions_of(x))
        for (const auto& mu : partitions_of(w - x)) {
          CAPTURE(to_string(lam));
          CAPTURE(to_string(mu));
          CHECK(raising_operator_product(lam, mu) == lr_product(lam, mu));
        }
}

TEST_CASE("lr is commutative and matches Pieri") {
  for (int n = 0; n <= 5; ++n)
    for (int w = 0; w <= 6; ++w)
      for (const auto& rho : partitions_of(w)) {
        const Partition row = n ? Partition{n} : Partition{};
        const Partition col = n ? Partition(std::vector<int>(n, 1)) : Partition{};
        CHECK(pieri_h(n, rho) == lr_product(row, rho));
        CHECK(pieri_e(n, rho) == lr_product(col, rho));
        CHECK(lr_product(rho, row) == lr_product(row, rho));
      }
}

TEST_CASE("pieri examples") {
  CHECK(pieri_h(2, {1, 1, 1}) == S({{{3, 1, 1}, 1}, {{2, 1, 1, 1}, 1}}));
  CHECK(pieri_h(0, {2, 2}) == S({{{2, 2}, 1}}));
  CHECK(pieri_e(2, {1}) == S({{{2, 1}, 1}, {{1, 1, 1}, 1}}));
  CHECK(pieri_h(2, {1}) == S({{{3}, 1}, {{2, 1}, 1}}));
}

TEST_CASE("jacobi trudi") {
  HExpansion e;
  e.add({2, 1}, 1);
  e.add({3}, -1);
  CHECK(jacobi_trudi({2, 1}) == e);
  CHECK(jacobi_trudi({4}) == HExpansion({4}, 1));
  HExpansion f;
  f.add({1, 1}, 1);
  f.add({2}, -1);
  CHECK(jacobi_trudi({1, 1}) == f);
  CHECK(jacobi_trudi({}) == HExpansion(Partition{}, 1));
}

TEST_CASE("power sum conversion") {
  const mpq_class half(1, 2), third(1, 3);
  CHECK(schur_to_power(schur_monomial({1})) == P({{{1}, 1}}));
  CHECK(schur_to_power(schur_monomial({2})) == P({{{1, 1}, half}, {{2}, half}}));
  CHECK(schur_to_power(schur_monomial({1, 1})) == P({{{1, 1}, half}, {{2}, -half}}));
  CHECK(schur_to_power(schur_monomial({2, 1})) == P({{{1, 1, 1}, third}, {{3}, -third}}));
  for (int w = 0; w <= 8; ++w)
    for (const auto& lam : partitions_of(w)) CHECK(power_to_schur(schur_to_power(schur_monomial(lam))) == schur_monomial(lam));
  CHECK_THROWS_AS(power_to_schur(P({{{2}, half}})), std::domain_error);
}

TEST_CASE("hall inner product") {
  CHECK(hall_inner(schur_monomial({2, 1}), schur_monomial({2, 1})) == HalfLaurent(1L));
  CHECK(hall_inner(P({{{2}, 1}}), P({{{2}, 1}})) == RatHalfLaurent(2L));
  CHECK(hall_inner(P({{{1, 1}, 1}}), P({{{2}, 1}})).is_zero());
  for (int w = 0; w <= 7; ++w)
    for (const auto& lam : partitions_of(w))
      for (const auto& mu : partitions_of(w)) {
        const RatHalfLaurent ip =
            hall_inner(schur_to_power(schur_monomial(lam)), schur_to_power(schur_monomial(mu)));
        CHECK(ip == RatHalfLaurent(lam == mu ? 1L : 0L));
      }
}

TEST_CASE("deformed inner product") {
  const auto q = [](int k) { return HalfLaurent::q_power(k); };
  CHECK(deformed_inner({1}, {1}) == std::pair{HalfLaurent(1L), 1L + q(2)});
  CHECK(deformed_inner({2, 1}, {2, 1}) == std::pair{HalfLaurent(2L), (1L + q(4)) * (1L + q(2))});
  CHECK(deformed_inner({2}, {1, 1}) == std::pair{HalfLaurent(), HalfLaurent(1L)});
}

TEST_CASE("mixed products") {
  CHECK(mixed_product(Tuple{1}, Tuple{2, 1, 1, 1}) == StraightenResult(SignedPartition{1, {3, 2, 1}}));
  CHECK(mixed_product(Tuple{1}, Tuple{2, 2}) == std::nullopt);
  for (int w = 0; w <= 6; ++w)
    for (const auto& lam : partitions_of(w))
      CHECK(mixed_product(Tuple{}, lam.parts()) == StraightenResult(SignedPartition{w % 2 ? -1 : 1, conjugate(lam)}));
}

TEST_CASE("bialternants") {
  auto x = [](int n, int i) { return MPoly::variable(n, i); };
  CHECK(weyl_bialternant({1}, 2) == x(2, 0) + x(2, 1));
  CHECK(weyl_bialternant({}, 3) == MPoly::constant(3, 1));
  CHECK(weyl_bialternant({2, 1}, 2) == x(2, 0) * x(2, 0) * x(2, 1) + x(2, 0) * x(2, 1) * x(2, 1));
  // s_(1,1)(x1, x2, x3) = e_2
  CHECK(weyl_bialternant({1, 1}, 3) == x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) + x(3, 1) * x(3, 2));
  CHECK_THROWS(weyl_bialternant({1, 1, 1}, 2));
}

TEST_CASE("multiply is bilinear") {
  const SchurPoly f = S({{{1}, 2}}) + schur_monomial({2}, HalfLaurent::q_power(1));
  const SchurPoly g = S({{{1}, 1}, {{}, -1}});
  SchurPoly want;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) want.add_scaled(lr_product(a, b), ca * cb);
  CHECK(multiply(f, g) == want);
}
