#include "qfock/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "qfock/oracle.hpp"
#include "qfock/parallel.hpp"
#include "qfock/schur.hpp"

namespace qfock {

namespace {

struct Sink {
  std::vector<Violation> violations;
  std::size_t checked = 0;

  void expect(const std::string& input, const FockVector& expected, const FockVector& actual) {
    ++checked;
    if (!(expected == actual)) violations.push_back({input, render(expected), render(actual)});
  }
  void expect(const std::string& input, const SchurPoly& expected, const SchurPoly& actual) {
    ++checked;
    if (!(expected == actual)) violations.push_back({input, render(expected), render(actual)});
  }
  void require(const std::string& input, bool ok, const std::string& expected, const std::string& actual) {
    ++checked;
    if (!ok) violations.push_back({input, expected, actual});
  }
};

template <class Item, class F>
void run_items(CheckReport& rep, const std::vector<Item>& items, F&& body) {
  auto sinks = parallel_map<Sink>(items.size(), [&](std::size_t k) {
    Sink s;
    body(items[k], s);
    return s;
  });
  for (auto& s : sinks) {
    rep.checked += s.checked;
    rep.violations.insert(rep.violations.end(), s.violations.begin(), s.violations.end());
  }
  std::sort(rep.violations.begin(), rep.violations.end());
}

std::string describe(const FockVector& b) { return render(b); }

HalfLaurent qp(int k) { return HalfLaurent::q_power(k); }

std::optional<FockVector> divide_exact(const FockVector& v, const HalfLaurent& g) {
  FockVector out(v.sector);
  for (const auto& [key, c] : v.terms) {
    auto q = exact_divide(c, g);
    if (!q) return std::nullopt;
    out.terms.add(key, *q);
  }
  return out;
}

FockVector identity_or(const ActionTable& a, Gen g, int r, const FockVector& v) {
  return r == 0 ? v : a.chevalley(g, r, v);
}

bool integral_in_q(const FockVector& v) {
  for (const auto& [key, c] : v.terms)
    if (!c.is_integral_in_q()) return false;
  return true;
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::e0: return "e0";
    case Gen::e1: return "e1";
    case Gen::f0: return "f0";
    case Gen::f1: return "f1";
    default: return "?";
  }
}

}  // namespace

Json to_json(const CheckReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"input", x.input}, {"expected", x.expected}, {"actual", x.actual}});
  return Json{{"suite", r.suite}, {"config", r.config}, {"pass", r.pass()}, {"checked", r.checked},
              {"violations", v}};
}

FockVector ActionTable::chevalley(Gen g, int r, const FockVector& v) const {
  return chevalley_using(x_plus_divided, x_minus_divided, g, r, v);
}

FockVector ActionTable::apply_word(const Word& w, const FockVector& v) const {
  return apply_word_using(x_plus_divided, x_minus_divided, w, v);
}

ActionTable default_actions() {
  return ActionTable{
      [](int n, const FockVector& v) { return x_plus(n, v); },
      [](int n, const FockVector& v) { return x_minus(n, v); },
      [](int n, int r, const FockVector& v) { return x_plus_divided(n, r, v); },
      [](int n, int r, const FockVector& v) { return x_minus_divided(n, r, v); },
  };
}

std::vector<FockVector> basis_vectors(int max_weight, int max_charge) {
  std::vector<FockVector> out;
  for (int i = 0; i <= 1; ++i)
    for (int m = -max_charge; m <= max_charge; ++m)
      for (int w = 0; w <= max_weight; ++w)
        for (const auto& lam : partitions_of(w)) out.push_back(FockVector::basis(i, m, lam));
  return out;
}

CheckReport check_chevalley(int max_weight, int max_charge, const ActionTable& a) {
  CheckReport rep{"chevalley", Json{{"max_weight", max_weight}, {"max_charge", max_charge}}, {}};
  const Gen es[2] = {Gen::e0, Gen::e1};
  const Gen fs[2] = {Gen::f0, Gen::f1};
  const int cartan[2][2] = {{2, -2}, {-2, 2}};
  const HalfLaurent q_minus_qinv = qp(1) - qp(-1);

  run_items(rep, basis_vectors(max_weight, max_charge), [&](const FockVector& b, Sink& s) {
    const std::string in = describe(b);
    for (int i = 0; i <= 1; ++i) {
      s.expect("K" + std::to_string(i) + " K" + std::to_string(i) + "inv on " + in, b,
               k_action(i, 1, k_action(i, -1, b)));
      s.expect("K" + std::to_string(i) + "inv K" + std::to_string(i) + " on " + in, b,
               k_action(i, -1, k_action(i, 1, b)));
    }
    s.expect("K0 K1 on " + in, b * qp(1), k_action(0, 1, k_action(1, 1, b)));

    for (int j = 0; j <= 1; ++j) {
      const FockVector ej = a.chevalley(es[j], 1, b);
      const FockVector fj = a.chevalley(fs[j], 1, b);
      for (int i = 0; i <= 1; ++i) {
        const std::string ki = "K" + std::to_string(i);
        s.expect(ki + " e" + std::to_string(j) + " " + ki + "inv on " + in, ej * qp(cartan[i][j]),
                 k_action(i, 1, a.chevalley(es[j], 1, k_action(i, -1, b))));
        s.expect(ki + " f" + std::to_string(j) + " " + ki + "inv on " + in, fj * qp(-cartan[i][j]),
                 k_action(i, 1, a.chevalley(fs[j], 1, k_action(i, -1, b))));

        const FockVector lhs = a.chevalley(es[i], 1, a.chevalley(fs[j], 1, b)) -
                               a.chevalley(fs[j], 1, a.chevalley(es[i], 1, b));
        const std::string label = "[e" + std::to_string(i) + ",f" + std::to_string(j) + "] on " + in;
        if (i != j) {
          s.expect(label, FockVector(b.sector), lhs);
          continue;
        }
        auto rhs = divide_exact(k_action(i, 1, b) - k_action(i, -1, b), q_minus_qinv);
        if (!rhs) {
          s.require(label, false, "divisible by q - q^-1", "not divisible");
          continue;
        }
        s.expect(label, *rhs, lhs);
      }
      const int shift = j == 0 ? 1 : 0;
      s.expect("qd e" + std::to_string(j) + " qdinv on " + in, ej * qp(shift),
               qd_action(1, a.chevalley(es[j], 1, qd_action(-1, b))));
      s.expect("qd f" + std::to_string(j) + " qdinv on " + in, fj * qp(-shift),
               qd_action(1, a.chevalley(fs[j], 1, qd_action(-1, b))));
    }

    for (Gen g : {Gen::e0, Gen::e1, Gen::f0, Gen::f1})
      for (int r = 1; r <= 3; ++r) {
        const FockVector out = a.chevalley(g, r, b);
        s.require(std::string(gen_name(g)) + "^(" + std::to_string(r) + ") integrality on " + in,
                  integral_in_q(out), "coefficients in Z[q,q^-1]", render(out));
      }

    int weight = 0;
    for (const auto& [key, c] : b.terms) weight = key.second.weight();
    if (weight > 4) return;
    for (int r = 1; r <= 3; ++r) {
      FockVector ep = b, fm = b, f0 = b, e0 = b;
      for (int t = 0; t < r; ++t) {
        ep = a.x_plus(0, ep);
        fm = a.x_minus(0, fm);
        f0 = k_action(1, 1, a.x_plus(-1, f0));
        e0 = a.x_minus(1, k_action(1, -1, e0));
      }
      const HalfLaurent fr = qfactorial(r);
      const std::string rr = "^(" + std::to_string(r) + ")";
      s.expect("e1" + rr + " [r]! vs (X0+)^r on " + in, ep, a.chevalley(Gen::e1, r, b) * fr);
      s.expect("f1" + rr + " [r]! vs (X0-)^r on " + in, fm, a.chevalley(Gen::f1, r, b) * fr);
      s.expect("f0" + rr + " [r]! vs (q^d X-1+)^r on " + in, f0, a.chevalley(Gen::f0, r, b) * fr);
      s.expect("e0" + rr + " [r]! vs (X1- q^-d)^r on " + in, e0, a.chevalley(Gen::e0, r, b) * fr);
    }
  });
  return rep;
}

CheckReport check_serre(int max_weight, int max_charge, const ActionTable& a) {
  CheckReport rep{"serre", Json{{"max_weight", max_weight}, {"max_charge", max_charge}}, {}};
  run_items(rep, basis_vectors(max_weight, max_charge), [&](const FockVector& b, Sink& s) {
    const std::string in = describe(b);
    for (int i = 0; i <= 1; ++i) {
      const int j = 1 - i;
      for (bool lower : {false, true}) {
        const Gen gi = lower ? (i == 0 ? Gen::f0 : Gen::f1) : (i == 0 ? Gen::e0 : Gen::e1);
        const Gen gj = lower ? (j == 0 ? Gen::f0 : Gen::f1) : (j == 0 ? Gen::e0 : Gen::e1);
        FockVector sum(b.sector);
        for (int r = 0; r <= 3; ++r) {
          FockVector t = identity_or(a, gi, r, a.chevalley(gj, 1, identity_or(a, gi, 3 - r, b)));
          if (r % 2 == 0)
            sum += t;
          else
            sum -= t;
        }
        s.expect(std::string("Serre ") + gen_name(gi) + "/" + gen_name(gj) + " on " + in,
                 FockVector(b.sector), sum);
      }
    }
  });
  return rep;
}

CheckReport check_drinfeld(int max_weight, int index_window, int max_charge, const ActionTable& a) {
  CheckReport rep{"drinfeld",
                  Json{{"max_weight", max_weight}, {"index_window", index_window}, {"max_charge", max_charge}},
                  {}};
  const HalfLaurent q_minus_qinv = qp(1) - qp(-1);
  run_items(rep, basis_vectors(max_weight, max_charge), [&](const FockVector& b, Sink& s) {
    const std::string in = describe(b);
    std::map<int, FockVector> xp, xm, psis, phis;
    auto Xp = [&](int n) -> const FockVector& {
      auto it = xp.find(n);
      if (it == xp.end()) it = xp.emplace(n, a.x_plus(n, b)).first;
      return it->second;
    };
    auto Xm = [&](int n) -> const FockVector& {
      auto it = xm.find(n);
      if (it == xm.end()) it = xm.emplace(n, a.x_minus(n, b)).first;
      return it->second;
    };
    auto Psi = [&](int k) -> const FockVector& {
      auto it = psis.find(k);
      if (it == psis.end()) it = psis.emplace(k, psi(k, b)).first;
      return it->second;
    };
    auto Phi = [&](int k) -> const FockVector& {
      auto it = phis.find(k);
      if (it == phis.end()) it = phis.emplace(k, phi(k, b)).first;
      return it->second;
    };
    for (int m = -index_window; m <= index_window; ++m)
      for (int n = -index_window; n <= index_window; ++n) {
        const std::string mn = std::to_string(m) + "," + std::to_string(n);
        {
          const FockVector lhs = a.x_plus(m, Xp(n)) - a.x_plus(n, Xp(m)) * qp(2);
          const FockVector rhs = a.x_plus(m - 1, Xp(n + 1)) * qp(2) - a.x_plus(n + 1, Xp(m - 1));
          s.expect("X+ exchange (" + mn + ") on " + in, rhs, lhs);
        }
        {
          const FockVector lhs = a.x_minus(m, Xm(n)) - a.x_minus(n, Xm(m)) * qp(-2);
          const FockVector rhs = a.x_minus(m - 1, Xm(n + 1)) * qp(-2) - a.x_minus(n + 1, Xm(m - 1));
          s.expect("X- exchange (" + mn + ") on " + in, rhs, lhs);
        }
        {
          const FockVector lhs = a.x_plus(m, Xm(n)) - a.x_minus(n, Xp(m));
          const FockVector num = Psi(m + n) * HalfLaurent::v_power(m - n) -
                                 Phi(m + n) * HalfLaurent::v_power(n - m);
          auto rhs = divide_exact(num, q_minus_qinv);
          const std::string label = "[X+_m, X-_n] (" + mn + ") on " + in;
          if (!rhs)
            s.require(label, false, "divisible by q - q^-1", render(num));
          else
            s.expect(label, *rhs, lhs);
        }
      }
  });
  return rep;
}

CheckReport check_q_vandermonde(int k) {
  CheckReport rep{"q_vandermonde", Json{{"k", k}}, {}};
  if (k < 1 || k > 5) {
    rep.violations.push_back({"k = " + std::to_string(k), "1 <= k <= 5", "out of range"});
    return rep;
  }
  const int nv = k + 1;  // z_1..z_k, q
  const int qi = k;
  MPoly prod = MPoly::constant(nv, 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      prod = prod * (MPoly::variable(nv, i) - MPoly::variable(nv, qi) * MPoly::variable(nv, j));

  std::vector<int> delta(k);
  for (int i = 0; i < k; ++i) delta[i] = k - 1 - i;
  std::vector<int> e = delta;
  std::sort(e.begin(), e.end());
  MPoly sym(nv);
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (e[i] < e[j]) ++inv;
    std::vector<int> exps = e;
    exps.push_back(inv);
    sym.add_term(MPoly::pack(exps), inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(e.begin(), e.end()));

  const MPoly residual = prod - sym;
  for (const auto& [exps, c] : residual.sorted_terms()) {
    std::vector<int> z(exps.begin(), exps.begin() + k);
    std::vector<int> sorted = z;
    std::sort(sorted.begin(), sorted.end());
    const bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    ++rep.checked;
    if (!repeated) {
      std::string mono;
      for (int x : exps) mono += (mono.empty() ? "" : ",") + std::to_string(x);
      rep.violations.push_back({"residual monomial z,q exponents (" + mono + ")", "repeated z exponent",
                                "distinct, coefficient " + std::to_string(c)});
    }
  }
  const MPoly at_one = residual.evaluate_variable(qi, 1);
  for (const auto& [exps, c] : at_one.sorted_terms()) {
    std::string mono;
    for (int i = 0; i < k; ++i) mono += (i ? "," : "") + std::to_string(exps[i]);
    rep.violations.push_back({"residual at q = 1, z exponents (" + mono + ")", "0", std::to_string(c)});
  }
  ++rep.checked;
  std::sort(rep.violations.begin(), rep.violations.end());
  return rep;
}

CheckReport check_lr(int max_total_weight) {
  CheckReport rep{"lr", Json{{"max_total_weight", max_total_weight}}, {}};
  std::vector<std::pair<Partition, Partition>> pairs;
  for (int w = 0; w <= max_total_weight; ++w)
    for (int a = 0; a <= w; ++a)
      for (const auto& lam : partitions_of(a))
        for (const auto& mu : partitions_of(w - a)) pairs.emplace_back(lam, mu);

  run_items(rep, pairs, [&](const std::pair<Partition, Partition>& p, Sink& s) {
    const auto& [lam, mu] = p;
    const std::string in = "s[" + to_string(lam) + "] * s[" + to_string(mu) + "]";
    const SchurPoly prod = lr_product(lam, mu);
    s.expect("matrix vs Jacobi-Trudi/Pieri: " + in, lr_product_oracle(lam, mu), prod);

    bool nonneg = true;
    for (const auto& [nu, c] : prod)
      if (c.size() != 1 || c.terms().begin()->first != 0 || c.terms().begin()->second < 0) nonneg = false;
    s.require("nonnegative integer coefficients: " + in, nonneg, "nonnegative integers", render(prod));

    s.expect("conjugation symmetry: " + in, conjugate_terms(prod), lr_product(conjugate(lam), conjugate(mu)));

    const int n = lam.weight() + mu.weight();
    if (n > MPoly::kMaxVars) {
      s.require("bialternant: " + in, false, "at most 8 variables", std::to_string(n));
      return;
    }
    const MPoly lhs = weyl_bialternant(lam, n) * weyl_bialternant(mu, n);
    MPoly rhs(n);
    for (const auto& [nu, c] : prod) rhs += weyl_bialternant(nu, n).scaled(c.coeff(0).get_si());
    ++s.checked;
    if (!(lhs == rhs))
      s.violations.push_back({"bialternant product in " + std::to_string(n) + " variables: " + in,
                              std::to_string(lhs.size()) + " monomials",
                              std::to_string(rhs.size()) + " monomials, mismatch"});
  });
  return rep;
}

CheckReport check_oracle(const OracleConfig& cfg, const ActionTable& a) {
  CheckReport rep{"oracle",
                  Json{{"max_weight", cfg.max_weight},
                       {"max_charge", cfg.max_charge},
                       {"max_index", cfg.max_index},
                       {"divided_max_weight", cfg.divided_max_weight},
                       {"divided_max_r", cfg.divided_max_r}},
                  {}};
  run_items(rep, basis_vectors(cfg.max_weight, cfg.max_charge), [&](const FockVector& b, Sink& s) {
    const std::string in = describe(b);
    const PowerState pb = to_power(b);
    int weight = 0;
    for (const auto& [key, c] : b.terms) weight = key.second.weight();
    for (int n = -cfg.max_index; n <= cfg.max_index; ++n) {
      const std::string nn = std::to_string(n);
      s.expect("X+_" + nn + " vs oracle on " + in, to_fock(Xplus_k(n, pb)), a.x_plus(n, b));
      s.expect("X-_" + nn + " vs oracle on " + in, to_fock(Xminus_k(n, pb)), a.x_minus(n, b));
      if (weight > cfg.divided_max_weight) continue;
      FockVector ip = b, im = b;
      for (int r = 1; r <= cfg.divided_max_r; ++r) {
        ip = a.x_plus(n, ip);
        im = a.x_minus(n, im);
        const HalfLaurent fr = qfactorial(r);
        const std::string label = "_" + nn + "^(" + std::to_string(r) + ") vs iterate/[r]! on " + in;
        auto dp = divide_exact(ip, fr);
        auto dm = divide_exact(im, fr);
        if (!dp)
          s.require("X+" + label, false, "divisible by [r]!", render(ip));
        else
          s.expect("X+" + label, *dp, a.x_plus_divided(n, r, b));
        if (!dm)
          s.require("X-" + label, false, "divisible by [r]!", render(im));
        else
          s.expect("X-" + label, *dm, a.x_minus_divided(n, r, b));
      }
    }
  });
  return rep;
}

CheckReport check_straighten_oracle(int max_length, int lo, int hi) {
  CheckReport rep{"straighten", Json{{"max_length", max_length}, {"lo", lo}, {"hi", hi}}, {}};
  // level[l] maps each tuple of length l to S_{-t_1} ... S_{-t_l}.1
  std::map<Tuple, PowerState> prev{{Tuple{}, PowerState::basis(0, 0, Partition{}, RatHalfLaurent(1L))}};
  Sink sink;
  auto compare = [&](const Tuple& t, const PowerState& got) {
    PowerPoly actual;
    for (const auto& [key, c] : got.terms) actual.add(key.second, c);
    PowerPoly expected;
    if (auto r = straighten(t))
      expected = schur_to_power(schur_monomial(r->partition, HalfLaurent(static_cast<long>(r->sign))));
    sink.require("S-composition vs straighten: (" + tuple_to_string(t) + ")", expected == actual, render(expected),
                 render(actual));
  };
  compare(Tuple{}, prev.begin()->second);
  for (int l = 1; l <= max_length; ++l) {
    std::vector<std::pair<Tuple, const PowerState*>> jobs;
    for (const auto& [t, st] : prev)
      for (int a = lo; a <= hi; ++a) {
        Tuple u{a};
        u.insert(u.end(), t.begin(), t.end());
        jobs.emplace_back(std::move(u), &st);
      }
    auto states = parallel_map<PowerState>(jobs.size(), [&](std::size_t k) {
      return S_k(-jobs[k].first.front(), *jobs[k].second);
    });
    std::map<Tuple, PowerState> next;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      compare(jobs[k].first, states[k]);
      next.emplace(std::move(jobs[k].first), std::move(states[k]));
    }
    prev = std::move(next);
  }
  rep.checked = sink.checked;
  rep.violations = std::move(sink.violations);
  std::sort(rep.violations.begin(), rep.violations.end());
  return rep;
}

CheckReport check_extremal(int max_r, int max_n, const ActionTable& a) {
  CheckReport rep{"extremal", Json{{"max_r", max_r}, {"max_n", max_n}}, {}};
  std::vector<std::pair<int, int>> items;  // (sector, r)
  for (int i = 0; i <= 1; ++i)
    for (int r = -max_r; r <= max_r; ++r) items.emplace_back(i, r);
  run_items(rep, items, [&](const std::pair<int, int>& it, Sink& s) {
    const auto [i, r] = it;
    const FockVector v = FockVector::basis(i, r, Partition{});
    const std::string in = describe(v);
    for (int n = -max_n; n <= max_n; ++n) {
      const bool plus_zero = a.x_plus(n, v).is_zero();
      const bool minus_zero = a.x_minus(n, v).is_zero();
      const bool plus_want = n > -2 * r - 1 - i;
      const bool minus_want = n > 2 * r - 1 + i;
      auto word = [](bool z) { return z ? std::string("0") : std::string("nonzero"); };
      s.require("X+_" + std::to_string(n) + " on " + in, plus_zero == plus_want, word(plus_want), word(plus_zero));
      s.require("X-_" + std::to_string(n) + " on " + in, minus_zero == minus_want, word(minus_want),
                word(minus_zero));
    }
    if (r < 0) return;
    FockVector w = vacuum(i);
    for (int k = 1; k <= r; ++k) w = a.x_plus(-2 * k + 1 - i, w);
    s.expect("highest weight chain of length " + std::to_string(r) + " on " + describe(vacuum(i)),
             FockVector::basis(i, r, Partition{}), w);
  });
  return rep;
}

namespace {

struct WordCase {
  std::string label;
  Word word;
  FockVector start;
  FockVector expected;
};

FockVector signed_extremal(int sector, int charge, int sign, int q_exp) {
  return FockVector::basis(sector, charge, Partition{}, HalfLaurent::monomial(mpz_class(sign), 2 * q_exp));
}

// f_{g(k)}^{(k)} for k = len, ..., 1 in written order (k = 1 acts first)
Word alternating(int len, Gen odd, Gen even) {
  Word w;
  for (int k = len; k >= 1; --k) w.push_back(Letter{k % 2 ? odd : even, k});
  return w;
}

}  // namespace

CheckReport check_extremal_words(int max_m, const ActionTable& a) {
  CheckReport rep{"extremal_words", Json{{"max_m", max_m}}, {}};
  std::vector<WordCase> cases;
  for (int m = 0; m <= max_m; ++m) {
    const int sg = m % 2 ? -1 : 1;
    const std::string mm = " (m=" + std::to_string(m) + ")";
    auto single = [](Gen g, int r) { return r == 0 ? Word{} : Word{Letter{g, r}}; };
    cases.push_back({"f1^(2m) e^{m a}" + mm, single(Gen::f1, 2 * m), FockVector::basis(0, m, {}),
                     signed_extremal(0, -m, sg, m * (2 * m - 1))});
    cases.push_back({"f0^(2m+1) e^{-m a}" + mm, single(Gen::f0, 2 * m + 1), FockVector::basis(0, -m, {}),
                     signed_extremal(0, m + 1, sg, -(2 * m + 1) * (m - 2))});
    cases.push_back({"f0^(2m) e^{-m a + a/2}" + mm, single(Gen::f0, 2 * m), FockVector::basis(1, -m, {}),
                     signed_extremal(1, m, sg, -m * (2 * m - 5))});
    cases.push_back({"f1^(2m+1) e^{m a + a/2}" + mm, single(Gen::f1, 2 * m + 1), FockVector::basis(1, m, {}),
                     signed_extremal(1, -m - 1, sg, m * (2 * m + 1))});
    cases.push_back({"chain f1^(2m) ... f0 on 1" + mm, alternating(2 * m, Gen::f0, Gen::f1), vacuum(0),
                     signed_extremal(0, -m, sg, 3 * m * m)});
    cases.push_back({"chain f0^(2m+1) ... f0 on 1" + mm, alternating(2 * m + 1, Gen::f0, Gen::f1), vacuum(0),
                     signed_extremal(0, m + 1, 1, (m + 1) * (m + 2))});
    cases.push_back({"chain f0^(2m) ... f1 on e^{a/2}" + mm, alternating(2 * m, Gen::f1, Gen::f0), vacuum(1),
                     signed_extremal(1, m, sg, m * (m + 2))});
    cases.push_back({"chain f1^(2m+1) ... f1 on e^{a/2}" + mm, alternating(2 * m + 1, Gen::f1, Gen::f0),
                     vacuum(1), signed_extremal(1, -m - 1, 1, 3 * m * (m + 1))});
  }
  run_items(rep, cases, [&](const WordCase& c, Sink& s) {
    s.expect(c.label + ": " + to_string(c.word), c.expected, a.apply_word(c.word, c.start));
  });
  return rep;
}

CheckReport check_golden(int sector, const ActionTable& a) {
  CheckReport rep{"golden", Json{{"sector", sector}}, {}};
  const auto& table = golden_table(sector);
  run_items(rep, table, [&](const GoldenEntry& e, Sink& s) {
    const FockVector got = a.apply_word(parse_word(e.word), vacuum(e.sector));
    s.expect(e.word + " on " + render(vacuum(e.sector)), e.expected, got);
  });
  return rep;
}

}  // namespace qfock
