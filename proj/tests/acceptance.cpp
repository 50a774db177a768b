// Acceptance run: one PASS/FAIL line per criterion, with elapsed time
// against the stated budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "qfock/oracle.hpp"
#include "qfock/verify.hpp"

using namespace qfock;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void take(const CheckReport& r) {
    notes.push_back(r.suite + " " + r.config.dump() + ": " + std::to_string(r.checked) + " checks, " +
                    std::to_string(r.violations.size()) + " violations");
    if (!r.pass()) ok = false;
  }
  void require(bool cond, const std::string& what) {
    notes.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
    if (!cond) ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::cout << "criterion " << std::setw(2) << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  ("
            << std::fixed << std::setprecision(2) << secs << " s, budget " << budget_s << " s"
            << (in_time ? "" : ", over budget") << ")\n";
  for (const auto& n : o.notes) std::cout << "    " << n << '\n';
}

void golden(Outcome& o, int sector) {
  const CheckReport r = check_golden(sector);
  o.take(r);
  for (const auto& e : golden_table(sector)) {
    const FockVector got = apply_word(parse_word(e.word), vacuum(sector));
    const bool same = got == e.expected;
    o.notes.push_back((same ? "match     " : "MISMATCH  ") + e.word);
    if (!same) {
      o.notes.push_back("    computed: " + render(got));
      o.notes.push_back("    table:    " + render(e.expected));
    }
  }
}

FockVector vec(int i, std::initializer_list<std::tuple<int, Partition, const char*>> terms) {
  FockVector v(i);
  for (const auto& [m, p, c] : terms) v.terms.add({m, p}, parse_laurent(c));
  return v;
}

}  // namespace

int main() {
  criterion(1, "V(Lambda_0) word table", 1, [](Outcome& o) { golden(o, 0); });

  criterion(2, "V(Lambda_1) word table", 1, [](Outcome& o) { golden(o, 1); });

  criterion(3, "X_0^- example, vanishing law, highest weight chains", 5, [](Outcome& o) {
    const FockVector got = x_minus(0, FockVector::basis(0, 1, {1}));
    const FockVector want = vec(0, {{0, {2}, "-1"}, {0, {1, 1}, "q^4"}});
    o.require(got == want, "X_0^- s[1] e^{1a} = " + render(got));
    o.take(check_extremal(3, 8));
  });

  criterion(4, "extremal divided powers and f-chains, m <= 3", 10,
            [](Outcome& o) { o.take(check_extremal_words(3)); });

  criterion(5, "currents and divided powers vs power-sum oracle", 120,
            [](Outcome& o) { o.take(check_oracle(OracleConfig{5, 2, 3, 3, 3})); });

  criterion(6, "Chevalley, Serre and Drinfeld relations", 120, [](Outcome& o) {
    o.take(check_chevalley(4, 2));
    o.take(check_serre(4, 2));
    o.take(check_drinfeld(4, 2, 2));
  });

  criterion(7, "LR three-way agreement, |lambda| + |mu| <= 8", 60, [](Outcome& o) { o.take(check_lr(8)); });

  criterion(8, "straightening vs S-composition oracle", 60,
            [](Outcome& o) { o.take(check_straighten_oracle(4, -4, 6)); });

  criterion(9, "q-Vandermonde residuals, k <= 5", 10, [](Outcome& o) {
    for (int k = 1; k <= 5; ++k) o.take(check_q_vandermonde(k));
  });

  criterion(10, "X_{-1}^+ s[2,1] e^{-1a}: realization and oracle agree, the s[3,2] variant differs", 10,
            [](Outcome& o) {
              const FockVector v = FockVector::basis(0, -1, {2, 1});
              const FockVector got = x_plus(-1, v);
              const FockVector derived = vec(0, {{0, {2, 2, 1}, "q^2"},
                                                 {0, {3, 1, 1}, "-q^-2"},
                                                 {0, {2, 1, 1, 1}, "-q^-2"},
                                                 {0, {5}, "q^-6"},
                                                 {0, {4, 1}, "q^-6"}});
              const FockVector variant = vec(0, {{0, {2, 2, 1}, "q^2"},
                                                 {0, {5}, "q^-6 - q^-2"},
                                                 {0, {4, 1}, "q^-6 - q^-2"},
                                                 {0, {3, 2}, "-q^-2"}});
              const FockVector oracle = to_fock(Xplus_k(-1, to_power(v)));
              o.require(got == derived, "realization: " + render(got));
              o.require(oracle == derived, "oracle:      " + render(oracle));
              o.require(!(variant == oracle), "variant rejected: " + render(variant));
            });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failed") << '\n';
  return failures == 0 ? 0 : 1;
}
