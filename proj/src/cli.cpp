#include "qfock/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "qfock/fock.hpp"
#include "qfock/schur.hpp"
#include "qfock/serialize.hpp"
#include "qfock/verify.hpp"

namespace qfock {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void check_sector(int i) {
  if (i != 0 && i != 1) throw UsageError("--sector must be 0 or 1");
}

std::string render_h(const HExpansion& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : h) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + " * h[" + to_string(k) + "]";
  }
  return out;
}

Json h_json(const HExpansion& h) {
  Json arr = Json::array();
  for (const auto& [k, c] : h) arr.push_back(Json{{"h", to_json(k)}, {"coeff", std::to_string(c)}});
  return arr;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qfock: level-one U_q(affine sl2) modules on Schur functions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "JSON output");

  std::function<void()> action;
  int exit_code = kExitOk;
  auto emit = [&](const std::string& text, const Json& j) {
    if (json)
      out << j.dump() << '\n';
    else
      out << text << '\n';
  };

  // straighten
  std::string tuple_text;
  auto* straighten_cmd = app.add_subcommand("straighten", "normalize s_t for an integer tuple");
  straighten_cmd->add_option("tuple", tuple_text, "comma-separated integers")->required();
  straighten_cmd->callback([&] {
    action = [&] {
      auto r = straighten(parse_tuple(tuple_text));
      emit(render(r), to_json(r));
    };
  });

  // conjugate
  std::string part_a, part_b;
  auto* conj_cmd = app.add_subcommand("conjugate", "conjugate partition");
  conj_cmd->add_option("partition", part_a)->required();
  conj_cmd->callback([&] {
    action = [&] {
      Partition c = conjugate(parse_partition(part_a));
      emit(to_string(c), to_json(c));
    };
  });

  // lr
  bool use_oracle = false;
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson product s_lambda s_mu");
  lr_cmd->add_option("lambda", part_a)->required();
  lr_cmd->add_option("mu", part_b)->required();
  lr_cmd->add_flag("--oracle", use_oracle, "Jacobi-Trudi/Pieri route");
  lr_cmd->callback([&] {
    action = [&] {
      const Partition l = parse_partition(part_a), m = parse_partition(part_b);
      SchurPoly p = use_oracle ? lr_product_oracle(l, m) : lr_product(l, m);
      emit(render(p), to_json(p));
    };
  });

  // pieri
  std::string kind = "h";
  int n_value = 0;
  auto* pieri_cmd = app.add_subcommand("pieri", "h_n s_rho or e_n s_rho");
  pieri_cmd->add_option("--kind", kind)->check(CLI::IsMember({"h", "e"}));
  pieri_cmd->add_option("--n", n_value)->required();
  pieri_cmd->add_option("rho", part_a)->required();
  pieri_cmd->callback([&] {
    action = [&] {
      if (n_value < 0) throw UsageError("--n must be nonnegative");
      const Partition rho = parse_partition(part_a);
      SchurPoly p = kind == "h" ? pieri_h(n_value, rho) : pieri_e(n_value, rho);
      emit(render(p), to_json(p));
    };
  });

  // jt
  auto* jt_cmd = app.add_subcommand("jt", "Jacobi-Trudi expansion in h-monomials");
  jt_cmd->add_option("lambda", part_a)->required();
  jt_cmd->callback([&] {
    action = [&] {
      HExpansion h = jacobi_trudi(parse_partition(part_a));
      emit(render_h(h), h_json(h));
    };
  });

  // convert
  std::string from = "schur";
  auto* convert_cmd = app.add_subcommand("convert", "s_lambda in power sums, or p_lambda in Schur functions");
  convert_cmd->add_option("--from", from)->check(CLI::IsMember({"schur", "power"}));
  convert_cmd->add_option("lambda", part_a)->required();
  convert_cmd->callback([&] {
    action = [&] {
      const Partition l = parse_partition(part_a);
      if (from == "schur") {
        PowerPoly p = schur_to_power(schur_monomial(l));
        emit(render(p), to_json(p));
      } else {
        SchurPoly s = power_to_schur(PowerPoly(l, RatHalfLaurent(1L)));
        emit(render(s), to_json(s));
      }
    };
  });

  // mixed
  std::string mu_text, nu_text;
  auto* mixed_cmd = app.add_subcommand("mixed", "S_{-mu} S*_{nu} applied to 1");
  mixed_cmd->add_option("--mu", mu_text);
  mixed_cmd->add_option("--nu", nu_text);
  mixed_cmd->callback([&] {
    action = [&] {
      const Tuple mu = parse_tuple(mu_text), nu = parse_tuple(nu_text);
      for (int x : mu)
        if (x < 0) throw UsageError("--mu entries must be nonnegative");
      for (int x : nu)
        if (x < 0) throw UsageError("--nu entries must be nonnegative");
      auto r = mixed_product(mu, nu);
      emit(render(r), to_json(r));
    };
  });

  // x / divided
  std::string sign = "plus";
  int sector = 0, charge = 0, r_value = 1;
  auto add_vector_options = [&](CLI::App* cmd) {
    cmd->add_option("--sector", sector);
    cmd->add_option("--charge", charge);
    cmd->add_option("--mu", mu_text);
  };
  auto start_vector = [&] {
    check_sector(sector);
    return FockVector::basis(sector, charge, parse_partition(mu_text));
  };
  auto* x_cmd = app.add_subcommand("x", "Drinfeld current X_n^{+-} on a basis vector");
  x_cmd->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}));
  x_cmd->add_option("--n", n_value)->required();
  add_vector_options(x_cmd);
  x_cmd->callback([&] {
    action = [&] {
      const FockVector v = start_vector();
      FockVector w = sign == "plus" ? x_plus(n_value, v) : x_minus(n_value, v);
      emit(render(w), to_json(w));
    };
  });
  auto* div_cmd = app.add_subcommand("divided", "divided power X_n^{+-(r)} on a basis vector");
  div_cmd->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}));
  div_cmd->add_option("--n", n_value)->required();
  div_cmd->add_option("--r", r_value)->required();
  add_vector_options(div_cmd);
  div_cmd->callback([&] {
    action = [&] {
      if (r_value < 1) throw UsageError("--r must be at least 1");
      const FockVector v = start_vector();
      FockVector w = sign == "plus" ? x_plus_divided(n_value, r_value, v) : x_minus_divided(n_value, r_value, v);
      emit(render(w), to_json(w));
    };
  });

  // apply
  std::string word_text;
  auto* apply_cmd = app.add_subcommand("apply", "apply a generator word (rightmost first)");
  add_vector_options(apply_cmd);
  apply_cmd->add_option("word", word_text);
  apply_cmd->callback([&] {
    action = [&] {
      const Word w = parse_word(word_text);
      FockVector res = apply_word(w, start_vector());
      emit(render(res), to_json(res));
    };
  });

  // inner
  bool deformed = false;
  auto* inner_cmd = app.add_subcommand("inner", "Hall inner product <s_lambda, s_mu>, or deformed <p_lambda, p_mu>");
  inner_cmd->add_option("lambda", part_a)->required();
  inner_cmd->add_option("mu", part_b)->required();
  inner_cmd->add_flag("--deformed", deformed);
  inner_cmd->callback([&] {
    action = [&] {
      const Partition l = parse_partition(part_a), m = parse_partition(part_b);
      if (deformed) {
        auto [num, den] = deformed_inner(l, m);
        emit(to_string(num) + " / (" + to_string(den) + ")",
             Json{{"numerator", to_json(num)}, {"denominator", to_json(den)}});
      } else {
        HalfLaurent h = hall_inner(schur_monomial(l), schur_monomial(m));
        emit(to_string(h), to_json(h));
      }
    };
  });

  // check
  std::string suite = "all";
  int max_weight = 4, max_charge = 2, window = 2, k_value = 5, lr_weight = 8;
  OracleConfig ocfg;
  auto* check_cmd = app.add_subcommand("check", "run relation/identity suites");
  check_cmd->add_option("suite", suite)
      ->check(CLI::IsMember({"all", "chevalley", "serre", "drinfeld", "vandermonde", "lr", "oracle", "golden",
                              "straighten", "extremal", "words"}));
  check_cmd->add_option("--max-weight", max_weight);
  check_cmd->add_option("--max-charge", max_charge);
  check_cmd->add_option("--window", window);
  check_cmd->add_option("--k", k_value);
  check_cmd->add_option("--lr-weight", lr_weight);
  check_cmd->add_option("--oracle-weight", ocfg.max_weight);
  check_cmd->add_option("--oracle-index", ocfg.max_index);
  check_cmd->callback([&] {
    action = [&] {
      ocfg.max_charge = max_charge;
      std::vector<CheckReport> reports;
      auto want = [&](const char* s) { return suite == "all" || suite == s; };
      if (want("chevalley")) reports.push_back(check_chevalley(max_weight, max_charge));
      if (want("serre")) reports.push_back(check_serre(max_weight, max_charge));
      if (want("drinfeld")) reports.push_back(check_drinfeld(max_weight, window, max_charge));
      if (want("vandermonde"))
        for (int k = 1; k <= k_value; ++k) reports.push_back(check_q_vandermonde(k));
      if (want("lr")) reports.push_back(check_lr(lr_weight));
      if (want("oracle")) reports.push_back(check_oracle(ocfg));
      if (want("straighten")) reports.push_back(check_straighten_oracle(4, -4, 6));
      if (want("extremal")) reports.push_back(check_extremal(3, 8));
      if (want("words")) reports.push_back(check_extremal_words(3));
      if (want("golden"))
        for (int i = 0; i <= 1; ++i) reports.push_back(check_golden(i));
      Json arr = Json::array();
      std::ostringstream text;
      for (const auto& r : reports) {
        arr.push_back(to_json(r));
        text << r.suite << ' ' << r.config.dump() << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.checked
             << " checks, " << r.violations.size() << " violations)\n";
        for (const auto& v : r.violations)
          text << "  " << v.input << "\n    expected: " << v.expected << "\n    actual:   " << v.actual << '\n';
        if (!r.pass()) exit_code = kExitCheckFailed;
      }
      std::string t = text.str();
      if (!t.empty()) t.pop_back();
      emit(t, arr);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    if (action) action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace qfock
