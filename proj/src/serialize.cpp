#include "qfock/serialize.hpp"

#include <stdexcept>

namespace qfock {

namespace {

template <class Coeff>
std::string coeff_text(const Laurent<Coeff>& c) {
  const std::string s = to_string(c);
  return c.size() > 1 ? "(" + s + ")" : s;
}

template <class Key, class Coeff, class KeyText>
std::string render_sum(const Combination<Key, Coeff>& f, KeyText&& key_text) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : f) {
    if (!out.empty()) out += " + ";
    out += coeff_text(c) + " * " + key_text(k);
  }
  return out;
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("bad JSON: " + what); }

template <class Num>
Num number_from_json(const Json& j) {
  try {
    if (j.is_string()) {
      Num n(j.get<std::string>());
      if constexpr (std::is_same_v<Num, mpq_class>) n.canonicalize();
      return n;
    }
    if (j.is_number_integer()) return Num(j.get<long>());
  } catch (const std::invalid_argument&) {
  }
  bad("coefficient " + j.dump());
}

template <class Coeff>
Json laurent_json(const Laurent<Coeff>& f) {
  Json j = Json::object();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    j[std::to_string(it->first)] = it->second.get_str();
  return j;
}

template <class Coeff>
Laurent<Coeff> laurent_parse(const Json& j) {
  if (!j.is_object()) bad("Laurent polynomial must be an object");
  Laurent<Coeff> f;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (k.empty() || used != k.size()) bad("exponent key '" + k + "'");
    f.add_term(e, number_from_json<Coeff>(v));
  }
  return f;
}

Json poly_json(const auto& f) {
  Json arr = Json::array();
  for (const auto& [lam, c] : f) arr.push_back(Json{{"partition", to_json(lam)}, {"coeff", to_json(c)}});
  return arr;
}

}  // namespace

std::string render_basis(int sector, int charge, const Partition& lambda) {
  std::string out;
  if (!lambda.empty()) out = "s[" + to_string(lambda) + "] ";
  out += "e^{" + std::to_string(charge) + "a" + (sector == 1 ? "+a/2" : "") + "}";
  return out;
}

std::string render(const SchurPoly& f) {
  return render_sum(f, [](const Partition& p) { return "s[" + to_string(p) + "]"; });
}

std::string render(const PowerPoly& g) {
  return render_sum(g, [](const Partition& p) { return "p[" + to_string(p) + "]"; });
}

std::string render(const FockVector& v) {
  // keeps the two zero vectors apart
  if (v.is_zero() && v.sector == 1) return "0 e^{a/2}";
  return render_sum(v.terms, [&](const BasisKey& k) { return render_basis(v.sector, k.first, k.second); });
}

std::string render(const StraightenResult& r) {
  if (!r) return "0";
  return std::to_string(r->sign) + " * s[" + to_string(r->partition) + "]";
}

Json to_json(const HalfLaurent& f) { return laurent_json(f); }
Json to_json(const RatHalfLaurent& f) { return laurent_json(f); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const StraightenResult& r) {
  if (!r) return Json{{"sign", 0}, {"partition", nullptr}};
  return Json{{"sign", r->sign}, {"partition", to_json(r->partition)}};
}

Json to_json(const SchurPoly& f) { return poly_json(f); }
Json to_json(const PowerPoly& g) { return poly_json(g); }

Json to_json(const FockVector& v) {
  Json terms = Json::array();
  for (const auto& [key, c] : v.terms)
    terms.push_back(Json{{"charge", key.first}, {"partition", to_json(key.second)}, {"coeff", to_json(c)}});
  return Json{{"sector", v.sector}, {"terms", terms}};
}

HalfLaurent laurent_from_json(const Json& j) { return laurent_parse<mpz_class>(j); }
RatHalfLaurent rat_laurent_from_json(const Json& j) { return laurent_parse<mpq_class>(j); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) bad("partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("partition entry " + x.dump());
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

StraightenResult straighten_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sign")) bad("straighten result");
  const int sign = j.at("sign").get<int>();
  if (sign == 0) return std::nullopt;
  if (sign != 1 && sign != -1) bad("sign");
  return SignedPartition{sign, partition_from_json(j.at("partition"))};
}

SchurPoly schur_from_json(const Json& j) {
  if (!j.is_array()) bad("Schur polynomial must be an array");
  SchurPoly f;
  for (const auto& t : j) f.add(partition_from_json(t.at("partition")), laurent_from_json(t.at("coeff")));
  return f;
}

PowerPoly power_from_json(const Json& j) {
  if (!j.is_array()) bad("power-sum polynomial must be an array");
  PowerPoly g;
  for (const auto& t : j) g.add(partition_from_json(t.at("partition")), rat_laurent_from_json(t.at("coeff")));
  return g;
}

FockVector fock_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sector") || !j.contains("terms")) bad("Fock vector");
  const int sector = j.at("sector").get<int>();
  if (sector != 0 && sector != 1) bad("sector");
  FockVector v(sector);
  for (const auto& t : j.at("terms"))
    v.terms.add({t.at("charge").get<int>(), partition_from_json(t.at("partition"))},
                laurent_from_json(t.at("coeff")));
  return v;
}

}  // namespace qfock
