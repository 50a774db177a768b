#include "qfock/qring.hpp"

#include <cctype>
#include <sstream>

namespace qfock {

RatHalfLaurent to_rational(const HalfLaurent& f) {
  RatHalfLaurent r;
  for (const auto& [e, c] : f.terms()) r.add_term(e, mpq_class(c));
  return r;
}

std::optional<HalfLaurent> to_integral(const RatHalfLaurent& f) {
  HalfLaurent r;
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1) return std::nullopt;
    r.add_term(e, c.get_num());
  }
  return r;
}

HalfLaurent qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument " + std::to_string(n));
  HalfLaurent r;
  for (int k = n - 1; k > -n; k -= 2) r.add_term(2 * k, 1);
  return r;
}

HalfLaurent qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("qfactorial: negative argument " + std::to_string(n));
  HalfLaurent r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

HalfLaurent qbinomial(int n, int m) {
  if (m < 0 || n < m)
    throw std::invalid_argument("qbinomial: need n >= m >= 0, got n=" + std::to_string(n) +
                                " m=" + std::to_string(m));
  auto q = exact_divide(qfactorial(n), qfactorial(m) * qfactorial(n - m));
  if (!q) throw std::logic_error("qbinomial: non-exact division");
  return *q;
}

std::optional<HalfLaurent> exact_divide(const HalfLaurent& f, const HalfLaurent& g) {
  if (g.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (f.is_zero()) return HalfLaurent();

  const int g_top = g.max_exponent();
  const mpz_class& g_lead = g.terms().rbegin()->second;
  // Any quotient term lies in [f_min - g_min, f_max - g_max].
  const int lowest = f.min_exponent() - g.min_exponent();

  HalfLaurent rest = f;
  HalfLaurent quot;
  while (!rest.is_zero()) {
    const int e = rest.max_exponent() - g_top;
    if (e < lowest) return std::nullopt;
    const mpz_class& c = rest.terms().rbegin()->second;
    if (!mpz_divisible_p(c.get_mpz_t(), g_lead.get_mpz_t())) return std::nullopt;
    mpz_class t = c / g_lead;
    quot.add_term(e, t);
    rest -= HalfLaurent::monomial(t, e) * g;
  }
  return quot;
}

namespace {

template <class Coeff>
std::string coeff_text(const Coeff& c) {
  return c.get_str();
}

}  // namespace

template <class Coeff>
std::string to_string(const Laurent<Coeff>& f) {
  if (f.is_zero()) return "0";
  const bool in_q = f.is_integral_in_q();
  const char var = in_q ? 'q' : 'v';

  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const int e = in_q ? it->first / 2 : it->first;
    Coeff c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;

    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    if (e == 0) {
      os << coeff_text(c);
      continue;
    }
    if (c != 1) os << coeff_text(c) << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

template std::string to_string(const HalfLaurent&);
template std::string to_string(const RatHalfLaurent&);

HalfLaurent parse_laurent(const std::string& text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse Laurent polynomial '" + text + "': " + why);
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail("empty");
  if (s == "0") return {};

  HalfLaurent out;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;

    mpz_class coeff = 1;
    bool have_coeff = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      coeff = mpz_class(s.substr(i, j - i));
      have_coeff = true;
      i = j;
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) fail("dangling '*'");
      ++i;
    }

    int v_exp = 0;
    if (i < s.size() && (s[i] == 'q' || s[i] == 'v')) {
      const int scale = s[i] == 'q' ? 2 : 1;
      ++i;
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        if (k < s.size() && s[k] == '-') ++k;
        std::size_t m = k;
        while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
        if (m == k) fail("missing exponent");
        e = std::stoi(s.substr(i, m - i));
        i = m;
      }
      v_exp = scale * e;
    } else if (!have_coeff) {
      fail("expected a term at offset " + std::to_string(i));
    }
    out.add_term(v_exp, sign * coeff);
  }
  return out;
}

}  // namespace qfock
