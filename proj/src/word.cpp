#include "qfock/word.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace qfock {

namespace {

constexpr std::array<std::pair<const char*, Gen>, 10> kNames{{
    {"e0", Gen::e0},
    {"e1", Gen::e1},
    {"f0", Gen::f0},
    {"f1", Gen::f1},
    {"K0", Gen::K0},
    {"K1", Gen::K1},
    {"K0inv", Gen::K0inv},
    {"K1inv", Gen::K1inv},
    {"qd", Gen::qd},
    {"qdinv", Gen::qdinv},
}};

bool takes_power(Gen g) { return g == Gen::e0 || g == Gen::e1 || g == Gen::f0 || g == Gen::f1; }

}  // namespace

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  int index = 0;
  while (in >> tok) {
    ++index;
    std::string name = tok;
    int power = 1;
    bool has_power = false;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string suffix = tok.substr(caret + 1);
      if (suffix.size() < 3 || suffix.front() != '(' || suffix.back() != ')')
        throw WordParseError(index, "malformed exponent in '" + tok + "'");
      const std::string digits = suffix.substr(1, suffix.size() - 2);
      std::size_t used = 0;
      try {
        power = std::stoi(digits, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (digits.empty() || used != digits.size())
        throw WordParseError(index, "malformed exponent in '" + tok + "'");
      has_power = true;
    }
    const Gen* found = nullptr;
    for (const auto& [n, g] : kNames)
      if (name == n) found = &g;
    if (!found) throw WordParseError(index, "unknown generator '" + name + "'");
    if (has_power && !takes_power(*found))
      throw WordParseError(index, "'" + name + "' takes no divided power");
    if (power < 1) throw WordParseError(index, "divided power must be at least 1");
    w.push_back({*found, power});
  }
  return w;
}

std::string to_string(Gen g) {
  for (const auto& [n, gg] : kNames)
    if (gg == g) return n;
  return "?";
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l.gen);
    if (l.power != 1) out += "^(" + std::to_string(l.power) + ")";
  }
  return out;
}

}  // namespace qfock
