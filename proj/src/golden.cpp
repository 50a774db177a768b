#include "qfock/golden.hpp"

#include <stdexcept>

namespace qfock {

namespace {

struct Term {
  int charge;
  Partition lambda;
  const char* coeff;
};

GoldenEntry entry(int sector, const char* word, std::initializer_list<Term> terms) {
  GoldenEntry e{sector, word, FockVector(sector)};
  for (const auto& t : terms) e.expected.terms.add({t.charge, t.lambda}, parse_laurent(t.coeff));
  return e;
}

std::vector<GoldenEntry> build(int sector) {
  const Partition empty{}, s1{1}, s2{2}, s11{1, 1};
  if (sector == 0)
    return {
        entry(0, "f0", {{1, empty, "q^2"}}),
        entry(0, "f1 f0", {{0, s1, "-q^4 - q^2"}}),
        entry(0, "f1^(2) f0", {{-1, empty, "-q^3"}}),
        entry(0, "f0 f1 f0", {{1, s1, "q^4 + q^2"}}),
        entry(0, "f1 f0 f1 f0", {{0, s2, "-q^4 - q^2"}, {0, s11, "q^8 + q^6"}}),
        entry(0, "f0 f1^(2) f0", {{0, s11, "-q^3"}, {0, s2, "-q^5 - q^3 - q"}}),
        entry(0, "f0 f1 f0 f1 f0", {{1, s2, "q^6 + 2*q^4 + q^2"}, {1, s11, "q^6 + 2*q^4 + q^2"}}),
        entry(0, "f0^(2) f1^(2) f0", {{1, s2, "q^4"}, {1, s11, "q^6 + q^4 + q^2"}}),
        entry(0, "f0^(3) f1^(2) f0", {{2, empty, "q^6"}}),
        entry(0, "f1^(2) f0 f1 f0", {{-1, s1, "q^7 + q^5"}}),
    };
  return {
      entry(1, "f1", {{-1, empty, "1"}}),
      entry(1, "f0 f1", {{0, s1, "q^-2 + q^-4"}}),
      entry(1, "f0^(2) f1", {{1, empty, "-q^3"}}),
      entry(1, "f1 f0 f1", {{-1, s1, "-1 - q^-2"}}),
      entry(1, "f0 f1 f0 f1", {{0, s2, "q^2 + 1"}, {0, s11, "-q^2 - 1"}}),
      entry(1, "f1 f0^(2) f1", {{0, s11, "-q^7 - q^5 - q^3"}, {0, s2, "-q^5"}}),
      entry(1, "f1 f0 f1 f0 f1", {{-1, s2, "q^4 + 2*q^2 + 1"}, {-1, s11, "q^6 + 2*q^4 + q^2"}}),
      entry(1, "f1^(2) f0^(2) f1", {{-1, s2, "q^7 + q^5 + q^3"}, {-1, s11, "q^5"}}),
      entry(1, "f1^(3) f0^(2) f1", {{-2, empty, "q^6"}}),
      entry(1, "f0^(2) f1 f0 f1", {{1, s1, "-q - q^-1"}}),
  };
}

}  // namespace

const std::vector<GoldenEntry>& golden_table(int sector) {
  static const std::vector<GoldenEntry> t0 = build(0);
  static const std::vector<GoldenEntry> t1 = build(1);
  if (sector == 0) return t0;
  if (sector == 1) return t1;
  throw std::invalid_argument("golden_table: sector must be 0 or 1");
}

}  // namespace qfock
