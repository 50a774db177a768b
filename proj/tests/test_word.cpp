#include <doctest.h>

#include "qfock/word.hpp"

using namespace qfock;

namespace {

int error_token(const std::string& text) {
  try {
    parse_word(text);
  } catch (const WordParseError& e) {
    return e.token();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse words") {
  CHECK(parse_word("f0 f1^(2) f0") == Word{{Gen::f0, 1}, {Gen::f1, 2}, {Gen::f0, 1}});
  CHECK(parse_word("").empty());
  CHECK(parse_word("   ").empty());
  CHECK(parse_word("K0 K1inv qd qdinv e0^(3)") ==
        Word{{Gen::K0, 1}, {Gen::K1inv, 1}, {Gen::qd, 1}, {Gen::qdinv, 1}, {Gen::e0, 3}});
  CHECK(parse_word("e1^(1)") == Word{{Gen::e1, 1}});
}

TEST_CASE("parse errors carry the token position") {
  CHECK(error_token("f2") == 1);
  CHECK(error_token("f0 f1^(0)") == 2);
  CHECK(error_token("f0 f1 K0^(2)") == 3);
  CHECK(error_token("f0^2") == 1);
  CHECK(error_token("f0^(x)") == 1);
  CHECK(error_token("f0^(-1)") == 1);
  CHECK(error_token("f0 F1") == 2);
  CHECK_THROWS_WITH_AS(parse_word("f2"), "parse error at token 1: unknown generator 'f2'", WordParseError);
}

TEST_CASE("words print back") {
  for (const char* s : {"f0 f1^(2) f0", "", "K0inv qd e1^(4)"}) CHECK(to_string(parse_word(s)) == s);
  CHECK(to_string(Gen::qdinv) == "qdinv");
}
