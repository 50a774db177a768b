#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qfock {

enum class Gen { e0, e1, f0, f1, K0, K1, K0inv, K1inv, qd, qdinv };

struct Letter {
  Gen gen;
  int power = 1;  // divided power r for e/f, always 1 otherwise
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letters in written order; the rightmost one acts first.
using Word = std::vector<Letter>;

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(int token, const std::string& what)
      : std::invalid_argument("parse error at token " + std::to_string(token) + ": " + what),
        token_(token) {}
  int token() const { return token_; }

 private:
  int token_;
};

/// Whitespace-separated tokens e0 e1 f0 f1 K0 K1 K0inv K1inv qd qdinv, with an
/// optional ^(r), r >= 1, on e/f tokens. Tokens are counted from 1.
Word parse_word(const std::string& text);

std::string to_string(Gen g);
std::string to_string(const Word& w);

}  // namespace qfock
