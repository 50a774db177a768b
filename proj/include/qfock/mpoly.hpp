#pragma once

// Small dense-exponent multivariate integer polynomials (at most 8
// variables, exponents below 256). Used for bialternants and the
// q-symmetrization check; not a general CAS.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qfock {

class MPoly {
 public:
  static constexpr int kMaxVars = 8;
  using Key = std::uint64_t;

  explicit MPoly(int nvars);

  static MPoly constant(int nvars, long long c);
  static MPoly variable(int nvars, int i);
  static MPoly monomial(int nvars, std::span<const int> exponents, long long c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Key key, long long c);
  long long coeff(std::span<const int> exponents) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(long long s) const;

  /// Exact quotient by (x_i - x_j), or nullopt when it does not divide.
  std::optional<MPoly> divide_by_difference(int i, int j) const;
  /// Exact quotient by prod_{i<j} (x_i - x_j).
  std::optional<MPoly> divide_by_vandermonde() const;

  /// Substitutes value for variable i (the variable stays, with exponent 0).
  MPoly evaluate_variable(int i, long long value) const;

  /// Terms as (exponent vector, coefficient), sorted by exponent vector descending.
  std::vector<std::pair<std::vector<int>, long long>> sorted_terms() const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  static Key pack(std::span<const int> exponents);
  std::vector<int> unpack(Key key) const;

 private:
  int nvars_;
  std::unordered_map<Key, long long> terms_;
};

}  // namespace qfock
