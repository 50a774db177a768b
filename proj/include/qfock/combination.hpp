#pragma once

#include <map>

namespace qfock {

/// Finite linear combination sum c_k [k] with no zero coefficients.
template <class Key, class Coeff>
class Combination {
 public:
  using Terms = std::map<Key, Coeff>;

  Combination() = default;
  Combination(const Key& k, Coeff c) { add(k, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add(const Key& k, const Coeff& c) {
    if (c == Coeff()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff()) terms_.erase(it);
    }
  }

  template <class Scalar>
  void add_scaled(const Combination& o, const Scalar& s) {
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  template <class Scalar>
  friend Combination operator*(const Combination& a, const Scalar& s) {
    Combination r;
    for (const auto& [k, c] : a.terms_) r.add(k, c * s);
    return r;
  }

  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace qfock
