#include "qfock/mpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qfock {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("MPoly: coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("MPoly: coefficient overflow");
  return r;
}

constexpr int kBits = 8;
constexpr MPoly::Key kMask = 0xff;

// Variable 0 occupies the most significant byte so that comparing keys
// compares exponent vectors lexicographically.
int shift_of(int i) { return (MPoly::kMaxVars - 1 - i) * kBits; }

int exponent_of(MPoly::Key k, int i) { return static_cast<int>((k >> shift_of(i)) & kMask); }

}  // namespace

MPoly::MPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("MPoly: unsupported variable count");
}

MPoly MPoly::constant(int nvars, long long c) {
  MPoly p(nvars);
  p.add_term(0, c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, e, 1);
}

MPoly MPoly::monomial(int nvars, std::span<const int> exponents, long long c) {
  MPoly p(nvars);
  if (static_cast<int>(exponents.size()) != nvars)
    throw std::invalid_argument("MPoly: exponent vector length mismatch");
  p.add_term(pack(exponents), c);
  return p;
}

MPoly::Key MPoly::pack(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("MPoly: too many variables");
  Key k = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw std::out_of_range("MPoly: exponent out of range");
    k |= static_cast<Key>(exponents[i]) << shift_of(static_cast<int>(i));
  }
  return k;
}

std::vector<int> MPoly::unpack(Key key) const {
  std::vector<int> e(nvars_);
  for (int i = 0; i < nvars_; ++i) e[i] = exponent_of(key, i);
  return e;
}

void MPoly::add_term(Key key, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

long long MPoly::coeff(std::span<const int> exponents) const {
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? 0 : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  MPoly r(a.nvars_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i)
        if (exponent_of(ka, i) + exponent_of(kb, i) > 255)
          throw std::out_of_range("MPoly: exponent out of range");
      r.add_term(ka + kb, checked_mul(ca, cb));
    }
  return r;
}

MPoly MPoly::scaled(long long s) const {
  MPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, checked_mul(c, s));
  return r;
}

namespace {

using Terms = std::vector<std::pair<MPoly::Key, long long>>;

// P = (x_i - x_j) Q on sorted term lists. Writing P = sum_k P_k x_i^k, the
// quotient pieces satisfy Q_{k-1} = P_k + x_j Q_k from the top degree down,
// and P_0 + x_j Q_0 must vanish.
std::optional<Terms> divide_sorted(const Terms& p, int i, int j) {
  const MPoly::Key unit_i = MPoly::Key{1} << shift_of(i);
  const MPoly::Key unit_j = MPoly::Key{1} << shift_of(j);
  if (p.empty()) return Terms{};
  int top = 0;
  for (const auto& [k, c] : p) top = std::max(top, exponent_of(k, i));
  std::vector<Terms> levels(top + 1);
  for (const auto& [k, c] : p) {
    const int d = exponent_of(k, i);
    levels[d].emplace_back(k - static_cast<MPoly::Key>(d) * unit_i, c);
  }
  Terms quot;
  Terms carry;  // x_j Q_k, without x_i
  for (int k = top; k >= 0; --k) {
    Terms level;
    level.reserve(levels[k].size() + carry.size());
    auto a = levels[k].begin(), ae = levels[k].end();
    auto b = carry.begin(), be = carry.end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        level.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        level.push_back(*b++);
      } else {
        const long long c = checked_add(a->second, b->second);
        if (c != 0) level.emplace_back(a->first, c);
        ++a;
        ++b;
      }
    }
    if (k == 0) {
      if (!level.empty()) return std::nullopt;
      break;
    }
    carry.clear();
    carry.reserve(level.size());
    for (const auto& [key, c] : level) {
      if (exponent_of(key, j) == 255) throw std::out_of_range("MPoly: exponent out of range");
      quot.emplace_back(key + static_cast<MPoly::Key>(k - 1) * unit_i, c);
      carry.emplace_back(key + unit_j, c);
    }
  }
  std::sort(quot.begin(), quot.end());
  return quot;
}

}  // namespace

std::optional<MPoly> MPoly::divide_by_difference(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= nvars_ || j >= nvars_)
    throw std::invalid_argument("MPoly: bad variable pair");
  Terms p(terms_.begin(), terms_.end());
  std::sort(p.begin(), p.end());
  auto q = divide_sorted(p, i, j);
  if (!q) return std::nullopt;
  MPoly out(nvars_);
  for (const auto& [k, c] : *q) out.terms_.emplace(k, c);
  return out;
}

std::optional<MPoly> MPoly::divide_by_vandermonde() const {
  Terms p(terms_.begin(), terms_.end());
  std::sort(p.begin(), p.end());
  for (int i = 0; i < nvars_; ++i)
    for (int j = i + 1; j < nvars_; ++j) {
      auto q = divide_sorted(p, i, j);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
  MPoly out(nvars_);
  for (const auto& [k, c] : p) out.terms_.emplace(k, c);
  return out;
}

MPoly MPoly::evaluate_variable(int i, long long value) const {
  MPoly r(nvars_);
  const Key strip_i = ~(kMask << shift_of(i));
  for (const auto& [k, c] : terms_) {
    long long f = c;
    for (int e = exponent_of(k, i); e > 0; --e) f = checked_mul(f, value);
    r.add_term(k & strip_i, f);
  }
  return r;
}

std::vector<std::pair<std::vector<int>, long long>> MPoly::sorted_terms() const {
  std::vector<std::pair<Key, long long>> raw(terms_.begin(), terms_.end());
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<std::vector<int>, long long>> out;
  out.reserve(raw.size());
  for (const auto& [k, c] : raw) out.emplace_back(unpack(k), c);
  return out;
}

}  // namespace qfock
