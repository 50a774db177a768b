#include "qfock/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("not a partition: (" + tuple_to_string(parts_) + ")");
    weight_ += parts_[i];
  }
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  // reverse lexicographic: larger leading parts first
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

StraightenResult straighten(std::span<const int> t) {
  const int l = static_cast<int>(t.size());
  std::vector<int> u(l);
  for (int k = 0; k < l; ++k) {
    u[k] = t[k] + (l - 1 - k);
    if (u[k] < 0) return std::nullopt;
  }
  int inversions = 0;
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) {
      if (u[a] == u[b]) return std::nullopt;
      if (u[a] < u[b]) ++inversions;
    }
  std::sort(u.begin(), u.end(), std::greater<>());
  for (int k = 0; k < l; ++k) u[k] -= (l - 1 - k);
  return SignedPartition{inversions % 2 == 0 ? 1 : -1, Partition(std::move(u))};
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> c(lambda[0], 0);
  for (int part : lambda.parts())
    for (int i = 0; i < part; ++i) ++c[i];
  return Partition(std::move(c));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  // at most one box per column  <=>  outer_{i+1} <= inner_i
  for (int i = 0; i + 1 < outer.length(); ++i)
    if (outer[i + 1] > inner[i]) return false;
  return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int i = 0; i < outer.length(); ++i)
    if (outer[i] - inner[i] > 1) return false;
  return true;
}

std::vector<Partition> horizontal_strips(const Partition& rho, int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  const int rows = rho.length() + 1;
  std::vector<int> lam(rows, 0);
  // Row i takes rho_i <= lam_i <= rho_{i-1} (row 0 unbounded).
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rows) {
      if (left == 0) out.emplace_back(lam);
      return;
    }
    const int lo = rho[i];
    const int hi = i == 0 ? rho[0] + left : std::min(rho[i - 1], rho[i] + left);
    for (int v = hi; v >= lo; --v) {
      lam[i] = v;
      rec(i + 1, left - (v - lo));
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> vertical_strips(const Partition& rho, int n) {
  std::vector<Partition> out;
  for (const auto& kappa : horizontal_strips(conjugate(rho), n)) out.push_back(conjugate(kappa));
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class z_lambda(const Partition& lambda) {
  mpz_class z = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const unsigned long mult = j - i;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), mult);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), mult);
    z *= f * pw;
    i = j;
  }
  return z;
}

std::vector<Partition> partitions_bounded(int max_length, int max_part, int max_weight) {
  if (max_length < 0 || max_part < 0 || max_weight < 0)
    throw std::invalid_argument("partitions_bounded: bounds must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int cap, int left) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int v = std::min(cap, left); v >= 1; --v) {
      cur.push_back(v);
      rec(v, left - v);
      cur.pop_back();
    }
  };
  rec(max_part, max_weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  for (auto& p : partitions_bounded(n, n, n))
    if (p.weight() == n) out.push_back(std::move(p));
  return out;
}

Tuple juxtapose(std::span<const int> a, std::span<const int> b) {
  Tuple t(a.begin(), a.end());
  t.insert(t.end(), b.begin(), b.end());
  return t;
}

std::string tuple_to_string(std::span<const int> t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  return os.str();
}

std::string to_string(const Partition& lambda) { return tuple_to_string(lambda.parts()); }

Tuple parse_tuple(const std::string& text) {
  Tuple t;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return t;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw std::invalid_argument("bad integer '" + item + "' in tuple '" + text + "'");
    t.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return t;
}

Partition parse_partition(const std::string& text) { return Partition(parse_tuple(text)); }

}  // namespace qfock
