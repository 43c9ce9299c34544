#pragma once

// Finite groups given by multiplication tables.

#include <cstddef>
#include <string>
#include <vector>

#include "crossed/errors.hpp"

namespace crossed {

class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return e_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  /// b a b^-1
  std::size_t conj(std::size_t b, std::size_t a) const { return mul(mul(b, a), inv(b)); }
  std::size_t mul(std::initializer_list<std::size_t> word) const {
    std::size_t r = e_;
    for (auto w : word) r = mul(r, w);
    return r;
  }
  bool abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t a) const { return names_[a]; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

  friend FiniteGroup make_group(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names);

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inv_;
  std::vector<std::string> names_;
  std::size_t e_ = 0;
};

/// Validates the table and derives identity and inverses.
inline FiniteGroup make_group(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {}) {
  std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw NotAGroup("row " + std::to_string(a) + " has length " + std::to_string(table[a].size()));
    for (auto v : table[a])
      if (v >= n) throw NotAGroup("entry " + std::to_string(v) + " out of range in row " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAGroup("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[c][a] == a && table[a][c] == a;
    if (ok) e = c;
  }
  if (e == n) throw NotAGroup("no identity element");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (inv[a] == n) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
  if (names.empty())
    for (std::size_t a = 0; a < n; ++a) names.push_back(a == e ? "1" : "g" + std::to_string(a));
  if (names.size() != n) throw NotAGroup("expected " + std::to_string(n) + " element names");
  FiniteGroup g;
  g.table_ = std::move(table);
  g.inv_ = std::move(inv);
  g.names_ = std::move(names);
  g.e_ = e;
  return g;
}

inline FiniteGroup trivial_group() { return make_group({{0}}, {"1"}); }

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw NotAGroup("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    names.push_back(a == 0 ? "1" : a == 1 ? "a" : "a^" + std::to_string(a));
  }
  return make_group(std::move(t), std::move(names));
}

/// S3 with elements r^i s^j stored at index 3j+i: 1, r, r^2, s, rs, r^2 s,
/// where r = (123) and s = (12), so s r = r^2 s.
inline FiniteGroup symmetric_group_3() {
  auto idx = [](std::size_t i, std::size_t j) { return 3 * j + i; };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i1 = 0; i1 < 3; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 3; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
          std::size_t i = (i1 + (j1 ? 3 - i2 : i2)) % 3;
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
        }
  return make_group(std::move(t), {"1", "r", "r2", "s", "rs", "r2s"});
}

/// Looks up a built-in group by name: "1", "Z<n>", "S3".
inline FiniteGroup builtin_group(const std::string& name) {
  if (name == "1" || name == "trivial") return trivial_group();
  if (name == "S3") return symmetric_group_3();
  if (name.size() > 1 && name[0] == 'Z') {
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      throw UnknownExample("unknown group '" + name + "'");
    }
    return cyclic_group(n);
  }
  throw UnknownExample("unknown group '" + name + "' (expected 1, Z<n> or S3)");
}

}  // namespace crossed
