#pragma once

// Brute-force reference implementations, written independently of the library.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "neutromagma/magma.hpp"

namespace oracle {

struct Table {
  int k;
  std::vector<int> t;
  int operator()(int x, int y) const { return t[x * k + y]; }
};

inline Table of(const nm::Magma& m) { return {m.order(), m.table()}; }

inline std::vector<int> members(unsigned mask, int k) {
  std::vector<int> v;
  for (int i = 0; i < k; ++i)
    if (mask >> i & 1u) v.push_back(i);
  return v;
}

inline bool closed(const Table& t, const std::vector<int>& s) {
  std::set<int> in(s.begin(), s.end());
  for (int a : s)
    for (int b : s)
      if (!in.count(t(a, b))) return false;
  return true;
}

inline std::optional<int> identity(const Table& t) {
  for (int e = 0; e < t.k; ++e) {
    bool ok = true;
    for (int x = 0; x < t.k; ++x) ok = ok && t(e, x) == x && t(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

inline bool group_on(const Table& t, const std::vector<int>& s) {
  if (s.empty() || !closed(t, s)) return false;
  for (int a : s)
    for (int b : s)
      for (int c : s)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  for (int e : s) {
    bool ident = std::all_of(s.begin(), s.end(), [&](int x) { return t(e, x) == x && t(x, e) == x; });
    if (!ident) continue;
    return std::all_of(s.begin(), s.end(), [&](int x) {
      return std::any_of(s.begin(), s.end(), [&](int y) { return t(x, y) == e && t(y, x) == e; });
    });
  }
  return false;
}

/// Every closed subset except empty, universe and {identity}.
inline std::vector<std::vector<int>> closed_subsets(const Table& t, bool groups_only = false) {
  std::vector<std::vector<int>> out;
  auto e = identity(t);
  for (unsigned mask = 1; mask < (1u << t.k); ++mask) {
    auto s = members(mask, t.k);
    if (static_cast<int>(s.size()) == t.k) continue;
    if (e && s.size() == 1 && s[0] == *e) continue;
    if (!closed(t, s)) continue;
    if (groups_only && !group_on(t, s)) continue;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool ideal(const Table& t, const std::vector<int>& p, nm::Side side) {
  if (p.empty() || !closed(t, p)) return false;
  std::set<int> in(p.begin(), p.end());
  for (int x = 0; x < t.k; ++x)
    for (int a : p) {
      bool l = in.count(t(x, a)) > 0, r = in.count(t(a, x)) > 0;
      if (side == nm::Side::Left && !l) return false;
      if (side == nm::Side::Right && !r) return false;
      if (side == nm::Side::TwoSided && !(l && r)) return false;
    }
  return true;
}

inline std::set<int> mul(const Table& t, const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int x : a)
    for (int y : b) out.insert(t(x, y));
  return out;
}

/// xH = Hx, (Hx)y = H(xy), y(xH) = (yx)H for x, y in the range.
inline bool normal(const Table& t, const std::vector<int>& h, bool over_h) {
  std::set<int> H(h.begin(), h.end());
  std::vector<int> range = h;
  if (!over_h) {
    range.clear();
    for (int i = 0; i < t.k; ++i) range.push_back(i);
  }
  for (int x : range) {
    std::set<int> X{x};
    if (mul(t, X, H) != mul(t, H, X)) return false;
    for (int y : range) {
      std::set<int> Y{y}, XY{t(x, y)}, YX{t(y, x)};
      if (mul(t, mul(t, H, X), Y) != mul(t, H, XY)) return false;
      if (mul(t, Y, mul(t, X, H)) != mul(t, YX, H)) return false;
    }
  }
  return true;
}

/// nullopt when the law needs an identity or inverses that are missing.
inline std::optional<bool> law(const Table& t, nm::Law l) {
  using L = nm::Law;
  const int k = t.k;
  auto all3 = [&](auto f) {
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        for (int z = 0; z < k; ++z)
          if (!f(x, y, z)) return false;
    return true;
  };
  auto e = identity(t);
  auto inv = [&](int x) -> std::optional<int> {
    for (int y = 0; y < k; ++y)
      if (t(x, y) == *e && t(y, x) == *e) return y;
    return std::nullopt;
  };
  switch (l) {
    case L::Associative: return all3([&](int x, int y, int z) { return t(t(x, y), z) == t(x, t(y, z)); });
    case L::Commutative: return all3([&](int x, int y, int) { return t(x, y) == t(y, x); });
    case L::Idempotent: return all3([&](int x, int, int) { return t(x, x) == x; });
    case L::Moufang1: return all3([&](int x, int y, int z) { return t(t(x, y), t(z, x)) == t(t(x, t(y, z)), x); });
    case L::Moufang2: return all3([&](int x, int y, int z) { return t(t(t(x, y), z), y) == t(x, t(y, t(z, y))); });
    case L::Moufang3: return all3([&](int x, int y, int z) { return t(x, t(y, t(x, z))) == t(t(t(x, y), x), z); });
    case L::Bol: return all3([&](int x, int y, int z) { return t(t(t(x, y), z), y) == t(x, t(t(y, z), y)); });
    case L::BruckIdentity:
      return all3([&](int x, int y, int z) { return t(t(x, t(y, x)), z) == t(x, t(y, t(x, z))); });
    case L::LeftAlternative: return all3([&](int x, int y, int) { return t(t(x, x), y) == t(x, t(x, y)); });
    case L::RightAlternative: return all3([&](int x, int y, int) { return t(t(x, y), y) == t(x, t(y, y)); });
    case L::PGroupoid: return all3([&](int x, int y, int) { return t(t(x, y), x) == t(x, t(y, x)); });
    case L::BruckInverse:
    case L::WIP: {
      if (!e) return std::nullopt;
      for (int x = 0; x < k; ++x)
        if (!inv(x)) return std::nullopt;
      if (l == L::BruckInverse)
        return all3([&](int x, int y, int) { return *inv(t(x, y)) == t(*inv(x), *inv(y)); });
      return all3([&](int x, int y, int z) { return t(t(x, y), z) != *e || t(x, t(y, z)) == *e; });
    }
  }
  return std::nullopt;
}

/// Deterministic mix of arbitrary tables and random loops (normalized Latin squares).
inline nm::Magma random_magma(std::mt19937& rng, int index) {
  int k = 1 + static_cast<int>(rng() % 6);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<int> tab(k * k);
  if (index % 2 == 0) {
    for (auto& c : tab) c = static_cast<int>(rng() % k);
    return nm::Magma("random", labels, tab, nm::detect_identity(k, tab));
  }
  // random Latin square with row/column 0 fixed to the identity, by backtracking
  std::vector<int> cells(k * k, -1);
  for (int i = 0; i < k; ++i) cells[i] = cells[i * k] = i;
  auto ok = [&](int r, int c, int v) {
    for (int j = 0; j < k; ++j)
      if (cells[r * k + j] == v || cells[j * k + c] == v) return false;
    return true;
  };
  auto fill = [&](auto&& self, int pos) -> bool {
    if (pos == k * k) return true;
    int r = pos / k, c = pos % k;
    if (cells[pos] >= 0) return self(self, pos + 1);
    std::vector<int> vals(k);
    for (int v = 0; v < k; ++v) vals[v] = v;
    std::shuffle(vals.begin(), vals.end(), rng);
    for (int v : vals)
      if (ok(r, c, v)) {
        cells[pos] = v;
        if (self(self, pos + 1)) return true;
        cells[pos] = -1;
      }
    return false;
  };
  fill(fill, 0);
  return nm::Magma("random-loop", labels, cells, 0);
}

}  // namespace oracle
