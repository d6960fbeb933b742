#include "neutromagma/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nm {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return v;
}

Magma from_perm_list(std::string kind, const std::vector<std::vector<int>>& elems,
                     std::vector<std::string> labels) {
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int k = static_cast<int>(elems.size());
  const size_t n = elems.empty() ? 0 : elems[0].size();
  std::vector<int> table(static_cast<size_t>(k) * k);
  std::vector<int> c(n);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      for (size_t i = 0; i < n; ++i) c[i] = elems[x][elems[y][i]];
      table[x * k + y] = pos.at(c);
    }
  auto id = detect_identity(k, table);
  return Magma(std::move(kind), std::move(labels), std::move(table), id);
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

bool is_even(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 == 0;
}

}  // namespace

bool ln_admissible(int n, int m) {
  return n > 3 && n % 2 == 1 && m > 1 && m < n && std::gcd(m, n) == 1 && std::gcd(m - 1, n) == 1;
}

Magma ln(int n, int m) {
  if (n <= 3 || n % 2 == 0) throw ParamError("ln: n must be odd and > 3 (got " + std::to_string(n) + ")");
  if (m <= 1 || m >= n) throw ParamError("ln: m must satisfy 1 < m < n (got " + std::to_string(m) + ")");
  if (std::gcd(m, n) != 1) throw ParamError("ln: gcd(m, n) = " + std::to_string(std::gcd(m, n)) + " != 1");
  if (std::gcd(m - 1, n) != 1)
    throw ParamError("ln: gcd(m - 1, n) = " + std::to_string(std::gcd(m - 1, n)) + " != 1");
  const int k = n + 1;
  std::vector<std::string> labels{"e"};
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int v;
      if (i == 0) v = j;
      else if (j == 0) v = i;
      else if (i == j) v = 0;
      else {
        v = mod(static_cast<long long>(m) * j - static_cast<long long>(m - 1) * i, n);
        if (v == 0) v = n;
      }
      t[i * k + j] = v;
    }
  return Magma("ln(" + std::to_string(n) + "," + std::to_string(m) + ")", std::move(labels), std::move(t), 0);
}

std::vector<int> ln_class_params(int n) {
  std::vector<int> out;
  for (int m = 2; m < n; ++m)
    if (ln_admissible(n, m)) out.push_back(m);
  return out;
}

std::vector<Magma> ln_class(int n) {
  if (n <= 3 || n % 2 == 0) throw ParamError("ln_class: n must be odd and > 3");
  std::vector<Magma> out;
  for (int m : ln_class_params(n)) out.push_back(ln(n, m));
  return out;
}

std::vector<std::pair<int, int>> factorize(long long n) {
  std::vector<std::pair<int, int>> f;
  for (long long p = 2; p * p <= n; ++p) {
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a) f.emplace_back(static_cast<int>(p), a);
  }
  if (n > 1) f.emplace_back(static_cast<int>(n), 1);
  return f;
}

namespace {

long long ln_product(int n, int shift) {
  if (n <= 3 || n % 2 == 0) throw ParamError("ln counts need n odd and > 3");
  long long r = 1;
  for (auto [p, a] : factorize(n)) {
    r *= p - shift;
    for (int i = 1; i < a; ++i) r *= p;
  }
  return r;
}

}  // namespace

long long ln_count(int n) { return ln_product(n, 2); }
long long ln_strict_noncomm_count(int n) { return ln_product(n, 3); }

std::string zn_class_name(ZnClass c) {
  switch (c) {
    case ZnClass::Z: return "z";
    case ZnClass::Zstar: return "zstar";
    case ZnClass::Zdoublestar: return "zdoublestar";
    case ZnClass::Ztriplestar: return "ztriplestar";
  }
  return "?";
}

ZnClass parse_zn_class(std::string_view name) {
  for (ZnClass c : {ZnClass::Z, ZnClass::Zstar, ZnClass::Zdoublestar, ZnClass::Ztriplestar})
    if (zn_class_name(c) == name) return c;
  throw ParamError("unknown groupoid class '" + std::string(name) + "'");
}

bool zn_admissible(int n, int t, int u, ZnClass c) {
  if (n < 3 || t < 0 || u < 0 || t >= n || u >= n) return false;
  switch (c) {
    case ZnClass::Z: return t != 0 && u != 0 && t != u && std::gcd(t, u) == 1;
    case ZnClass::Zstar: return t != 0 && u != 0 && t != u;
    case ZnClass::Zdoublestar: return t != 0 && u != 0;
    case ZnClass::Ztriplestar: return true;
  }
  return false;
}

Magma zn(int n, int t, int u, ZnClass c) {
  if (n < 3) throw ParamError("zn: n must be >= 3");
  if (!zn_admissible(n, t, u, c))
    throw ParamError("zn: (t, u) = (" + std::to_string(t) + ", " + std::to_string(u) + ") not admissible for class " +
                     zn_class_name(c) + " with n = " + std::to_string(n));
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tab[a * n + b] = mod(static_cast<long long>(t) * a + static_cast<long long>(u) * b, n);
  auto id = detect_identity(n, tab);
  return Magma("zn(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(u) + ")", numeric_labels(n),
               std::move(tab), id);
}

std::vector<std::pair<int, int>> zn_class_params(int n, ZnClass c) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u)
      if (zn_admissible(n, t, u, c)) out.emplace_back(t, u);
  return out;
}

long long zn_class_size(int n, ZnClass c) {
  if (n < 3) throw ParamError("zn_class_size: n must be >= 3");
  if (c == ZnClass::Zstar) return static_cast<long long>(n - 1) * (n - 2);
  return static_cast<long long>(zn_class_params(n, c).size());
}

Magma zmod_mult(int n) {
  if (n < 1) throw ParamError("zmod: n must be positive");
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tab[a * n + b] = (a * b) % n;
  auto id = detect_identity(n, tab);
  return Magma("zmod(" + std::to_string(n) + ")", numeric_labels(n), std::move(tab), id);
}

Magma cyclic(int n) {
  if (n < 1) throw ParamError("cyclic: n must be positive");
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tab[a * n + b] = (a + b) % n;
  return Magma("cyclic(" + std::to_string(n) + ")", std::move(labels), std::move(tab), 0);
}

namespace {

std::vector<std::vector<int>> permutations(int n, bool even_only) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Magma perm_group(std::string kind, int n, bool even_only) {
  auto elems = permutations(n, even_only);
  std::vector<std::string> labels;
  for (const auto& p : elems) labels.push_back(cycle_label(p));
  return from_perm_list(std::move(kind), elems, std::move(labels));
}

}  // namespace

Magma symmetric_group(int n) {
  if (n < 1 || n > 5) throw ResourceLimitError("symmetric_group supports 1 <= n <= 5");
  return perm_group("sym(" + std::to_string(n) + ")", n, false);
}

Magma alternating(int n) {
  if (n < 1 || n > 5) throw ResourceLimitError("alternating supports 1 <= n <= 5");
  return perm_group("alt(" + std::to_string(n) + ")", n, true);
}

Magma dihedral(int n) {
  if (n < 1) throw ParamError("dihedral: n must be positive");
  if (n > 512) throw ResourceLimitError("dihedral: n too large");
  const int k = 2 * n;
  auto idx = [n](int i, int j) { return i * n + mod(j, n); };
  std::vector<std::string> labels;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j) {
      std::string s = i ? "a" : "";
      if (j == 1) s += "b";
      else if (j > 1) s += "b^" + std::to_string(j);
      labels.push_back(s.empty() ? "1" : s);
    }
  std::vector<int> tab(static_cast<size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      int i = x / n, j = x % n, p = y / n, l = y % n;
      tab[x * k + y] = p == 0 ? idx(i, j + l) : idx((i + 1) % 2, l - j);
    }
  return Magma("dihedral(" + std::to_string(n) + ")", std::move(labels), std::move(tab), 0);
}

Magma symmetric_semigroup(int n) {
  if (n < 1 || n > 4) throw ResourceLimitError("symmetric_semigroup supports 1 <= n <= 4");
  std::vector<std::vector<int>> elems;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(n);
    int c = code;
    for (int i = n - 1; i >= 0; --i) {
      f[i] = c % n;
      c /= n;
    }
    elems.push_back(f);
  }
  std::vector<std::string> labels;
  for (const auto& f : elems) {
    std::string s = "[";
    for (int v : f) s += std::to_string(v + 1);
    labels.push_back(s + "]");
  }
  return from_perm_list("symsemi(" + std::to_string(n) + ")", elems, std::move(labels));
}

Magma direct_product(const Magma& a, const Magma& b) {
  const int ka = a.order(), kb = b.order(), k = ka * kb;
  if (k > 4096) throw ResourceLimitError("direct_product: order above 4096");
  std::vector<std::string> labels;
  std::vector<bool> mask;
  for (int x = 0; x < ka; ++x)
    for (int y = 0; y < kb; ++y) {
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
      mask.push_back(a.is_neutro(x) || b.is_neutro(y));
    }
  std::vector<int> tab(static_cast<size_t>(k) * k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) tab[p * k + q] = a(p / kb, q / kb) * kb + b(p % kb, q % kb);
  std::optional<int> id, nid;
  if (a.identity() && b.identity()) id = *a.identity() * kb + *b.identity();
  if (a.neutro_identity() && b.neutro_identity()) nid = *a.neutro_identity() * kb + *b.neutro_identity();
  return Magma("product(" + a.kind() + "," + b.kind() + ")", std::move(labels), std::move(tab), id, std::move(mask),
               nid);
}

}  // namespace nm
