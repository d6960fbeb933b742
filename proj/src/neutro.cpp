#include "neutromagma/neutro.hpp"

#include <algorithm>

namespace nm {

NeutroResidue neutro_mul(const NeutroResidue& x, const NeutroResidue& y, int n) {
  return {(x.a * y.a) % n, (x.a * y.b + x.b * y.a + x.b * y.b) % n};
}

std::string neutro_label(const NeutroResidue& r) {
  std::string ipart = r.b == 1 ? "I" : std::to_string(r.b) + "I";
  if (r.b == 0) return std::to_string(r.a);
  if (r.a == 0) return ipart;
  return std::to_string(r.a) + "+" + ipart;
}

Magma extend_tagged(const Magma& base) {
  const int k = base.order(), k2 = 2 * k;
  std::vector<std::string> labels = base.labels();
  for (int x = 0; x < k; ++x) labels.push_back(base.label(x) + "I");
  std::vector<int> tab(static_cast<size_t>(k2) * k2);
  std::vector<bool> mask(k2, false);
  for (int x = 0; x < k2; ++x) {
    mask[x] = x >= k;
    for (int y = 0; y < k2; ++y) {
      int v = base(x % k, y % k);
      tab[x * k2 + y] = (x >= k || y >= k) ? v + k : v;
    }
  }
  std::optional<int> nid;
  if (base.identity()) nid = *base.identity() + k;
  return Magma("tagged(" + base.kind() + ")", std::move(labels), std::move(tab), base.identity(), std::move(mask), nid);
}

Magma zn_full_neutro(int n) {
  if (n < 2) throw ParamError("zn_full_neutro: n must be >= 2");
  if (n > 64) throw ResourceLimitError("zn_full_neutro: n above 64");
  const int k = n * n;
  std::vector<std::string> labels;
  std::vector<bool> mask;
  for (int i = 0; i < k; ++i) {
    NeutroResidue r{i % n, i / n};
    labels.push_back(neutro_label(r));
    mask.push_back(r.b != 0);
  }
  std::vector<int> tab(static_cast<size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      auto r = neutro_mul({x % n, x / n}, {y % n, y / n}, n);
      tab[x * k + y] = r.b * n + r.a;
    }
  return Magma("zn_full_neutro(" + std::to_string(n) + ")", std::move(labels), std::move(tab), 1, std::move(mask), n);
}

Magma zn_line_neutro(int n) {
  if (n < 2) throw ParamError("zn_line_neutro: n must be >= 2");
  if (n > 2048) throw ResourceLimitError("zn_line_neutro: n too large");
  const int k = 2 * n - 1;
  auto decode = [n](int i) { return i < n ? NeutroResidue{i, 0} : NeutroResidue{0, i - n + 1}; };
  auto encode = [n](const NeutroResidue& r) { return r.b == 0 ? r.a : n - 1 + r.b; };
  std::vector<std::string> labels;
  std::vector<bool> mask;
  for (int i = 0; i < k; ++i) {
    labels.push_back(neutro_label(decode(i)));
    mask.push_back(i >= n);
  }
  std::vector<int> tab(static_cast<size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      auto r = neutro_mul(decode(x), decode(y), n);
      if (r.a != 0 && r.b != 0) throw Error("zn_line_neutro: carrier not closed");
      tab[x * k + y] = encode(r);
    }
  std::optional<int> id;
  if (n > 1) id = 1;
  return Magma("zn_line_neutro(" + std::to_string(n) + ")", std::move(labels), std::move(tab), id, std::move(mask), n);
}

bool is_neutrosophic_subset(const Magma& m, const Subset& s) {
  return std::any_of(s.begin(), s.end(), [&](int x) { return m.is_neutro(x); });
}

bool is_neutrosophic_subgroup(const Magma& m, const Subset& s) {
  return is_closed(m, s) && is_neutrosophic_subset(m, s) && contains_group(m, s, true, true);
}

bool is_pseudo_neutrosophic_subgroup(const Magma& m, const Subset& s) {
  return is_closed(m, s) && is_neutrosophic_subset(m, s) && identity_within(m, s).has_value() &&
         !contains_group(m, s, false, true);
}

bool is_s_neutrosophic_sub(const Magma& m, const Subset& s) {
  return is_closed(m, s) && is_neutrosophic_subset(m, s) && contains_group(m, s, true, true);
}

bool is_neutrosophic_subloop(const Magma& m, const Subset& s) {
  auto nid = m.neutro_identity();
  if (!nid || !is_closed(m, s)) return false;
  Subset real, tagged, image;
  for (int x : s) (m.is_neutro(x) ? tagged : real).push_back(x);
  if (real.empty() || !is_loop(m, real)) return false;
  for (int x : real) image.push_back(m(x, *nid));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image == tagged;
}

bool is_neutrosophic_group(const Magma& m, const Subset& s) {
  if (s.empty() || !is_closed(m, s) || !is_neutrosophic_subset(m, s)) return false;
  if (!identity_within(m, s) || !is_associative_on(m, s)) return false;
  Subset real;
  for (int x : s)
    if (!m.is_neutro(x)) real.push_back(x);
  return is_group(m, real);
}

Subset principal_ideal(const Magma& m, int a) {
  std::vector<int> v{a};
  for (int x = 0; x < m.order(); ++x) {
    v.push_back(m(x, a));
    v.push_back(m(a, x));
    for (int y = 0; y < m.order(); ++y) v.push_back(m(m(x, a), y));
  }
  return make_subset(m, std::move(v));
}

bool neutrosophic_ideal_check(const Magma& m, const Subset& s, IdealMode mode) {
  if (!check_identity_law(m, Law::Associative).holds)
    throw PreconditionError("neutrosophic ideals need a semigroup carrier");
  auto plain = [&](const Subset& p) {
    return is_neutrosophic_subset(m, p) && is_ideal(m, p, Side::TwoSided);
  };
  if (!plain(s)) return false;
  if (static_cast<int>(s.size()) == m.order()) return false;
  switch (mode) {
    case IdealMode::Plain: return true;
    case IdealMode::Principal:
      return std::any_of(s.begin(), s.end(), [&](int a) { return principal_ideal(m, a) == s; });
    case IdealMode::Maximal:
    case IdealMode::Minimal: {
      auto en = enumerate_closed_subsets(m, Species::custom("neutrosophic-ideal", [&](const Magma&, const Subset& p) {
                                           return plain(p);
                                         }));
      if (!en.complete) throw ResourceLimitError("maximal/minimal ideal checks need exhaustive enumeration");
      for (const auto& j : en.subsets) {
        if (j == s) continue;
        bool sub = std::includes(j.begin(), j.end(), s.begin(), s.end());
        bool sup = std::includes(s.begin(), s.end(), j.begin(), j.end());
        if (mode == IdealMode::Maximal && sub) return false;
        if (mode == IdealMode::Minimal && sup) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace nm
