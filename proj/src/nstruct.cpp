#include "neutromagma/nstruct.hpp"

#include <algorithm>
#include <numeric>

#include "neutromagma/constructors.hpp"
#include "neutromagma/neutro.hpp"

namespace nm {

const std::vector<CKind>& all_ckinds() {
  static const std::vector<CKind> v = {
      CKind::Group,        CKind::Semigroup,      CKind::Loop,         CKind::Groupoid,
      CKind::NeutroGroup,  CKind::NeutroSemigroup, CKind::NeutroLoop,  CKind::NeutroGroupoid,
      CKind::SSemigroup,   CKind::SLoop,          CKind::SGroupoid,    CKind::SNeutroGroup,
      CKind::StrongSNeutroGroup, CKind::SNeutroSemigroup, CKind::SNeutroLoop, CKind::SNeutroGroupoid};
  return v;
}

std::string ckind_name(CKind k) {
  switch (k) {
    case CKind::Group: return "group";
    case CKind::Semigroup: return "semigroup";
    case CKind::Loop: return "loop";
    case CKind::Groupoid: return "groupoid";
    case CKind::NeutroGroup: return "neutrosophic-group";
    case CKind::NeutroSemigroup: return "neutrosophic-semigroup";
    case CKind::NeutroLoop: return "neutrosophic-loop";
    case CKind::NeutroGroupoid: return "neutrosophic-groupoid";
    case CKind::SSemigroup: return "s-semigroup";
    case CKind::SLoop: return "s-loop";
    case CKind::SGroupoid: return "s-groupoid";
    case CKind::SNeutroGroup: return "s-neutrosophic-group";
    case CKind::StrongSNeutroGroup: return "strong-s-neutrosophic-group";
    case CKind::SNeutroSemigroup: return "s-neutrosophic-semigroup";
    case CKind::SNeutroLoop: return "s-neutrosophic-loop";
    case CKind::SNeutroGroupoid: return "s-neutrosophic-groupoid";
  }
  return "?";
}

CKind parse_ckind(std::string_view name) {
  for (CKind k : all_ckinds())
    if (ckind_name(k) == name) return k;
  throw ParamError("unknown component kind '" + std::string(name) + "'");
}

namespace {

std::optional<CKind> base_of(CKind k) {
  switch (k) {
    case CKind::SSemigroup: return CKind::Semigroup;
    case CKind::SLoop: return CKind::Loop;
    case CKind::SGroupoid: return CKind::Groupoid;
    case CKind::SNeutroGroup:
    case CKind::StrongSNeutroGroup: return CKind::NeutroGroup;
    case CKind::SNeutroSemigroup: return CKind::NeutroSemigroup;
    case CKind::SNeutroLoop: return CKind::NeutroLoop;
    case CKind::SNeutroGroupoid: return CKind::NeutroGroupoid;
    default: return std::nullopt;
  }
}

std::optional<SKind> s_of(CKind k) {
  switch (k) {
    case CKind::SSemigroup: return SKind::SSemigroup;
    case CKind::SLoop: return SKind::SLoop;
    case CKind::SGroupoid: return SKind::SGroupoid;
    case CKind::SNeutroGroup: return SKind::SNeutrosophicGroup;
    case CKind::StrongSNeutroGroup: return SKind::StrongSNeutrosophicGroup;
    case CKind::SNeutroSemigroup: return SKind::SNeutrosophicSemigroup;
    case CKind::SNeutroLoop: return SKind::SNeutrosophicLoop;
    case CKind::SNeutroGroupoid: return SKind::SNeutrosophicGroupoid;
    default: return std::nullopt;
  }
}

Subset real_part(const Magma& m) {
  Subset r;
  for (int x = 0; x < m.order(); ++x)
    if (!m.is_neutro(x)) r.push_back(x);
  return r;
}

}  // namespace

bool kind_implies(CKind declared, CKind role) {
  if (declared == role) return true;
  auto b = base_of(declared);
  return b && *b == role;
}

std::string verify_kind(const Magma& m, CKind k, const Limits& limits) {
  const Subset all = universe(m);
  bool has_neutro = is_neutrosophic_subset(m, all);
  bool assoc = check_identity_law(m, Law::Associative).holds;
  switch (k) {
    case CKind::Group:
      return classify_basic(m).is_group ? "" : "is_group";
    case CKind::Semigroup:
      return assoc ? "" : "is_semigroup";
    case CKind::Loop:
      return classify_basic(m).is_loop ? "" : "is_loop";
    case CKind::Groupoid:
      return "";
    case CKind::NeutroGroup:
      return assoc && identity_within(m, all) && has_neutro ? "" : "is_neutrosophic_group";
    case CKind::NeutroSemigroup:
      return assoc && has_neutro ? "" : "is_neutrosophic_semigroup";
    case CKind::NeutroLoop:
      return has_neutro && identity_within(m, all) && is_loop(m, real_part(m)) ? "" : "is_neutrosophic_loop";
    case CKind::NeutroGroupoid:
      return has_neutro ? "" : "is_neutrosophic_groupoid";
    default:
      break;
  }
  std::string base = verify_kind(m, *base_of(k), limits);
  if (!base.empty()) return base;
  auto d = detect_s_kind(m, *s_of(k), limits);
  if (!d.holds) return "detect_s_kind(" + skind_name(*s_of(k)) + (d.complete ? ")" : ", inconclusive)");
  return "";
}

int NStructure::order() const {
  int o = 0;
  for (const auto& c : components) o += c.order();
  return o;
}

NStructure build_n_structure(std::string name, std::vector<Magma> components, std::vector<CKind> kinds, bool verify) {
  if (components.size() < 2) throw ParamError("an N-structure needs at least two components");
  if (components.size() != kinds.size()) throw ParamError("declared kinds do not match component count");
  if (verify)
    for (size_t i = 0; i < components.size(); ++i) {
      auto why = verify_kind(components[i], kinds[i]);
      if (!why.empty())
        throw ParamError("component " + std::to_string(i + 1) + " (" + components[i].kind() + ") declared " +
                         ckind_name(kinds[i]) + " fails " + why);
    }
  return NStructure{std::move(name), std::move(components), std::move(kinds)};
}

int NSubset::order() const {
  int o = 0;
  for (const auto& s : per_component) o += static_cast<int>(s.size());
  return o;
}

int NSubset::nonempty() const {
  return static_cast<int>(
      std::count_if(per_component.begin(), per_component.end(), [](const Subset& s) { return !s.empty(); }));
}

std::string format_nsubset(const NStructure& ns, const NSubset& s) {
  std::string out;
  for (size_t i = 0; i < s.per_component.size(); ++i) {
    if (i) out += " u ";
    out += ns.components.at(i).format(s.per_component[i]);
  }
  return out;
}

NSubset nsubset_from_labels(const NStructure& ns, const std::vector<std::vector<std::string>>& labels) {
  if (static_cast<int>(labels.size()) != ns.size()) throw ParamError("NSubset component count mismatch");
  NSubset s;
  for (int i = 0; i < ns.size(); ++i) s.per_component.push_back(ns.components[i].subset(labels[i]));
  return s;
}

int n_flat_index(const NStructure& ns, int component, int element) {
  if (component < 0 || component >= ns.size()) throw DomainError("component index out of range");
  if (element < 0 || element >= ns.components[component].order()) throw DomainError("element index out of range");
  int off = 0;
  for (int i = 0; i < component; ++i) off += ns.components[i].order();
  return off + element;
}

// -------------------------------------------------------------------- kinds

NKindVerdict classify_n_kind(const NStructure& ns) {
  const auto& ks = ns.kinds;
  auto has = [&](std::initializer_list<CKind> roles) {
    return std::any_of(ks.begin(), ks.end(), [&](CKind k) {
      return std::any_of(roles.begin(), roles.end(), [&](CKind r) { return kind_implies(k, r); });
    });
  };
  auto all_in = [&](std::initializer_list<CKind> roles) {
    return std::all_of(ks.begin(), ks.end(), [&](CKind k) {
      return std::any_of(roles.begin(), roles.end(), [&](CKind r) { return kind_implies(k, r); });
    });
  };
  using K = CKind;
  const bool big = ns.size() >= 5;
  NKindVerdict v;
  v.n_group = all_in({K::Group});
  v.n_semigroup = all_in({K::Semigroup});
  v.s_n_semigroup = all_in({K::Group, K::Semigroup}) && has({K::Group}) && has({K::SSemigroup});
  v.n_loop = all_in({K::Loop, K::Group}) && has({K::Loop});
  v.n_groupoid = all_in({K::Groupoid, K::Semigroup}) && has({K::Groupoid}) && has({K::Semigroup});
  v.n_group_semigroup = all_in({K::Group, K::Semigroup}) && has({K::Group}) && has({K::Semigroup});
  v.n_loop_groupoid = all_in({K::Loop, K::Groupoid}) && has({K::Loop}) && has({K::Groupoid});
  v.n_glsg = all_in({K::Group, K::Loop, K::Semigroup, K::Groupoid}) && has({K::Group}) && has({K::Loop}) &&
             has({K::Semigroup}) && has({K::Groupoid});
  v.neutrosophic_n_group = all_in({K::NeutroGroup, K::Group}) && has({K::NeutroGroup});
  v.neutrosophic_n_semigroup = all_in({K::NeutroSemigroup, K::Semigroup}) && has({K::NeutroSemigroup});
  v.neutrosophic_n_loop = all_in({K::NeutroLoop, K::Loop, K::Group}) && has({K::NeutroLoop});
  v.neutrosophic_n_groupoid = all_in({K::NeutroGroupoid, K::Groupoid}) && has({K::NeutroGroupoid});
  v.strong_neutrosophic_n_group = all_in({K::NeutroGroup});
  v.s_neutrosophic_n_group =
      all_in({K::SSemigroup, K::SNeutroSemigroup, K::NeutroGroup, K::Group}) &&
      has({K::SSemigroup, K::SNeutroSemigroup}) && has({K::NeutroGroup, K::Group});
  v.s_neutrosophic_n_semigroup =
      all_in({K::NeutroSemigroup, K::Semigroup, K::NeutroGroup, K::Group}) && has({K::SNeutroSemigroup});
  v.s_neutrosophic_n_loop = all_in({K::NeutroLoop, K::Loop, K::NeutroGroup, K::Group}) && has({K::SNeutroLoop});
  v.s_neutrosophic_n_groupoid =
      all_in({K::NeutroGroupoid, K::Groupoid, K::NeutroSemigroup, K::Semigroup}) && has({K::SNeutroGroupoid});

  int neutro_species = has({K::NeutroGroup}) + has({K::NeutroLoop}) + has({K::NeutroSemigroup}) +
                       has({K::NeutroGroupoid});
  v.mixed_neutrosophic = big && neutro_species == 4;
  v.dual_mixed_neutrosophic = big && has({K::Group}) && has({K::Loop}) && has({K::Semigroup}) && has({K::Groupoid});
  v.weak_mixed_neutrosophic = has({K::NeutroGroup, K::NeutroLoop}) && has({K::NeutroGroupoid, K::NeutroSemigroup}) &&
                              neutro_species >= 2 && neutro_species <= 3;
  v.weak_mixed_dual_neutrosophic = has({K::Loop, K::Group}) && has({K::Groupoid, K::Semigroup}) &&
                                   has({K::NeutroGroup, K::NeutroLoop, K::NeutroSemigroup, K::NeutroGroupoid});
  v.s_mixed_neutrosophic = big && has({K::SNeutroGroup, K::StrongSNeutroGroup}) && has({K::SNeutroLoop}) &&
                           has({K::SNeutroSemigroup}) && has({K::SNeutroGroupoid});
  v.dual_s_mixed = big && has({K::SLoop}) && has({K::SSemigroup}) && has({K::SGroupoid}) && has({K::Group});
  return v;
}

std::vector<std::pair<std::string, bool>> n_kind_fields(const NKindVerdict& v) {
  return {{"n_group", v.n_group},
          {"n_semigroup", v.n_semigroup},
          {"s_n_semigroup", v.s_n_semigroup},
          {"n_loop", v.n_loop},
          {"n_groupoid", v.n_groupoid},
          {"n_group_semigroup", v.n_group_semigroup},
          {"n_loop_groupoid", v.n_loop_groupoid},
          {"n_glsg", v.n_glsg},
          {"neutrosophic_n_group", v.neutrosophic_n_group},
          {"neutrosophic_n_semigroup", v.neutrosophic_n_semigroup},
          {"neutrosophic_n_loop", v.neutrosophic_n_loop},
          {"neutrosophic_n_groupoid", v.neutrosophic_n_groupoid},
          {"strong_neutrosophic_n_group", v.strong_neutrosophic_n_group},
          {"s_neutrosophic_n_group", v.s_neutrosophic_n_group},
          {"s_neutrosophic_n_semigroup", v.s_neutrosophic_n_semigroup},
          {"s_neutrosophic_n_loop", v.s_neutrosophic_n_loop},
          {"s_neutrosophic_n_groupoid", v.s_neutrosophic_n_groupoid},
          {"mixed_neutrosophic", v.mixed_neutrosophic},
          {"dual_mixed_neutrosophic", v.dual_mixed_neutrosophic},
          {"weak_mixed_neutrosophic", v.weak_mixed_neutrosophic},
          {"weak_mixed_dual_neutrosophic", v.weak_mixed_dual_neutrosophic},
          {"s_mixed_neutrosophic", v.s_mixed_neutrosophic},
          {"dual_s_mixed", v.dual_s_mixed}};
}

// -------------------------------------------------------------- enumeration

namespace {

struct ComponentLists {
  std::vector<std::vector<Subset>> lists;
  bool complete = true;
};

ComponentLists component_lists(const NStructure& ns, const std::vector<Species>& species, const Limits& limits) {
  if (static_cast<int>(species.size()) != ns.size()) throw ParamError("species list length must equal N");
  Limits lim = limits;
  lim.keep_universe = true;
  ComponentLists out;
  for (int i = 0; i < ns.size(); ++i) {
    auto en = enumerate_closed_subsets(ns.components[i], species[i], lim);
    out.complete = out.complete && en.complete;
    out.lists.push_back(std::move(en.subsets));
  }
  return out;
}

bool is_whole(const NStructure& ns, const NSubset& s) {
  for (int i = 0; i < ns.size(); ++i)
    if (static_cast<int>(s.per_component[i].size()) != ns.components[i].order()) return false;
  return true;
}

// Odometer over the chosen components; others stay empty.
void cartesian(const NStructure& ns, const std::vector<std::vector<Subset>>& lists, const std::vector<int>& chosen,
               long long cap, long long& produced, std::vector<NSubset>& out) {
  long long count = 1;
  for (int c : chosen) {
    if (lists[c].empty()) return;
    count *= static_cast<long long>(lists[c].size());
    if (produced + count > cap)
      throw ResourceLimitError("N-substructure combinations exceed the cap of " + std::to_string(cap));
  }
  produced += count;
  std::vector<size_t> idx(chosen.size(), 0);
  while (true) {
    NSubset s;
    s.per_component.assign(ns.size(), Subset{});
    for (size_t j = 0; j < chosen.size(); ++j) s.per_component[chosen[j]] = lists[chosen[j]][idx[j]];
    if (!is_whole(ns, s)) out.push_back(std::move(s));
    int j = static_cast<int>(chosen.size()) - 1;
    while (j >= 0 && ++idx[j] == lists[chosen[j]].size()) idx[j--] = 0;
    if (j < 0) break;
  }
}

std::vector<std::vector<int>> choose(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Witness> flatten(const NStructure& ns, const std::vector<NSubset>& subs) {
  std::vector<Witness> w;
  for (const auto& s : subs) {
    Witness x;
    for (int i = 0; i < ns.size(); ++i)
      for (int e : s.per_component[i]) x.members.push_back(n_flat_index(ns, i, e));
    x.order = s.order();
    w.push_back(std::move(x));
  }
  return w;
}

}  // namespace

NEnumeration enumerate_n_substructures(const NStructure& ns, const std::vector<Species>& species,
                                       bool require_nonempty_all, long long cap, const Limits& limits) {
  auto cl = component_lists(ns, species, limits);
  NEnumeration out;
  out.complete = cl.complete;
  long long produced = 0;
  if (require_nonempty_all) {
    std::vector<int> all(ns.size());
    std::iota(all.begin(), all.end(), 0);
    cartesian(ns, cl.lists, all, cap, produced, out.subsets);
  } else {
    for (int k = 1; k <= ns.size(); ++k)
      for (const auto& c : choose(ns.size(), k)) cartesian(ns, cl.lists, c, cap, produced, out.subsets);
  }
  std::sort(out.subsets.begin(), out.subsets.end());
  return out;
}

NReport n_lagrange_full(const NStructure& ns, const std::vector<Species>& species, bool require_nonempty_all,
                        const Limits& limits) {
  auto en = enumerate_n_substructures(ns, species, require_nonempty_all, kDefaultCombinationCap, limits);
  NReport r;
  r.report = lagrange_engine(ns.order(), flatten(ns, en.subsets), en.complete, "n-structure");
  r.witnesses = std::move(en.subsets);
  return r;
}

NReport n_sylow_full(const NStructure& ns, const std::vector<Species>& species, SylowVariant variant,
                     bool require_nonempty_all, const Limits& limits) {
  auto en = enumerate_n_substructures(ns, species, require_nonempty_all, kDefaultCombinationCap, limits);
  NReport r;
  r.report = sylow_engine(ns.order(), flatten(ns, en.subsets), en.complete, "n-structure", variant);
  r.witnesses = std::move(en.subsets);
  return r;
}

ClassReport n_lagrange(const NStructure& ns, const std::vector<Species>& species, bool require_nonempty_all,
                       const Limits& limits) {
  return n_lagrange_full(ns, species, require_nonempty_all, limits).report;
}

ClassReport n_sylow(const NStructure& ns, const std::vector<Species>& species, SylowVariant variant,
                    bool require_nonempty_all, const Limits& limits) {
  return n_sylow_full(ns, species, variant, require_nonempty_all, limits).report;
}

ClassReport n_cauchy(const NStructure& ns) {
  ClassReport r;
  r.species = "n-structure";
  std::vector<CauchyEntry> all;
  for (int i = 0; i < ns.size(); ++i)
    for (const auto& e : cauchy_entries(ns.components[i], ns.order())) {
      r.witnesses.push_back({{n_flat_index(ns, i, e.element)}, e.order, e.qualifies});
      all.push_back(e);
    }
  r.verdict = cauchy_verdict(all);
  return r;
}

TupleSylow tuple_sylow(const NStructure& ns, const std::vector<int>& primes, const std::vector<Species>& species,
                       const Limits& limits) {
  if (static_cast<int>(primes.size()) != ns.size()) throw ParamError("tuple_sylow needs one prime per component");
  TupleSylow r;
  bool impossible = false;
  for (int i = 0; i < ns.size(); ++i) {
    int p = primes[i];
    if (p < 2 || factorize(p).size() != 1 || factorize(p)[0].second != 1)
      throw ParamError("tuple_sylow: " + std::to_string(p) + " is not prime");
    int o = ns.components[i].order(), pa = 1;
    while (o % p == 0) {
      o /= p;
      pa *= p;
    }
    r.target_orders.push_back(pa);
    impossible = impossible || pa == 1;
  }
  if (impossible) return r;
  auto cl = component_lists(ns, species, limits);
  r.complete = cl.complete;
  NSubset w;
  for (int i = 0; i < ns.size(); ++i) {
    auto it = std::find_if(cl.lists[i].begin(), cl.lists[i].end(),
                           [&](const Subset& s) { return static_cast<int>(s.size()) == r.target_orders[i]; });
    if (it == cl.lists[i].end()) {
      r.verdict = Verdict3::Free;
      return r;
    }
    w.per_component.push_back(*it);
  }
  if (is_whole(ns, w)) {
    r.verdict = Verdict3::Free;
    return r;
  }
  r.verdict = Verdict3::Full;
  r.witness = std::move(w);
  return r;
}

std::vector<NSubset> deficit_substructures(const NStructure& ns, int t, const std::vector<Species>& species,
                                           const Limits& limits) {
  if (t < 1 || t >= ns.size()) throw ParamError("deficit t must satisfy 1 <= t < N");
  auto cl = component_lists(ns, species, limits);
  std::vector<NSubset> out;
  long long produced = 0;
  for (const auto& c : choose(ns.size(), ns.size() - t))
    cartesian(ns, cl.lists, c, kDefaultCombinationCap, produced, out);
  std::sort(out.begin(), out.end());
  return out;
}

NSubset n_coset(const NStructure& ns, const NSubset& h, int component, int element) {
  n_flat_index(ns, component, element);
  if (static_cast<int>(h.per_component.size()) != ns.size()) throw ParamError("NSubset component count mismatch");
  NSubset r = h;
  r.per_component[component] = cosets(ns.components[component], h.per_component[component], element, Side::Right);
  return r;
}

bool n_homomorphism_check(const NStructure& source, const NStructure& target, const std::vector<PartialMap>& maps) {
  if (source.size() != target.size() || static_cast<int>(maps.size()) != source.size())
    throw ParamError("n_homomorphism_check: component counts differ");
  for (size_t i = 0; i < maps.size(); ++i) {
    PartialMap f = maps[i];
    if (!f.source) f.source = &source.components[i];
    if (!f.target) f.target = &target.components[i];
    if (!check_homomorphism(f)) return false;
  }
  return true;
}

bool n_is_normal(const NStructure& ns, const NSubset& h, NormalMode mode) {
  for (int i = 0; i < ns.size(); ++i) {
    if (h.per_component[i].empty()) continue;
    if (!is_normal(ns.components[i], h.per_component[i], mode)) return false;
  }
  return true;
}

}  // namespace nm
