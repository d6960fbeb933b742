#include "neutromagma/classify.hpp"

#include <algorithm>
#include <set>

#include "neutromagma/constructors.hpp"
#include "neutromagma/neutro.hpp"

namespace nm {

const std::vector<SKind>& all_skinds() {
  static const std::vector<SKind> v = {SKind::SSemigroup,          SKind::SLoop,
                                       SKind::SGroupoid,           SKind::SNeutrosophicGroup,
                                       SKind::StrongSNeutrosophicGroup, SKind::SNeutrosophicSemigroup,
                                       SKind::SNeutrosophicLoop,   SKind::SNeutrosophicGroupoid};
  return v;
}

std::string skind_name(SKind k) {
  switch (k) {
    case SKind::SSemigroup: return "s_semigroup";
    case SKind::SLoop: return "s_loop";
    case SKind::SGroupoid: return "s_groupoid";
    case SKind::SNeutrosophicGroup: return "s_neutrosophic_group";
    case SKind::StrongSNeutrosophicGroup: return "strong_s_neutrosophic_group";
    case SKind::SNeutrosophicSemigroup: return "s_neutrosophic_semigroup";
    case SKind::SNeutrosophicLoop: return "s_neutrosophic_loop";
    case SKind::SNeutrosophicGroupoid: return "s_neutrosophic_groupoid";
  }
  return "?";
}

SKind parse_skind(std::string_view name) {
  for (SKind k : all_skinds())
    if (skind_name(k) == name) return k;
  throw ParamError("unknown S-kind '" + std::string(name) + "'");
}

Species skind_witness(SKind k) {
  auto sized = [](std::string name, SubsetFn f) {
    return Species::custom(std::move(name), [f = std::move(f)](const Magma& m, const Subset& s) {
      return s.size() >= 2 && f(m, s);
    });
  };
  switch (k) {
    case SKind::SSemigroup:
    case SKind::SNeutrosophicSemigroup:
    case SKind::SLoop: return sized("group", is_group);
    case SKind::SGroupoid: return sized("semigroup", is_semigroup);
    case SKind::SNeutrosophicGroup: return sized("pseudo-neutrosophic-subgroup", is_pseudo_neutrosophic_subgroup);
    case SKind::StrongSNeutrosophicGroup: return sized("neutrosophic-subgroup", is_neutrosophic_subgroup);
    case SKind::SNeutrosophicLoop: return sized("neutrosophic-group", is_neutrosophic_group);
    case SKind::SNeutrosophicGroupoid:
      return sized("neutrosophic-semigroup",
                   [](const Magma& m, const Subset& s) { return is_semigroup(m, s) && is_neutrosophic_subset(m, s); });
  }
  throw ParamError("unknown S-kind");
}

bool s_kind_base(const Magma& m, SKind kind) {
  auto mask = m.neutro_mask();
  bool neutro = std::find(mask.begin(), mask.end(), true) != mask.end();
  switch (kind) {
    case SKind::SSemigroup: return is_semigroup(m, universe(m));
    case SKind::SLoop: return is_loop(m, universe(m));
    case SKind::SGroupoid: return true;
    case SKind::SNeutrosophicGroup:
    case SKind::StrongSNeutrosophicGroup:
    case SKind::SNeutrosophicSemigroup: return neutro && is_semigroup(m, universe(m));
    case SKind::SNeutrosophicLoop:
    case SKind::SNeutrosophicGroupoid: return neutro;
  }
  return false;
}

SDetect detect_s_kind(const Magma& m, SKind kind, const Limits& limits) {
  if (!s_kind_base(m, kind)) return {};
  auto en = enumerate_closed_subsets(m, skind_witness(kind), limits);
  SDetect r;
  r.complete = en.complete;
  if (!en.subsets.empty()) {
    r.holds = true;
    r.witness = en.subsets.front();
  }
  return r;
}

std::string verdict_name(Verdict3 v) {
  switch (v) {
    case Verdict3::Full: return "full";
    case Verdict3::Weak: return "weak";
    case Verdict3::Free: return "free";
    case Verdict3::Vacuous: return "vacuous";
  }
  return "?";
}

std::string sylow_variant_name(SylowVariant v) {
  switch (v) {
    case SylowVariant::Standard: return "standard";
    case SylowVariant::Super: return "super";
    case SylowVariant::Semi: return "semi";
  }
  return "?";
}

SylowVariant parse_sylow_variant(std::string_view name) {
  for (SylowVariant v : {SylowVariant::Standard, SylowVariant::Super, SylowVariant::Semi})
    if (sylow_variant_name(v) == name) return v;
  throw ParamError("unknown Sylow variant '" + std::string(name) + "'");
}

std::vector<int> sylow_targets(int total, int p, int alpha, SylowVariant v) {
  std::vector<int> out;
  long long pa = 1;
  for (int i = 0; i < alpha; ++i) pa *= p;
  switch (v) {
    case SylowVariant::Standard:
      if (pa < total) out.push_back(static_cast<int>(pa));
      break;
    case SylowVariant::Super:
      for (long long q = pa * p; q < total; q *= p) out.push_back(static_cast<int>(q));
      break;
    case SylowVariant::Semi:
      for (long long q = p; q < pa; q *= p) out.push_back(static_cast<int>(q));
      break;
  }
  return out;
}

namespace {

void note_incomplete(ClassReport& r) {
  if (!r.complete) r.notes.push_back("generator-bounded search: substructure list may be incomplete");
}

Verdict3 trichotomy(size_t found, size_t qualifying) {
  if (found == 0) return Verdict3::Vacuous;
  if (qualifying == found) return Verdict3::Full;
  if (qualifying > 0) return Verdict3::Weak;
  return Verdict3::Free;
}

std::vector<Witness> to_witnesses(const std::vector<Subset>& subs) {
  std::vector<Witness> w;
  for (const auto& s : subs) w.push_back({s, static_cast<int>(s.size()), false});
  return w;
}

}  // namespace

ClassReport lagrange_engine(int total, std::vector<Witness> found, bool complete, std::string species) {
  ClassReport r;
  r.species = std::move(species);
  r.complete = complete;
  size_t q = 0;
  for (auto& w : found) {
    w.qualifies = w.order > 0 && total % w.order == 0;
    q += w.qualifies;
  }
  r.verdict = trichotomy(found.size(), q);
  r.witnesses = std::move(found);
  note_incomplete(r);
  return r;
}

ClassReport sylow_engine(int total, std::vector<Witness> found, bool complete, std::string species, SylowVariant v) {
  ClassReport r;
  r.species = std::move(species);
  r.complete = complete;
  if (total < 2) throw ParamError("sylow classification needs order >= 2");
  std::set<int> all_targets;
  int applicable = 0, satisfied = 0;
  for (auto [p, a] : factorize(total)) {
    auto t = sylow_targets(total, p, a, v);
    if (t.empty()) {
      r.notes.push_back("p = " + std::to_string(p) + ": no proper target order for the " + sylow_variant_name(v) +
                        " variant");
      continue;
    }
    ++applicable;
    all_targets.insert(t.begin(), t.end());
    bool hit = std::any_of(found.begin(), found.end(), [&](const Witness& w) {
      return std::find(t.begin(), t.end(), w.order) != t.end();
    });
    if (hit) ++satisfied;
    else r.notes.push_back("p = " + std::to_string(p) + ": no witness of order in target set");
  }
  for (auto& w : found) w.qualifies = all_targets.count(w.order) > 0;
  if (found.empty()) r.verdict = Verdict3::Vacuous;
  else if (applicable == 0 || satisfied == 0) r.verdict = Verdict3::Free;
  else if (satisfied == applicable) r.verdict = Verdict3::Full;
  else r.verdict = Verdict3::Weak;
  r.witnesses = std::move(found);
  note_incomplete(r);
  return r;
}

ClassReport lagrange_classify(const Magma& m, const Species& species, const Limits& limits) {
  auto en = enumerate_closed_subsets(m, species, limits);
  return lagrange_engine(m.order(), to_witnesses(en.subsets), en.complete, species.display());
}

ClassReport sylow_classify(const Magma& m, const Species& species, SylowVariant variant, const Limits& limits) {
  auto en = enumerate_closed_subsets(m, species, limits);
  return sylow_engine(m.order(), to_witnesses(en.subsets), en.complete, species.display(), variant);
}

std::vector<CauchyEntry> cauchy_entries(const Magma& m, int against, const std::optional<Subset>& only) {
  std::vector<CauchyEntry> out;
  Subset dom = only ? *only : universe(m);
  for (int x : dom) {
    auto o = element_orders(m, x);
    if (o.real_order && *o.real_order > 1)
      out.push_back({x, false, *o.real_order, against % *o.real_order == 0});
    if (o.neutro_order && *o.neutro_order > 1)
      out.push_back({x, true, *o.neutro_order, against % *o.neutro_order == 0});
  }
  return out;
}

Verdict3 cauchy_verdict(const std::vector<CauchyEntry>& entries) {
  size_t q = std::count_if(entries.begin(), entries.end(), [](const CauchyEntry& e) { return e.qualifies; });
  return trichotomy(entries.size(), q);
}

ClassReport cauchy_classify(const Magma& m, const std::optional<Subset>& relative_to) {
  ClassReport r;
  r.species = relative_to ? "relative" : "absolute";
  if (!m.identity()) r.notes.push_back("no identity: real orders skipped");
  if (!m.neutro_identity()) r.notes.push_back("no neutro identity: neutrosophic orders skipped");
  int against = relative_to ? static_cast<int>(relative_to->size()) : m.order();
  auto entries = cauchy_entries(m, against, relative_to);
  for (const auto& e : entries) r.witnesses.push_back({{e.element}, e.order, e.qualifies});
  r.verdict = cauchy_verdict(entries);
  return r;
}

Verdict3 s_identity_class(const Magma& m, Law law, const Species& species, Strength strength, const Limits& limits) {
  auto en = enumerate_closed_subsets(m, species, limits);
  size_t holds = 0;
  for (const auto& s : en.subsets) {
    Magma sub = submagma(m, s);
    try {
      holds += check_identity_law(sub, law).holds;
    } catch (const PreconditionError&) {
    }
  }
  if (en.subsets.empty()) return Verdict3::Vacuous;
  if (strength == Strength::Weak) return holds ? Verdict3::Weak : Verdict3::Free;
  return trichotomy(en.subsets.size(), holds);
}

HyperSimple s_hyper_and_simple(const Magma& m, const Limits& limits) {
  if (!check_identity_law(m, Law::Associative).holds)
    throw PreconditionError("s_hyper_and_simple needs a semigroup");
  HyperSimple r;
  if (is_group(m, universe(m))) {
    r.largest_group = universe(m);
    r.note = "carrier is a group; the largest subgroup is the whole carrier, excluded as improper";
    return r;
  }
  auto en = enumerate_closed_subsets(m, Pred::IsSemigroup, limits);
  r.complete = en.complete;
  for (const auto& s : en.subsets)
    if (is_group(m, s) && (!r.largest_group || s.size() > r.largest_group->size())) r.largest_group = s;
  if (!r.largest_group) {
    r.note = "no subgroup found";
    return r;
  }
  const Subset& g = *r.largest_group;
  for (const auto& s : en.subsets) {
    if (s.size() <= g.size() || !std::includes(s.begin(), s.end(), g.begin(), g.end())) continue;
    if (!r.hyper_subsemigroup || s.size() < r.hyper_subsemigroup->size()) r.hyper_subsemigroup = s;
  }
  r.s_simple = !r.hyper_subsemigroup.has_value();
  if (!r.complete) r.note = "generator-bounded search";
  return r;
}

Subset s_cosets(const Magma& m, const Subset& h, int a, CosetFlavor flavor) {
  if (flavor == CosetFlavor::Plain) {
    if (!is_neutrosophic_subgroup(m, h) && !is_closed(m, h))
      throw PreconditionError("s_cosets plain: " + m.format(h) + " fails is_closed");
  } else if (!is_pseudo_neutrosophic_subgroup(m, h)) {
    throw PreconditionError("s_cosets pseudo: " + m.format(h) + " fails is_pseudo_neutrosophic_subgroup");
  }
  return cosets(m, h, a, Side::Right);
}

}  // namespace nm
