#pragma once

#include <string_view>

#include "neutromagma/classify.hpp"
#include "neutromagma/magma.hpp"

namespace nm {

enum class CKind {
  Group,
  Semigroup,
  Loop,
  Groupoid,
  NeutroGroup,
  NeutroSemigroup,
  NeutroLoop,
  NeutroGroupoid,
  SSemigroup,
  SLoop,
  SGroupoid,
  SNeutroGroup,
  StrongSNeutroGroup,
  SNeutroSemigroup,
  SNeutroLoop,
  SNeutroGroupoid,
};

const std::vector<CKind>& all_ckinds();
std::string ckind_name(CKind k);
CKind parse_ckind(std::string_view name);
/// S-kinds imply their base kind; everything else implies only itself.
bool kind_implies(CKind declared, CKind role);
/// Empty string when m qualifies, otherwise the failed predicate.
std::string verify_kind(const Magma& m, CKind k, const Limits& limits = {});

/// Disjoint-tagged union of component magmas.
struct NStructure {
  std::string name;
  std::vector<Magma> components;
  std::vector<CKind> kinds;

  int size() const { return static_cast<int>(components.size()); }
  int order() const;
};

NStructure build_n_structure(std::string name, std::vector<Magma> components, std::vector<CKind> kinds,
                             bool verify = true);

struct NSubset {
  std::vector<Subset> per_component;

  int order() const;
  int nonempty() const;
  bool operator==(const NSubset&) const = default;
  auto operator<=>(const NSubset&) const = default;
};

std::string format_nsubset(const NStructure& ns, const NSubset& s);
NSubset nsubset_from_labels(const NStructure& ns, const std::vector<std::vector<std::string>>& labels);

struct NKindVerdict {
  bool n_group = false;
  bool n_semigroup = false;
  bool s_n_semigroup = false;
  bool n_loop = false;
  bool n_groupoid = false;
  bool n_group_semigroup = false;
  bool n_loop_groupoid = false;
  bool n_glsg = false;
  bool neutrosophic_n_group = false;
  bool neutrosophic_n_semigroup = false;
  bool neutrosophic_n_loop = false;
  bool neutrosophic_n_groupoid = false;
  bool strong_neutrosophic_n_group = false;
  bool s_neutrosophic_n_group = false;
  bool s_neutrosophic_n_semigroup = false;
  bool s_neutrosophic_n_loop = false;
  bool s_neutrosophic_n_groupoid = false;
  bool mixed_neutrosophic = false;
  bool dual_mixed_neutrosophic = false;
  bool weak_mixed_neutrosophic = false;
  bool weak_mixed_dual_neutrosophic = false;
  bool s_mixed_neutrosophic = false;
  bool dual_s_mixed = false;
};

NKindVerdict classify_n_kind(const NStructure& ns);
std::vector<std::pair<std::string, bool>> n_kind_fields(const NKindVerdict& v);

struct NEnumeration {
  std::vector<NSubset> subsets;
  bool complete = true;
};

constexpr long long kDefaultCombinationCap = 1'000'000;

/// Cartesian product of per-component closed subsets; whole components allowed, whole structure not.
NEnumeration enumerate_n_substructures(const NStructure& ns, const std::vector<Species>& species,
                                       bool require_nonempty_all, long long cap = kDefaultCombinationCap,
                                       const Limits& limits = {});

ClassReport n_lagrange(const NStructure& ns, const std::vector<Species>& species, bool require_nonempty_all = true,
                       const Limits& limits = {});
ClassReport n_sylow(const NStructure& ns, const std::vector<Species>& species,
                    SylowVariant variant = SylowVariant::Standard, bool require_nonempty_all = true,
                    const Limits& limits = {});
ClassReport n_cauchy(const NStructure& ns);

/// ClassReport witnesses flatten NSubsets; this keeps them intact.
struct NReport {
  ClassReport report;
  std::vector<NSubset> witnesses;
};

NReport n_lagrange_full(const NStructure& ns, const std::vector<Species>& species, bool require_nonempty_all = true,
                        const Limits& limits = {});
NReport n_sylow_full(const NStructure& ns, const std::vector<Species>& species, SylowVariant variant,
                     bool require_nonempty_all = true, const Limits& limits = {});

struct TupleSylow {
  Verdict3 verdict = Verdict3::Vacuous;
  std::optional<NSubset> witness;
  std::vector<int> target_orders;
  bool complete = true;
};

TupleSylow tuple_sylow(const NStructure& ns, const std::vector<int>& primes, const std::vector<Species>& species,
                       const Limits& limits = {});

std::vector<NSubset> deficit_substructures(const NStructure& ns, int t, const std::vector<Species>& species,
                                           const Limits& limits = {});

NSubset n_coset(const NStructure& ns, const NSubset& h, int component, int element);

bool n_homomorphism_check(const NStructure& source, const NStructure& target, const std::vector<PartialMap>& maps);

/// Componentwise normality; a single failing component fails the whole.
bool n_is_normal(const NStructure& ns, const NSubset& h, NormalMode mode);

/// Flattened index of (component, element) in the disjoint union.
int n_flat_index(const NStructure& ns, int component, int element);

}  // namespace nm
