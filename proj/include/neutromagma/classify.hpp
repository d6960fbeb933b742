#pragma once

#include <string_view>

#include "neutromagma/magma.hpp"

namespace nm {

enum class SKind {
  SSemigroup,
  SLoop,
  SGroupoid,
  SNeutrosophicGroup,
  StrongSNeutrosophicGroup,
  SNeutrosophicSemigroup,
  SNeutrosophicLoop,
  SNeutrosophicGroupoid,
};

const std::vector<SKind>& all_skinds();
std::string skind_name(SKind k);
SKind parse_skind(std::string_view name);
/// Witness species searched for each kind (always size >= 2).
Species skind_witness(SKind k);

struct SDetect {
  bool holds = false;
  std::optional<Subset> witness;
  bool complete = true;
};

/// Carrier-level requirement of an S-kind, checked before any witness search.
bool s_kind_base(const Magma& m, SKind kind);
SDetect detect_s_kind(const Magma& m, SKind kind, const Limits& limits = {});

enum class Verdict3 { Full, Weak, Free, Vacuous };

std::string verdict_name(Verdict3 v);

struct Witness {
  Subset members;
  int order = 0;
  bool qualifies = false;
};

struct ClassReport {
  Verdict3 verdict = Verdict3::Vacuous;
  bool complete = true;
  std::vector<Witness> witnesses;
  std::string species;
  std::vector<std::string> notes;
};

enum class SylowVariant { Standard, Super, Semi };

std::string sylow_variant_name(SylowVariant v);
SylowVariant parse_sylow_variant(std::string_view name);

/// Orders a p-Sylow witness may take for the given structure order.
std::vector<int> sylow_targets(int total, int p, int alpha, SylowVariant v);

/// Shared engines over (order, witness-order) data; reused for N-structures.
ClassReport lagrange_engine(int total, std::vector<Witness> found, bool complete, std::string species);
ClassReport sylow_engine(int total, std::vector<Witness> found, bool complete, std::string species, SylowVariant v);

ClassReport lagrange_classify(const Magma& m, const Species& species, const Limits& limits = {});
ClassReport sylow_classify(const Magma& m, const Species& species, SylowVariant variant = SylowVariant::Standard,
                           const Limits& limits = {});

struct CauchyEntry {
  int element = 0;
  bool neutro = false;
  int order = 0;
  bool qualifies = false;
};

/// Torsion elements of m (orders > 1) against `against`.
std::vector<CauchyEntry> cauchy_entries(const Magma& m, int against, const std::optional<Subset>& only = std::nullopt);
Verdict3 cauchy_verdict(const std::vector<CauchyEntry>& entries);
ClassReport cauchy_classify(const Magma& m, const std::optional<Subset>& relative_to = std::nullopt);

enum class Strength { Strong, Weak };

Verdict3 s_identity_class(const Magma& m, Law law, const Species& species, Strength strength,
                          const Limits& limits = {});

struct HyperSimple {
  std::optional<Subset> largest_group;
  std::optional<Subset> hyper_subsemigroup;
  bool s_simple = true;
  bool complete = true;
  std::string note;
};

HyperSimple s_hyper_and_simple(const Magma& m, const Limits& limits = {});

enum class CosetFlavor { Plain, Pseudo };

Subset s_cosets(const Magma& m, const Subset& h, int a, CosetFlavor flavor);

}  // namespace nm
