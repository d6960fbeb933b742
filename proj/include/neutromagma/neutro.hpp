#pragma once

#include "neutromagma/magma.hpp"

namespace nm {

/// a + bI over Z_n.
struct NeutroResidue {
  int a = 0;
  int b = 0;
  bool operator==(const NeutroResidue&) const = default;
};

NeutroResidue neutro_mul(const NeutroResidue& x, const NeutroResidue& y, int n);
std::string neutro_label(const NeutroResidue& r);

/// {x, xI}; any product with a tagged operand is the base product, tagged.
Magma extend_tagged(const Magma& base);
/// Multiplicative monoid of Z_n[I], order n^2.
Magma zn_full_neutro(int n);
/// {0..n-1} together with {bI : b != 0}, order 2n - 1.
Magma zn_line_neutro(int n);

bool is_neutrosophic_subset(const Magma& m, const Subset& s);
bool is_neutrosophic_subgroup(const Magma& m, const Subset& s);
bool is_pseudo_neutrosophic_subgroup(const Magma& m, const Subset& s);
/// Closed, neutrosophic, and holding a proper real group of size >= 2.
bool is_s_neutrosophic_sub(const Magma& m, const Subset& s);
/// <H u I>: the real part H is a loop and the neutro part is exactly H times the neutro identity.
bool is_neutrosophic_subloop(const Magma& m, const Subset& s);
/// Associative, with identity, with a neutro element: a neutrosophic group in the loose sense.
bool is_neutrosophic_group(const Magma& m, const Subset& s);

enum class IdealMode { Plain, Maximal, Minimal, Principal };

bool neutrosophic_ideal_check(const Magma& m, const Subset& s, IdealMode mode);
/// {a} u Sa u aS u SaS
Subset principal_ideal(const Magma& m, int a);

}  // namespace nm
