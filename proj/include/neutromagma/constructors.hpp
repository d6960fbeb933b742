#pragma once

#include <string_view>

#include "neutromagma/magma.hpp"

namespace nm {

/// L_n(m): i * j = (m j - (m - 1) i) mod n on {e, 1..n}, residue 0 shown as n.
Magma ln(int n, int m);
bool ln_admissible(int n, int m);
std::vector<Magma> ln_class(int n);
std::vector<int> ln_class_params(int n);
long long ln_count(int n);
long long ln_strict_noncomm_count(int n);

/// Prime factorization by trial division as (p, alpha) pairs.
std::vector<std::pair<int, int>> factorize(long long n);

enum class ZnClass { Z, Zstar, Zdoublestar, Ztriplestar };

std::string zn_class_name(ZnClass c);
ZnClass parse_zn_class(std::string_view name);
bool zn_admissible(int n, int t, int u, ZnClass c);

/// Z_n(t, u): a * b = t a + u b mod n.
Magma zn(int n, int t, int u, ZnClass c = ZnClass::Ztriplestar);
long long zn_class_size(int n, ZnClass c);
std::vector<std::pair<int, int>> zn_class_params(int n, ZnClass c);

Magma zmod_mult(int n);
Magma cyclic(int n);
Magma symmetric_group(int n);
Magma alternating(int n);
/// D_{2,n} = <a, b | a^2 = b^n = 1, bab = a>, labels a^i b^j.
Magma dihedral(int n);
/// All maps {1..n} -> {1..n} under composition, n <= 4.
Magma symmetric_semigroup(int n);
Magma direct_product(const Magma& a, const Magma& b);

}  // namespace nm
