#include <doctest.h>

#include "neutromagma/constructors.hpp"
#include "neutromagma/neutro.hpp"
#include "neutromagma/nstruct.hpp"

using namespace nm;

TEST_SUITE("nstruct") {
  TEST_CASE("build and verify") {
    auto ns = build_n_structure("b", {cyclic(3), zmod_mult(4)}, {CKind::Group, CKind::Semigroup});
    CHECK(ns.order() == 7);
    CHECK(ns.size() == 2);
    CHECK_THROWS(build_n_structure("b", {zmod_mult(4), cyclic(3)}, {CKind::Group, CKind::Semigroup}));
    CHECK_THROWS_AS(build_n_structure("b", {cyclic(3)}, {CKind::Group, CKind::Group}), ParamError);
    CHECK(n_flat_index(ns, 1, 2) == 5);
  }

  TEST_CASE("kind names and implication") {
    for (CKind k : all_ckinds()) CHECK(parse_ckind(ckind_name(k)) == k);
    CHECK(kind_implies(CKind::SLoop, CKind::Loop));
    CHECK_FALSE(kind_implies(CKind::Loop, CKind::SLoop));
    CHECK(verify_kind(cyclic(3), CKind::Group).empty());
    CHECK_FALSE(verify_kind(ln(5, 2), CKind::Group).empty());
  }

  TEST_CASE("classify n kind") {
    auto bi = build_n_structure("b", {cyclic(3), cyclic(5)}, {CKind::Group, CKind::Group});
    auto v = classify_n_kind(bi);
    CHECK(v.n_group);
    CHECK_FALSE(v.neutrosophic_n_group);
    auto mixed = build_n_structure("m", {cyclic(3), zmod_mult(4)}, {CKind::Group, CKind::Semigroup});
    CHECK(classify_n_kind(mixed).n_group_semigroup);
    CHECK_FALSE(classify_n_kind(mixed).n_group);
  }

  TEST_CASE("enumeration and lagrange") {
    auto ns = build_n_structure("b", {cyclic(4), cyclic(6)}, {CKind::Group, CKind::Group});
    auto en = enumerate_n_substructures(ns, {Pred::IsGroup, Pred::IsGroup}, true);
    CHECK(en.complete);
    for (const auto& s : en.subsets) {
      CHECK(s.nonempty() == 2);
      CHECK(s.order() < ns.order());
    }
    auto r = n_lagrange(ns, {Pred::IsGroup, Pred::IsGroup});
    CHECK(r.verdict != Verdict3::Vacuous);
    auto full = n_lagrange_full(ns, {Pred::IsGroup, Pred::IsGroup});
    CHECK(full.witnesses.size() == full.report.witnesses.size());
  }

  TEST_CASE("combination cap") {
    auto ns = build_n_structure("b", {zmod_mult(8), zmod_mult(8)}, {CKind::Semigroup, CKind::Semigroup});
    CHECK_THROWS_AS(enumerate_n_substructures(ns, {Pred::IsSemigroup, Pred::IsSemigroup}, true, 3), ResourceLimitError);
  }

  TEST_CASE("nsubset labels and coset") {
    auto ns = build_n_structure("b", {cyclic(4), cyclic(3)}, {CKind::Group, CKind::Group});
    const auto& l0 = ns.components[0].labels();
    const auto& l1 = ns.components[1].labels();
    auto h = nsubset_from_labels(ns, {{l0[0], l0[2]}, {l1[0]}});
    CHECK(h.order() == 3);
    CHECK_FALSE(format_nsubset(ns, h).empty());
    auto c = n_coset(ns, h, 0, 1);
    CHECK(c.per_component[0].size() == 2);
    CHECK(n_is_normal(ns, h, NormalMode::Subgroup));
  }

  TEST_CASE("n cauchy on groups") {
    auto ns = build_n_structure("b", {cyclic(2), cyclic(2)}, {CKind::Group, CKind::Group});
    CHECK(n_cauchy(ns).verdict == Verdict3::Full);
    auto odd = build_n_structure("b", {cyclic(2), cyclic(3)}, {CKind::Group, CKind::Group});
    CHECK(n_cauchy(odd).verdict == Verdict3::Free);
  }
}
