#include <doctest.h>

#include "neutromagma/classify.hpp"
#include "neutromagma/constructors.hpp"
#include "neutromagma/neutro.hpp"

using namespace nm;

TEST_SUITE("constructors") {
  TEST_CASE("ln admissibility and counts") {
    CHECK(ln_admissible(5, 2));
    CHECK_FALSE(ln_admissible(6, 2));
    CHECK_FALSE(ln_admissible(7, 1));
    CHECK_THROWS_AS(ln(6, 2), ParamError);
    CHECK_THROWS_AS(ln(5, 5), ParamError);
    for (int n : {5, 7, 9, 15, 21, 25}) CHECK(static_cast<long long>(ln_class(n).size()) == ln_count(n));
    CHECK(ln_count(5) == 3);
    CHECK(ln_count(15) == 3);
    CHECK(ln_strict_noncomm_count(15) == 0);
    CHECK(ln_strict_noncomm_count(35) == 8);
    CHECK(ln(9, 2).order() == 10);
  }

  TEST_CASE("zn classes") {
    CHECK(zn_class_size(5, ZnClass::Zstar) == 12);
    CHECK(static_cast<long long>(zn_class_params(5, ZnClass::Zstar).size()) == 12);
    CHECK_THROWS_AS(zn(5, 0, 0, ZnClass::Zdoublestar), ParamError);
    CHECK_THROWS_AS(zn(5, 2, 2, ZnClass::Zstar), ParamError);
    CHECK_NOTHROW(zn(5, 0, 0));
    CHECK(zn(4, 1, 2).label(zn(4, 1, 2)(2, 3)) == "0");
    CHECK(parse_zn_class("zstar") == ZnClass::Zstar);
    CHECK_THROWS_AS(parse_zn_class("zz"), ParamError);
  }

  TEST_CASE("standard families") {
    CHECK(symmetric_group(3).order() == 6);
    CHECK(alternating(4).order() == 12);
    CHECK(dihedral(4).order() == 8);
    CHECK(symmetric_semigroup(3).order() == 27);
    CHECK(direct_product(cyclic(2), cyclic(3)).order() == 6);
    CHECK(zn_full_neutro(4).order() == 16);
    CHECK(zn_line_neutro(5).order() == 9);
    CHECK(extend_tagged(ln(5, 2)).order() == 12);
    CHECK(factorize(360) == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}});
  }

  TEST_CASE("neutro arithmetic") {
    CHECK(neutro_mul({2, 1}, {3, 4}, 5) == NeutroResidue{1, 0});
    CHECK(neutro_label({0, 1}) == "I");
    CHECK(neutro_label({1, 3}) == "1+3I");
    CHECK(neutro_label({0, 0}) == "0");
  }
}

TEST_SUITE("neutrosophic") {
  TEST_CASE("subgroup predicates") {
    Magma z = zn_full_neutro(5);
    CHECK(is_neutrosophic_subset(z, z.subset({"1", "I"})));
    CHECK_FALSE(is_neutrosophic_subset(z, z.subset({"1", "4"})));
    CHECK(is_pseudo_neutrosophic_subgroup(z, z.subset({"I", "4I"})));
    CHECK_FALSE(is_pseudo_neutrosophic_subgroup(z, z.subset({"1", "4"})));
    CHECK(is_neutrosophic_subloop(z, z.subset({"1", "4", "I", "4I"})));
    CHECK_FALSE(is_neutrosophic_subloop(z, z.subset({"1", "4", "I", "2I", "3I", "4I"})));
  }

  TEST_CASE("principal ideal") {
    Magma z6 = zmod_mult(6);
    CHECK(principal_ideal(z6, z6.index_of("2")) == z6.subset({"0", "2", "4"}));
  }
}

TEST_SUITE("classify") {
  TEST_CASE("verdict names are lowercase") {
    CHECK(verdict_name(Verdict3::Full) == "full");
    CHECK(verdict_name(Verdict3::Vacuous) == "vacuous");
    CHECK(parse_sylow_variant("semi") == SylowVariant::Semi);
    CHECK_THROWS_AS(parse_sylow_variant("x"), ParamError);
  }

  TEST_CASE("sylow targets") {
    CHECK(sylow_targets(12, 2, 2, SylowVariant::Standard) == std::vector<int>{4});
    CHECK(sylow_targets(8, 2, 3, SylowVariant::Standard).empty());
    CHECK(sylow_targets(24, 2, 3, SylowVariant::Semi) == std::vector<int>{2, 4});
    CHECK(sylow_targets(12, 2, 2, SylowVariant::Super) == std::vector<int>{8});
  }

  TEST_CASE("lagrange engine trichotomy") {
    CHECK(lagrange_engine(6, {}, true, "x").verdict == Verdict3::Vacuous);
    CHECK(lagrange_engine(6, {{{0}, 2}, {{1}, 3}}, true, "x").verdict == Verdict3::Full);
    CHECK(lagrange_engine(6, {{{0}, 2}, {{1}, 4}}, true, "x").verdict == Verdict3::Weak);
    CHECK(lagrange_engine(6, {{{0}, 4}, {{1}, 5}}, true, "x").verdict == Verdict3::Free);
    auto r = lagrange_engine(6, {}, false, "x");
    CHECK_FALSE(r.notes.empty());
  }

  TEST_CASE("sylow engine") {
    CHECK(sylow_engine(6, {{{0}, 2}, {{1}, 3}}, true, "x", SylowVariant::Standard).verdict == Verdict3::Full);
    CHECK(sylow_engine(6, {{{0}, 2}}, true, "x", SylowVariant::Standard).verdict == Verdict3::Weak);
    CHECK(sylow_engine(6, {{{0}, 4}}, true, "x", SylowVariant::Standard).verdict == Verdict3::Free);
    CHECK_THROWS_AS(sylow_engine(1, {}, true, "x", SylowVariant::Standard), ParamError);
  }

  TEST_CASE("groups are Lagrange") {
    CHECK(lagrange_classify(symmetric_group(3), Pred::IsGroup).verdict == Verdict3::Full);
    CHECK(lagrange_classify(cyclic(7), Pred::IsGroup).verdict == Verdict3::Vacuous);
    CHECK(sylow_classify(alternating(4), Pred::IsGroup).verdict == Verdict3::Full);
  }

  TEST_CASE("cauchy") {
    auto r = cauchy_classify(cyclic(6));
    CHECK(r.verdict == Verdict3::Full);
    CHECK(cauchy_verdict({}) == Verdict3::Vacuous);
    CHECK(cauchy_verdict({{0, false, 2, true}, {1, false, 4, false}}) == Verdict3::Weak);
    CHECK(cauchy_verdict({{0, false, 4, false}}) == Verdict3::Free);
  }

  TEST_CASE("s-kinds") {
    CHECK(detect_s_kind(zmod_mult(7), SKind::SSemigroup).holds);
    CHECK(detect_s_kind(ln(5, 2), SKind::SLoop).holds);
    CHECK_FALSE(detect_s_kind(cyclic(5), SKind::SSemigroup).holds);
    CHECK(detect_s_kind(zmod_mult(6), SKind::SSemigroup).holds);
    for (SKind k : all_skinds()) CHECK(parse_skind(skind_name(k)) == k);
    CHECK_FALSE(detect_s_kind(ln(7, 3), SKind::SSemigroup).holds);
    CHECK(detect_s_kind(ln(7, 3), SKind::SGroupoid).holds);
    CHECK_FALSE(detect_s_kind(ln(7, 3), SKind::SNeutrosophicLoop).holds);
    CHECK(detect_s_kind(zn_line_neutro(6), SKind::SNeutrosophicSemigroup).holds);
    CHECK(detect_s_kind(extend_tagged(ln(7, 3)), SKind::SNeutrosophicLoop).holds);
  }

  TEST_CASE("hyper and simple") {
    auto h = s_hyper_and_simple(zmod_mult(6));
    REQUIRE(h.largest_group);
    CHECK(h.largest_group->size() >= 2);
    CHECK_THROWS_AS(s_hyper_and_simple(ln(5, 2)), PreconditionError);
  }
}
