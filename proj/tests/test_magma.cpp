#include <doctest.h>

#include "neutromagma/constructors.hpp"
#include "neutromagma/neutro.hpp"

using namespace nm;

TEST_SUITE("magma") {
  TEST_CASE("constructor validates invariants") {
    CHECK_THROWS_AS(Magma("x", {"a"}, {0, 0}), ParamError);
    CHECK_THROWS_AS(Magma("x", {"a", "b"}, {0, 1, 1, 2}), ParamError);
    CHECK_THROWS_AS(Magma("x", {"a", "a"}, {0, 1, 1, 0}), ParamError);
    CHECK_THROWS_AS(Magma("x", {"a", "b"}, {0, 1, 1, 0}, 1), ParamError);
    CHECK_THROWS_AS(Magma("x", {"a", "b"}, {0, 1, 1, 0}, 0, {false, false}, 1), ParamError);
    Magma ok("x", {"a", "b"}, {0, 1, 1, 0}, 0);
    CHECK(ok.order() == 2);
    CHECK_THROWS_AS(ok.op(0, 2), DomainError);
    CHECK_THROWS_AS(ok.index_of("c"), DomainError);
  }

  TEST_CASE("op on ln") {
    Magma m = ln(5, 2);
    CHECK(m.label(m.op(m.index_of("1"), m.index_of("2"))) == "3");
    Magma n = ln(7, 4);
    CHECK(n.label(n.op(n.index_of("2"), n.index_of("4"))) == "3");
  }

  TEST_CASE("is_closed") {
    Magma z = zn_full_neutro(5);
    CHECK(is_closed(z, z.subset({"1", "I", "4I"})));
    CHECK_FALSE(is_closed(z, z.subset({"2", "I"})));
  }

  TEST_CASE("identity laws") {
    CHECK(check_identity_law(ln(7, 3), Law::WIP).holds);
    CHECK(check_identity_law(ln(5, 2), Law::RightAlternative).holds);
    auto r = check_identity_law(ln(5, 3), Law::Moufang1);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    Magma m = ln(5, 3);
    auto [x, y, z] = *r.witness;
    CHECK(m(m(x, y), m(z, x)) != m(m(x, m(y, z)), x));
    CHECK(check_identity_law(ln(5, 3), Law::Commutative).arity == 2);
    Magma one("t", {"a"}, {0}, 0);
    for (Law l : all_laws()) CHECK(check_identity_law(one, l).holds);
    CHECK_THROWS_AS(check_identity_law(zn(5, 2, 3), Law::WIP), PreconditionError);
  }

  TEST_CASE("law names round trip") {
    for (Law l : all_laws()) CHECK(parse_law(law_name(l)) == l);
    CHECK_THROWS_AS(parse_law("nope"), ParamError);
  }

  TEST_CASE("Moufang laws hold in groups") {
    Magma s3 = symmetric_group(3);
    for (Law l : {Law::Moufang1, Law::Moufang2, Law::Moufang3, Law::Bol, Law::LeftAlternative, Law::RightAlternative})
      CHECK(check_identity_law(s3, l).holds);
  }

  TEST_CASE("latin square and classify_basic") {
    CHECK(latin_square_check(ln(5, 2)));
    CHECK(latin_square_check(zn(3, 1, 2)));
    CHECK_FALSE(latin_square_check(zmod_mult(6)));
    auto b = classify_basic(ln(5, 3));
    CHECK(b.is_loop);
    CHECK_FALSE(b.is_group);
    CHECK(b.is_commutative);
    CHECK(classify_basic(cyclic(5)).is_group);
  }

  TEST_CASE("enumerate_closed_subsets") {
    Magma z = zn_full_neutro(5);
    auto en = enumerate_closed_subsets(z, Pred::IsGroup);
    CHECK_FALSE(en.complete);
    auto has = [&](const Subset& s) { return std::find(en.subsets.begin(), en.subsets.end(), s) != en.subsets.end(); };
    CHECK(has(z.subset({"1", "4"})));
    CHECK(has(z.subset({"1", "1+3I"})));
    Magma z7 = zmod_mult(7);
    auto g = enumerate_closed_subsets(z7, Pred::IsGroup);
    CHECK(g.complete);
    CHECK(std::find(g.subsets.begin(), g.subsets.end(), z7.subset({"1", "2", "3", "4", "5", "6"})) != g.subsets.end());
    auto c5 = enumerate_closed_subsets(cyclic(5), Pred::IsSubgroupoid);
    CHECK(c5.subsets.empty());
  }

  TEST_CASE("exhaustive bound follows the limit") {
    Magma m = zmod_mult(8);
    Limits lim;
    lim.max_exhaustive_order = 4;
    CHECK_FALSE(enumerate_closed_subsets(m, Pred::IsSubgroupoid, lim).complete);
    lim.max_exhaustive_order = 8;
    CHECK(enumerate_closed_subsets(m, Pred::IsSubgroupoid, lim).complete);
  }

  TEST_CASE("nuclei and associator") {
    Magma m = ln(5, 3);
    CHECK(nuclei(m).commutant == universe(m));
    CHECK(associator_subloop(ln(5, 2)) == universe(ln(5, 2)));
    Magma c = cyclic(4);
    CHECK(center(c) == universe(c));
  }

  TEST_CASE("cosets") {
    Magma z = zn_full_neutro(5);
    CHECK(cosets(z, z.subset({"1", "I", "4I"}), z.index_of("2"), Side::Right) == z.subset({"2", "2I", "3I"}));
    CHECK(cosets(z, z.subset({"1", "I", "4", "4I"}), z.index_of("1+I"), Side::Right) ==
          z.subset({"1+I", "2I", "4+4I", "3I"}));
    auto dc = double_coset(ln(5, 2), {0}, {0}, 1);
    CHECK_FALSE(dc.associativity_assumed);
    CHECK(double_coset(cyclic(4), {0}, {0}, 1).associativity_assumed);
    CHECK(dc.set == Subset{1});
  }

  TEST_CASE("ideals") {
    Magma z6 = zmod_mult(6);
    CHECK(is_ideal(z6, z6.subset({"0"}), Side::TwoSided));
    CHECK(is_ideal(z6, z6.subset({"0", "2", "4"}), Side::TwoSided));
    CHECK_FALSE(is_ideal(z6, z6.subset({"1", "5"}), Side::TwoSided));
    Magma g = zn(4, 2, 3), d = zn(4, 3, 2);
    for (unsigned mask = 1; mask < 16; ++mask) {
      Subset s;
      for (int i = 0; i < 4; ++i)
        if (mask >> i & 1u) s.push_back(i);
      CHECK(is_ideal(g, s, Side::Left) == is_ideal(d, s, Side::Right));
    }
  }

  TEST_CASE("normality") {
    Magma s3 = symmetric_group(3);
    Subset a3 = s3.subset({"e", "(123)", "(132)"});
    CHECK(is_normal(s3, a3, NormalMode::Subgroup));
    CHECK_FALSE(is_normal(s3, s3.subset({"e", "(12)"}), NormalMode::Subgroup));
    Magma z = zn(5, 2, 3);
    CHECK_FALSE(is_normal(z, z.subset({"0"}), NormalMode::Subgroupoid, NormalRange::Carrier));
    CHECK(is_normal(z, z.subset({"0"}), NormalMode::Subgroupoid));
    CHECK_THROWS_AS(is_normal(z, z.subset({"1"}), NormalMode::Subgroupoid), PreconditionError);
    CHECK(literal_xhy_normal(cyclic(3), universe(cyclic(3))));
  }

  TEST_CASE("conjugacy") {
    Magma z = zn_line_neutro(15);
    CHECK(conjugate_witness_set(z, z.subset({"1", "4"}), z.subset({"1", "14"})) ==
          z.subset({"0", "3", "6", "9", "12", "3I", "6I", "9I", "12I"}));
    Magma z6 = zn_line_neutro(6);
    int x = z6.index_of("3"), y = z6.index_of("5");
    auto pairs = conjugate_pairs(z6, x, y);
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{z6.index_of("1"), z6.index_of("3")}) != pairs.end());
    auto least = conjugate_pair(z6, x, y);
    REQUIRE(least);
    CHECK(z6(least->first, x) == z6(y, least->second));
  }

  TEST_CASE("element orders") {
    Magma z = zn_full_neutro(5);
    CHECK(element_orders(z, z.index_of("4I")).neutro_order == 2);
    CHECK(element_orders(zmod_mult(8), 3).real_order == 2);
    CHECK_FALSE(element_orders(zmod_mult(8), 2).real_order.has_value());
    CHECK(z.label(power(z, z.index_of("2"), 4)) == "1");
  }

  TEST_CASE("homomorphisms and isotopy") {
    Magma a = extend_tagged(ln(5, 3)), b = extend_tagged(ln(7, 2));
    PartialMap f{&a, &b, {}};
    for (auto [x, y] : {std::pair{"e", "e"}, {"3", "5"}, {"eI", "eI"}, {"3I", "5I"}})
      f.pairs.emplace_back(a.index_of(x), b.index_of(y));
    CHECK(check_homomorphism(f));
    f.pairs[1].second = b.index_of("e");
    CHECK_FALSE(check_homomorphism(f));
    Magma iso = principal_isotope(ln(5, 2), 0, 0);
    CHECK(iso.table() == ln(5, 2).table());
    CHECK(is_isomorphic(ln(5, 2), ln(5, 2)).has_value());
    CHECK_FALSE(is_isomorphic(cyclic(4), submagma(zn_line_neutro(5), zn_line_neutro(5).subset({"1", "4"}))));
    Magma m = ln(5, 2);
    std::vector<std::string> col;
    for (int v : right_regular_representation(m, m.index_of("1"))) col.push_back(m.label(v));
    CHECK(col == std::vector<std::string>{"1", "e", "5", "4", "3", "2"});
  }

  TEST_CASE("species names") {
    for (Pred p : {Pred::IsGroup, Pred::IsSemigroup, Pred::IsLoop, Pred::IsSubgroupoid, Pred::IsNeutrosophicSubgroup,
                   Pred::IsPseudoNeutrosophicSubgroup, Pred::IsSNeutrosophicSub, Pred::IsIdeal, Pred::IsLeftIdeal,
                   Pred::IsRightIdeal})
      CHECK(parse_species(pred_name(p)).kind == p);
    CHECK_THROWS_AS(parse_species("???"), ParamError);
  }
}
