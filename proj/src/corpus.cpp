#include "neutromagma/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <sstream>

#include "neutromagma/classify.hpp"
#include "neutromagma/constructors.hpp"
#include "neutromagma/neutro.hpp"
#include "neutromagma/nstruct.hpp"

namespace nm {

namespace {

using Labels = std::vector<std::string>;

CheckResult expect(bool ok, std::string detail) { return {ok, std::move(detail)}; }

CheckResult same_set(const Magma& m, const Subset& got, const Labels& want) {
  Subset w = m.subset(want);
  return {got == w, "engine " + m.format(got) + ", expected " + m.format(w)};
}

/// Rows and columns in label order; cells are space separated labels.
CheckResult table_matches(const Magma& m, const std::vector<std::string>& rows) {
  for (int x = 0; x < m.order(); ++x) {
    std::istringstream in(rows.at(x));
    std::string cell;
    for (int y = 0; y < m.order(); ++y) {
      in >> cell;
      if (m.label(m(x, y)) != cell)
        return {false, m.label(x) + "*" + m.label(y) + " = " + m.label(m(x, y)) + ", printed " + cell};
    }
  }
  return {true, "all " + std::to_string(m.order() * m.order()) + " cells match"};
}

Magma units5() {
  Magma z = zn_line_neutro(5);
  Subset s;
  for (int x = 0; x < z.order(); ++x)
    if (z.label(x) != "0") s.push_back(x);
  return submagma(z, s, "units(zn_line_neutro(5))");
}

Species s_substructure() {
  return Species::custom("s-substructure", [](const Magma& m, const Subset& s) {
    return s.size() >= 2 && is_closed(m, s) && contains_group(m, s, false, false);
  });
}

Species s_neutro_sub() {
  return Species::custom("s-neutrosophic-substructure", [](const Magma& m, const Subset& s) {
    return s.size() >= 2 && (is_group(m, s) || contains_group(m, s, false, false) ||
                             is_neutrosophic_subgroup(m, s) || is_pseudo_neutrosophic_subgroup(m, s));
  });
}

Species s_neutro_subloop() {
  return Species::custom("s-neutrosophic-subloop", [](const Magma& m, const Subset& s) {
    return is_neutrosophic_subloop(m, s) && contains_group(m, s, true, true);
  });
}

bool has_witness(const NReport& r, const NSubset& s) {
  return std::find(r.witnesses.begin(), r.witnesses.end(), s) != r.witnesses.end();
}

std::string orders_of(const ClassReport& r) {
  std::vector<int> o;
  for (const auto& w : r.witnesses) o.push_back(w.order);
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  std::string s = "{";
  for (size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + std::to_string(o[i]);
  return s + "}";
}

CheckResult verdict_is(const ClassReport& r, Verdict3 want) {
  return {r.verdict == want, "verdict " + verdict_name(r.verdict) + " (expected " + verdict_name(want) +
                                 "), witness orders " + orders_of(r) + (r.complete ? "" : ", generator-bounded")};
}

struct CosetCase {
  const char* a;
  Labels expected;
  bool erratum;
};

const std::vector<CosetCase>& p_cosets() {
  static const std::vector<CosetCase> v = {
      {"0", {"0"}, false},
      {"1", {"1", "I", "4I"}, false},
      {"I", {"I", "4I"}, false},
      {"4I", {"4I"}, true},
      {"2", {"2", "2I", "3I"}, false},
      {"3", {"3", "3I", "2I"}, false},
      {"4", {"4", "4I"}, true},
      {"2I", {"2I", "3I"}, false},
      {"3I", {"3I", "2I"}, false},
      {"1+I", {"1+I", "2I", "3I"}, false},
      {"2+I", {"2+I", "3I", "2I"}, false},
      {"3+I", {"3+I", "4I", "3I"}, true},
      {"4+I", {"4+I", "0"}, false},
      {"1+2I", {"1+2I", "3I", "2I"}, false},
      {"2+2I", {"2+2I", "4I", "I"}, false},
      {"3+2I", {"3+2I", "0"}, false},
      {"4+2I", {"4+2I", "4I"}, true},
      {"1+3I", {"1+3I", "4I", "I"}, false},
      {"2+3I", {"2+3I", "0"}, false},
      {"3+3I", {"3+3I", "I", "4I"}, false},
      {"4+3I", {"4+3I", "2I", "3I"}, false},
      {"1+4I", {"1+4I", "0"}, false},
      {"2+4I", {"2+4I", "I", "3I"}, true},
      {"3+4I", {"3+4I", "2I", "3I"}, false},
      {"4+4I", {"4+4I", "3I", "2I"}, false},
  };
  return v;
}

const std::vector<CosetCase>& m_cosets() {
  static const std::vector<CosetCase> v = {
      {"0", {"0"}, false},
      {"1", {"1", "I", "4", "4I"}, false},
      {"I", {"I", "4I"}, false},
      {"4", {"4", "4I"}, true},
      {"4I", {"4I", "I"}, false},
      {"1+I", {"1+I", "2I", "4+4I", "3I"}, false},
      {"2+I", {"2+I", "3I", "3+4I", "2I"}, false},
      {"3+I", {"3+I", "4I", "2+4I", "I"}, false},
      {"4+I", {"4+I", "0", "1+4I"}, false},
      {"1+2I", {"1+2I", "3I", "4+3I", "2I"}, false},
      {"2+2I", {"2+2I", "4I", "3+3I", "I"}, false},
      {"3+2I", {"3+2I", "0", "2+3I", "3I"}, true},
      {"4+2I", {"4+2I", "I", "3I", "4I"}, true},
      {"1+3I", {"1+3I", "4I", "4+2I", "I"}, false},
      {"2+3I", {"2+3I", "0", "3+2I"}, false},
      {"3+3I", {"3+3I", "I", "2+2I", "4I"}, false},
      {"4+3I", {"4+3I", "2I", "1+2I", "3I"}, false},
      {"1+4I", {"1+4I", "0", "4+I"}, false},
      {"2+4I", {"2+4I", "I", "3+I", "4I"}, false},
      {"3+4I", {"3+4I", "2I", "2+I", "3I"}, false},
      {"4+4I", {"4+4I", "3I", "1+I", "2I"}, false},
  };
  return v;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  auto add = [&](std::string id, std::string prov, std::string assertion, std::function<CheckResult()> fn,
                 OnMismatch st = OnMismatch::Fail) {
    c.push_back({std::move(id), std::move(prov), std::move(assertion), st, std::move(fn)});
  };

  // ---------------------------------------------------------------- tables
  add("ex-1.3.1-table-l5-2", "Example 1.3.1", "ln(5,2) matches the printed table", [] {
    return table_matches(ln(5, 2), {"e 1 2 3 4 5", "1 e 3 5 2 4", "2 5 e 4 1 3", "3 4 1 e 5 2", "4 3 5 2 e 1",
                                    "5 2 4 1 3 e"});
  });
  add("ex-1.3.3-table-l5-3", "Example 1.3.3", "ln(5,3) matches the printed table", [] {
    return table_matches(ln(5, 3), {"e 1 2 3 4 5", "1 e 4 2 5 3", "2 4 e 5 3 1", "3 2 5 e 1 4", "4 5 3 1 e 2",
                                    "5 3 1 4 2 e"});
  });
  add("ex-1.3.3-table-l5-4", "Example 1.3.3", "ln(5,4) matches the printed table", [] {
    return table_matches(ln(5, 4), {"e 1 2 3 4 5", "1 e 5 4 3 2", "2 3 e 1 5 4", "3 5 4 e 2 1", "4 2 1 5 e 3",
                                    "5 4 3 2 1 e"});
  });
  add("ex-1.3.2-table-l7-4", "Example 1.3.2", "ln(7,4) matches the printed table", [] {
    return table_matches(ln(7, 4), {"e 1 2 3 4 5 6 7", "1 e 5 2 6 3 7 4", "2 5 e 6 3 7 4 1", "3 2 6 e 7 4 1 5",
                                    "4 6 3 7 e 1 5 2", "5 3 7 4 1 e 2 6", "6 7 4 1 5 2 e 3", "7 4 1 5 2 6 3 e"});
  });
  add("ex-1.3.4-table-l7-3", "Example 1.3.4", "ln(7,3) matches the printed table", [] {
    return table_matches(ln(7, 3), {"e 1 2 3 4 5 6 7", "1 e 4 7 3 6 2 5", "2 6 e 5 1 4 7 3", "3 4 7 e 6 2 5 1",
                                    "4 2 5 1 e 7 3 6", "5 7 3 6 2 e 1 4", "6 5 1 4 7 3 e 2", "7 3 6 2 5 1 4 e"});
  });
  add("ex-1.4.1-table-z3-1-2", "Example 1.4.1", "zn(3,1,2) matches the printed table", [] {
    return table_matches(zn(3, 1, 2), {"0 2 1", "1 0 2", "2 1 0"});
  });
  add("ex-1.3.1-op", "Example 1.3.1", "ln(5,2): 1*2 = 3", [] {
    Magma m = ln(5, 2);
    return expect(m.label(m.op(m.index_of("1"), m.index_of("2"))) == "3", "1*2 = " +
                  m.label(m.op(m.index_of("1"), m.index_of("2"))));
  });
  add("ex-1.3.2-op", "Example 1.3.2", "ln(7,4): 2*4 = 3", [] {
    Magma m = ln(7, 4);
    std::string v = m.label(m.op(m.index_of("2"), m.index_of("4")));
    return expect(v == "3", "2*4 = " + v);
  });
  add("ex-1.3.1-latin", "Example 1.3.1", "ln(5,2) is a Latin square", [] {
    return expect(latin_square_check(ln(5, 2)), "latin_square_check(ln(5,2))");
  });
  add("ex-1.3.1-right-regular", "Example 1.3.1", "column of 1 in ln(5,2) reads 1 e 5 4 3 2", [] {
    Magma m = ln(5, 2);
    auto p = right_regular_representation(m, m.index_of("1"));
    Labels got;
    for (int x : p) got.push_back(m.label(x));
    return expect(got == Labels{"1", "e", "5", "4", "3", "2"}, "column " + m.format(p));
  });
  add("ex-1.3.3-class-l5", "Example 1.3.3", "L5 has exactly the members m = 2, 3, 4", [] {
    auto p = ln_class_params(5);
    return expect(p == std::vector<int>{2, 3, 4} && ln_count(5) == 3,
                  "members " + std::to_string(p.size()) + ", ln_count(5) = " + std::to_string(ln_count(5)));
  });

  // ---------------------------------------------------------------- laws
  add("ex-1.3.4-wip-l7-3", "Example 1.3.4", "ln(7,3) is a WIP loop",
      [] { return expect(check_identity_law(ln(7, 3), Law::WIP).holds, "wip on ln(7,3)"); });
  add("thm-32-right-alt-l5-2", "Theorem [32]", "ln(5,2) is right alternative",
      [] { return expect(check_identity_law(ln(5, 2), Law::RightAlternative).holds, "right_alternative"); });
  add("thm-27-moufang1-l5-3", "Theorem [27]", "ln(5,3) fails Moufang1 with a witness", [] {
    auto r = check_identity_law(ln(5, 3), Law::Moufang1);
    return expect(!r.holds && r.witness.has_value(), r.holds ? "holds" : "fails with witness");
  });
  add("thm-27-commutative-l5-3", "Theorem [27]", "ln(5,3) is a commutative loop, not a group", [] {
    auto b = classify_basic(ln(5, 3));
    return expect(b.is_loop && !b.is_group && b.is_commutative, "loop/group/commutative = " +
                  std::to_string(b.is_loop) + std::to_string(b.is_group) + std::to_string(b.is_commutative));
  });
  add("thm-27-commutant-l5-3", "Theorem [27]", "commutant of ln(5,3) is the whole loop", [] {
    Magma m = ln(5, 3);
    return same_set(m, nuclei(m).commutant, m.labels());
  });
  add("thm-27-associator-l5-2", "Theorem [27]", "associator subloop of ln(5,2) is the whole loop", [] {
    Magma m = ln(5, 2);
    return same_set(m, associator_subloop(m), m.labels());
  });

  // ---------------------------------------------------------------- Z_n groupoids
  add("thm-1.4.5-simple-z5-2-3", "Theorem 1.4.5", "zn(5,2,3) has no proper normal closed subset", [] {
    Magma m = zn(5, 2, 3);
    auto en = enumerate_closed_subsets(m, Pred::IsSubgroupoid);
    for (const auto& s : en.subsets)
      if (is_normal(m, s, NormalMode::Subgroupoid, NormalRange::Carrier)) return expect(false, m.format(s) + " is normal");
    return expect(true, std::to_string(en.subsets.size()) + " proper closed subsets, none normal");
  });
  add("thm-1.4.3-zero-not-ideal", "Theorem 1.4.3", "{0} is not an ideal of any zn(6,t,u) in Z*(6)", [] {
    for (auto [t, u] : zn_class_params(6, ZnClass::Zstar)) {
      Magma m = zn(6, t, u, ZnClass::Zstar);
      if (is_ideal(m, m.subset({"0"}), Side::TwoSided)) return expect(false, m.kind() + ": {0} is an ideal");
    }
    return expect(true, "checked " + std::to_string(zn_class_size(6, ZnClass::Zstar)) + " groupoids");
  });
  add("thm-1.4.4-duality-z4", "Theorem 1.4.4", "left ideals of zn(4,2,3) are right ideals of zn(4,3,2)", [] {
    Magma a = zn(4, 2, 3), b = zn(4, 3, 2);
    Limits lim;
    lim.keep_universe = true;
    auto en = enumerate_closed_subsets(a, Pred::IsSubgroupoid, lim);
    int n = 0;
    for (const auto& s : en.subsets) {
      if (is_ideal(a, s, Side::Left) != is_ideal(b, s, Side::Right)) return expect(false, "mismatch at " + a.format(s));
      n += is_ideal(a, s, Side::Left);
    }
    return expect(true, std::to_string(n) + " left ideals matched");
  });
  add("thm-1.4.6-zstar-5", "Theorem 1.4.6", "|Z*(5)| = 12",
      [] { return expect(zn_class_size(5, ZnClass::Zstar) == 12, std::to_string(zn_class_size(5, ZnClass::Zstar))); });

  // ---------------------------------------------------------------- standard families
  add("thm-1.2.2-symsemi-3", "Theorem 1.2.2", "S(3) has order 27 and contains S3", [] {
    Magma m = symmetric_semigroup(3);
    Subset perms = m.subset({"[123]", "[132]", "[213]", "[231]", "[312]", "[321]"});
    return expect(m.order() == 27 && is_group(m, perms), "order " + std::to_string(m.order()));
  });
  add("ex-4.2.6-dihedral-orders", "Example 4.2.6", "D(2,4) has order 8, non-identity orders 2 or 4", [] {
    Magma m = dihedral(4);
    for (int x = 0; x < m.order(); ++x) {
      int o = *element_orders(m, x).real_order;
      if (x != *m.identity() && o != 2 && o != 4) return expect(false, m.label(x) + " has order " + std::to_string(o));
    }
    return expect(m.order() == 8, "order " + std::to_string(m.order()));
  });
  add("thm-1.2.4-zp-group", "Theorem 1.2.4", "zmod(7) holds the group {1..6}", [] {
    Magma m = zmod_mult(7);
    Subset g = m.subset({"1", "2", "3", "4", "5", "6"});
    auto en = enumerate_closed_subsets(m, Pred::IsGroup);
    bool found = std::find(en.subsets.begin(), en.subsets.end(), g) != en.subsets.end();
    return expect(found, found ? "found {1..6}" : "not enumerated");
  });
  add("thm-1.2.4-s-semigroup", "Theorem 1.2.4", "zmod(7) is an S-semigroup", [] {
    Magma m = zmod_mult(7);
    auto d = detect_s_kind(m, SKind::SSemigroup);
    return expect(d.holds && is_group(m, m.subset({"1", "2", "3", "4", "5", "6"})),
                  d.holds ? "witness " + m.format(*d.witness) : "no witness");
  });
  add("thm-1.2.4-s-simple", "Theorem 1.2.4", "zmod(7) is S-simple", [] {
    auto r = s_hyper_and_simple(zmod_mult(7));
    return expect(r.s_simple, r.s_simple ? "s_simple" : "hyper subsemigroup found");
  });

  // ---------------------------------------------------------------- neutrosophic carriers
  add("ex-2.1.3-order", "Example 2.1.3", "zn_full_neutro(5) has order 25",
      [] { return expect(zn_full_neutro(5).order() == 25, std::to_string(zn_full_neutro(5).order())); });
  add("ex-2.1.2-square-1+3I", "Example 2.1.2", "(1+3I)^2 = 1", [] {
    Magma m = zn_full_neutro(5);
    int x = m.index_of("1+3I");
    return expect(m.label(m(x, x)) == "1", "(1+3I)^2 = " + m.label(m(x, x)));
  });
  add("ex-3.1.11-order", "Example 3.1.11", "zn_line_neutro(6) has order 11",
      [] { return expect(zn_line_neutro(6).order() == 11, std::to_string(zn_line_neutro(6).order())); });
  add("ex-3.1.11-square-5", "Example 3.1.11", "5*5 = 1 in zn_line_neutro(6)", [] {
    Magma m = zn_line_neutro(6);
    int x = m.index_of("5");
    return expect(m.label(m(x, x)) == "1", "5*5 = " + m.label(m(x, x)));
  });
  add("ex-2.1.1-order", "Example 2.1.1", "zn_line_neutro(7) has prime order 13",
      [] { return expect(zn_line_neutro(7).order() == 13, std::to_string(zn_line_neutro(7).order())); });
  add("ex-2.1.3-closed-P", "Example 2.1.3", "{1, I, 4I} is closed in zn_full_neutro(5)", [] {
    Magma m = zn_full_neutro(5);
    Subset p = m.subset({"1", "I", "4I"});
    return expect(is_closed(m, p) && is_neutrosophic_subset(m, p), "closed and neutrosophic");
  });
  add("ex-2.1.2-groups", "Example 2.1.2", "groups {1,4} and {1,1+3I} are enumerated", [] {
    Magma m = zn_full_neutro(5);
    auto en = enumerate_closed_subsets(m, Pred::IsGroup);
    auto has = [&](const Subset& s) { return std::find(en.subsets.begin(), en.subsets.end(), s) != en.subsets.end(); };
    return expect(has(m.subset({"1", "4"})) && has(m.subset({"1", "1+3I"})),
                  std::to_string(en.subsets.size()) + " groups" + (en.complete ? "" : ", generator-bounded"));
  });
  add("ex-2.1.2-neutro-subgroup-L", "Example 2.1.2", "{1, I, 4, 4I} is a neutrosophic subgroup", [] {
    Magma m = zn_full_neutro(5);
    return expect(is_neutrosophic_subgroup(m, m.subset({"1", "I", "4", "4I"})), "is_neutrosophic_subgroup");
  });
  add("ex-2.1.1-neutro-subgroup-P", "Example 2.1.1", "{1, I, 6, 6I} is a neutrosophic subgroup of zn_line_neutro(7)",
      [] {
        Magma m = zn_line_neutro(7);
        return expect(is_neutrosophic_subgroup(m, m.subset({"1", "I", "6", "6I"})), "is_neutrosophic_subgroup");
      });
  add("ex-2.1.2-not-neutro-subgroup-P", "Example 2.1.2", "{1, I, 4I} is not a neutrosophic subgroup", [] {
    Magma m = zn_full_neutro(5);
    return expect(!is_neutrosophic_subgroup(m, m.subset({"1", "I", "4I"})), "only real element is 1");
  });
  add("ex-2.1.2-pseudo-P", "Example 2.1.2", "{1, I, 4I} is a pseudo neutrosophic subgroup", [] {
    Magma m = zn_full_neutro(5);
    return expect(is_pseudo_neutrosophic_subgroup(m, m.subset({"1", "I", "4I"})), "is_pseudo_neutrosophic_subgroup");
  });
  add("ex-2.1.2-pseudo-T", "Example 2.1.2", "{1, 1+3I} is a pseudo neutrosophic subgroup", [] {
    Magma m = zn_full_neutro(5);
    return expect(is_pseudo_neutrosophic_subgroup(m, m.subset({"1", "1+3I"})), "is_pseudo_neutrosophic_subgroup");
  });
  add("ex-2.1.2-not-pseudo-L", "Example 2.1.2", "{1, 4, I, 4I} is not pseudo", [] {
    Magma m = zn_full_neutro(5);
    return expect(!is_pseudo_neutrosophic_subgroup(m, m.subset({"1", "4", "I", "4I"})), "real subgroup {1,4}");
  });
  add("ex-3.1.8-ideal-J", "Example 3.1.8", "{0, 2, 4, 2I, 4I} is a neutrosophic ideal of zn_line_neutro(6)", [] {
    Magma m = zn_line_neutro(6);
    return expect(neutrosophic_ideal_check(m, m.subset({"0", "2", "4", "2I", "4I"}), IdealMode::Plain),
                  "neutrosophic_ideal_check plain");
  });
  add("ex-2.1.2-divisibility", "Example 2.1.2", "text: o(P) does not divide o(N(G)) for P = {1, I, 4I}",
      [] {
        int o = zn_full_neutro(5).order() - 1, p = 3;
        bool divides = o % p == 0;
        return expect(!divides, "engine: " + std::to_string(p) + (divides ? " | " : " does not divide ") +
                                    std::to_string(o) + "; text: does not divide");
      },
      OnMismatch::FlagDiscrepancy);

  // ---------------------------------------------------------------- cosets
  {
    const Labels P = {"1", "I", "4I"}, M = {"1", "I", "4", "4I"};
    for (auto [name, h, list] : {std::tuple{"P", P, &p_cosets()}, std::tuple{"M", M, &m_cosets()}})
      for (const auto& cc : *list) {
        Labels hl = h;
        add(std::string("ex-2.1.3-coset-") + name + "-" + cc.a, "Example 2.1.3",
            std::string(name) + "." + cc.a + " as printed",
            [hl, cc] {
              Magma m = zn_full_neutro(5);
              return same_set(m, cosets(m, m.subset(hl), m.index_of(cc.a), Side::Right), cc.expected);
            },
            cc.erratum ? OnMismatch::FlagDiscrepancy : OnMismatch::Fail);
      }
  }
  add("ex-2.1.3-scoset-P-3", "Example 2.1.3", "pseudo S-coset P.3 = {3, 3I, 2I}", [] {
    Magma m = zn_full_neutro(5);
    return same_set(m, s_cosets(m, m.subset({"1", "I", "4I"}), m.index_of("3"), CosetFlavor::Pseudo),
                    {"3", "3I", "2I"});
  });
  add("ex-2.1.3-scoset-M-I", "Example 2.1.3", "S-coset M.I = {I, 4I}", [] {
    Magma m = zn_full_neutro(5);
    return same_set(m, s_cosets(m, m.subset({"1", "I", "4", "4I"}), m.index_of("I"), CosetFlavor::Plain),
                    {"I", "4I"});
  });

  // ---------------------------------------------------------------- conjugacy, orders, maps
  add("ex-3.1.13-conjugating-set", "Example 3.1.13", "x{1,4} = {1,14}x exactly for {0,3,6,9,12,3I,6I,9I,12I}", [] {
    Magma m = zn_line_neutro(15);
    return same_set(m, conjugate_witness_set(m, m.subset({"1", "4"}), m.subset({"1", "14"})),
                    {"0", "3", "6", "9", "12", "3I", "6I", "9I", "12I"});
  });
  add("ex-3.1.14-conjugate-pair", "Example 3.1.14", "3.5 = 1.3 (mod 6): (1,3) relates x = 3, y = 5", [] {
    Magma m = zn_line_neutro(6);
    int x = m.index_of("3"), y = m.index_of("5"), a = m.index_of("1"), b = m.index_of("3");
    auto all = conjugate_pairs(m, x, y);
    bool found = std::find(all.begin(), all.end(), std::pair{a, b}) != all.end();
    return expect(found && m(a, x) == m(y, b), found ? "(1,3) among " + std::to_string(all.size()) + " pairs"
                                                     : "(1,3) missing");
  });
  add("ex-2.3.4-neutro-order-4I", "Example 2.3.4", "(4I)^2 = I: neutro order 2", [] {
    Magma m = zn_full_neutro(5);
    auto o = element_orders(m, m.index_of("4I"));
    return expect(o.neutro_order == 2, o.neutro_order ? std::to_string(*o.neutro_order) : "none");
  });
  add("ex-3.3.8-order-3", "Example 3.3.8", "3^2 = 1 (mod 8)", [] {
    Magma m = zmod_mult(8);
    auto o = element_orders(m, m.index_of("3"));
    return expect(o.real_order == 2, o.real_order ? std::to_string(*o.real_order) : "none");
  });
  add("ex-4.1.2-homomorphism", "Example 4.1.2", "e->e, 3->5, eI->eI, 3I->5I is a homomorphism", [] {
    Magma a = extend_tagged(ln(5, 3)), b = extend_tagged(ln(7, 2));
    PartialMap f{&a, &b, {}};
    for (auto [x, y] : {std::pair{"e", "e"}, {"3", "5"}, {"eI", "eI"}, {"3I", "5I"}})
      f.pairs.emplace_back(a.index_of(x), b.index_of(y));
    return expect(check_homomorphism(f), "check_homomorphism");
  });
  add("ex-4.1.2-homomorphism-lift", "Example 4.1.2", "lifted to two components with the identity on the second", [] {
    Magma c = cyclic(3);
    NStructure s = build_n_structure("S", {extend_tagged(ln(5, 3)), c}, {CKind::NeutroLoop, CKind::Group});
    NStructure t = build_n_structure("T", {extend_tagged(ln(7, 2)), c}, {CKind::NeutroLoop, CKind::Group});
    PartialMap f0{&s.components[0], &t.components[0], {}};
    for (auto [x, y] : {std::pair{"e", "e"}, {"3", "5"}, {"eI", "eI"}, {"3I", "5I"}})
      f0.pairs.emplace_back(s.components[0].index_of(x), t.components[0].index_of(y));
    PartialMap f1{&s.components[1], &t.components[1], {}};
    for (int x = 0; x < c.order(); ++x) f1.pairs.emplace_back(x, x);
    return expect(n_homomorphism_check(s, t, {f0, f1}), "n_homomorphism_check");
  });

  // ---------------------------------------------------------------- tagged loops
  add("def-1.3.64-tagged-order", "Def 1.3.64", "extend_tagged(ln(5,3)) has order 12",
      [] { return expect(extend_tagged(ln(5, 3)).order() == 12, std::to_string(extend_tagged(ln(5, 3)).order())); });
  add("thm-4.1.1-subtable", "Theorem 4.1.1", "{e, t, eI, tI} is closed with the printed table for each t", [] {
    Magma m = extend_tagged(ln(5, 3));
    int e = m.index_of("e"), eI = m.index_of("eI");
    for (int t = 1; t <= 5; ++t) {
      int x = m.index_of(std::to_string(t)), xI = m.index_of(std::to_string(t) + "I");
      Subset s = make_subset(m, {e, x, eI, xI});
      bool ok = is_closed(m, s) && m(x, x) == e && m(x, eI) == xI && m(x, xI) == eI && m(xI, xI) == eI &&
                m(eI, eI) == eI && m(e, xI) == xI;
      if (!ok) return expect(false, "t = " + std::to_string(t));
    }
    return expect(true, "t = 1..5");
  });
  add("thm-4.1.1-s-neutro-loop", "Theorem 4.1.1", "extend_tagged(ln(5,2)) is an S-neutrosophic loop", [] {
    Magma m = extend_tagged(ln(5, 2));
    auto d = detect_s_kind(m, SKind::SNeutrosophicLoop);
    return expect(d.holds && d.witness->size() == 4, d.holds ? "witness " + m.format(*d.witness) : "none");
  });
  add("ex-3.1.3-s-neutro-semigroup", "Example 3.1.3", "zn_line_neutro(6) is an S-neutrosophic semigroup via {1,5}",
      [] {
        Magma m = zn_line_neutro(6);
        auto d = detect_s_kind(m, SKind::SNeutrosophicSemigroup);
        return expect(d.holds && *d.witness == m.subset({"1", "5"}), d.holds ? "witness " + m.format(*d.witness)
                                                                             : "none");
      });
  add("ex-4.1.1-relabel", "Example 4.1.1", "text: {e, 2, I, 2I} is a neutrosophic group in <L5(3) u I>",
      [] {
        Magma m = extend_tagged(ln(5, 3));
        bool relabelled = is_neutrosophic_group(m, m.subset({"e", "2", "eI", "2I"}));
        try {
          Subset s = m.subset({"e", "2", "I", "2I"});
          return expect(is_neutrosophic_group(m, s), "text labels resolve");
        } catch (const DomainError&) {
          return expect(false, std::string("text label I is not an element (carrier uses eI); {e, 2, eI, 2I} is ") +
                                   (relabelled ? "" : "not ") + "a neutrosophic group");
        }
      },
      OnMismatch::FlagDiscrepancy);
  add("ex-4.1.8-moufang-strong", "Example 4.1.8", "every S-neutrosophic subloop of <L5(3) u I> is Moufang", [] {
    Verdict3 v = s_identity_class(extend_tagged(ln(5, 3)), Law::Moufang1, s_neutro_subloop(), Strength::Strong);
    return expect(v == Verdict3::Full, "verdict " + verdict_name(v));
  });
  add("sec-4.1-wip-tagged", "Section 4.1", "<L7(3) u I> satisfies WIP wherever inverses exist", [] {
    auto r = check_identity_law(extend_tagged(ln(7, 3)), Law::WIP, std::nullopt, BruckReading::Standard, false);
    return expect(r.holds, "wip, implication form");
  });

  // ---------------------------------------------------------------- single-carrier classification
  add("ex-3.1.10-lagrange-free", "Example 3.1.10", "order-17 carrier is Lagrange free",
      [] { return verdict_is(lagrange_classify(zn_line_neutro(9), Pred::IsSNeutrosophicSub), Verdict3::Free); });
  add("ex-4.1.5-lagrange-weak", "Example 4.1.5", "<L15(2) u I>: 4 | 32, 12 does not divide 32", [] {
    Magma m = extend_tagged(ln(15, 2));
    auto r = lagrange_classify(m, s_neutro_subloop());
    bool four = false, twelve = false;
    for (const auto& w : r.witnesses) {
      four = four || w.order == 4;
      twelve = twelve || w.order == 12;
    }
    auto base = verdict_is(r, Verdict3::Weak);
    return expect(base.ok && four && twelve, base.detail);
  });
  add("thm-3.1.2-prime-lagrange-free", "Theorem 3.1.2", "order-11 carrier is Lagrange free",
      [] { return verdict_is(lagrange_classify(zn_line_neutro(6), Pred::IsSNeutrosophicSub), Verdict3::Free); });
  add("ex-3.1.12-sylow-weak", "Example 3.1.12", "order-15 carrier: 5-witness {0,1,7,I,7I}, no 3-witness", [] {
    Magma m = zn_line_neutro(8);
    auto r = sylow_classify(m, Pred::IsSNeutrosophicSub);
    Subset p = m.subset({"0", "1", "7", "I", "7I"});
    bool has_p = std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const Witness& w) { return w.members == p; });
    bool three = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const Witness& w) { return w.order == 3; });
    auto base = verdict_is(r, Verdict3::Weak);
    return expect(base.ok && has_p && !three, base.detail);
  });
  add("thm-2.2.3-prime-cauchy-free", "Theorem 2.2.3", "order-11 carrier is Cauchy free",
      [] { return verdict_is(cauchy_classify(zn_line_neutro(6)), Verdict3::Free); });

  // ---------------------------------------------------------------- N-structures
  add("ex-4.2.4-order", "Example 4.2.4", "<L5(2) u I> with C6 has order 18", [] {
    auto ns = build_n_structure("B", {extend_tagged(ln(5, 2)), cyclic(6)}, {CKind::SNeutroLoop, CKind::Group});
    return expect(ns.order() == 18, std::to_string(ns.order()));
  });
  add("ex-2.3.1-build", "Example 2.3.1", "units(Z5) u Z6-line u A4 builds with order 31", [] {
    auto ns = build_n_structure("G", {units5(), zn_line_neutro(6), alternating(4)},
                                {CKind::SNeutroGroup, CKind::SNeutroSemigroup, CKind::Group});
    return expect(ns.order() == 31, std::to_string(ns.order()));
  });
  add("ex-4.2.6-cauchy-full", "Example 4.2.6", "<L7(3) u I> u D(2,4): Cauchy full at order 24", [] {
    auto ns = build_n_structure("B", {extend_tagged(ln(7, 3)), dihedral(4)}, {CKind::SNeutroLoop, CKind::Group});
    auto base = verdict_is(n_cauchy(ns), Verdict3::Full);
    return expect(base.ok && ns.order() == 24, base.detail);
  });
  add("ex-2.2.7-lagrange", "Example 2.2.7", "H = {1,I} u {0,2,2I} of order 5 divides 15; T of order 9 does not", [] {
    auto ns = build_n_structure("G", {units5(), zn_line_neutro(4)}, {CKind::SNeutroGroup, CKind::NeutroSemigroup});
    auto r = n_lagrange_full(ns, {Pred::IsSubgroupoid, Pred::IsSubgroupoid});
    bool h = has_witness(r, nsubset_from_labels(ns, {{"1", "I"}, {"0", "2", "2I"}}));
    bool t = has_witness(r, nsubset_from_labels(ns, {{"1", "I", "4", "4I"}, {"1", "I", "2", "2I", "0"}}));
    auto base = verdict_is(r.report, Verdict3::Weak);
    return expect(base.ok && h && t && ns.order() == 15, base.detail);
  });
  add("ex-2.3.3-lagrange-weak", "Example 2.3.3", "K of order 8 divides 32; P of order 12 does not", [] {
    auto ns = build_n_structure("G", {zn_line_neutro(6), symmetric_group(3), zmod_mult(15)},
                                {CKind::SNeutroSemigroup, CKind::Group, CKind::SSemigroup});
    auto r = n_lagrange_full(ns, {s_substructure(), s_substructure(), s_substructure()});
    bool p = has_witness(r, nsubset_from_labels(ns, {{"0", "2", "4", "2I", "4I"}, {"e", "(12)"},
                                                     {"0", "3", "6", "9", "12"}}));
    bool k = has_witness(r, nsubset_from_labels(ns, {{"1", "5", "I", "5I"}, {"e", "(23)"}, {"1", "14"}}));
    auto base = verdict_is(r.report, Verdict3::Weak);
    return expect(base.ok && p && k && ns.order() == 32, base.detail);
  });
  add("ex-2.3.4-cauchy", "Example 2.3.4", "4I (order 2) and 3 (order 4) are not Cauchy at order 25", [] {
    auto ns = build_n_structure("G", {units5(), zmod_mult(10), zn_line_neutro(4)},
                                {CKind::SNeutroGroup, CKind::SSemigroup, CKind::NeutroSemigroup});
    auto r = n_cauchy(ns);
    auto find = [&](int comp, const char* label, int order) {
      int idx = n_flat_index(ns, comp, ns.components[comp].index_of(label));
      return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const Witness& w) {
        return w.members == Subset{idx} && w.order == order && !w.qualifies;
      });
    };
    return expect(ns.order() == 25 && find(0, "4I", 2) && find(1, "3", 4), "verdict " + verdict_name(r.verdict));
  });
  add("ex-2.3.5-sylow", "Example 2.3.5", "3-Sylow {1,I} u {1,3,0} u {0,3,6,9} of order 9; no 2-Sylow", [] {
    auto ns = build_n_structure("G", {units5(), zn_full_neutro(4), zmod_mult(12)},
                                {CKind::SNeutroGroup, CKind::NeutroSemigroup, CKind::SSemigroup});
    auto r = n_sylow_full(ns, {s_neutro_sub(), s_neutro_sub(), s_neutro_sub()}, SylowVariant::Standard);
    bool p = has_witness(r, nsubset_from_labels(ns, {{"1", "I"}, {"1", "3", "0"}, {"0", "3", "6", "9"}}));
    bool two = std::any_of(r.report.witnesses.begin(), r.report.witnesses.end(),
                           [](const Witness& w) { return w.order == 4; });
    auto base = verdict_is(r.report, Verdict3::Weak);
    return expect(base.ok && p && !two && ns.order() == 36, base.detail);
  });
  add("ex-2.3.6-tuple-sylow", "Example 2.3.6", "(3,2,2) and (2,2,2) tuple Sylow substructures exist", [] {
    Magma u = units5();
    Magma z3 = zn_full_neutro(3);
    Magma sq = direct_product(z3, z3);
    Magma klein = submagma(sq, sq.subset({"(1,1)", "(2,2)", "(1,2)", "(2,1)"}));
    auto ns = build_n_structure("T", {alternating(4), submagma(u, u.subset({"1", "4", "I", "4I"})), klein},
                                {CKind::Group, CKind::NeutroGroup, CKind::Group});
    std::vector<Species> sp = {s_neutro_sub(), s_neutro_sub(), s_neutro_sub()};
    auto a = tuple_sylow(ns, {3, 2, 2}, sp);
    auto b = tuple_sylow(ns, {2, 2, 2}, sp);
    return expect(a.verdict == Verdict3::Full && b.verdict == Verdict3::Full,
                  "(3,2,2) " + verdict_name(a.verdict) + ", (2,2,2) " + verdict_name(b.verdict));
  });
  add("ex-3.3.5-lagrange", "Example 3.3.5", "P of order 24 divides 48", [] {
    Magma z3 = zn_line_neutro(3);
    auto ns = build_n_structure("S", {zmod_mult(12), zn_line_neutro(6), direct_product(z3, z3)},
                                {CKind::Semigroup, CKind::NeutroSemigroup, CKind::NeutroSemigroup});
    NSubset p = nsubset_from_labels(ns, {ns.components[0].labels(), {"0", "2", "4", "2I", "4I", "I"},
                                         {"(0,1)", "(1,0)", "(2,0)", "(0,0)", "(I,0)", "(2I,0)"}});
    Limits lim;
    lim.keep_universe = true;
    for (int i = 0; i < 3; ++i) {
      auto en = enumerate_closed_subsets(ns.components[i], Pred::IsSemigroup, lim);
      if (std::find(en.subsets.begin(), en.subsets.end(), p.per_component[i]) == en.subsets.end())
        return expect(false, "component " + std::to_string(i + 1) + " of P not enumerated");
    }
    return expect(ns.order() == 48 && p.order() == 24 && ns.order() % p.order() == 0,
                  "o(P) = " + std::to_string(p.order()) + ", o = " + std::to_string(ns.order()));
  });
  add("ex-3.3.6-lagrange-free", "Example 3.3.6", "order-31 N-semigroup is Lagrange free", [] {
    auto ns = build_n_structure("S", {zmod_mult(10), zn_line_neutro(6), direct_product(zmod_mult(2), zmod_mult(5))},
                                {CKind::SSemigroup, CKind::SNeutroSemigroup, CKind::SSemigroup});
    auto r = n_lagrange(ns, {s_substructure(), s_substructure(), s_substructure()});
    auto base = verdict_is(r, Verdict3::Free);
    return expect(base.ok && ns.order() == 31, base.detail);
  });
  add("ex-6.1.1-s-mixed", "Example 6.1.1", "six components form an S-mixed neutrosophic N-structure", [] {
    auto ns = build_n_structure("M", {extend_tagged(ln(5, 3)), units5(), zn_line_neutro(6), extend_tagged(zn(8, 3, 5)),
                                      alternating(5), symmetric_semigroup(3)},
                                {CKind::SNeutroLoop, CKind::SNeutroGroup, CKind::SNeutroSemigroup,
                                 CKind::SNeutroGroupoid, CKind::Group, CKind::SSemigroup});
    return expect(classify_n_kind(ns).s_mixed_neutrosophic, "s_mixed_neutrosophic");
  });
  add("ex-6.1.2-dual-s-mixed", "Example 6.1.2", "six components form a dual S-mixed neutrosophic N-structure", [] {
    auto ns = build_n_structure("D", {ln(5, 3), symmetric_semigroup(3), zn(12, 2, 4, ZnClass::Zstar), alternating(4),
                                      extend_tagged(ln(7, 2)), zn_line_neutro(6)},
                                {CKind::SLoop, CKind::SSemigroup, CKind::SGroupoid, CKind::Group, CKind::NeutroLoop,
                                 CKind::NeutroSemigroup});
    return expect(classify_n_kind(ns).dual_s_mixed, "dual_s_mixed");
  });
  add("ex-6.1.3-deficit-W", "Example 6.1.3", "W = {e,eI,2,2I} u {I,3,3I,1} u {0,2,4,6} is a deficit substructure", [] {
    auto ns = build_n_structure("M", {extend_tagged(ln(5, 3)), zn_line_neutro(6), units5(), extend_tagged(zn(4, 2, 1)),
                                      cyclic(4), zmod_mult(8)},
                                {CKind::SNeutroLoop, CKind::SNeutroSemigroup, CKind::SNeutroGroup,
                                 CKind::NeutroGroupoid, CKind::Group, CKind::Semigroup});
    std::vector<Species> sp(6, Species(Pred::IsSemigroup));
    auto subs = deficit_substructures(ns, 3, sp);
    NSubset w;
    w.per_component.assign(6, Subset{});
    w.per_component[0] = ns.components[0].subset({"e", "eI", "2", "2I"});
    w.per_component[1] = ns.components[1].subset({"I", "3", "3I", "1"});
    w.per_component[5] = ns.components[5].subset({"0", "2", "4", "6"});
    bool found = std::find(subs.begin(), subs.end(), w) != subs.end();
    return expect(found && w.order() == 12, std::to_string(subs.size()) + " deficit substructures");
  });

  std::sort(c.begin(), c.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return c;
}

}  // namespace

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Discrepancy: return "discrepancy";
    case Outcome::Error: return "error";
  }
  return "?";
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build();
  return c;
}

std::vector<CorpusResult> run_corpus(const std::optional<std::string>& glob) {
  std::vector<CorpusResult> out;
  for (const auto& e : corpus()) {
    if (glob && !glob->empty() && fnmatch(glob->c_str(), e.id.c_str(), 0) != 0) continue;
    CorpusResult r{e.id, Outcome::Pass, ""};
    try {
      auto res = e.run();
      r.detail = res.detail;
      if (!res.ok) r.outcome = e.status_on_mismatch == OnMismatch::FlagDiscrepancy ? Outcome::Discrepancy : Outcome::Fail;
    } catch (const std::exception& ex) {
      r.outcome = Outcome::Error;
      r.detail = ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_corpus(const std::vector<CorpusResult>& results) {
  std::ostringstream out;
  size_t width = 2;
  for (const auto& r : results) width = std::max(width, r.id.size());
  int counts[4] = {0, 0, 0, 0};
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.outcome)];
    std::string id = r.id;
    id.resize(width, ' ');
    std::string st = outcome_name(r.outcome);
    st.resize(11, ' ');
    out << id << "  " << st << "  " << r.detail << '\n';
  }
  out << results.size() << " entries: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
      << " discrepancy, " << counts[3] << " error\n";
  return out.str();
}

bool corpus_passed(const std::vector<CorpusResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CorpusResult& r) {
    return r.outcome == Outcome::Fail || r.outcome == Outcome::Error;
  });
}

}  // namespace nm
