// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "neutromagma/classify.hpp"
#include "neutromagma/constructors.hpp"
#include "neutromagma/corpus.hpp"
#include "neutromagma/neutro.hpp"
#include "neutromagma/nstruct.hpp"
#include "oracle.hpp"

using namespace nm;

namespace {

struct Result {
  bool ok;
  std::string detail;
};

long long loop_count_formula(int n) {
  long long r = 1;
  for (int p = 2; n > 1; ++p) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    r *= p - 2;
    for (int i = 1; i < a; ++i) r *= p;
  }
  return r;
}

bool holds(const Magma& m, Law l) { return check_identity_law(m, l).holds; }

Result corpus_ok(const std::vector<std::string>& globs) {
  int total = 0, good = 0;
  std::string bad;
  for (const auto& g : globs)
    for (const auto& r : run_corpus(g)) {
      ++total;
      if (r.outcome == nm::Outcome::Pass) ++good;
      else bad += " " + r.id + " [" + r.detail + "]";
    }
  std::string d = std::to_string(good) + "/" + std::to_string(total) + " entries";
  return {total > 0 && good == total, bad.empty() ? d : d + ";" + bad};
}

Result c1() { return corpus_ok({"ex-1.*-table-*"}); }

Result c2() {
  for (int n = 5; n <= 51; n += 2) {
    auto cls = ln_class_params(n);
    if (static_cast<long long>(cls.size()) != loop_count_formula(n))
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(cls.size()) + " members"};
    std::vector<int> comm;
    for (int m : cls)
      if (holds(ln(n, m), Law::Commutative)) comm.push_back(m);
    if (comm != std::vector<int>{(n + 1) / 2}) return {false, "n=" + std::to_string(n) + ": commutative set differs"};
  }
  return {true, "odd n in [5,51]"};
}

Result c3() {
  int members = 0;
  for (int n : {5, 7, 9, 15})
    for (int m : ln_class_params(n)) {
      Magma l = ln(n, m);
      ++members;
      std::string at = "L" + std::to_string(n) + "(" + std::to_string(m) + ")";
      if (holds(l, Law::RightAlternative) != (m == 2)) return {false, at + " right alternative mismatch"};
      if (holds(l, Law::LeftAlternative) != (m == n - 1)) return {false, at + " left alternative mismatch"};
      for (Law law : {Law::Moufang1, Law::Moufang2, Law::Moufang3, Law::Bol, Law::BruckIdentity})
        if (holds(l, law)) return {false, at + " satisfies " + law_name(law)};
    }
  return {true, std::to_string(members) + " loops"};
}

Result c4() {
  int checked = 0;
  for (int n = 5; n <= 25; n += 2)
    for (int m : ln_class_params(n)) {
      bool wip = holds(ln(n, m), Law::WIP);
      if (wip != ((m * m - m + 1) % n == 0))
        return {false, "L" + std::to_string(n) + "(" + std::to_string(m) + ")"};
      ++checked;
    }
  return {true, std::to_string(checked) + " loops"};
}

Result c5() {
  for (int n = 3; n <= 12; ++n) {
    auto params = zn_class_params(n, ZnClass::Zstar);
    if (static_cast<long long>(params.size()) != (n - 1LL) * (n - 2))
      return {false, "|Z*(" + std::to_string(n) + ")| = " + std::to_string(params.size())};
    for (auto [t, u] : params) {
      Magma g = zn(n, t, u, ZnClass::Zstar);
      std::string at = "Z" + std::to_string(n) + "(" + std::to_string(t) + "," + std::to_string(u) + ")";
      if (holds(g, Law::Associative) != ((t * t - t) % n == 0 && (u * u - u) % n == 0))
        return {false, at + " associativity"};
      if (holds(g, Law::Idempotent) != ((t + u) % n == 1)) return {false, at + " idempotency"};
      if (n > 10) continue;
      Magma d = zn(n, u, t, ZnClass::Zstar);
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Subset s = oracle::members(mask, n);
        if (is_ideal(g, s, Side::Left) != is_ideal(d, s, Side::Right)) return {false, at + " ideal duality"};
      }
    }
  }
  for (auto [n, t, u] : {std::tuple{5, 2, 3}, {7, 2, 5}, {13, 2, 11}}) {
    Magma g = zn(n, t, u, ZnClass::Zstar);
    for (const auto& s : enumerate_closed_subsets(g, Pred::IsSubgroupoid).subsets)
      if (is_normal(g, s, NormalMode::Subgroupoid, NormalRange::Carrier))
        return {false, g.kind() + " has normal " + g.format(s)};
  }
  return {true, "n <= 12 (duality n <= 10), simplicity for Z5(2,3), Z7(2,5), Z13(2,11)"};
}

Result c6() {
  int members = 0;
  for (int n = 5; n <= 15; n += 2)
    for (int m : ln_class_params(n)) {
      Magma t = extend_tagged(ln(n, m));
      std::string at = "<L" + std::to_string(n) + "(" + std::to_string(m) + ") u I>";
      if (t.order() != 2 * (n + 1)) return {false, at + " order"};
      int e = t.index_of("e"), eI = t.index_of("eI");
      for (int i = 1; i <= n; ++i) {
        int x = t.index_of(std::to_string(i)), xI = t.index_of(std::to_string(i) + "I");
        Subset s = make_subset(t, {e, x, eI, xI});
        bool table = is_closed(t, s) && t(e, x) == x && t(x, x) == e && t(x, eI) == xI && t(eI, x) == xI &&
                     t(x, xI) == eI && t(xI, x) == eI && t(eI, eI) == eI && t(xI, xI) == eI && t(e, eI) == eI &&
                     t(eI, xI) == xI && t(xI, eI) == xI && t(e, xI) == xI;
        if (!table) return {false, at + " table at t=" + std::to_string(i)};
      }
      if (!detect_s_kind(t, SKind::SNeutrosophicLoop).holds) return {false, at + " not an S-neutrosophic loop"};
      ++members;
    }
  return {true, std::to_string(members) + " tagged loops"};
}

Result c7() {
  auto res = run_corpus("ex-2.1.3-coset-*");
  int good = 0;
  std::string bad;
  for (const auto& r : res) {
    if (r.outcome == nm::Outcome::Pass) ++good;
    else bad += " " + r.id.substr(std::string("ex-2.1.3-coset-").size());
  }
  return {good == static_cast<int>(res.size()) && !res.empty(),
          std::to_string(good) + "/" + std::to_string(res.size()) + " printed equalities reproduce" +
              (bad.empty() ? "" : "; mismatched:" + bad)};
}

Result c8() { return corpus_ok({"ex-3.1.13-*", "ex-3.1.14-*"}); }

Result c9() {
  return corpus_ok({"ex-4.1.5-lagrange-weak", "ex-3.1.12-sylow-weak", "ex-2.3.4-*", "ex-2.3.5-sylow",
                    "ex-4.2.6-cauchy-full", "ex-2.2.7-lagrange"});
}

bool free_or_vacuous(Verdict3 v) { return v == Verdict3::Free || v == Verdict3::Vacuous; }

Result c10() {
  std::ostringstream d;
  for (int n : {6, 7}) {
    Magma m = zn_line_neutro(n);
    auto l = lagrange_classify(m, Pred::IsSNeutrosophicSub);
    auto s = sylow_classify(m, Pred::IsSNeutrosophicSub);
    auto c = cauchy_classify(m);
    d << "order " << m.order() << ": " << verdict_name(l.verdict) << "/" << verdict_name(s.verdict) << "/"
      << verdict_name(c.verdict) << "; ";
    if (!free_or_vacuous(l.verdict) || !free_or_vacuous(s.verdict) || !free_or_vacuous(c.verdict))
      return {false, d.str()};
  }
  auto sp = Species::custom("s-substructure", [](const Magma& m, const Subset& s) {
    return s.size() >= 2 && is_closed(m, s) && contains_group(m, s, false, false);
  });
  auto ns = build_n_structure("S", {zmod_mult(10), zn_line_neutro(6), direct_product(zmod_mult(2), zmod_mult(5))},
                              {CKind::SSemigroup, CKind::SNeutroSemigroup, CKind::SSemigroup});
  std::vector<Species> sps(3, sp);
  auto l = n_lagrange(ns, sps), s = n_sylow(ns, sps), c = n_cauchy(ns);
  d << "order " << ns.order() << ": " << verdict_name(l.verdict) << "/" << verdict_name(s.verdict) << "/"
    << verdict_name(c.verdict);
  return {free_or_vacuous(l.verdict) && free_or_vacuous(s.verdict) && free_or_vacuous(c.verdict), d.str()};
}

Result c11() {
  std::mt19937 rng(20240611);
  const std::vector<Side> sides = {Side::Left, Side::Right, Side::TwoSided};
  long long checks = 0;
  for (int i = 0; i < 50; ++i) {
    Magma m = oracle::random_magma(rng, i);
    auto t = oracle::of(m);
    std::string at = "magma #" + std::to_string(i) + " (order " + std::to_string(m.order()) + ")";
    Limits lim;
    lim.max_exhaustive_order = 16;
    if (enumerate_closed_subsets(m, Pred::IsSubgroupoid, lim).subsets != oracle::closed_subsets(t))
      return {false, at + ": closed subsets"};
    if (enumerate_closed_subsets(m, Pred::IsGroup, lim).subsets != oracle::closed_subsets(t, true))
      return {false, at + ": groups"};
    for (unsigned mask = 1; mask < (1u << m.order()); ++mask) {
      Subset s = oracle::members(mask, m.order());
      for (Side sd : sides) {
        ++checks;
        if (is_ideal(m, s, sd) != oracle::ideal(t, s, sd)) return {false, at + ": is_ideal " + m.format(s)};
      }
      if (!oracle::closed(t, s)) continue;
      checks += 2;
      if (is_normal(m, s, NormalMode::Subgroupoid) != oracle::normal(t, s, true) ||
          is_normal(m, s, NormalMode::Subgroupoid, NormalRange::Carrier) != oracle::normal(t, s, false))
        return {false, at + ": is_normal " + m.format(s)};
    }
    for (Law law : all_laws()) {
      ++checks;
      std::optional<bool> mine;
      try {
        mine = check_identity_law(m, law).holds;
      } catch (const PreconditionError&) {
      }
      if (mine != oracle::law(t, law)) return {false, at + ": " + law_name(law)};
    }
  }
  return {true, std::to_string(checks) + " comparisons over 50 seeded magmas"};
}

Result c12() {
  auto res = run_corpus("ex-2.1.2-divisibility");
  auto res2 = run_corpus("ex-4.1.1-relabel");
  res.insert(res.end(), res2.begin(), res2.end());
  bool ok = res.size() == 2 && corpus_passed(res);
  for (const auto& r : res) ok = ok && r.outcome == nm::Outcome::Discrepancy;
  std::string d;
  for (const auto& r : res) d += r.id + "=" + outcome_name(r.outcome) + " ";
  return {ok, d + "(suite not failed)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"table fidelity", c1},       {"loop-class counting", c2},   {"alternative/Moufang sweep", c3},
      {"WIP law", c4},              {"groupoid properties", c5},     {"neutrosophic doubling", c6},
      {"coset corpus", c7},         {"conjugacy corpus", c8},      {"classification-engine corpus", c9},
      {"prime-order property suite", c10}, {"oracle equivalence", c11}, {"discrepancy handling", c12}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Result o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.ok;
    std::printf("criterion %2zu %-30s %s  (%.2fs) %s\n", i + 1, criteria[i].first.c_str(), o.ok ? "PASS" : "FAIL", secs,
                o.detail.c_str());
  }
  std::printf("%zu criteria: %zu pass, %d fail\n", criteria.size(), criteria.size() - failed, failed);
  return failed ? 1 : 0;
}
