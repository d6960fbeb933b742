#include "neutromagma/atlas.hpp"

#include <algorithm>
#include <sstream>

namespace nm {

namespace {

bool law_or_false(const Magma& m, Law law) {
  try {
    return check_identity_law(m, law).holds;
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace

bool Atlas::ok() const {
  return std::all_of(footer.begin(), footer.end(), [](const AtlasFooter& f) { return f.match(); });
}

const std::vector<std::string>& atlas_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c = {"family",      "params", "order", "commutative", "left_alt",   "right_alt",
                                  "wip",         "moufang", "bol",  "bruck",       "p_groupoid", "idempotent",
                                  "associative"};
    for (SKind k : all_skinds()) c.push_back(skind_name(k));
    for (const char* v : {"lagrange", "sylow", "cauchy", "complete"}) c.emplace_back(v);
    return c;
  }();
  return cols;
}

bool strictly_noncommutative(const Magma& m) {
  auto e = m.identity();
  for (int x = 0; x < m.order(); ++x)
    for (int y = x + 1; y < m.order(); ++y)
      if (x != e && y != e && m(x, y) == m(y, x)) return false;
  return true;
}

AtlasRecord atlas_record(const Magma& m, std::string family, std::string params, const Limits& limits) {
  AtlasRecord r;
  r.family = std::move(family);
  r.params = std::move(params);
  r.order = m.order();
  bool moufang = law_or_false(m, Law::Moufang1) || law_or_false(m, Law::Moufang2) || law_or_false(m, Law::Moufang3);
  bool bruck = law_or_false(m, Law::BruckIdentity) && law_or_false(m, Law::BruckInverse);
  r.flags = {{"commutative", law_or_false(m, Law::Commutative)},
             {"left_alt", law_or_false(m, Law::LeftAlternative)},
             {"right_alt", law_or_false(m, Law::RightAlternative)},
             {"wip", law_or_false(m, Law::WIP)},
             {"moufang", moufang},
             {"bol", law_or_false(m, Law::Bol)},
             {"bruck", bruck},
             {"p_groupoid", law_or_false(m, Law::PGroupoid)},
             {"idempotent", law_or_false(m, Law::Idempotent)},
             {"associative", law_or_false(m, Law::Associative)}};
  for (SKind k : all_skinds()) {
    auto d = detect_s_kind(m, k, limits);
    r.s_flags.emplace_back(skind_name(k), d.holds);
    r.complete = r.complete && d.complete;
  }
  auto lg = lagrange_classify(m, Pred::IsSubgroupoid, limits);
  r.lagrange = lg.verdict;
  r.complete = r.complete && lg.complete;
  if (m.order() >= 2) {
    auto sy = sylow_classify(m, Pred::IsSubgroupoid, SylowVariant::Standard, limits);
    r.sylow = sy.verdict;
    r.complete = r.complete && sy.complete;
  }
  r.cauchy = cauchy_classify(m).verdict;
  return r;
}

Atlas atlas_ln(int lo, int hi, const Limits& limits) {
  Atlas a;
  for (int n = std::max(lo, 5); n <= hi; ++n) {
    if (n % 2 == 0) continue;
    AtlasFooter f;
    f.n = n;
    f.expected = ln_count(n);
    f.strict_noncomm = 0;
    f.strict_noncomm_expected = ln_strict_noncomm_count(n);
    for (int m : ln_class_params(n)) {
      Magma l = ln(n, m);
      a.records.push_back(atlas_record(l, "ln", "n=" + std::to_string(n) + ";m=" + std::to_string(m), limits));
      ++f.records;
      f.strict_noncomm += strictly_noncommutative(l);
    }
    a.footer.push_back(f);
  }
  return a;
}

Atlas atlas_zn(ZnClass c, int lo, int hi, const Limits& limits) {
  Atlas a;
  for (int n = std::max(lo, 2); n <= hi; ++n) {
    AtlasFooter f;
    f.n = n;
    f.expected = zn_class_size(n, c);
    for (auto [t, u] : zn_class_params(n, c)) {
      a.records.push_back(atlas_record(zn(n, t, u, c), "zn-" + zn_class_name(c),
                                       "n=" + std::to_string(n) + ";t=" + std::to_string(t) + ";u=" + std::to_string(u),
                                       limits));
      ++f.records;
    }
    a.footer.push_back(f);
  }
  return a;
}

std::string atlas_csv(const Atlas& a) {
  std::ostringstream out;
  const auto& cols = atlas_columns();
  for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : a.records) {
    out << r.family << ',' << r.params << ',' << r.order;
    for (const auto& [name, v] : r.flags) out << ',' << (v ? 1 : 0);
    for (const auto& [name, v] : r.s_flags) out << ',' << (v ? 1 : 0);
    out << ',' << verdict_name(r.lagrange) << ',' << verdict_name(r.sylow) << ',' << verdict_name(r.cauchy) << ','
        << (r.complete ? 1 : 0) << '\n';
  }
  for (const auto& f : a.footer) {
    out << "# n=" << f.n << " records=" << f.records << " expected=" << f.expected;
    if (f.strict_noncomm >= 0)
      out << " strict_noncomm=" << f.strict_noncomm << " strict_noncomm_expected=" << f.strict_noncomm_expected;
    out << " match=" << (f.match() ? 1 : 0) << '\n';
  }
  long long expected = 0;
  for (const auto& f : a.footer) expected += f.expected;
  out << "# total records=" << a.records.size() << " expected=" << expected << " match=" << (a.ok() ? 1 : 0) << '\n';
  return out.str();
}

json atlas_json(const Atlas& a) {
  json recs = json::array();
  for (const auto& r : a.records) {
    json j = {{"family", r.family}, {"params", r.params}, {"order", r.order}};
    for (const auto& [name, v] : r.flags) j[name] = v;
    json s;
    for (const auto& [name, v] : r.s_flags) s[name] = v;
    j["s_flags"] = s;
    j["lagrange"] = verdict_name(r.lagrange);
    j["sylow"] = verdict_name(r.sylow);
    j["cauchy"] = verdict_name(r.cauchy);
    j["complete"] = r.complete;
    recs.push_back(std::move(j));
  }
  json foot = json::array();
  for (const auto& f : a.footer) {
    json j = {{"n", f.n}, {"records", f.records}, {"expected", f.expected}, {"match", f.match()}};
    if (f.strict_noncomm >= 0) {
      j["strict_noncomm"] = f.strict_noncomm;
      j["strict_noncomm_expected"] = f.strict_noncomm_expected;
    }
    foot.push_back(std::move(j));
  }
  return {{"records", std::move(recs)}, {"footer", std::move(foot)}};
}

}  // namespace nm
