#include "neutromagma/magma.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_set>

#include "neutromagma/neutro.hpp"

namespace nm {

namespace {

std::string idx_str(int x) { return std::to_string(x); }

void check_index(const Magma& m, int x) {
  if (x < 0 || x >= m.order())
    throw DomainError("index " + idx_str(x) + " out of range for order " + idx_str(m.order()));
}

}  // namespace

Magma::Magma(std::string kind, std::vector<std::string> labels, std::vector<int> table,
             std::optional<int> identity, std::vector<bool> neutro_mask, std::optional<int> neutro_identity)
    : k_(static_cast<int>(labels.size())),
      kind_(std::move(kind)),
      labels_(std::move(labels)),
      t_(std::move(table)),
      identity_(identity),
      mask_(std::move(neutro_mask)),
      neutro_identity_(neutro_identity) {
  if (k_ <= 0) throw ParamError("magma order must be positive");
  if (t_.size() != static_cast<size_t>(k_) * k_)
    throw ParamError("table has " + idx_str(static_cast<int>(t_.size())) + " cells, expected " + idx_str(k_ * k_));
  for (int v : t_)
    if (v < 0 || v >= k_) throw ParamError("table entry " + idx_str(v) + " out of range");
  if (static_cast<int>(labels_.size()) != k_) throw ParamError("label count does not match the table");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw ParamError("duplicate label '" + l + "'");
  if (mask_.empty()) mask_.assign(k_, false);
  if (static_cast<int>(mask_.size()) != k_) throw ParamError("neutro_mask length mismatch");
  if (identity_) {
    int e = *identity_;
    if (e < 0 || e >= k_) throw ParamError("identity index out of range");
    for (int x = 0; x < k_; ++x)
      if ((*this)(e, x) != x || (*this)(x, e) != x)
        throw ParamError("declared identity '" + labels_[e] + "' fails at '" + labels_[x] + "'");
  }
  if (neutro_identity_) {
    int n = *neutro_identity_;
    if (n < 0 || n >= k_) throw ParamError("neutro_identity index out of range");
    if (!mask_[n]) throw ParamError("neutro_identity must carry the neutro mask");
  }
}

int Magma::op(int x, int y) const {
  check_index(*this, x);
  check_index(*this, y);
  return (*this)(x, y);
}

int Magma::index_of(std::string_view label) const {
  for (int i = 0; i < k_; ++i)
    if (labels_[i] == label) return i;
  throw DomainError("no element labelled '" + std::string(label) + "' in " + kind_);
}

Subset Magma::subset(std::initializer_list<std::string_view> labels) const {
  std::vector<int> v;
  for (auto l : labels) v.push_back(index_of(l));
  return make_subset(*this, std::move(v));
}

Subset Magma::subset(const std::vector<std::string>& labels) const {
  std::vector<int> v;
  for (const auto& l : labels) v.push_back(index_of(l));
  return make_subset(*this, std::move(v));
}

std::vector<std::string> Magma::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  for (int x : s) out.push_back(labels_.at(x));
  return out;
}

std::string Magma::format(const Subset& s) const {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += labels_.at(s[i]);
  }
  return out + "}";
}

std::optional<int> detect_identity(int k, const std::vector<int>& table) {
  for (int e = 0; e < k; ++e) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) ok = table[e * k + x] == x && table[x * k + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

Subset make_subset(const Magma& m, std::vector<int> members) {
  for (int x : members) check_index(m, x);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

Subset universe(const Magma& m) {
  Subset s(m.order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool contains(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

Magma submagma(const Magma& m, const Subset& s, std::string kind) {
  if (s.empty()) throw ParamError("submagma of an empty subset");
  if (!is_closed(m, s)) throw PreconditionError("submagma: subset " + m.format(s) + " is not closed");
  int k = static_cast<int>(s.size());
  std::vector<int> pos(m.order(), -1);
  for (int i = 0; i < k; ++i) pos[s[i]] = i;
  std::vector<int> table(static_cast<size_t>(k) * k);
  std::vector<std::string> labels;
  std::vector<bool> mask;
  for (int i = 0; i < k; ++i) {
    labels.push_back(m.label(s[i]));
    mask.push_back(m.is_neutro(s[i]));
    for (int j = 0; j < k; ++j) table[i * k + j] = pos[m(s[i], s[j])];
  }
  std::optional<int> nid;
  if (m.neutro_identity() && pos[*m.neutro_identity()] >= 0) nid = pos[*m.neutro_identity()];
  auto id = detect_identity(k, table);
  if (kind.empty()) kind = "sub(" + m.kind() + ")";
  return Magma(std::move(kind), std::move(labels), std::move(table), id, std::move(mask), nid);
}

// ---------------------------------------------------------------- identities

const std::vector<Law>& all_laws() {
  static const std::vector<Law> laws = {
      Law::Associative, Law::Commutative, Law::Idempotent,    Law::Moufang1,        Law::Moufang2,
      Law::Moufang3,    Law::Bol,         Law::BruckIdentity, Law::BruckInverse,    Law::WIP,
      Law::LeftAlternative, Law::RightAlternative, Law::PGroupoid};
  return laws;
}

std::string law_name(Law law) {
  switch (law) {
    case Law::Associative: return "associative";
    case Law::Commutative: return "commutative";
    case Law::Idempotent: return "idempotent";
    case Law::Moufang1: return "moufang1";
    case Law::Moufang2: return "moufang2";
    case Law::Moufang3: return "moufang3";
    case Law::Bol: return "bol";
    case Law::BruckIdentity: return "bruck_identity";
    case Law::BruckInverse: return "bruck_inverse";
    case Law::WIP: return "wip";
    case Law::LeftAlternative: return "left_alternative";
    case Law::RightAlternative: return "right_alternative";
    case Law::PGroupoid: return "p_groupoid";
  }
  return "?";
}

Law parse_law(std::string_view name) {
  for (Law l : all_laws())
    if (law_name(l) == name) return l;
  throw ParamError("unknown identity law '" + std::string(name) + "'");
}

std::optional<int> inverse(const Magma& m, int x) {
  if (!m.identity()) return std::nullopt;
  int e = *m.identity();
  for (int y = 0; y < m.order(); ++y)
    if (m(x, y) == e && m(y, x) == e) return y;
  return std::nullopt;
}

LawResult check_identity_law(const Magma& m, Law law, const std::optional<Subset>& domain, BruckReading reading,
                             bool require_inverses) {
  Subset d = domain ? *domain : universe(m);
  for (int x : d) check_index(m, x);
  LawResult r;
  auto fail = [&](int x, int y, int z) {
    r.holds = false;
    r.witness = std::array<int, 3>{x, y, z};
    return r;
  };
  auto p = [&](int a, int b) { return m(a, b); };

  switch (law) {
    case Law::Idempotent:
      r.arity = 1;
      for (int x : d)
        if (p(x, x) != x) return fail(x, -1, -1);
      return r;
    case Law::Commutative:
      r.arity = 2;
      for (int x : d)
        for (int y : d)
          if (p(x, y) != p(y, x)) return fail(x, y, -1);
      return r;
    case Law::LeftAlternative:
      r.arity = 2;
      for (int x : d)
        for (int y : d)
          if (p(p(x, x), y) != p(x, p(x, y))) return fail(x, y, -1);
      return r;
    case Law::RightAlternative:
      r.arity = 2;
      for (int x : d)
        for (int y : d)
          if (p(p(x, y), y) != p(x, p(y, y))) return fail(x, y, -1);
      return r;
    case Law::PGroupoid:
      r.arity = 2;
      for (int x : d)
        for (int y : d)
          if (p(p(x, y), x) != p(x, p(y, x))) return fail(x, y, -1);
      return r;
    case Law::BruckInverse: {
      r.arity = 2;
      if (!m.identity()) throw PreconditionError("bruck_inverse needs an identity");
      std::vector<int> inv(m.order(), -1);
      auto need = [&](int x) {
        if (inv[x] < 0) {
          auto i = inverse(m, x);
          if (!i) throw PreconditionError("element '" + m.label(x) + "' has no two-sided inverse");
          inv[x] = *i;
        }
        return inv[x];
      };
      for (int x : d) need(x);
      for (int x : d)
        for (int y : d)
          if (need(p(x, y)) != p(need(x), need(y))) return fail(x, y, -1);
      return r;
    }
    case Law::WIP: {
      if (!m.identity()) throw PreconditionError("wip needs an identity");
      for (int x : d)
        if (require_inverses && !inverse(m, x))
          throw PreconditionError("element '" + m.label(x) + "' has no two-sided inverse");
      int e = *m.identity();
      for (int x : d)
        for (int y : d)
          for (int z : d)
            if (p(p(x, y), z) == e && p(x, p(y, z)) != e) return fail(x, y, z);
      return r;
    }
    default:
      break;
  }

  for (int x : d)
    for (int y : d)
      for (int z : d) {
        bool ok = true;
        switch (law) {
          case Law::Associative: ok = p(p(x, y), z) == p(x, p(y, z)); break;
          case Law::Moufang1: ok = p(p(x, y), p(z, x)) == p(p(x, p(y, z)), x); break;
          case Law::Moufang2: ok = p(p(p(x, y), z), y) == p(x, p(y, p(z, y))); break;
          case Law::Moufang3: ok = p(x, p(y, p(x, z))) == p(p(p(x, y), x), z); break;
          case Law::Bol: ok = p(p(p(x, y), z), y) == p(x, p(p(y, z), y)); break;
          case Law::BruckIdentity:
            ok = reading == BruckReading::Standard ? p(p(x, p(y, x)), z) == p(x, p(y, p(x, z)))
                                                   : p(x, p(p(y, x), z)) == p(x, p(y, p(x, z)));
            break;
          default: break;
        }
        if (!ok) return fail(x, y, z);
      }
  return r;
}

bool latin_square_check(const Magma& m) {
  int k = m.order();
  std::vector<char> seen(k);
  for (int x = 0; x < k; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < k; ++y) {
      if (seen[m(x, y)]) return false;
      seen[m(x, y)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < k; ++y) {
      if (seen[m(y, x)]) return false;
      seen[m(y, x)] = 1;
    }
  }
  return true;
}

BasicReport classify_basic(const Magma& m) {
  BasicReport r;
  r.is_semigroup = check_identity_law(m, Law::Associative).holds;
  r.is_commutative = check_identity_law(m, Law::Commutative).holds;
  r.identity = m.identity() ? m.identity() : detect_identity(m.order(), m.table());
  r.is_loop = latin_square_check(m) && r.identity.has_value();
  r.is_group = r.is_loop && r.is_semigroup;
  if (r.identity) {
    r.inverses_exist = true;
    int e = *r.identity;
    for (int x = 0; x < m.order() && r.inverses_exist; ++x) {
      bool found = false;
      for (int y = 0; y < m.order() && !found; ++y) found = m(x, y) == e && m(y, x) == e;
      r.inverses_exist = found;
    }
  }
  return r;
}

// --------------------------------------------------------------- substructure

bool is_closed(const Magma& m, const Subset& s) {
  std::vector<char> in(m.order());
  for (int x : s) in[x] = 1;
  for (int x : s)
    for (int y : s)
      if (!in[m(x, y)]) return false;
  return true;
}

bool is_associative_on(const Magma& m, const Subset& s) {
  for (int x : s)
    for (int y : s)
      for (int z : s)
        if (m(m(x, y), z) != m(x, m(y, z))) return false;
  return true;
}

std::optional<int> identity_within(const Magma& m, const Subset& s) {
  for (int e : s) {
    bool ok = true;
    for (int x : s) {
      if (m(e, x) != x || m(x, e) != x) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_group(const Magma& m, const Subset& s) {
  if (s.empty() || !is_closed(m, s)) return false;
  auto e = identity_within(m, s);
  if (!e) return false;
  for (int x : s) {
    bool found = false;
    for (int y : s)
      if (m(x, y) == *e && m(y, x) == *e) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return is_associative_on(m, s);
}

bool is_semigroup(const Magma& m, const Subset& s) { return !s.empty() && is_closed(m, s) && is_associative_on(m, s); }

bool is_loop(const Magma& m, const Subset& s) {
  if (s.empty() || !is_closed(m, s) || !identity_within(m, s)) return false;
  std::vector<char> seen(m.order());
  for (int a : s) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int x : s) seen[x] = 0;
      for (int x : s) {
        int v = pass ? m(x, a) : m(a, x);
        if (seen[v]) return false;
        seen[v] = 1;
      }
    }
  }
  return true;
}

bool is_ideal(const Magma& m, const Subset& p, Side side) {
  if (p.empty() || !is_closed(m, p)) return false;
  std::vector<char> in(m.order());
  for (int a : p) in[a] = 1;
  for (int x = 0; x < m.order(); ++x)
    for (int a : p) {
      if (side != Side::Right && !in[m(x, a)]) return false;
      if (side != Side::Left && !in[m(a, x)]) return false;
    }
  return true;
}

bool contains_group(const Magma& m, const Subset& s, bool proper, bool real_only) {
  for (int x : s) {
    if (real_only && m.is_neutro(x)) continue;
    Subset c = generated_closure(m, {x});
    if (c.size() < 2) continue;
    if (proper && c.size() >= s.size()) continue;
    if (!std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
    if (real_only && std::any_of(c.begin(), c.end(), [&](int y) { return m.is_neutro(y); })) continue;
    if (is_group(m, c)) return true;
  }
  return false;
}

namespace {

// Worklist saturation from a seed list; `in` is scratch of size order.
Subset saturate(const Magma& m, std::vector<int> members, std::vector<char>& in) {
  std::fill(in.begin(), in.end(), 0);
  std::vector<int> uniq;
  for (int g : members)
    if (!in[g]) {
      in[g] = 1;
      uniq.push_back(g);
    }
  members = std::move(uniq);
  for (size_t i = 0; i < members.size(); ++i) {
    int a = members[i];
    for (size_t j = 0; j <= i; ++j) {
      int b = members[j];
      for (int v : {m(a, b), m(b, a)})
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
        }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subset generated_closure(const Magma& m, const std::vector<int>& gens) {
  if (gens.empty()) throw ParamError("generated_closure needs at least one generator");
  for (int g : gens) check_index(m, g);
  std::vector<char> in(m.order());
  return saturate(m, gens, in);
}

std::string pred_name(Pred p) {
  switch (p) {
    case Pred::IsGroup: return "group";
    case Pred::IsSemigroup: return "semigroup";
    case Pred::IsLoop: return "loop";
    case Pred::IsSubgroupoid: return "subgroupoid";
    case Pred::IsNeutrosophicSubgroup: return "neutrosophic-subgroup";
    case Pred::IsPseudoNeutrosophicSubgroup: return "pseudo-neutrosophic-subgroup";
    case Pred::IsSNeutrosophicSub: return "s-neutrosophic-sub";
    case Pred::IsIdeal: return "ideal";
    case Pred::IsLeftIdeal: return "left-ideal";
    case Pred::IsRightIdeal: return "right-ideal";
    case Pred::Custom: return "custom";
  }
  return "?";
}

Species::Species(Pred p) : kind(p), name(pred_name(p)) {
  switch (p) {
    case Pred::IsGroup: fn = is_group; break;
    case Pred::IsSemigroup: fn = is_semigroup; break;
    case Pred::IsLoop: fn = is_loop; break;
    case Pred::IsSubgroupoid: fn = [](const Magma& m, const Subset& s) { return !s.empty() && is_closed(m, s); }; break;
    case Pred::IsNeutrosophicSubgroup: fn = is_neutrosophic_subgroup; break;
    case Pred::IsPseudoNeutrosophicSubgroup: fn = is_pseudo_neutrosophic_subgroup; break;
    case Pred::IsSNeutrosophicSub: fn = is_s_neutrosophic_sub; break;
    case Pred::IsIdeal: fn = [](const Magma& m, const Subset& s) { return is_ideal(m, s, Side::TwoSided); }; break;
    case Pred::IsLeftIdeal: fn = [](const Magma& m, const Subset& s) { return is_ideal(m, s, Side::Left); }; break;
    case Pred::IsRightIdeal: fn = [](const Magma& m, const Subset& s) { return is_ideal(m, s, Side::Right); }; break;
    case Pred::Custom: throw ParamError("custom species needs a predicate");
  }
}

Species Species::custom(std::string name, SubsetFn fn) {
  Species s;
  s.kind = Pred::Custom;
  s.name = std::move(name);
  s.fn = std::move(fn);
  return s;
}

Species Species::any_of(std::string name, std::vector<Species> alts) {
  return custom(std::move(name), [alts = std::move(alts)](const Magma& m, const Subset& s) {
    return std::any_of(alts.begin(), alts.end(), [&](const Species& a) { return a(m, s); });
  });
}

bool Species::operator()(const Magma& m, const Subset& s) const { return fn(m, s); }

Species parse_species(std::string_view name) {
  for (Pred p : {Pred::IsGroup, Pred::IsSemigroup, Pred::IsLoop, Pred::IsSubgroupoid, Pred::IsNeutrosophicSubgroup,
                 Pred::IsPseudoNeutrosophicSubgroup, Pred::IsSNeutrosophicSub, Pred::IsIdeal, Pred::IsLeftIdeal,
                 Pred::IsRightIdeal})
    if (pred_name(p) == name) return Species(p);
  throw ParamError("unknown species '" + std::string(name) + "'");
}

int default_max_exhaustive() {
  const char* v = std::getenv("NEUTROMAGMA_MAX_EXHAUSTIVE");
  if (!v || !*v) return 16;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end || n < 0 || n > 30) throw ParamError("NEUTROMAGMA_MAX_EXHAUSTIVE must be an integer in [0, 30]");
  return static_cast<int>(n);
}

Enumeration enumerate_closed_subsets(const Magma& m, const Species& pred, const Limits& limits) {
  const int k = m.order();
  Enumeration out;
  auto skip = [&](const Subset& s) {
    if (s.empty()) return true;
    if (static_cast<int>(s.size()) == k && !limits.keep_universe) return true;
    if (s.size() == 1 && m.identity() && s[0] == *m.identity()) return true;
    return false;
  };

  if (k <= limits.max_exhaustive_order) {
    if (k > 30) throw ResourceLimitError("exhaustive scan above order 30 refused");
    std::vector<uint32_t> row(static_cast<size_t>(k) * k);
    for (int i = 0; i < k * k; ++i) row[i] = 1u << m.table()[i];
    const uint32_t full = k == 32 ? ~0u : ((1u << k) - 1);
    std::vector<int> bits;
    bits.reserve(k);
    for (uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
      bits.clear();
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1u) bits.push_back(i);
      bool closed = true;
      for (int x : bits) {
        if (!(row[x * k + x] & mask)) {
          closed = false;
          break;
        }
      }
      for (size_t a = 0; a < bits.size() && closed; ++a)
        for (size_t b = 0; b < bits.size(); ++b)
          if (!(row[bits[a] * k + bits[b]] & mask)) {
            closed = false;
            break;
          }
      if (!closed) continue;
      Subset s(bits.begin(), bits.end());
      if (skip(s) || !pred(m, s)) continue;
      out.subsets.push_back(std::move(s));
      if (mask == full) break;
    }
  } else {
    out.complete = false;
    std::set<Subset> found;
    std::vector<char> in(k);
    auto rec = [&](auto&& self, const Subset& base, int next, int depth) -> void {
      for (int c = next; c < k; ++c) {
        if (contains(base, c)) continue;
        std::vector<int> seed(base.begin(), base.end());
        seed.push_back(c);
        Subset cl = saturate(m, std::move(seed), in);
        found.insert(cl);
        if (depth + 1 < limits.max_generators) self(self, cl, c + 1, depth + 1);
      }
    };
    if (limits.max_generators > 0) rec(rec, Subset{}, 0, 0);
    for (const auto& s : found)
      if (!skip(s) && pred(m, s)) out.subsets.push_back(s);
  }
  std::sort(out.subsets.begin(), out.subsets.end());
  return out;
}

// ---------------------------------------------------------------- centres etc

Subset center(const Magma& m) {
  Subset out;
  for (int x = 0; x < m.order(); ++x) {
    bool ok = true;
    for (int a = 0; a < m.order() && ok; ++a) ok = m(a, x) == m(x, a);
    if (ok) out.push_back(x);
  }
  return out;
}

Nuclei nuclei(const Magma& m) {
  if (!m.identity()) throw PreconditionError("nuclei need an identity element");
  Nuclei r;
  const int k = m.order();
  for (int a = 0; a < k; ++a) {
    bool l = true, mid = true, rt = true;
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        l = l && m(m(a, x), y) == m(a, m(x, y));
        mid = mid && m(m(x, a), y) == m(x, m(a, y));
        rt = rt && m(m(x, y), a) == m(x, m(y, a));
      }
    if (l) r.left.push_back(a);
    if (mid) r.middle.push_back(a);
    if (rt) r.right.push_back(a);
    if (l && mid && rt) r.nucleus.push_back(a);
  }
  r.commutant = center(m);
  std::set_intersection(r.nucleus.begin(), r.nucleus.end(), r.commutant.begin(), r.commutant.end(),
                        std::back_inserter(r.centre));
  return r;
}

int left_divide(const Magma& m, int b, int a) {
  int found = -1;
  for (int w = 0; w < m.order(); ++w)
    if (m(b, w) == a) {
      if (found >= 0) throw PreconditionError("left division not unique: not a loop");
      found = w;
    }
  if (found < 0) throw PreconditionError("left division has no solution: not a loop");
  return found;
}

int right_divide(const Magma& m, int a, int b) {
  int found = -1;
  for (int w = 0; w < m.order(); ++w)
    if (m(w, b) == a) {
      if (found >= 0) throw PreconditionError("right division not unique: not a loop");
      found = w;
    }
  if (found < 0) throw PreconditionError("right division has no solution: not a loop");
  return found;
}

namespace {

void require_loop(const Magma& m, const char* what) {
  if (!latin_square_check(m) || !(m.identity() || detect_identity(m.order(), m.table())))
    throw PreconditionError(std::string(what) + " needs a loop");
}

// Left-division table: ld[b*k+a] = b \ a.
std::vector<int> left_division_table(const Magma& m) {
  const int k = m.order();
  std::vector<int> ld(static_cast<size_t>(k) * k);
  for (int b = 0; b < k; ++b)
    for (int w = 0; w < k; ++w) ld[b * k + m(b, w)] = w;
  return ld;
}

}  // namespace

Subset associator_subloop(const Magma& m) {
  require_loop(m, "associator_subloop");
  const int k = m.order();
  auto ld = left_division_table(m);
  std::vector<char> seen(k);
  std::vector<int> gens;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        int w = ld[m(x, m(y, z)) * k + m(m(x, y), z)];
        if (!seen[w]) {
          seen[w] = 1;
          gens.push_back(w);
        }
      }
  return generated_closure(m, gens);
}

Subset commutator_subloop(const Magma& m) {
  require_loop(m, "commutator_subloop");
  const int k = m.order();
  auto ld = left_division_table(m);
  std::vector<char> seen(k);
  std::vector<int> gens;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      int w = ld[m(y, x) * k + m(x, y)];
      if (!seen[w]) {
        seen[w] = 1;
        gens.push_back(w);
      }
    }
  return generated_closure(m, gens);
}

Subset cosets(const Magma& m, const Subset& h, int a, Side side) {
  check_index(m, a);
  std::vector<int> v;
  for (int x : h) {
    check_index(m, x);
    v.push_back(side == Side::Left ? m(a, x) : m(x, a));
  }
  return make_subset(m, std::move(v));
}

DoubleCoset double_coset(const Magma& m, const Subset& a, const Subset& b, int x) {
  check_index(m, x);
  DoubleCoset r;
  std::vector<int> v;
  for (int p : a)
    for (int q : b) v.push_back(m(m(p, x), q));
  r.set = make_subset(m, std::move(v));
  r.associativity_assumed = check_identity_law(m, Law::Associative).holds;
  return r;
}

bool is_normal(const Magma& m, const Subset& h, NormalMode mode, NormalRange range) {
  if (h.empty() || !is_closed(m, h)) throw PreconditionError("is_normal: " + m.format(h) + " is not closed");
  auto left = [&](int a, const Subset& s) { return cosets(m, s, a, Side::Left); };
  auto right = [&](const Subset& s, int a) { return cosets(m, s, a, Side::Right); };

  if (mode == NormalMode::Subgroup) {
    if (!classify_basic(m).is_group) throw PreconditionError("is_normal subgroup mode needs a group");
    Subset dom = range == NormalRange::Subset ? h : universe(m);
    for (int g : dom) {
      int gi = *inverse(m, g);
      if (right(left(g, h), gi) != h) return false;
    }
    return true;
  }
  bool over_subset = range == NormalRange::Subset || (range == NormalRange::PerDefinition && mode == NormalMode::Subgroupoid);
  Subset dom = over_subset ? h : universe(m);
  for (int x : dom) {
    if (left(x, h) != right(h, x)) return false;
    for (int y : dom) {
      if (right(right(h, x), y) != right(h, m(x, y))) return false;
      if (left(y, left(x, h)) != left(m(y, x), h)) return false;
    }
  }
  return true;
}

bool literal_xhy_normal(const Magma& m, const Subset& h) {
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y)
      if (cosets(m, cosets(m, h, x, Side::Left), y, Side::Right) != h) return false;
  return true;
}

std::vector<ConjWitness> conjugate_witnesses(const Magma& m, const Subset& h1, const Subset& h2) {
  if (!is_closed(m, h1) || !is_closed(m, h2)) throw PreconditionError("conjugate_witnesses needs closed subsets");
  std::vector<ConjWitness> out;
  for (int x = 0; x < m.order(); ++x) {
    if (cosets(m, h1, x, Side::Left) == cosets(m, h2, x, Side::Right)) out.push_back({x, ConjSide::LeftEq});
    if (cosets(m, h1, x, Side::Right) == cosets(m, h2, x, Side::Left)) out.push_back({x, ConjSide::RightEq});
  }
  return out;
}

Subset conjugate_witness_set(const Magma& m, const Subset& h1, const Subset& h2) {
  std::vector<int> v;
  for (const auto& w : conjugate_witnesses(m, h1, h2)) v.push_back(w.x);
  return make_subset(m, std::move(v));
}

std::vector<std::pair<int, int>> conjugate_pairs(const Magma& m, int x, int y) {
  check_index(m, x);
  check_index(m, y);
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m.order(); ++a)
    for (int b = 0; b < m.order(); ++b)
      if (m(a, x) == m(y, b)) out.emplace_back(a, b);
  return out;
}

std::optional<std::pair<int, int>> conjugate_pair(const Magma& m, int x, int y) {
  check_index(m, x);
  check_index(m, y);
  for (int a = 0; a < m.order(); ++a)
    for (int b = 0; b < m.order(); ++b)
      if (m(a, x) == m(y, b)) return std::make_pair(a, b);
  return std::nullopt;
}

int power(const Magma& m, int x, int k) {
  check_index(m, x);
  if (k < 1) throw ParamError("power exponent must be >= 1");
  int p = x;
  for (int j = 1; j < k; ++j) p = m(p, x);
  return p;
}

ElementOrders element_orders(const Magma& m, int x) {
  check_index(m, x);
  ElementOrders r;
  int p = x;
  for (int k = 1; k <= m.order(); ++k) {
    if (!r.real_order && m.identity() && p == *m.identity()) r.real_order = k;
    if (!r.neutro_order && m.neutro_identity() && p == *m.neutro_identity()) r.neutro_order = k;
    p = m(p, x);
  }
  return r;
}

bool check_homomorphism(const PartialMap& f) {
  if (!f.source || !f.target) throw ParamError("partial map without carriers");
  if (f.pairs.empty()) throw ParamError("partial map is empty");
  const Magma& s = *f.source;
  const Magma& t = *f.target;
  std::vector<int> img(s.order(), -1);
  for (auto [a, b] : f.pairs) {
    check_index(s, a);
    check_index(t, b);
    if (img[a] >= 0) throw ParamError("partial map repeats source '" + s.label(a) + "'");
    img[a] = b;
  }
  for (auto [x, fx] : f.pairs)
    for (auto [y, fy] : f.pairs) {
      int xy = s(x, y);
      if (img[xy] >= 0 && img[xy] != t(fx, fy)) return false;
    }
  if (s.neutro_identity() && t.neutro_identity() && img[*s.neutro_identity()] >= 0 &&
      img[*s.neutro_identity()] != *t.neutro_identity())
    return false;
  return true;
}

Magma principal_isotope(const Magma& m, int a, int b) {
  require_loop(m, "principal_isotope");
  check_index(m, a);
  check_index(m, b);
  const int k = m.order();
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int x = 0; x < k; ++x) {
    int X = right_divide(m, x, a);
    for (int y = 0; y < k; ++y) table[x * k + y] = m(X, left_divide(m, b, y));
  }
  int e = m(b, a);
  return Magma("isotope(" + m.kind() + "," + m.label(a) + "," + m.label(b) + ")", m.labels(), std::move(table), e,
               m.neutro_mask(), std::nullopt);
}

std::optional<std::vector<int>> is_isomorphic(const Magma& m1, const Magma& m2, int max_order) {
  if (m1.order() > max_order || m2.order() > max_order)
    throw ResourceLimitError("is_isomorphic limited to order " + std::to_string(max_order));
  if (m1.order() != m2.order()) return std::nullopt;
  const int k = m1.order();
  auto e1 = m1.identity() ? m1.identity() : detect_identity(k, m1.table());
  auto e2 = m2.identity() ? m2.identity() : detect_identity(k, m2.table());
  if (e1.has_value() != e2.has_value()) return std::nullopt;
  std::vector<int> f(k, -1), inv(k, -1), order;
  if (e1) order.push_back(*e1);
  for (int x = 0; x < k; ++x)
    if (!e1 || x != *e1) order.push_back(x);
  auto consistent = [&](int x) {
    for (int y = 0; y < k; ++y) {
      if (f[y] < 0) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        int pq = m1(p, q);
        if (f[pq] >= 0 && f[pq] != m2(f[p], f[q])) return false;
        int img = m2(f[p], f[q]);
        if (inv[img] >= 0 && inv[img] != pq) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == order.size()) return true;
    int x = order[i];
    for (int c = 0; c < k; ++c) {
      if (inv[c] >= 0) continue;
      if (i == 0 && e1 && c != *e2) continue;
      f[x] = c;
      inv[c] = x;
      if (consistent(x) && self(self, i + 1)) return true;
      f[x] = -1;
      inv[c] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return f;
  return std::nullopt;
}

std::vector<int> right_regular_representation(const Magma& m, int a) {
  check_index(m, a);
  std::vector<int> perm(m.order());
  std::vector<char> seen(m.order());
  for (int x = 0; x < m.order(); ++x) {
    perm[x] = m(x, a);
    if (seen[perm[x]]) throw PreconditionError("column '" + m.label(a) + "' is not a permutation");
    seen[perm[x]] = 1;
  }
  return perm;
}

}  // namespace nm
