#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error {
  using Error::Error;
};
struct ParamError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct ResourceLimitError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

/// Sorted, duplicate-free member indices of a parent magma.
using Subset = std::vector<int>;

/// Finite magma as a k x k Cayley table over indices [0, k).
class Magma {
 public:
  Magma() = default;
  Magma(std::string kind, std::vector<std::string> labels, std::vector<int> table,
        std::optional<int> identity = std::nullopt, std::vector<bool> neutro_mask = {},
        std::optional<int> neutro_identity = std::nullopt);

  int order() const { return k_; }
  int op(int x, int y) const;
  int operator()(int x, int y) const { return t_[static_cast<size_t>(x) * k_ + y]; }

  const std::vector<int>& table() const { return t_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_.at(x); }
  const std::string& kind() const { return kind_; }
  std::optional<int> identity() const { return identity_; }
  std::optional<int> neutro_identity() const { return neutro_identity_; }
  const std::vector<bool>& neutro_mask() const { return mask_; }
  bool is_neutro(int x) const { return mask_[x]; }

  int index_of(std::string_view label) const;
  Subset subset(std::initializer_list<std::string_view> labels) const;
  Subset subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Subset& s) const;
  std::string format(const Subset& s) const;

 private:
  int k_ = 0;
  std::string kind_;
  std::vector<std::string> labels_;
  std::vector<int> t_;
  std::optional<int> identity_;
  std::vector<bool> mask_;
  std::optional<int> neutro_identity_;
};

std::optional<int> detect_identity(int k, const std::vector<int>& table);

/// Sorts, dedupes and range-checks member indices.
Subset make_subset(const Magma& m, std::vector<int> members);
Subset universe(const Magma& m);
bool contains(const Subset& s, int x);

/// Table of m restricted to a closed subset, with inherited labels and masks.
Magma submagma(const Magma& m, const Subset& s, std::string kind = {});

enum class Side { Left, Right, TwoSided };

// ---------------------------------------------------------------- identities

enum class Law {
  Associative,
  Commutative,
  Idempotent,
  Moufang1,
  Moufang2,
  Moufang3,
  Bol,
  BruckIdentity,
  BruckInverse,
  WIP,
  LeftAlternative,
  RightAlternative,
  PGroupoid,
};

enum class BruckReading { Standard, Alternate };

struct LawResult {
  bool holds = true;
  std::optional<std::array<int, 3>> witness;
  int arity = 3;
};

const std::vector<Law>& all_laws();
std::string law_name(Law law);
Law parse_law(std::string_view name);

LawResult check_identity_law(const Magma& m, Law law, const std::optional<Subset>& domain = std::nullopt,
                             BruckReading reading = BruckReading::Standard, bool require_inverses = true);

/// Two-sided inverse of x against the identity, if any.
std::optional<int> inverse(const Magma& m, int x);

bool latin_square_check(const Magma& m);

struct BasicReport {
  bool is_semigroup = false;
  bool is_commutative = false;
  bool is_loop = false;
  bool is_group = false;
  std::optional<int> identity;
  bool inverses_exist = false;
};

BasicReport classify_basic(const Magma& m);

// --------------------------------------------------------------- substructure

bool is_closed(const Magma& m, const Subset& s);
bool is_associative_on(const Magma& m, const Subset& s);
std::optional<int> identity_within(const Magma& m, const Subset& s);
bool is_group(const Magma& m, const Subset& s);
bool is_semigroup(const Magma& m, const Subset& s);
bool is_loop(const Magma& m, const Subset& s);
bool is_ideal(const Magma& m, const Subset& p, Side side);

/// True if s holds a group of size >= 2 (proper, real-only when asked).
bool contains_group(const Magma& m, const Subset& s, bool proper, bool real_only);

Subset generated_closure(const Magma& m, const std::vector<int>& gens);

enum class Pred {
  IsGroup,
  IsSemigroup,
  IsLoop,
  IsSubgroupoid,
  IsNeutrosophicSubgroup,
  IsPseudoNeutrosophicSubgroup,
  IsSNeutrosophicSub,
  IsIdeal,
  IsLeftIdeal,
  IsRightIdeal,
  Custom,
};

using SubsetFn = std::function<bool(const Magma&, const Subset&)>;

/// Substructure species used by enumeration and the classification engines.
struct Species {
  Pred kind = Pred::IsSubgroupoid;
  std::string name;
  SubsetFn fn;

  Species() = default;
  Species(Pred p);  // NOLINT(google-explicit-constructor)
  static Species custom(std::string name, SubsetFn fn);
  static Species any_of(std::string name, std::vector<Species> alts);

  bool operator()(const Magma& m, const Subset& s) const;
  const std::string& display() const { return name; }
};

std::string pred_name(Pred p);
Species parse_species(std::string_view name);

/// Reads NEUTROMAGMA_MAX_EXHAUSTIVE, default 16.
int default_max_exhaustive();

struct Limits {
  int max_exhaustive_order = default_max_exhaustive();
  int max_generators = 3;
  bool keep_universe = false;
};

struct Enumeration {
  std::vector<Subset> subsets;
  bool complete = true;
};

/// Closed subsets passing pred; skips empty, universe and {identity}.
Enumeration enumerate_closed_subsets(const Magma& m, const Species& pred, const Limits& limits = {});

// ---------------------------------------------------------------- centres etc

Subset center(const Magma& m);

struct Nuclei {
  Subset left, middle, right, nucleus, commutant, centre;
};

Nuclei nuclei(const Magma& m);

/// Unique w with a = b * w in a loop.
int left_divide(const Magma& m, int b, int a);
/// Unique w with a = w * b in a loop.
int right_divide(const Magma& m, int a, int b);

Subset associator_subloop(const Magma& m);
Subset commutator_subloop(const Magma& m);

Subset cosets(const Magma& m, const Subset& h, int a, Side side);

struct DoubleCoset {
  Subset set;
  bool associativity_assumed = true;
};

DoubleCoset double_coset(const Magma& m, const Subset& a, const Subset& b, int x);

enum class NormalMode { Subgroup, Subloop, Subgroupoid };
enum class NormalRange { PerDefinition, Carrier, Subset };

bool is_normal(const Magma& m, const Subset& h, NormalMode mode,
               NormalRange range = NormalRange::PerDefinition);

/// H = xHy for every x, y in the carrier, read literally.
bool literal_xhy_normal(const Magma& m, const Subset& h);

enum class ConjSide { LeftEq, RightEq };  // x*h1 = h2*x  /  h1*x = x*h2

struct ConjWitness {
  int x;
  ConjSide side;
  bool operator==(const ConjWitness&) const = default;
};

std::vector<ConjWitness> conjugate_witnesses(const Magma& m, const Subset& h1, const Subset& h2);
Subset conjugate_witness_set(const Magma& m, const Subset& h1, const Subset& h2);

std::optional<std::pair<int, int>> conjugate_pair(const Magma& m, int x, int y);
std::vector<std::pair<int, int>> conjugate_pairs(const Magma& m, int x, int y);

struct ElementOrders {
  std::optional<int> real_order;
  std::optional<int> neutro_order;
};

/// Left-associated powers: x^(j+1) = x^j * x.
ElementOrders element_orders(const Magma& m, int x);
int power(const Magma& m, int x, int k);

struct PartialMap {
  const Magma* source = nullptr;
  const Magma* target = nullptr;
  std::vector<std::pair<int, int>> pairs;
};

bool check_homomorphism(const PartialMap& f);

Magma principal_isotope(const Magma& m, int a, int b);

std::optional<std::vector<int>> is_isomorphic(const Magma& m1, const Magma& m2, int max_order = 8);

std::vector<int> right_regular_representation(const Magma& m, int a);

}  // namespace nm
