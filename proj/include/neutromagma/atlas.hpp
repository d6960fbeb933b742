#pragma once

#include "neutromagma/classify.hpp"
#include "neutromagma/constructors.hpp"
#include "neutromagma/io.hpp"

namespace nm {

struct AtlasRecord {
  std::string family;
  std::string params;
  int order = 0;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, bool>> s_flags;
  Verdict3 lagrange = Verdict3::Vacuous;
  Verdict3 sylow = Verdict3::Vacuous;
  Verdict3 cauchy = Verdict3::Vacuous;
  bool complete = true;
};

struct AtlasFooter {
  int n = 0;
  long long records = 0;
  long long expected = 0;
  /// Strictly non-commutative members, ln only (-1 otherwise).
  long long strict_noncomm = -1;
  long long strict_noncomm_expected = -1;
  bool match() const { return records == expected && strict_noncomm == strict_noncomm_expected; }
};

struct Atlas {
  std::vector<AtlasRecord> records;
  std::vector<AtlasFooter> footer;
  bool ok() const;
};

/// Column order of the CSV output.
const std::vector<std::string>& atlas_columns();

/// No pair of distinct non-identity elements commutes.
bool strictly_noncommutative(const Magma& m);

AtlasRecord atlas_record(const Magma& m, std::string family, std::string params, const Limits& limits = {});

/// Odd n in [lo, hi]; even n are skipped.
Atlas atlas_ln(int lo, int hi, const Limits& limits = {});
Atlas atlas_zn(ZnClass c, int lo, int hi, const Limits& limits = {});

std::string atlas_csv(const Atlas& a);
json atlas_json(const Atlas& a);

}  // namespace nm
