#include "neutromagma/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nm {

json magma_to_json(const Magma& m) {
  int k = m.order();
  json table = json::array();
  for (int x = 0; x < k; ++x) {
    json row = json::array();
    for (int y = 0; y < k; ++y) row.push_back(m(x, y));
    table.push_back(std::move(row));
  }
  json mask = json::array();
  for (int x = 0; x < k; ++x) mask.push_back(static_cast<bool>(m.is_neutro(x)));
  json j;
  j["kind"] = m.kind();
  j["order"] = k;
  j["labels"] = m.labels();
  j["table"] = std::move(table);
  j["identity"] = m.identity() ? json(*m.identity()) : json(nullptr);
  j["neutro_mask"] = std::move(mask);
  j["neutro_identity"] = m.neutro_identity() ? json(*m.neutro_identity()) : json(nullptr);
  return j;
}

namespace {

std::optional<int> opt_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

Magma magma_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParamError("magma document must be an object");
    int k = j.at("order").get<int>();
    const json& rows = j.at("table");
    if (!rows.is_array() || static_cast<int>(rows.size()) != k) throw ParamError("table must have `order` rows");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(k) * k);
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != k) throw ParamError("table rows must have `order` cells");
      for (const auto& c : row) flat.push_back(c.get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    else
      for (int x = 0; x < k; ++x) labels.push_back(std::to_string(x));
    std::vector<bool> mask;
    if (j.contains("neutro_mask"))
      for (const auto& b : j.at("neutro_mask")) mask.push_back(b.get<bool>());
    std::string kind = j.value("kind", std::string("explicit"));
    auto id = opt_int(j, "identity");
    Magma m(kind, std::move(labels), std::move(flat), id, std::move(mask), opt_int(j, "neutro_identity"));
    return m;
  } catch (const json::exception& e) {
    throw ParamError(std::string("malformed magma JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParamError(std::string("invalid magma: ") + e.what());
  }
}

json report_to_json(const ClassReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"members", x.members}, {"order", x.order}, {"qualifies", x.qualifies}});
  json j;
  j["verdict"] = verdict_name(r.verdict);
  j["complete"] = r.complete;
  j["witnesses"] = std::move(w);
  if (!r.species.empty()) j["species"] = r.species;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json nstruct_to_json(const NStructure& ns) {
  json comps = json::array();
  for (const auto& c : ns.components) comps.push_back(magma_to_json(c));
  json kinds = json::array();
  for (CKind k : ns.kinds) kinds.push_back(ckind_name(k));
  return {{"name", ns.name}, {"components", std::move(comps)}, {"declared_kinds", std::move(kinds)}};
}

NStructure nstruct_from_json(const json& j, bool verify) {
  try {
    std::vector<Magma> comps;
    for (const auto& c : j.at("components")) comps.push_back(magma_from_json(c));
    std::vector<CKind> kinds;
    for (const auto& k : j.at("declared_kinds")) kinds.push_back(parse_ckind(k.get<std::string>()));
    return build_n_structure(j.value("name", std::string("N")), std::move(comps), std::move(kinds), verify);
  } catch (const json::exception& e) {
    throw ParamError(std::string("malformed N-structure JSON: ") + e.what());
  }
}

json nsubset_to_json(const NSubset& s) { return {{"per_component", s.per_component}}; }

NSubset nsubset_from_json(const json& j) {
  try {
    NSubset s;
    s.per_component = j.at("per_component").get<std::vector<Subset>>();
    for (auto& c : s.per_component) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    return s;
  } catch (const json::exception& e) {
    throw ParamError(std::string("malformed NSubset JSON: ") + e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

json read_json(const std::string& path) {
  std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParamError("'" + path + "': " + e.what());
  }
}

}  // namespace nm
