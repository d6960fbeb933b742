#pragma once

#include <json.hpp>

#include "neutromagma/classify.hpp"
#include "neutromagma/magma.hpp"
#include "neutromagma/nstruct.hpp"

namespace nm {

using json = nlohmann::json;

json magma_to_json(const Magma& m);
/// Throws ParamError on a malformed document.
Magma magma_from_json(const json& j);

json report_to_json(const ClassReport& r);

json nstruct_to_json(const NStructure& ns);
NStructure nstruct_from_json(const json& j, bool verify = true);

json nsubset_to_json(const NSubset& s);
NSubset nsubset_from_json(const json& j);

/// Throws IoError when the file cannot be read.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
/// Throws IoError on read failure and ParamError on bad JSON.
json read_json(const std::string& path);

}  // namespace nm
