#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "neutromagma/atlas.hpp"
#include "neutromagma/classify.hpp"
#include "neutromagma/constructors.hpp"
#include "neutromagma/corpus.hpp"
#include "neutromagma/io.hpp"
#include "neutromagma/neutro.hpp"

namespace py = pybind11;
using namespace nm;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return py::int_(j.get<long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(to_py(v));
      return l;
    }
    case json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = to_py(it.value());
      return d;
    }
    default: return py::none();
  }
}

Subset members(const Magma& m, const std::vector<std::string>& labels) { return m.subset(labels); }

Limits limits_for(std::optional<int> max_exhaustive) {
  Limits l;
  if (max_exhaustive) l.max_exhaustive_order = *max_exhaustive;
  return l;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Finite magmas, neutrosophic extensions and Smarandache classification";

  auto base = py::register_exception<Error>(mod, "Error");
  py::register_exception<DomainError>(mod, "DomainError", base);
  py::register_exception<ParamError>(mod, "ParamError", base);
  py::register_exception<PreconditionError>(mod, "PreconditionError", base);
  py::register_exception<ResourceLimitError>(mod, "ResourceLimitError", base);
  py::register_exception<IoError>(mod, "IoError", base);

  py::class_<Magma>(mod, "Magma")
      .def_property_readonly("order", &Magma::order)
      .def_property_readonly("kind", &Magma::kind)
      .def_property_readonly("labels", &Magma::labels)
      .def_property_readonly("identity",
                             [](const Magma& m) -> std::optional<std::string> {
                               if (auto e = m.identity()) return m.label(*e);
                               return std::nullopt;
                             })
      .def("op", [](const Magma& m, const std::string& x, const std::string& y) {
        return m.label(m.op(m.index_of(x), m.index_of(y)));
      })
      .def("table", [](const Magma& m) {
        std::vector<std::vector<std::string>> rows(m.order());
        for (int x = 0; x < m.order(); ++x)
          for (int y = 0; y < m.order(); ++y) rows[x].push_back(m.label(m(x, y)));
        return rows;
      })
      .def("to_json", [](const Magma& m) { return magma_to_json(m).dump(); })
      .def_static("from_json", [](const std::string& s) {
        try {
          return magma_from_json(json::parse(s));
        } catch (const json::exception& e) {
          throw ParamError(e.what());
        }
      })
      .def("__len__", &Magma::order)
      .def("__repr__", [](const Magma& m) { return "<Magma " + m.kind() + " order " + std::to_string(m.order()) + ">"; });

  mod.def("ln", &ln, py::arg("n"), py::arg("m"));
  mod.def("ln_count", &ln_count);
  mod.def("zn", [](int n, int t, int u, const std::string& cls) { return zn(n, t, u, parse_zn_class(cls)); },
          py::arg("n"), py::arg("t"), py::arg("u"), py::arg("cls") = "ztriplestar");
  mod.def("zmod_mult", &zmod_mult);
  mod.def("cyclic", &cyclic);
  mod.def("symmetric_group", &symmetric_group);
  mod.def("dihedral", &dihedral);
  mod.def("direct_product", &direct_product);
  mod.def("extend_tagged", &extend_tagged);
  mod.def("zn_full_neutro", &zn_full_neutro);
  mod.def("zn_line_neutro", &zn_line_neutro);

  mod.def("classify_basic", [](const Magma& m) {
    auto b = classify_basic(m);
    py::dict d;
    d["is_semigroup"] = b.is_semigroup;
    d["is_commutative"] = b.is_commutative;
    d["is_loop"] = b.is_loop;
    d["is_group"] = b.is_group;
    d["identity"] = b.identity ? py::object(py::str(m.label(*b.identity))) : py::none();
    d["inverses_exist"] = b.inverses_exist;
    return d;
  });
  mod.def("check_law", [](const Magma& m, const std::string& law) { return check_identity_law(m, parse_law(law)).holds; });
  mod.def("is_closed", [](const Magma& m, const std::vector<std::string>& s) { return is_closed(m, members(m, s)); });
  mod.def("detect_s_kind", [](const Magma& m, const std::string& kind) {
    auto r = detect_s_kind(m, parse_skind(kind));
    py::dict d;
    d["holds"] = r.holds;
    d["witness"] = r.witness ? py::object(py::cast(m.labels_of(*r.witness))) : py::none();
    d["complete"] = r.complete;
    return d;
  });
  mod.def(
      "enumerate_closed_subsets",
      [](const Magma& m, const std::string& species, std::optional<int> max_exhaustive) {
        auto en = enumerate_closed_subsets(m, parse_species(species), limits_for(max_exhaustive));
        std::vector<std::vector<std::string>> out;
        for (const auto& s : en.subsets) out.push_back(m.labels_of(s));
        return py::make_tuple(out, en.complete);
      },
      py::arg("m"), py::arg("species") = "subgroupoid", py::arg("max_exhaustive") = py::none());
  mod.def(
      "cosets",
      [](const Magma& m, const std::vector<std::string>& h, const std::string& a, const std::string& side) {
        Side sd = side == "left" ? Side::Left : side == "right" ? Side::Right : throw ParamError("side must be left or right");
        return m.labels_of(cosets(m, members(m, h), m.index_of(a), sd));
      },
      py::arg("m"), py::arg("h"), py::arg("a"), py::arg("side") = "right");
  mod.def(
      "lagrange",
      [](const Magma& m, const std::string& species) { return to_py(report_to_json(lagrange_classify(m, parse_species(species)))); },
      py::arg("m"), py::arg("species") = "subgroupoid");
  mod.def(
      "sylow",
      [](const Magma& m, const std::string& species, const std::string& variant) {
        return to_py(report_to_json(sylow_classify(m, parse_species(species), parse_sylow_variant(variant))));
      },
      py::arg("m"), py::arg("species") = "subgroupoid", py::arg("variant") = "standard");
  mod.def("cauchy", [](const Magma& m) { return to_py(report_to_json(cauchy_classify(m))); });

  mod.def(
      "atlas_ln_csv", [](int lo, int hi) { return atlas_csv(atlas_ln(lo, hi)); }, py::arg("lo"), py::arg("hi"));
  mod.def(
      "run_corpus",
      [](std::optional<std::string> filter) {
        auto results = run_corpus(filter);
        return py::make_tuple(format_corpus(results), corpus_passed(results));
      },
      py::arg("filter") = py::none());
}
