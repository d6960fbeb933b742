#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "neutromagma/atlas.hpp"
#include "neutromagma/classify.hpp"
#include "neutromagma/constructors.hpp"
#include "neutromagma/corpus.hpp"
#include "neutromagma/io.hpp"
#include "neutromagma/neutro.hpp"
#include "neutromagma/nstruct.hpp"

using namespace nm;

namespace {

constexpr int kExitCorpus = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text(out, text);
}

Magma load(const std::string& path) { return magma_from_json(read_json(path)); }

Subset parse_subset(const Magma& m, const std::vector<std::string>& labels) { return m.subset(labels); }

std::pair<int, int> parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParamError("bad range '" + s + "', expected N or A..B");
  }
}

json subset_json(const Magma& m, const Subset& s) { return {{"members", s}, {"labels", m.labels_of(s)}}; }

json classify_json(const Magma& m) {
  auto b = classify_basic(m);
  json j;
  j["kind"] = m.kind();
  j["order"] = m.order();
  j["is_semigroup"] = b.is_semigroup;
  j["is_commutative"] = b.is_commutative;
  j["is_loop"] = b.is_loop;
  j["is_group"] = b.is_group;
  j["identity"] = b.identity ? json(*b.identity) : json(nullptr);
  j["inverses_exist"] = b.inverses_exist;
  j["latin_square"] = latin_square_check(m);
  json laws;
  for (Law l : all_laws()) {
    try {
      laws[law_name(l)] = check_identity_law(m, l).holds;
    } catch (const PreconditionError&) {
      laws[law_name(l)] = nullptr;
    }
  }
  j["laws"] = laws;
  json s;
  bool complete = true;
  for (SKind k : all_skinds()) {
    auto d = detect_s_kind(m, k);
    s[skind_name(k)] = d.holds;
    complete = complete && d.complete;
  }
  j["s_kinds"] = s;
  j["complete"] = complete;
  return j;
}

Magma construct(const std::string& family, int n, int mm, int t, int u, const std::string& cls,
                const std::vector<std::string>& inputs) {
  auto need_n = [&] {
    if (n < 0) throw ParamError("--n is required for family " + family);
  };
  if (family == "ln") {
    need_n();
    return ln(n, mm);
  }
  if (family == "zn") {
    need_n();
    return zn(n, t, u, cls.empty() ? ZnClass::Ztriplestar : parse_zn_class(cls));
  }
  if (family == "product" || family == "tagged") {
    if (family == "tagged") {
      if (inputs.size() != 1) throw ParamError("tagged needs exactly one --in file");
      return extend_tagged(load(inputs[0]));
    }
    if (inputs.size() != 2) throw ParamError("product needs exactly two --in files");
    return direct_product(load(inputs[0]), load(inputs[1]));
  }
  need_n();
  if (family == "zmod") return zmod_mult(n);
  if (family == "cyclic") return cyclic(n);
  if (family == "sym") return symmetric_group(n);
  if (family == "alt") return alternating(n);
  if (family == "dihedral") return dihedral(n);
  if (family == "symsemi") return symmetric_semigroup(n);
  if (family == "full-neutro") return zn_full_neutro(n);
  if (family == "line-neutro") return zn_line_neutro(n);
  throw ParamError("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite magmas, neutrosophic extensions and Smarandache classification"};
  app.require_subcommand(1);
  std::string out = "-";
  int rc = 0;

  // construct
  auto* c_construct = app.add_subcommand("construct", "Build a magma and write its JSON document");
  std::string family, cls;
  int n = -1, m_param = 2, t = 1, u = 1;
  std::vector<std::string> inputs;
  c_construct->add_option("--family", family, "ln, zn, zmod, cyclic, sym, alt, dihedral, symsemi, product, tagged, "
                                              "full-neutro, line-neutro")
      ->required();
  c_construct->add_option("--n", n, "Size parameter");
  c_construct->add_option("--m", m_param, "ln multiplier");
  c_construct->add_option("--t", t, "zn left coefficient");
  c_construct->add_option("--u", u, "zn right coefficient");
  c_construct->add_option("--class", cls, "zn class: z, zstar, zdoublestar, ztriplestar");
  c_construct->add_option("--in", inputs, "Input magma files for product/tagged");
  c_construct->add_option("--out", out, "Output path ('-' for stdout)");
  c_construct->callback([&] {
    emit(magma_to_json(construct(family, n, m_param, t, u, cls, inputs)).dump(2) + "\n", out);
  });

  // classify
  auto* c_classify = app.add_subcommand("classify", "Basic classification, identity laws and S-kinds");
  std::string in_path;
  c_classify->add_option("input", in_path, "Magma JSON file")->required();
  c_classify->callback([&] { std::cout << classify_json(load(in_path)).dump(2) << "\n"; });

  // subsets
  auto* c_subsets = app.add_subcommand("subsets", "Enumerate closed subsets of a species");
  std::string species = "subgroupoid";
  bool keep_universe = false;
  c_subsets->add_option("input", in_path, "Magma JSON file")->required();
  c_subsets->add_option("--species", species, "Species name");
  c_subsets->add_flag("--keep-universe", keep_universe, "Include the whole carrier");
  c_subsets->callback([&] {
    Magma m = load(in_path);
    Limits lim;
    lim.keep_universe = keep_universe;
    auto en = enumerate_closed_subsets(m, parse_species(species), lim);
    json arr = json::array();
    for (const auto& s : en.subsets) arr.push_back(subset_json(m, s));
    std::cout << json{{"species", species}, {"complete", en.complete}, {"subsets", arr}}.dump(2) << "\n";
  });

  // cosets
  auto* c_cosets = app.add_subcommand("cosets", "Coset of a subset by one element");
  std::vector<std::string> h_labels, h2_labels;
  std::string element, side = "right";
  c_cosets->add_option("input", in_path, "Magma JSON file")->required();
  c_cosets->add_option("--subset", h_labels, "Subset labels, comma separated")->delimiter(',')->required();
  c_cosets->add_option("--element", element, "Element label")->required();
  c_cosets->add_option("--side", side, "left, right or two-sided")->check(CLI::IsMember({"left", "right", "two-sided"}));
  c_cosets->callback([&] {
    Magma m = load(in_path);
    Side sd = side == "left" ? Side::Left : side == "right" ? Side::Right : Side::TwoSided;
    std::cout << subset_json(m, cosets(m, parse_subset(m, h_labels), m.index_of(element), sd)).dump(2) << "\n";
  });

  // conjugate
  auto* c_conj = app.add_subcommand("conjugate", "Conjugating elements of two subsets, or pairs for two elements");
  std::string x_label, y_label;
  c_conj->add_option("input", in_path, "Magma JSON file")->required();
  c_conj->add_option("--h1", h_labels, "First subset")->delimiter(',');
  c_conj->add_option("--h2", h2_labels, "Second subset")->delimiter(',');
  c_conj->add_option("--x", x_label, "First element");
  c_conj->add_option("--y", y_label, "Second element");
  c_conj->callback([&] {
    Magma m = load(in_path);
    json j;
    if (!h_labels.empty() || !h2_labels.empty()) {
      auto w = conjugate_witnesses(m, parse_subset(m, h_labels), parse_subset(m, h2_labels));
      json arr = json::array();
      for (const auto& x : w)
        arr.push_back({{"x", m.label(x.x)}, {"equation", x.side == ConjSide::LeftEq ? "x*h1 = h2*x" : "h1*x = x*h2"}});
      j["witnesses"] = arr;
      j["set"] = subset_json(m, conjugate_witness_set(m, parse_subset(m, h_labels), parse_subset(m, h2_labels)));
    } else if (!x_label.empty() && !y_label.empty()) {
      int x = m.index_of(x_label), y = m.index_of(y_label);
      auto p = conjugate_pair(m, x, y);
      j["least_pair"] = p ? json::array({m.label(p->first), m.label(p->second)}) : json(nullptr);
      json arr = json::array();
      for (auto [a, b] : conjugate_pairs(m, x, y)) arr.push_back({m.label(a), m.label(b)});
      j["pairs"] = arr;
    } else {
      throw ParamError("conjugate needs --h1/--h2 or --x/--y");
    }
    std::cout << j.dump(2) << "\n";
  });

  // lagrange / sylow / cauchy
  auto* c_lag = app.add_subcommand("lagrange", "Lagrange classification");
  c_lag->add_option("input", in_path, "Magma JSON file")->required();
  c_lag->add_option("--species", species, "Species name");
  c_lag->callback([&] {
    std::cout << report_to_json(lagrange_classify(load(in_path), parse_species(species))).dump(2) << "\n";
  });
  auto* c_syl = app.add_subcommand("sylow", "Sylow classification");
  std::string variant = "standard";
  c_syl->add_option("input", in_path, "Magma JSON file")->required();
  c_syl->add_option("--species", species, "Species name");
  c_syl->add_option("--variant", variant, "standard, super or semi");
  c_syl->callback([&] {
    Magma m = load(in_path);
    std::cout << report_to_json(sylow_classify(m, parse_species(species), parse_sylow_variant(variant))).dump(2)
              << "\n";
  });
  auto* c_cau = app.add_subcommand("cauchy", "Cauchy classification");
  c_cau->add_option("input", in_path, "Magma JSON file")->required();
  c_cau->add_option("--relative", h_labels, "Subset to measure against")->delimiter(',');
  c_cau->callback([&] {
    Magma m = load(in_path);
    std::optional<Subset> rel;
    if (!h_labels.empty()) rel = parse_subset(m, h_labels);
    std::cout << report_to_json(cauchy_classify(m, rel)).dump(2) << "\n";
  });

  // nstruct
  auto* c_ns = app.add_subcommand("nstruct", "Build and classify an N-structure from a manifest");
  std::string engine;
  c_ns->add_option("manifest", in_path, "N-structure JSON file")->required();
  c_ns->add_option("--engine", engine, "lagrange, sylow or cauchy")->check(CLI::IsMember({"lagrange", "sylow", "cauchy"}));
  c_ns->add_option("--species", species, "Species used in every component");
  c_ns->add_option("--variant", variant, "Sylow variant");
  c_ns->callback([&] {
    NStructure ns = nstruct_from_json(read_json(in_path));
    json j = {{"name", ns.name}, {"order", ns.order()}};
    json kinds;
    for (const auto& [name, v] : n_kind_fields(classify_n_kind(ns))) kinds[name] = v;
    j["kinds"] = kinds;
    std::vector<Species> sp(ns.size(), parse_species(species));
    if (engine == "lagrange") j["lagrange"] = report_to_json(n_lagrange(ns, sp));
    if (engine == "sylow") j["sylow"] = report_to_json(n_sylow(ns, sp, parse_sylow_variant(variant)));
    if (engine == "cauchy") j["cauchy"] = report_to_json(n_cauchy(ns));
    std::cout << j.dump(2) << "\n";
  });

  // atlas
  auto* c_atlas = app.add_subcommand("atlas", "Sweep a family and tabulate engine flags");
  std::string range, format = "csv";
  c_atlas->add_option("--family", family, "ln or zn")->required()->check(CLI::IsMember({"ln", "zn"}));
  c_atlas->add_option("--n", range, "N or A..B")->required();
  c_atlas->add_option("--class", cls, "zn class");
  c_atlas->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  c_atlas->add_option("--out", out, "Output path ('-' for stdout)");
  c_atlas->callback([&] {
    auto [lo, hi] = parse_range(range);
    Atlas a = family == "ln" ? atlas_ln(lo, hi) : atlas_zn(cls.empty() ? ZnClass::Zstar : parse_zn_class(cls), lo, hi);
    emit(format == "csv" ? atlas_csv(a) : atlas_json(a).dump(2) + "\n", out);
    if (!a.ok()) {
      std::cerr << "atlas: count mismatch in footer\n";
      rc = kExitCorpus;
    }
  });

  // verify-corpus
  auto* c_corpus = app.add_subcommand("verify-corpus", "Run the verification corpus");
  std::string filter;
  c_corpus->add_option("--filter", filter, "Id glob, e.g. 'ex-2.1.3-*'");
  c_corpus->callback([&] {
    auto results = run_corpus(filter.empty() ? std::nullopt : std::optional<std::string>(filter));
    std::cout << format_corpus(results);
    if (!corpus_passed(results)) rc = kExitCorpus;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
