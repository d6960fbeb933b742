#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "neutromagma/atlas.hpp"
#include "neutromagma/corpus.hpp"
#include "neutromagma/io.hpp"
#include "neutromagma/neutro.hpp"
#include "neutromagma/nstruct.hpp"

using namespace nm;

TEST_SUITE("io") {
  TEST_CASE("magma round trip") {
    for (const Magma& m : {ln(7, 3), zn_full_neutro(3), zmod_mult(6), Magma("t", {"a"}, {0}, 0)}) {
      Magma back = magma_from_json(magma_to_json(m));
      CHECK(back.table() == m.table());
      CHECK(back.labels() == m.labels());
      CHECK(back.identity() == m.identity());
      CHECK(back.neutro_mask() == m.neutro_mask());
      CHECK(back.neutro_identity() == m.neutro_identity());
    }
  }

  TEST_CASE("magma from json defaults and errors") {
    Magma m = magma_from_json(json::parse(R"({"order": 2, "table": [[0, 1], [1, 0]]})"));
    CHECK(m.order() == 2);
    CHECK(m.label(1) == "1");
    CHECK_THROWS_AS(magma_from_json(json::parse(R"({"order": 2, "table": [[0, 2], [1, 0]]})")), ParamError);
    CHECK_THROWS_AS(magma_from_json(json::parse(R"({"tabel": 1})")), ParamError);
  }

  TEST_CASE("nstruct round trip") {
    auto ns = build_n_structure("b", {cyclic(3), zmod_mult(4)}, {CKind::Group, CKind::Semigroup});
    auto back = nstruct_from_json(nstruct_to_json(ns));
    CHECK(back.order() == ns.order());
    CHECK(back.kinds == ns.kinds);
    NSubset s{{{0}, {1, 3}}};
    CHECK(nsubset_from_json(nsubset_to_json(s)) == s);
  }

  TEST_CASE("file errors") {
    CHECK_THROWS_AS(read_text("/nonexistent/x.json"), IoError);
    auto p = std::filesystem::temp_directory_path() / "nm_io_test.json";
    write_text(p.string(), "{not json");
    CHECK_THROWS_AS(read_json(p.string()), ParamError);
    write_text(p.string(), "{\"a\": 1}");
    CHECK(read_json(p.string())["a"] == 1);
    std::filesystem::remove(p);
  }
}

TEST_SUITE("atlas") {
  TEST_CASE("ln footer matches closed form") {
    Atlas a = atlas_ln(5, 25);
    CHECK(a.ok());
    for (const auto& f : a.footer) {
      CHECK(f.records == ln_count(f.n));
      CHECK(f.strict_noncomm == ln_strict_noncomm_count(f.n));
    }
  }

  TEST_CASE("zn zstar n=5") {
    Atlas a = atlas_zn(ZnClass::Zstar, 5, 5);
    CHECK(a.records.size() == 12);
    CHECK(a.ok());
  }

  TEST_CASE("csv layout") {
    Atlas a = atlas_ln(7, 7);
    std::string csv = atlas_csv(a);
    std::string header = csv.substr(0, csv.find('\n'));
    size_t commas = std::count(header.begin(), header.end(), ',');
    CHECK(commas + 1 == atlas_columns().size());
    CHECK(csv.find("# n=7") != std::string::npos);
    CHECK(csv.find("true") == std::string::npos);
    Atlas empty = atlas_ln(6, 6);
    CHECK(empty.records.empty());
    CHECK(atlas_csv(empty).find("# total records=0 expected=0 match=1") != std::string::npos);
    CHECK(atlas_json(a)["records"].size() == a.records.size());
  }

  TEST_CASE("wip holds on ln(7,3) record") {
    auto r = atlas_record(ln(7, 3), "ln", "n=7,m=3");
    auto it = std::find_if(r.flags.begin(), r.flags.end(), [](auto& f) { return f.first == "wip"; });
    REQUIRE(it != r.flags.end());
    CHECK(it->second);
  }

  TEST_CASE("strict noncommutativity") {
    CHECK_FALSE(strictly_noncommutative(cyclic(3)));
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("ids are unique and sorted") {
    const auto& c = corpus();
    CHECK(c.size() >= 100);
    for (size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].id < c[i].id);
  }

  TEST_CASE("filtered run") {
    auto r = run_corpus("ex-1.3.*");
    CHECK_FALSE(r.empty());
    CHECK(corpus_passed(r));
  }
}
