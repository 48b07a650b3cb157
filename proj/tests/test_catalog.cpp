#include "lienorm/catalog.hpp"
#include "lienorm/normalization.hpp"
#include "algebras.hpp"

#include <doctest.h>

#include <filesystem>
#include <set>

using namespace lienorm;
using namespace lienorm::testing;

namespace {

AlgebraInput fields_input(std::vector<std::string> vars, std::vector<std::vector<std::string>> fields) {
  AlgebraInput in;
  in.variables = std::move(vars);
  in.fields = std::move(fields);
  return in;
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST_CASE("parse_input rejects malformed documents") {
  CHECK_THROWS_AS(parse_input_text("{\"fields\": ["), InputError);
  CHECK_THROWS_AS(parse_input_text("[]"), InputError);
  CHECK_THROWS_AS(parse_input_text("{}"), InputError);
  CHECK_THROWS_AS(parse_input_text(R"({"variables": ["x"], "fields": [["1"]], "extra": 1})"), InputError);
  CHECK_THROWS_AS(parse_input_text(R"({"variables": ["x"], "fields": [["1", "0"]]})"), InputError);
  CHECK_THROWS_AS(parse_input_text(R"({"variables": ["x"], "fields": [[1]]})"), InputError);
  CHECK_THROWS_AS(parse_input_text(R"({"abstract": {"dimension": 2, "brackets": [[2, 1, ["1", "0"]]]}})"), InputError);
  CHECK_THROWS_AS(parse_input_text(R"({"abstract": {"dimension": 2, "brackets": [[1, 3, ["1", "0"]]]}})"), InputError);
  CHECK_THROWS_AS(parse_input_text(R"({"abstract": {"dimension": 2, "brackets": [[1, 2, ["1/0", "0"]]]}})"), InputError);
  // [e1, e2] = e3, [e1, e3] = e1, others zero: Jacobi fails
  CHECK_THROWS_AS(parse_input_text(R"({"abstract": {"dimension": 3,
      "brackets": [[1, 2, ["0", "0", "1"]], [1, 3, ["1", "0", "0"]]]}})"),
                  InputError);
  // syntax errors surface when the algebra is built
  auto in = parse_input_text(R"({"variables": ["x"], "fields": [["1 +"]]})");
  CHECK_THROWS_AS(in.algebra(), InputError);
  auto dependent = parse_input_text(R"({"variables": ["x"], "fields": [["1"], ["2"]]})");
  CHECK_THROWS_AS(dependent.algebra(), NotIndependent);
}

TEST_CASE("abstract layout round-trips") {
  auto in = parse_input_text(R"({"abstract": {"dimension": 3,
      "brackets": [[1, 2, ["-2", "0", "0"]], [1, 3, ["0", "1", "0"]], [2, 3, ["0", "0", "-2"]]],
      "h": [["0", "1", "0"]]}})");
  CHECK(in.abstract->structure == sl2_ehf());
  CHECK(parse_input(to_json(in)).abstract->structure == sl2_ehf());
  CHECK(to_json(parse_input(to_json(in))) == to_json(in));
}

TEST_CASE("catalog contents") {
  auto entries = load_catalog();
  CHECK(entries.size() >= 10);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CHECK(names.insert(e.name()).second);
    CHECK(e.meta.contains("description"));
    CHECK(e.meta.contains("expected"));
    CHECK(to_json(parse_input(to_json(e))) == to_json(e));
  }
  CHECK(catalog_entry("sl2-P1").fields == std::vector<std::vector<std::string>>{{"1"}, {"z"}, {"z^2"}});
  CHECK(catalog_entry("gl2-aff-C2").fields.size() == 6);
  CHECK(catalog_entry("sl2-diagonal-on-C1xC1").fields ==
        std::vector<std::vector<std::string>>{{"1", "1"}, {"x", "y"}, {"x^2", "y^2"}});
  CHECK_THROWS_AS(catalog_entry("no-such-entry"), InputError);
  // the abstract gl2 table agrees with the bracket table of the fields
  CHECK(catalog_entry("gl2-aff").abstract->structure == gl2_aff().structure());
  CHECK(catalog_entry("gl2-aff-C2").algebra().structure() == gl2_aff().structure());
}

TEST_CASE("data directory mirrors the built-in catalog") {
  for (const auto& e : load_catalog()) {
    auto path = std::filesystem::path(LIENORM_DATA_DIR) / (e.name() + ".json");
    REQUIRE_MESSAGE(std::filesystem::exists(path), path.string());
    CHECK(to_json(load_input(path.string())) == to_json(e));
  }
}

TEST_CASE("every catalog entry matches its expectations") {
  RunOptions opt;
  for (const auto& o : run_catalog_serial(load_catalog(), opt)) {
    std::string all;
    for (const auto& m : o.mismatches) all += m + "; ";
    CHECK_MESSAGE(o.matched, (o.name + ": " + all));
  }
}

TEST_CASE("analyze examples") {
  RunOptions opt;
  auto r = analyze_report(catalog_entry("sl2-P1"), opt);
  CHECK(r["transitive"] == true);
  CHECK(r["dims"] == Json{{"g", 3}, {"h", 2}, {"normalizer", 2}, {"zero_locus_tangent", 0}, {"centralizer", 0}});
  CHECK(r["morozov"]["tag"] == "Simple");
  auto d = analyze_report(fields_input({"x", "y"}, {{"1", "0"}, {"0", "1"}, {"x", "0"}}), opt);
  CHECK(d["dims"] == Json{{"g", 3}, {"h", 1}, {"normalizer", 2}, {"zero_locus_tangent", 1}, {"centralizer", 1}});
  CHECK(d["morozov"]["tag"] == "NotPrimitive");
  CHECK(d["primitivity"].contains("witness"));
  auto nt = analyze_report(fields_input({"x", "y"}, {{"1", "0"}, {"x", "0"}}), opt);
  CHECK(nt["transitive"] == false);
  CHECK(!nt.contains("morozov"));
  CHECK(!r.contains("timings_ms"));
  opt.timings = true;
  CHECK(analyze_report(catalog_entry("sl2-P1"), opt).contains("timings_ms"));
}

TEST_CASE("normalize examples") {
  RunOptions opt;
  auto c = normalize_report(catalog_entry("sl2-P1-conjugated"), NormalizeMode::Auto, opt);
  CHECK(c["normalization"]["mode"] == "curve");
  CHECK(c["normalization"]["all_passed"] == true);
  auto a = normalize_report(catalog_entry("gl2-aff-C2-conjugated"), NormalizeMode::Auto, opt);
  CHECK(a["normalization"]["mode"] == "affine");
  Chart target = Chart::standard(2);
  for (const auto& w : a["normalization"]["transformed_basis"])
    CHECK(VectorField::parse(target, strings(w)).polynomial_degree() <= 1);
  auto o = normalize_report(catalog_entry("sl2xsl2-diagonal-on-SL2"), NormalizeMode::Auto, opt);
  CHECK(o["normalization"] == Json{{"status", "out_of_scope"}, {"type", "Diagonal"}});
  CHECK(normalize_report(catalog_entry("sl3-P2"), NormalizeMode::Auto, opt)["normalization"]["type"] == "Simple");
  CHECK_THROWS_AS(normalize_report(catalog_entry("sl3-P2"), NormalizeMode::Curve, opt), Inapplicable);
  CHECK_THROWS_AS(normalize_report(catalog_entry("sl3-P2"), NormalizeMode::Affine, opt), NormalizationError);
  CHECK_THROWS_AS(normalize_report(catalog_entry("dx-dy-xdx"), NormalizeMode::Auto, opt), Inapplicable);
  CHECK_THROWS_AS(normalize_report(catalog_entry("sl2-borel"), NormalizeMode::Auto, opt), Inapplicable);
  CHECK_THROWS_AS(normalize_report(fields_input({"x", "y"}, {{"1", "0"}, {"x", "0"}}), NormalizeMode::Auto, opt),
                  Inapplicable);
}

TEST_CASE("normalization maps survive serialization") {
  RunOptions opt;
  for (const auto& e : load_catalog()) {
    if (e.meta["expected"].value("normalize", "") != "curve" && e.meta["expected"].value("normalize", "") != "affine")
      continue;
    Json rep = Json::parse(dump(normalize_report(e, NormalizeMode::Auto, opt)));
    const Json& n = rep["normalization"];
    Chart source(strings(n["source_variables"])), target(strings(n["target_variables"]));
    RationalMap phi{source, target, {}};
    for (const auto& s : strings(n["map"])) phi.entries.push_back(source.parse(s));
    auto a = e.algebra();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto w = VectorField::parse(target, strings(n["transformed_basis"][i]));
      CHECK_MESSAGE(verify_phi_related(a.basis()[i], phi, w), e.name());
    }
  }
}

TEST_CASE("realize examples") {
  RunOptions opt;
  auto r = realize_report(catalog_entry("abelian1"), 1, opt);
  CHECK(r["images"] == Json::array({Json::array({"1"})}));
  CHECK(r["check"]["passed"] == true);
  auto s = realize_report(catalog_entry("sl2-borel"), 3, opt);
  CHECK(s["check"]["passed"] == true);
  CHECK(s["isotropy_recovered"] == true);
  auto k = realize_report(catalog_entry("aff-plus-center"), 2, opt);
  CHECK(k["kernel"].size() == 1);
  auto f = realize_report(catalog_entry("sl3-P2"), 3, opt);
  CHECK(f["check"]["passed"] == true);
  CHECK_THROWS_AS(realize_report(catalog_entry("sl2-borel"), 0, opt), InputError);
}

TEST_CASE("reports are deterministic") {
  RunOptions opt;
  opt.seed = 42;
  auto entries = load_catalog();
  auto par = run_catalog(entries, opt), ser = run_catalog_serial(entries, opt);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(dump(par[i].analysis) == dump(ser[i].analysis));
    CHECK(dump(par[i].normalization) == dump(ser[i].normalization));
  }
  CHECK(dump(analyze_report(entries[0], opt)) == dump(analyze_report(entries[0], opt)));
}

TEST_CASE("exit codes") {
  CHECK(exit_code(InputError("x")) == 2);
  CHECK(exit_code(SyntaxError("x", 0)) == 2);
  CHECK(exit_code(Inapplicable("x")) == 2);
  CHECK(exit_code(NormalizationError("x")) == 2);
  CHECK(exit_code(IdentityViolation("x")) == 3);
  CHECK(error_report(IdentityViolation("boom"))["error"]["kind"] == "IdentityViolation");
}
