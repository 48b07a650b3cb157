#include "lienorm/catalog.hpp"

namespace lienorm {

namespace {

const char* const kCatalog = R"json([
  {
    "meta": {"name": "sl2-P1", "description": "sl2 acting on the projective line",
             "expected": {"transitive": true, "dims": [3, 2, 2, 0, 0], "morozov": "Simple", "complete": true,
                          "effective": true, "normalize": "curve"}},
    "variables": ["z"],
    "fields": [["1"], ["z"], ["z^2"]]
  },
  {
    "meta": {"name": "aff-C1", "description": "affine transformations of the line",
             "expected": {"transitive": true, "dims": [2, 1, 1, 0, 0], "morozov": "Affine", "complete": true,
                          "effective": true, "normalize": "curve"}},
    "variables": ["z"],
    "fields": [["1"], ["z"]]
  },
  {
    "meta": {"name": "sl2-P1-conjugated", "description": "sl2 on the line pulled back by z = w + w^2",
             "expected": {"transitive": true, "dims": [3, 2, 2, 0, 0], "morozov": "Simple", "complete": true,
                          "effective": true, "normalize": "curve"}},
    "variables": ["w"],
    "fields": [["1/(1+2*w)"], ["(w+w^2)/(1+2*w)"], ["(w+w^2)^2/(1+2*w)"]]
  },
  {
    "meta": {"name": "aff-C1-moebius", "description": "affine line pulled back by z = w/(1-w)",
             "expected": {"transitive": true, "dims": [2, 1, 1, 0, 0], "morozov": "Affine", "complete": true,
                          "effective": true, "normalize": "curve"}},
    "variables": ["w"],
    "fields": [["(1-w)^2"], ["w*(1-w)"]]
  },
  {
    "meta": {"name": "gl2-aff-C2", "description": "gl2 semidirect C^2, the affine group of the plane",
             "expected": {"transitive": true, "dims": [6, 4, 4, 0, 0], "morozov": "Affine", "complete": true,
                          "effective": true, "normalize": "affine"}},
    "variables": ["x", "y"],
    "fields": [["1", "0"], ["0", "1"], ["x", "0"], ["y", "0"], ["0", "x"], ["0", "y"]]
  },
  {
    "meta": {"name": "gl2-aff-C2-conjugated", "description": "affine group of the plane pulled back by (x, y + x^2)",
             "expected": {"transitive": true, "dims": [6, 4, 4, 0, 0], "morozov": "Affine", "complete": true,
                          "effective": true, "normalize": "affine"}},
    "variables": ["x", "y"],
    "fields": [["1", "-2*x"], ["0", "1"], ["x", "-2*x^2"], ["y+x^2", "-2*x*(y+x^2)"], ["0", "x"], ["0", "y+x^2"]]
  },
  {
    "meta": {"name": "sl2-aff-C2", "description": "sl2 semidirect C^2, volume-preserving affine maps",
             "expected": {"transitive": true, "dims": [5, 3, 3, 0, 0], "morozov": "Affine", "complete": false,
                          "effective": true, "normalize": "affine"}},
    "variables": ["x", "y"],
    "fields": [["1", "0"], ["0", "1"], ["x", "-y"], ["y", "0"], ["0", "x"]]
  },
  {
    "meta": {"name": "gl3-aff-C3", "description": "affine group of three-space",
             "expected": {"transitive": true, "dims": [12, 9, 9, 0, 0], "morozov": "Affine", "complete": true,
                          "effective": true, "normalize": "affine"}},
    "variables": ["x", "y", "z"],
    "fields": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
               ["x", "0", "0"], ["y", "0", "0"], ["z", "0", "0"],
               ["0", "x", "0"], ["0", "y", "0"], ["0", "z", "0"],
               ["0", "0", "x"], ["0", "0", "y"], ["0", "0", "z"]]
  },
  {
    "meta": {"name": "sl3-P2", "description": "sl3 acting on the projective plane",
             "expected": {"transitive": true, "dims": [8, 6, 6, 0, 0], "morozov": "Simple", "complete": true,
                          "effective": true, "normalize": "out_of_scope"}},
    "variables": ["x", "y"],
    "fields": [["1", "0"], ["0", "1"], ["x", "0"], ["y", "0"], ["0", "x"], ["0", "y"],
               ["x^2", "x*y"], ["x*y", "y^2"]]
  },
  {
    "meta": {"name": "sl2xsl2-diagonal-on-SL2", "description": "left and right multiplication on SL2 in the chart a != 0",
             "expected": {"transitive": true, "dims": [6, 3, 3, 0, 0], "morozov": "Diagonal", "complete": true,
                          "effective": true, "normalize": "out_of_scope"}},
    "variables": ["a", "b", "c"],
    "fields": [["c", "(1+b*c)/a", "0"], ["a", "b", "-c"], ["0", "0", "a"],
               ["0", "a", "0"], ["a", "-b", "c"], ["b", "0", "(1+b*c)/a"]]
  },
  {
    "meta": {"name": "sl2-diagonal-on-C1xC1", "description": "sl2 acting diagonally on a product of two lines",
             "expected": {"transitive": true, "dims": [3, 1, 1, 0, 0], "morozov": "NotPrimitive", "complete": true,
                          "effective": true, "normalize": "inapplicable"}},
    "variables": ["x", "y"],
    "fields": [["1", "1"], ["x", "y"], ["x^2", "y^2"]]
  },
  {
    "meta": {"name": "sl2xsl2-on-P1xP1", "description": "product action on two projective lines",
             "expected": {"transitive": true, "dims": [6, 4, 4, 0, 0], "morozov": "NotPrimitive", "complete": true,
                          "effective": true, "normalize": "inapplicable"}},
    "variables": ["x", "y"],
    "fields": [["1", "0"], ["x", "0"], ["x^2", "0"], ["0", "1"], ["0", "y"], ["0", "y^2"]]
  },
  {
    "meta": {"name": "dx-dy-xdx", "description": "translations of the plane plus one scaling",
             "expected": {"transitive": true, "dims": [3, 1, 2, 1, 1], "morozov": "NotPrimitive", "complete": false,
                          "effective": true, "normalize": "inapplicable"}},
    "variables": ["x", "y"],
    "fields": [["1", "0"], ["0", "1"], ["x", "0"]]
  },
  {
    "meta": {"name": "translations-C2", "description": "translations of the plane",
             "expected": {"transitive": true, "dims": [2, 0, 2, 2, 2], "morozov": "NotPrimitive", "complete": false,
                          "effective": true, "normalize": "inapplicable"}},
    "variables": ["x", "y"],
    "fields": [["1", "0"], ["0", "1"]]
  },
  {
    "meta": {"name": "translations-C1", "description": "translations of the line",
             "expected": {"transitive": true, "dims": [1, 0, 1, 1, 1], "morozov": "Affine", "complete": false,
                          "effective": true, "normalize": "inapplicable"}},
    "variables": ["z"],
    "fields": [["1"]]
  },
  {
    "meta": {"name": "sl2-borel", "description": "abstract sl2 in the basis E, H, F with h = <H, F>",
             "expected": {"dims": [3, 2, 2], "morozov": "Simple", "complete": true, "effective": true,
                          "realize_kernel_dim": 0}},
    "abstract": {"dimension": 3,
                 "brackets": [[1, 2, ["-2", "0", "0"]], [1, 3, ["0", "1", "0"]], [2, 3, ["0", "0", "-2"]]],
                 "h": [["0", "1", "0"], ["0", "0", "1"]]}
  },
  {
    "meta": {"name": "sl2xsl2-diagonal", "description": "abstract sl2 + sl2 with the diagonal subalgebra",
             "expected": {"dims": [6, 3, 3], "morozov": "Diagonal", "complete": true, "effective": true,
                          "realize_kernel_dim": 0}},
    "abstract": {"dimension": 6,
                 "brackets": [[1, 2, ["-2", "0", "0", "0", "0", "0"]], [1, 3, ["0", "1", "0", "0", "0", "0"]],
                              [2, 3, ["0", "0", "-2", "0", "0", "0"]], [4, 5, ["0", "0", "0", "-2", "0", "0"]],
                              [4, 6, ["0", "0", "0", "0", "1", "0"]], [5, 6, ["0", "0", "0", "0", "0", "-2"]]],
                 "h": [["1", "0", "0", "1", "0", "0"], ["0", "1", "0", "0", "1", "0"], ["0", "0", "1", "0", "0", "1"]]}
  },
  {
    "meta": {"name": "gl2-aff", "description": "abstract gl2 semidirect C^2 with h = gl2",
             "expected": {"dims": [6, 4, 4], "morozov": "Affine", "complete": true, "effective": true,
                          "realize_kernel_dim": 0}},
    "abstract": {"dimension": 6,
                 "brackets": [[1, 3, ["1", "0", "0", "0", "0", "0"]], [1, 5, ["0", "1", "0", "0", "0", "0"]],
                              [2, 4, ["1", "0", "0", "0", "0", "0"]], [2, 6, ["0", "1", "0", "0", "0", "0"]],
                              [3, 4, ["0", "0", "0", "-1", "0", "0"]], [3, 5, ["0", "0", "0", "0", "1", "0"]],
                              [4, 5, ["0", "0", "-1", "0", "0", "1"]], [4, 6, ["0", "0", "0", "-1", "0", "0"]],
                              [5, 6, ["0", "0", "0", "0", "1", "0"]]],
                 "h": [["0", "0", "1", "0", "0", "0"], ["0", "0", "0", "1", "0", "0"],
                       ["0", "0", "0", "0", "1", "0"], ["0", "0", "0", "0", "0", "1"]]}
  },
  {
    "meta": {"name": "abelian1", "description": "one-dimensional algebra with h = 0",
             "expected": {"dims": [1, 0, 1], "morozov": "Affine", "complete": false, "effective": true,
                          "realize_kernel_dim": 0}},
    "abstract": {"dimension": 1, "brackets": [], "h": []}
  },
  {
    "meta": {"name": "aff-plus-center", "description": "aff(1) + C with h containing the center; not effective",
             "expected": {"dims": [3, 2, 2], "morozov": "Unknown", "complete": false, "effective": false,
                          "realize_kernel_dim": 1}},
    "abstract": {"dimension": 3, "brackets": [[1, 2, ["1", "0", "0"]]],
                 "h": [["0", "1", "0"], ["0", "0", "1"]]}
  }
])json";

std::string normalize_outcome(const AlgebraInput& entry, const RunOptions& opt, Json& out) {
  try {
    out = normalize_report(entry, NormalizeMode::Auto, opt);
    const Json& n = out.at("normalization");
    if (n.at("status") == "out_of_scope") return "out_of_scope";
    if (!n.at("all_passed").get<bool>()) return "failed_verification";
    return n.at("mode").get<std::string>();
  } catch (const std::exception& e) {
    out = error_report(e);
    return exit_code(e) == 2 ? "inapplicable" : "error";
  }
}

void expect(EntryOutcome& o, const std::string& what, const Json& expected, const Json& actual) {
  if (expected != actual) o.mismatches.push_back(what + ": expected " + expected.dump() + ", got " + actual.dump());
}

}  // namespace

std::vector<AlgebraInput> load_catalog() {
  std::vector<AlgebraInput> out;
  for (const auto& doc : Json::parse(kCatalog)) out.push_back(parse_input(doc));
  return out;
}

AlgebraInput catalog_entry(const std::string& name) {
  for (auto& e : load_catalog())
    if (e.name() == name) return e;
  throw InputError("no catalog entry named \"" + name + "\"");
}

EntryOutcome run_entry(const AlgebraInput& entry, const RunOptions& opt) {
  EntryOutcome o;
  o.name = entry.name();
  const Json expected = entry.meta.value("expected", Json::object());
  try {
    o.analysis = analyze_report(entry, opt);
  } catch (const std::exception& e) {
    o.analysis = error_report(e);
    o.mismatches.push_back(std::string("analyze failed: ") + e.what());
    return o;
  }
  const Json& a = o.analysis;
  if (expected.contains("transitive")) expect(o, "transitive", expected["transitive"], a.value("transitive", Json()));
  if (expected.contains("dims")) {
    Json dims = Json::array();
    const Json& d = a.at("dims");
    for (const char* k : {"g", "h", "normalizer", "zero_locus_tangent", "centralizer"})
      if (d.contains(k)) dims.push_back(d[k]);
    expect(o, "dims", expected["dims"], dims);
  }
  if (expected.contains("morozov")) expect(o, "morozov", expected["morozov"], a.at("morozov").at("tag"));
  if (expected.contains("complete"))
    expect(o, "complete", expected["complete"], a.at("completeness").at("complete"));
  if (expected.contains("effective")) expect(o, "effective", expected["effective"], a.at("effective"));
  if (expected.contains("realize_kernel_dim"))
    expect(o, "realize_kernel_dim", expected["realize_kernel_dim"], a.at("realization").value("kernel_dim", Json()));
  if (a.contains("realization") && a["realization"].value("status", "") == "ok" &&
      !a["realization"].at("passed").get<bool>())
    o.mismatches.push_back("realization check failed");
  if (expected.contains("normalize")) {
    std::string got = normalize_outcome(entry, opt, o.normalization);
    expect(o, "normalize", expected["normalize"], got);
  }
  o.matched = o.mismatches.empty();
  return o;
}

std::vector<EntryOutcome> run_catalog(const std::vector<AlgebraInput>& entries, const RunOptions& opt) {
  std::vector<EntryOutcome> out(entries.size());
  const auto n = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = run_entry(entries[i], opt);
  return out;
}

std::vector<EntryOutcome> run_catalog_serial(const std::vector<AlgebraInput>& entries, const RunOptions& opt) {
  std::vector<EntryOutcome> out;
  for (const auto& e : entries) out.push_back(run_entry(e, opt));
  return out;
}

}  // namespace lienorm
