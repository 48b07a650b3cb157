#include "lienorm/catalog.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lienorm;

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("LIENORM_SEED");
  if (!env || !*env) return 1;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw InputError(std::string("LIENORM_SEED is not an unsigned integer: ") + env);
  }
}

int fail(const std::exception& e) {
  std::cout << dump(error_report(e));
  std::cerr << "error: " << e.what() << "\n";
  return exit_code(e);
}

Json outcome_json(const EntryOutcome& o, bool full) {
  Json j{{"name", o.name}, {"matched", o.matched}, {"mismatches", o.mismatches}};
  if (full) {
    j["analysis"] = o.analysis;
    if (!o.normalization.is_null()) j["normalization"] = o.normalization;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis and normalization of Lie algebras of vector fields"};
  app.require_subcommand(1);
  RunOptions opt;
  std::string file;
  std::string mode = "auto";
  unsigned order = 0;
  bool run_all = false, brief = false;
  std::string show, export_dir;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Seed for the generic point (default: LIENORM_SEED or 1)");
    sub->add_flag("--timings", opt.timings, "Add per-stage wall-clock milliseconds");
  };
  auto* analyze = app.add_subcommand("analyze", "Transitivity, isotropy, normalizer, completeness, Morozov type");
  analyze->add_option("file", file, "Input JSON")->required();
  add_common(analyze);
  auto* normalize = app.add_subcommand("normalize", "Curve or affine-type normalization map");
  normalize->add_option("file", file, "Input JSON")->required();
  normalize->add_option("--mode", mode, "auto, curve or affine")->check(CLI::IsMember({"auto", "curve", "affine"}));
  add_common(normalize);
  auto* realize = app.add_subcommand("realize", "Truncated formal realization of an abstract pair");
  realize->add_option("file", file, "Input JSON")->required();
  realize->add_option("--order", order, "Jet order k >= 1")->required()->check(CLI::Range(1u, 64u));
  add_common(realize);
  auto* catalog = app.add_subcommand("catalog", "List, show, export or check the built-in examples");
  catalog->add_flag("--run-all", run_all, "Analyze every entry in parallel and compare with its expectations");
  catalog->add_flag("--brief", brief, "With --run-all, omit the full reports");
  catalog->add_option("--show", show, "Print one entry as input JSON");
  catalog->add_option("--export", export_dir, "Write every entry to DIR/<name>.json");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opt.seed = seed ? *seed : default_seed();
    if (analyze->parsed()) {
      std::cout << dump(analyze_report(load_input(file), opt));
    } else if (normalize->parsed()) {
      std::cout << dump(normalize_report(load_input(file), parse_normalize_mode(mode), opt));
    } else if (realize->parsed()) {
      std::cout << dump(realize_report(load_input(file), order, opt));
    } else if (catalog->parsed()) {
      auto entries = load_catalog();
      if (!show.empty()) {
        std::cout << dump(to_json(catalog_entry(show)));
      } else if (!export_dir.empty()) {
        std::filesystem::create_directories(export_dir);
        for (const auto& e : entries) {
          std::ofstream f(std::filesystem::path(export_dir) / (e.name() + ".json"));
          f << dump(to_json(e));
        }
      } else if (run_all) {
        auto outcomes = run_catalog(entries, opt);
        Json out{{"seed", opt.seed}, {"entries", Json::array()}};
        bool all = true;
        for (const auto& o : outcomes) {
          out["entries"].push_back(outcome_json(o, !brief));
          all = all && o.matched;
        }
        out["all_matched"] = all;
        std::cout << dump(out);
        return all ? 0 : 3;
      } else {
        Json list = Json::array();
        for (const auto& e : entries)
          list.push_back({{"name", e.name()}, {"description", e.meta.value("description", "")}});
        std::cout << dump(list);
      }
    }
  } catch (const std::exception& e) {
    return fail(e);
  }
  return 0;
}
