#include "lienorm/report.hpp"

#include "lienorm/normalization.hpp"
#include "lienorm/primitivity.hpp"
#include "lienorm/realization.hpp"
#include "lienorm/stabilizer.hpp"

#include <chrono>
#include <type_traits>

namespace lienorm {

namespace {

constexpr unsigned kSummaryOrder = 2;

class Stopwatch {
public:
  explicit Stopwatch(bool on) : on_(on) {}
  template <class F>
  auto time(const std::string& stage, F&& f) {
    auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(stage, start);
    } else {
      auto out = f();
      record(stage, start);
      return out;
    }
  }
  void attach(Json& report) const {
    if (on_) report["timings_ms"] = times_;
  }

private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    if (!on_) return;
    auto dt = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    times_[stage] = static_cast<double>(dt.count()) / 1000.0;
  }
  bool on_;
  Json times_ = Json::object();
};

Json completeness_json(const CompletenessReport& c) {
  return {{"complete", c.complete},
          {"center_dim", c.center_dim},
          {"derivation_dim", c.derivation_dim},
          {"inner_dim", c.inner_dim},
          {"reason", c.reason}};
}

std::string to_string(IntermediateSearch::Outcome o) {
  switch (o) {
    case IntermediateSearch::Outcome::Primitive: return "Primitive";
    case IntermediateSearch::Outcome::Witness: return "NotPrimitive";
    case IntermediateSearch::Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

Json primitivity_json(const IntermediateSearch& s) {
  Json out{{"verdict", to_string(s.outcome)}, {"reason", s.reason}, {"candidates_tested", s.candidates_tested}};
  if (s.witness) out["witness"] = to_json(*s.witness);
  return out;
}

Json morozov_json(const MorozovVerdict& v) {
  Json out{{"tag", to_string(v.tag)},
           {"reason", v.reason},
           {"effective", v.effective},
           {"semisimple", v.semisimple},
           {"killing_determinant", to_json(v.killing_determinant)},
           {"ad_algebra_dim", v.ad_algebra_dim}};
  if (!v.ideals.empty()) {
    Json ideals = Json::array();
    for (const auto& i : v.ideals) ideals.push_back(to_json(i));
    out["ideals"] = ideals;
  }
  if (v.abelian_ideal) out["abelian_ideal"] = to_json(*v.abelian_ideal);
  return out;
}

Json realization_summary(const StructureConstants& s, const Subspace& h) {
  if (h.dim() == s.dim()) return {{"status", "skipped"}, {"reason", "h = g"}};
  RealizationProblem p{s, h, kSummaryOrder};
  Realization r = realize_truncated(p);
  RealizationCheck c = check_realization(r, p);
  return {{"status", "ok"},
          {"order", kSummaryOrder},
          {"passed", c.passed},
          {"kernel_dim", r.kernel.dim()},
          {"isotropy_recovered", isotropy_at_origin(r) == h}};
}

/// Pair-level analysis shared by field and abstract inputs.
MorozovTag analyze_pair(Json& report, const StructureConstants& s, const Subspace& h, Stopwatch& sw) {
  Subspace k = sw.time("effectiveness", [&] { return largest_ideal_inside(s, h); });
  report["effective"] = k.is_zero();
  report["largest_ideal_in_h"] = to_json(k);
  report["completeness"] = completeness_json(sw.time("completeness", [&] { return is_complete(s); }));
  if (h.dim() < s.dim())
    report["primitivity"] = primitivity_json(sw.time("primitivity", [&] { return find_intermediate(s, h); }));
  MorozovVerdict verdict = sw.time("morozov", [&] { return classify_morozov(s, h); });
  report["morozov"] = morozov_json(verdict);
  report["realization"] = sw.time("realization", [&] { return realization_summary(s, h); });
  return verdict.tag;
}

Json analyze_fields(const AlgebraInput& in, const VectorFieldAlgebra& a, const RunOptions& opt, Stopwatch& sw,
                    std::optional<MorozovTag>* tag_out = nullptr) {
  Json report;
  report["name"] = in.name();
  report["seed"] = opt.seed;
  report["variables"] = in.variables;
  report["dims"] = {{"g", a.dim()}};
  bool transitive = sw.time("transitivity", [&] { return is_transitive(a); });
  report["transitive"] = transitive;
  if (!transitive) return report;
  StabilizerReport st = sw.time("stabilizer", [&] { return stabilizer_report(a, opt.seed); });
  report["base_point"] = to_json(st.point.coordinates);
  report["isotropy"] = to_json(st.isotropy);
  report["normalizer"] = to_json(st.normalizer);
  report["dims"] = {{"g", a.dim()},
                    {"h", st.isotropy.dim()},
                    {"normalizer", st.normalizer.dim()},
                    {"zero_locus_tangent", st.zero_locus_tangent_dim},
                    {"centralizer", st.centralizer_dim}};
  MorozovTag tag = analyze_pair(report, a.structure(), st.isotropy, sw);
  if (tag_out) *tag_out = tag;
  return report;
}

Json normalization_json(const NormalizationResult& r) {
  Json out{{"status", "ok"},
           {"mode", to_string(r.mode)},
           {"source_variables", r.map.source.variables()},
           {"target_variables", r.map.target.variables()},
           {"map", r.map.to_strings()},
           {"related", r.related},
           {"all_passed", r.all_passed()}};
  Json basis = Json::array();
  for (const auto& w : r.transformed_basis) basis.push_back(to_json(w));
  out["transformed_basis"] = basis;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  out["checks"] = checks;
  if (r.mode == NormalizationResult::Mode::Curve) {
    out["sign"] = r.sign;
    Json triple = Json::array();
    for (const auto& v : r.triple) triple.push_back(to_json(v));
    out["triple"] = triple;
  } else {
    out["base_point"] = to_json(r.base_point);
    Json ideal = Json::array();
    for (const auto& v : r.ideal_basis) ideal.push_back(to_json(v));
    out["ideal_basis"] = ideal;
  }
  return out;
}

}  // namespace

NormalizeMode parse_normalize_mode(const std::string& text) {
  if (text == "auto") return NormalizeMode::Auto;
  if (text == "curve") return NormalizeMode::Curve;
  if (text == "affine") return NormalizeMode::Affine;
  throw InputError("unknown mode \"" + text + "\" (expected auto, curve or affine)");
}

Json analyze_report(const AlgebraInput& in, const RunOptions& opt) {
  Stopwatch sw(opt.timings);
  Json report;
  if (in.has_fields()) {
    VectorFieldAlgebra a = sw.time("structure_constants", [&] { return in.algebra(); });
    report = analyze_fields(in, a, opt, sw);
  } else {
    const AbstractPair& p = *in.abstract;
    report["name"] = in.name();
    report["seed"] = opt.seed;
    report["abstract"] = true;
    report["dims"] = {{"g", p.structure.dim()},
                      {"h", p.h.dim()},
                      {"normalizer", normalizer(p.structure, p.h).dim()}};
    if (!is_closed(p.structure, p.h)) throw InputError("h is not a subalgebra");
    analyze_pair(report, p.structure, p.h, sw);
  }
  sw.attach(report);
  return report;
}

Json normalize_report(const AlgebraInput& in, NormalizeMode mode, const RunOptions& opt) {
  if (!in.has_fields()) throw Inapplicable("normalization needs vector fields");
  Stopwatch sw(opt.timings);
  VectorFieldAlgebra a = sw.time("structure_constants", [&] { return in.algebra(); });
  std::optional<MorozovTag> tag;
  Json report = analyze_fields(in, a, opt, sw, &tag);
  if (!report["transitive"].get<bool>()) throw Inapplicable("algebra is not transitive");
  if (mode == NormalizeMode::Auto) {
    if (a.chart_dim() == 1) {
      mode = NormalizeMode::Curve;
    } else if (tag == MorozovTag::Affine) {
      mode = NormalizeMode::Affine;
    } else if (tag == MorozovTag::Simple || tag == MorozovTag::Diagonal) {
      report["normalization"] = {{"status", "out_of_scope"}, {"type", to_string(*tag)}};
      sw.attach(report);
      return report;
    } else {
      throw Inapplicable("no normalization for a pair of type " + to_string(*tag));
    }
  }
  if (mode == NormalizeMode::Curve) {
    if (a.chart_dim() != 1) throw Inapplicable("curve mode needs a one-dimensional chart");
    report["normalization"] = normalization_json(sw.time("normalize", [&] { return normalize_curve(a); }));
  } else {
    report["normalization"] = normalization_json(sw.time("normalize", [&] { return normalize_affine(a, opt.seed); }));
  }
  sw.attach(report);
  return report;
}

Json realize_report(const AlgebraInput& in, unsigned order, const RunOptions& opt) {
  Stopwatch sw(opt.timings);
  RealizationProblem p;
  p.order = order;
  Json report;
  report["name"] = in.name();
  if (in.abstract) {
    p.structure = in.abstract->structure;
    p.h = in.abstract->h;
    report["source"] = "abstract";
  } else {
    VectorFieldAlgebra a = sw.time("structure_constants", [&] { return in.algebra(); });
    if (!is_transitive(a)) throw Inapplicable("algebra is not transitive");
    BasePoint bp = pick_generic_point(a, opt.seed);
    p.structure = a.structure();
    p.h = isotropy_at(a, bp.coordinates);
    report["source"] = "fields";
    report["seed"] = opt.seed;
    report["base_point"] = to_json(bp.coordinates);
  }
  Realization r = sw.time("realize", [&] { return realize_truncated(p); });
  RealizationCheck c = sw.time("check", [&] { return check_realization(r, p); });
  report["order"] = order;
  report["variables"] = r.chart.variables();
  report["h"] = to_json(p.h);
  Json images = Json::array();
  for (const auto& j : r.images) images.push_back(to_json(j));
  report["images"] = images;
  report["kernel"] = to_json(r.kernel);
  Json comp = Json::array();
  for (const auto& v : r.complement) comp.push_back(to_json(v));
  report["complement"] = comp;
  report["gauge_log"] = r.gauge_log;
  Json check{{"passed", c.passed}, {"message", c.message}};
  check["failure_degree"] = c.failure_degree ? Json(*c.failure_degree) : Json(nullptr);
  report["check"] = check;
  report["isotropy_recovered"] = isotropy_at_origin(r) == p.h;
  sw.attach(report);
  return report;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const IdentityViolation*>(&e)) return 3;
  if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const DomainError*>(&e)) return 2;
  return 3;
}

Json error_report(const std::exception& e) {
  std::string kind = "InternalError";
  if (dynamic_cast<const SyntaxError*>(&e)) kind = "SyntaxError";
  else if (dynamic_cast<const NotClosed*>(&e)) kind = "NotClosed";
  else if (dynamic_cast<const NotIndependent*>(&e)) kind = "NotIndependent";
  else if (dynamic_cast<const Inapplicable*>(&e)) kind = "Inapplicable";
  else if (dynamic_cast<const InputError*>(&e)) kind = "InputError";
  else if (dynamic_cast<const AbelianCase*>(&e)) kind = "AbelianCase";
  else if (dynamic_cast<const NonPrimitiveDetected*>(&e)) kind = "NonPrimitiveDetected";
  else if (dynamic_cast<const NormalizationError*>(&e)) kind = "NormalizationError";
  else if (dynamic_cast<const DomainError*>(&e)) kind = "DomainError";
  else if (dynamic_cast<const IdentityViolation*>(&e)) kind = "IdentityViolation";
  else if (dynamic_cast<const ChartMismatch*>(&e)) kind = "ChartMismatch";
  return {{"error", {{"kind", kind}, {"message", e.what()}, {"exit_code", exit_code(e)}}}};
}

}  // namespace lienorm
