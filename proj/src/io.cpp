#include "lienorm/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lienorm {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, std::size_t m, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": index must be an integer");
  long long v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > m)
    throw InputError(where + ": index " + std::to_string(v) + " outside 1.." + std::to_string(m));
  return static_cast<std::size_t>(v - 1);
}

QVector vector_from_json(const Json& j, std::size_t m, const std::string& where) {
  if (!j.is_array() || j.size() != m) throw InputError(where + ": expected " + std::to_string(m) + " coordinates");
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

AbstractPair parse_abstract(const Json& a) {
  if (!a.is_object()) throw InputError("abstract: expected an object");
  const Json& dim = require(a, "dimension", "abstract");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw InputError("abstract: dimension must be a positive integer");
  const auto m = static_cast<std::size_t>(dim.get<long long>());
  std::vector<Rational> c(m * m * m, Rational(0));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const Json& brackets = require(a, "brackets", "abstract");
  if (!brackets.is_array()) throw InputError("abstract: brackets must be an array");
  for (const auto& e : brackets) {
    if (!e.is_array() || e.size() != 3) throw InputError("abstract: each bracket is [i, j, [coefficients]]");
    std::size_t i = index_from_json(e[0], m, "abstract bracket"), j = index_from_json(e[1], m, "abstract bracket");
    if (i >= j) throw InputError("abstract: bracket indices need i < j");
    if (!seen.insert({i, j}).second) throw InputError("abstract: bracket [" + std::to_string(i + 1) + ", " +
                                                      std::to_string(j + 1) + "] listed twice");
    QVector coeffs = vector_from_json(e[2], m, "abstract bracket");
    for (std::size_t k = 0; k < m; ++k) {
      c[(i * m + j) * m + k] = coeffs[k];
      c[(j * m + i) * m + k] = -coeffs[k];
    }
  }
  AbstractPair out;
  out.structure = StructureConstants(m, std::move(c));
  std::vector<QVector> hv;
  auto it = a.find("h");
  if (it != a.end()) {
    if (!it->is_array()) throw InputError("abstract: h must be an array of coordinate vectors");
    for (const auto& v : *it) hv.push_back(vector_from_json(v, m, "abstract h"));
  }
  out.h = Subspace::span(m, hv);
  return out;
}

}  // namespace

std::string AlgebraInput::name() const {
  auto it = meta.find("name");
  return it != meta.end() && it->is_string() ? it->get<std::string>() : std::string("unnamed");
}

VectorFieldAlgebra AlgebraInput::algebra() const {
  if (fields.empty()) throw InputError("input has no fields");
  Chart chart(variables);
  std::vector<VectorField> basis;
  for (const auto& f : fields) basis.push_back(VectorField::parse(chart, f));
  return VectorFieldAlgebra(std::move(basis));
}

AlgebraInput parse_input(const Json& doc) {
  if (!doc.is_object()) throw InputError("input must be a JSON object");
  static const std::set<std::string> known{"variables", "fields", "abstract", "meta"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw InputError("unknown key \"" + key + "\"");
  AlgebraInput in;
  if (auto it = doc.find("variables"); it != doc.end()) {
    if (!it->is_array()) throw InputError("variables must be an array of names");
    for (const auto& v : *it) {
      if (!v.is_string()) throw InputError("variables must be an array of names");
      in.variables.push_back(v.get<std::string>());
    }
  }
  if (auto it = doc.find("fields"); it != doc.end()) {
    if (!it->is_array()) throw InputError("fields must be an array");
    for (const auto& f : *it) {
      if (!f.is_array() || f.size() != in.variables.size())
        throw InputError("each field needs one coefficient per variable");
      std::vector<std::string> coeffs;
      for (const auto& c : f) {
        if (!c.is_string()) throw InputError("coefficients must be strings");
        coeffs.push_back(c.get<std::string>());
      }
      in.fields.push_back(std::move(coeffs));
    }
  }
  if (auto it = doc.find("abstract"); it != doc.end()) in.abstract = parse_abstract(*it);
  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) throw InputError("meta must be an object");
    in.meta = *it;
  }
  if (in.fields.empty() && !in.abstract) throw InputError("input needs fields or an abstract pair");
  return in;
}

AlgebraInput parse_input_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

AlgebraInput load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input_text(ss.str());
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) out.push_back(to_json(v));
  return out;
}

Json to_json(const VectorField& v) { return v.to_strings(); }

Json to_json(const JetField& v) {
  Json out = Json::array();
  for (const auto& p : v.coefficients()) out.push_back(p.to_string(v.chart().variables()));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational as a string \"p/q\" or an integer");
}

Json structure_to_json(const StructureConstants& s) {
  const std::size_t m = s.dim();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      QVector c(m);
      bool any = false;
      for (std::size_t k = 0; k < m; ++k) {
        c[k] = s(i, j, k);
        any = any || c[k] != 0;
      }
      if (any) brackets.push_back(Json::array({i + 1, j + 1, to_json(c)}));
    }
  return brackets;
}

Json to_json(const AlgebraInput& in) {
  Json out = Json::object();
  if (!in.variables.empty()) out["variables"] = in.variables;
  if (!in.fields.empty()) out["fields"] = in.fields;
  if (in.abstract) {
    out["abstract"] = {{"dimension", in.abstract->structure.dim()},
                       {"brackets", structure_to_json(in.abstract->structure)},
                       {"h", to_json(in.abstract->h)}};
  }
  if (!in.meta.empty()) out["meta"] = in.meta;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lienorm
