#include "acyclic/json_io.hpp"

#include "acyclic/errors.hpp"

namespace acyclic {
namespace {

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  const auto value = j.get<unsigned long long>();
  if (value >= bound) {
    throw ParseError(std::string(what) + " " + std::to_string(value) + " out of range");
  }
  return static_cast<std::size_t>(value);
}

std::size_t count_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Scalar scalar_from_json(const Json& j, FieldSpec field) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long long>());
  throw ParseError("scalars must be strings or integers");
}

const Json& array_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array");
  }
  return j.at(key);
}

}  // namespace

Json vector_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(Json::array({e.index, e.value.to_string()}));
  return out;
}

SparseVector vector_from_json(const Json& j, FieldSpec field, std::size_t dim) {
  if (!j.is_array()) throw ParseError("a vector must be an array of [index, scalar] pairs");
  std::vector<Triplet> triplets;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("vector entries are [index, scalar]");
    triplets.push_back({index_from_json(e[0], dim, "vector index"), 0, scalar_from_json(e[1], field)});
  }
  try {
    return SparseMatrix::from_triplets(field, dim, 1, triplets).column(0);
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (const auto& t : m.triplets()) {
    entries.push_back(Json::array({t.row, t.col, t.value.to_string()}));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

SparseMatrix matrix_from_json(const Json& j, FieldSpec field) {
  if (!j.is_object()) throw ParseError("a matrix must be an object");
  const std::size_t rows = count_from_json(j, "rows");
  const std::size_t cols = count_from_json(j, "cols");
  std::vector<Triplet> triplets;
  for (const auto& e : array_at(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entries are [row, col, scalar]");
    triplets.push_back({index_from_json(e[0], rows, "row"), index_from_json(e[1], cols, "column"),
                        scalar_from_json(e[2], field)});
  }
  try {
    return SparseMatrix::from_triplets(field, rows, cols, triplets);
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

Json module_to_json(const FiniteModule& m) {
  Json actions = Json::array();
  for (const auto& a : m.actions()) actions.push_back(matrix_to_json(a));
  Json out;
  out["field"] = m.field().to_string();
  out["num_vars"] = m.num_vars();
  out["dim"] = m.dim();
  out["actions"] = std::move(actions);
  out["labels"] = m.labels();
  out["locally_nilpotent"] = m.locally_nilpotent();
  return out;
}

RawModule raw_module_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a module must be an object");
  if (!j.contains("field") || !j.at("field").is_string()) {
    throw ParseError("\"field\" must be \"q\" or \"fp:<p>\"");
  }
  FieldSpec field;
  try {
    field = FieldSpec::parse(j.at("field").get<std::string>());
  } catch (const InvalidField& e) {
    throw ParseError(e.what());
  }
  const std::size_t n = count_from_json(j, "num_vars");
  const std::size_t dim = count_from_json(j, "dim");
  const Json& actions_json = array_at(j, "actions");
  if (actions_json.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " action matrices, got " +
                     std::to_string(actions_json.size()));
  }
  std::vector<SparseMatrix> actions;
  for (const auto& a : actions_json) {
    auto m = matrix_from_json(a, field);
    if (m.rows() != dim || m.cols() != dim) {
      throw ParseError("action matrices must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    actions.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array()) throw ParseError("\"labels\" must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("\"labels\" must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
    if (!labels.empty() && labels.size() != dim) {
      throw ParseError("expected " + std::to_string(dim) + " labels");
    }
  }
  bool nilpotent = false;
  if (j.contains("locally_nilpotent")) {
    if (!j.at("locally_nilpotent").is_boolean()) throw ParseError("\"locally_nilpotent\" must be a boolean");
    nilpotent = j.at("locally_nilpotent").get<bool>();
  }
  return RawModule{field, dim, std::move(actions), std::move(labels), nilpotent};
}

RawModule raw_module_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return raw_module_from_json(j);
}

FiniteModule module_from_json(const Json& j) {
  RawModule raw = raw_module_from_json(j);
  return FiniteModule(raw.field, raw.dim, std::move(raw.actions), std::move(raw.labels),
                      raw.locally_nilpotent);
}

FiniteModule module_from_text(const std::string& text) {
  RawModule raw = raw_module_from_text(text);
  return FiniteModule(raw.field, raw.dim, std::move(raw.actions), std::move(raw.labels),
                      raw.locally_nilpotent);
}

Json complex_to_json(const ChainComplex& c) {
  Json maps = Json::array();
  for (const auto& m : c.maps()) maps.push_back(matrix_to_json(m));
  Json out;
  out["field"] = c.field().to_string();
  out["orientation"] = c.orientation() == Orientation::Homological ? "homological" : "cohomological";
  out["degrees"] = Json::array({c.min_degree(), c.max_degree()});
  out["terms"] = c.term_dims();
  out["differentials"] = std::move(maps);
  return out;
}

ChainComplex complex_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a complex must be an object");
  FieldSpec field;
  try {
    field = FieldSpec::parse(j.value("field", std::string{}));
  } catch (const InvalidField& e) {
    throw ParseError(e.what());
  }
  const std::string orient = j.value("orientation", std::string{});
  if (orient != "homological" && orient != "cohomological") {
    throw ParseError("\"orientation\" must be homological or cohomological");
  }
  const Json& degrees = array_at(j, "degrees");
  if (degrees.size() != 2 || !degrees[0].is_number_integer() || !degrees[1].is_number_integer()) {
    throw ParseError("\"degrees\" must be [lo, hi]");
  }
  const int lo = degrees[0].get<int>();
  const int hi = degrees[1].get<int>();
  std::vector<std::size_t> terms;
  for (const auto& t : array_at(j, "terms")) {
    if (!t.is_number_integer() || t.get<long long>() < 0) throw ParseError("terms are dimensions");
    terms.push_back(t.get<std::size_t>());
  }
  if (hi < lo || terms.size() != static_cast<std::size_t>(hi - lo + 1)) {
    throw ParseError("\"terms\" must have one entry per degree");
  }
  std::vector<SparseMatrix> maps;
  for (const auto& m : array_at(j, "differentials")) maps.push_back(matrix_from_json(m, field));
  return ChainComplex(field, lo, std::move(terms), std::move(maps),
                      orient == "homological" ? Orientation::Homological : Orientation::Cohomological);
}

Json homology_to_json(const HomologyTable& h) {
  Json reps = Json::array();
  for (const auto& d : h.degrees()) {
    Json basis = Json::array();
    for (const auto& v : d.representatives.basis()) basis.push_back(vector_to_json(v));
    reps.push_back(std::move(basis));
  }
  Json out;
  out["degrees"] = Json::array({h.min_degree(), h.min_degree() + static_cast<int>(h.degrees().size()) - 1});
  out["dims"] = h.dims();
  out["representatives"] = std::move(reps);
  return out;
}

Json certificate_to_json(const Certificate& c) {
  Json levels = Json::array();
  for (const auto& l : c.levels) {
    Json level;
    level["level"] = l.level;
    level["dim"] = l.dim;
    level["tor_dims"] = l.tor_dims;
    level["dual_ext_dims"] = l.dual_ext_dims;
    levels.push_back(std::move(level));
  }
  Json checks = Json::array();
  for (const auto& k : c.checks) {
    Json check;
    check["name"] = k.name;
    check["claim"] = k.claim;
    check["status"] = to_string(k.status);
    check["detail"] = k.detail;
    if (k.witness) {
      check["witness"] = Json{{"description", k.witness->description},
                              {"vector", vector_to_json(k.witness->vector)}};
    }
    checks.push_back(std::move(check));
  }
  Json out;
  out["ambient"] = c.ambient;
  out["field"] = c.field.to_string();
  out["passed"] = c.passed();
  out["failures"] = c.failures();
  out["levels"] = std::move(levels);
  out["checks"] = std::move(checks);
  out["conclusion"] = c.conclusion;
  return out;
}

}  // namespace acyclic
