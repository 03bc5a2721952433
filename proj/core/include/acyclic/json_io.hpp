#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "acyclic/complex.hpp"
#include "acyclic/limit.hpp"
#include "acyclic/module.hpp"

namespace acyclic {

/// Insertion-ordered so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Sparse vectors as [[index, "scalar"], ...].
Json vector_to_json(const SparseVector& v);
SparseVector vector_from_json(const Json& j, FieldSpec field, std::size_t dim);

/// {"rows": r, "cols": c, "entries": [[i, j, "scalar"], ...]}, row-major.
Json matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const Json& j, FieldSpec field);

/// Module fields as read, before any algebraic validation.
struct RawModule {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<SparseMatrix> actions;
  std::vector<std::string> labels;
  bool locally_nilpotent = false;
};

/// Throws ParseError on malformed input; checks shapes only.
RawModule raw_module_from_json(const Json& j);
RawModule raw_module_from_text(const std::string& text);

/// {"field", "num_vars", "dim", "actions", "labels", "locally_nilpotent"}.
Json module_to_json(const FiniteModule& m);
/// Throws ParseError on malformed input and InvariantViolation when the
/// actions do not commute.
FiniteModule module_from_json(const Json& j);
FiniteModule module_from_text(const std::string& text);

/// {"field", "orientation", "degrees": [lo, hi], "terms", "differentials"}.
Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

/// {"dims": [...], "representatives": [[vector, ...], ...]}.
Json homology_to_json(const HomologyTable& h);

Json certificate_to_json(const Certificate& c);

}  // namespace acyclic
