#include "acyclic/builtins.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace acyclic {
namespace {

void check_vars(std::size_t n) {
  if (n > kMaxBuiltinVars) {
    throw InvalidArgument("built-in modules support at most " + std::to_string(kMaxBuiltinVars) +
                          " variables, got " + std::to_string(n));
  }
}

std::string subset_label(std::size_t mask) {
  std::string out = "v{";
  bool first = true;
  for (std::size_t i = 0; (mask >> i) != 0; ++i) {
    if ((mask >> i) & 1u) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

std::string monomial_label(std::size_t mask) {
  if (mask == 0) return "1";
  std::string out;
  for (std::size_t i = 0; (mask >> i) != 0; ++i) {
    if ((mask >> i) & 1u) {
      if (!out.empty()) out += "*";
      out += "t" + std::to_string(i + 1);
    }
  }
  return out;
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("malformed built-in module name '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    auto colon = text.find(':');
    parts.push_back(text.substr(0, colon));
    if (colon == std::string_view::npos) break;
    text.remove_prefix(colon + 1);
  }
  return parts;
}

}  // namespace

FiniteModule subset_module(std::size_t n, FieldSpec field) {
  check_vars(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<SparseMatrix> actions;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    std::vector<SparseVector> cols(dim);
    for (std::size_t s = 0; s < dim; ++s) {
      if (s & bit) cols[s] = unit_vector(field, s ^ bit);
    }
    actions.push_back(SparseMatrix::from_columns(field, dim, std::move(cols)));
  }
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < dim; ++s) labels.push_back(subset_label(s));
  return FiniteModule(field, dim, std::move(actions), std::move(labels), true);
}

FiniteModule quotient_module(std::size_t ambient, std::size_t level, FieldSpec field) {
  check_vars(ambient);
  if (level > ambient) {
    throw InvalidArgument("quotient level " + std::to_string(level) + " exceeds ambient " +
                          std::to_string(ambient));
  }
  const std::size_t dim = std::size_t{1} << level;
  std::vector<SparseMatrix> actions;
  for (std::size_t i = 0; i < ambient; ++i) {
    std::vector<SparseVector> cols(dim);
    if (i < level) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t s = 0; s < dim; ++s) {
        if (!(s & bit)) cols[s] = unit_vector(field, s | bit);
      }
    }
    actions.push_back(SparseMatrix::from_columns(field, dim, std::move(cols)));
  }
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < dim; ++s) labels.push_back(monomial_label(s));
  return FiniteModule(field, dim, std::move(actions), std::move(labels), true);
}

FiniteModule trivial_module(std::size_t num_vars, FieldSpec field) {
  return quotient_module(num_vars, 0, field);
}

ModuleMap transition_map(std::size_t ambient, std::size_t level, FieldSpec field) {
  if (level + 1 > ambient) {
    throw InvalidArgument("transition from level " + std::to_string(level) +
                          " needs ambient >= " + std::to_string(level + 1) + ", got " +
                          std::to_string(ambient));
  }
  auto source = std::make_shared<const FiniteModule>(quotient_module(ambient, level, field));
  auto target = std::make_shared<const FiniteModule>(quotient_module(ambient, level + 1, field));
  const std::size_t bit = std::size_t{1} << level;
  std::vector<SparseVector> cols(source->dim());
  for (std::size_t s = 0; s < source->dim(); ++s) cols[s] = unit_vector(field, s | bit);
  auto matrix = SparseMatrix::from_columns(field, target->dim(), std::move(cols));
  return ModuleMap(std::move(source), std::move(target), std::move(matrix));
}

SparseMatrix complement_relabeling(std::size_t n, FieldSpec field) {
  check_vars(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<SparseVector> cols(dim);
  for (std::size_t s = 0; s < dim; ++s) cols[s] = unit_vector(field, (dim - 1) ^ s);
  return SparseMatrix::from_columns(field, dim, std::move(cols));
}

FiniteModule builtin_module(std::string_view name, FieldSpec field) {
  constexpr std::string_view dual_prefix = "dual:";
  if (name.starts_with(dual_prefix)) {
    return dual_module(builtin_module(name.substr(dual_prefix.size()), field));
  }
  auto parts = split(name);
  if (parts[0] == "subset" && parts.size() == 2) {
    return subset_module(parse_count(parts[1], name), field);
  }
  if (parts[0] == "quotient" && parts.size() == 3) {
    return quotient_module(parse_count(parts[1], name), parse_count(parts[2], name), field);
  }
  if (parts[0] == "trivial" && parts.size() == 2) {
    return trivial_module(parse_count(parts[1], name), field);
  }
  throw ParseError("unknown built-in module '" + std::string(name) +
                   "' (expected subset:n, quotient:N:n, trivial:N or dual:<name>)");
}

}  // namespace acyclic
