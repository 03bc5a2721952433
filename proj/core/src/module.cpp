#include "acyclic/module.hpp"

#include <algorithm>
#include <string>

namespace acyclic {
namespace {

std::string operator_name(std::size_t i) { return "T_" + std::to_string(i); }

}  // namespace

bool ValidationReport::all_square_zero() const {
  return std::all_of(square_zero.begin(), square_zero.end(), [](bool b) { return b; });
}

ValidationReport validate_actions(FieldSpec field, std::size_t dim,
                                  const std::vector<SparseMatrix>& actions,
                                  bool require_nilpotent) {
  ValidationReport report;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& t = actions[i];
    if (t.rows() != dim || t.cols() != dim || t.field() != field) {
      report.commuting = false;
      report.violations.push_back({operator_name(i + 1) + " is not a " + std::to_string(dim) +
                                       "x" + std::to_string(dim) + " matrix over " +
                                       field.to_string(),
                                   i + 1, i + 1, {}});
    }
  }
  if (!report.ok()) return report;

  for (std::size_t i = 0; i < actions.size() && report.commuting; ++i) {
    for (std::size_t j = i + 1; j < actions.size(); ++j) {
      auto diff = first_difference(actions[i] * actions[j], actions[j] * actions[i]);
      if (diff) {
        report.commuting = false;
        report.violations.push_back({operator_name(i + 1) + " and " + operator_name(j + 1) +
                                         " do not commute",
                                     i + 1, j + 1, unit_vector(field, diff->column)});
        break;
      }
    }
  }

  bool reported_nilpotency = false;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& t = actions[i];
    report.square_zero.push_back((t * t).is_zero());
    SparseMatrix power = t;
    std::size_t m = 1;
    std::optional<std::size_t> degree;
    while (true) {
      if (power.is_zero()) {
        degree = m;
        break;
      }
      if (m >= dim) break;
      power = power * t;
      ++m;
    }
    report.nilpotency_degree.push_back(degree);
    if (!degree && require_nilpotent && !reported_nilpotency) {
      reported_nilpotency = true;
      std::size_t col = 0;
      while (power.column(col).empty()) ++col;
      report.violations.push_back({operator_name(i + 1) + " is not nilpotent (" +
                                       operator_name(i + 1) + "^" + std::to_string(dim) +
                                       " is nonzero)",
                                   i + 1, i + 1, unit_vector(field, col)});
    }
  }
  return report;
}

FiniteModule::FiniteModule(FieldSpec field, std::size_t dim, std::vector<SparseMatrix> actions,
                           std::vector<std::string> labels, bool locally_nilpotent)
    : field_(field),
      dim_(dim),
      actions_(std::move(actions)),
      labels_(std::move(labels)),
      locally_nilpotent_(locally_nilpotent) {
  if (!labels_.empty() && labels_.size() != dim_) {
    throw InvariantViolation("module has " + std::to_string(dim_) + " basis vectors but " +
                             std::to_string(labels_.size()) + " labels");
  }
  auto report = validate_actions(field_, dim_, actions_, locally_nilpotent_);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvariantViolation(v.what + "; witness " + format_vector(v.witness));
  }
}

ValidationReport validate(const FiniteModule& m) {
  return validate_actions(m.field(), m.dim(), m.actions(), m.locally_nilpotent());
}

std::optional<EquivarianceFailure> check_equivariance(const FiniteModule& source,
                                                      const FiniteModule& target,
                                                      const SparseMatrix& matrix) {
  if (source.num_vars() != target.num_vars()) {
    throw DimensionMismatch("module map between modules on " + std::to_string(source.num_vars()) +
                            " and " + std::to_string(target.num_vars()) + " variables");
  }
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw DimensionMismatch("module map matrix is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + ", expected " +
                            std::to_string(target.dim()) + "x" + std::to_string(source.dim()));
  }
  for (std::size_t i = 0; i < source.num_vars(); ++i) {
    auto diff = first_difference(matrix * source.action(i), target.action(i) * matrix);
    if (diff) return EquivarianceFailure{i + 1, unit_vector(source.field(), diff->column)};
  }
  return std::nullopt;
}

ModuleMap::ModuleMap(std::shared_ptr<const FiniteModule> source,
                     std::shared_ptr<const FiniteModule> target, SparseMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_->field() != target_->field() || matrix_.field() != source_->field()) {
    throw FieldMismatch("module map across fields");
  }
  if (auto failure = check_equivariance(*source_, *target_, matrix_)) {
    throw InvariantViolation("map does not commute with " + operator_name(failure->operator_index) +
                             "; witness " + format_vector(failure->witness));
  }
}

ModuleMap ModuleMap::identity(std::shared_ptr<const FiniteModule> m) {
  auto id = SparseMatrix::identity(m->field(), m->dim());
  return ModuleMap(m, m, std::move(id));
}

ModuleMap ModuleMap::zero(std::shared_ptr<const FiniteModule> source,
                          std::shared_ptr<const FiniteModule> target) {
  SparseMatrix z(source->field(), target->dim(), source->dim());
  return ModuleMap(std::move(source), std::move(target), std::move(z));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (&g.source() != &f.target() && !(g.source() == f.target())) {
    throw DimensionMismatch("cannot compose: target of the first map is not the source of the second");
  }
  return ModuleMap(f.source_ptr(), g.target_ptr(), g.matrix() * f.matrix());
}

FiniteModule dual_module(const FiniteModule& m) {
  std::vector<SparseMatrix> actions;
  actions.reserve(m.num_vars());
  for (const auto& t : m.actions()) actions.push_back(t.transpose());
  std::vector<std::string> labels;
  for (const auto& l : m.labels()) labels.push_back(l + "^*");
  return FiniteModule(m.field(), m.dim(), std::move(actions), std::move(labels),
                      m.locally_nilpotent());
}

ModuleMap dual_map(const ModuleMap& f, std::shared_ptr<const FiniteModule> dual_source,
                   std::shared_ptr<const FiniteModule> dual_target) {
  return ModuleMap(std::move(dual_target), std::move(dual_source), f.matrix().transpose());
}

FiniteModule tensor_product(const FiniteModule& a, const FiniteModule& b) {
  if (a.field() != b.field()) throw FieldMismatch("tensor product across fields");
  const auto id_a = SparseMatrix::identity(a.field(), a.dim());
  const auto id_b = SparseMatrix::identity(b.field(), b.dim());
  std::vector<SparseMatrix> actions;
  actions.reserve(a.num_vars() + b.num_vars());
  for (const auto& t : a.actions()) actions.push_back(SparseMatrix::kron(t, id_b));
  for (const auto& t : b.actions()) actions.push_back(SparseMatrix::kron(id_a, t));
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    for (const auto& la : a.labels()) {
      for (const auto& lb : b.labels()) labels.push_back(la + "(x)" + lb);
    }
  }
  return FiniteModule(a.field(), a.dim() * b.dim(), std::move(actions), std::move(labels),
                      a.locally_nilpotent() && b.locally_nilpotent());
}

Subspace equivariant_functionals(const FiniteModule& m) {
  if (m.num_vars() == 0) return Subspace::full(m.field(), m.dim());
  std::vector<SparseMatrix> transposed;
  for (const auto& t : m.actions()) transposed.push_back(t.transpose());
  return kernel(SparseMatrix::vstack(transposed, m.field(), m.dim()));
}

std::size_t hom_to_trivial(const FiniteModule& m) { return equivariant_functionals(m).dim(); }

}  // namespace acyclic
