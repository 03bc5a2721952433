#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acyclic/linalg.hpp"
#include "acyclic/sparse_matrix.hpp"

namespace acyclic {

/// Outcome of checking an operator tuple.  Violations are returned, not thrown.
struct ValidationReport {
  bool commuting = true;
  /// Smallest m with T_i^m = 0, or nullopt if T_i^dim != 0.
  std::vector<std::optional<std::size_t>> nilpotency_degree;
  std::vector<bool> square_zero;

  struct Violation {
    std::string what;
    std::size_t first_operator = 0;   // 1-based
    std::size_t second_operator = 0;  // 1-based; equal to first for nilpotency failures
    SparseVector witness;             // input vector exhibiting the failure
  };
  /// Shape problems, the first non-commuting pair, and (when nilpotency is
  /// required) the first non-nilpotent operator.
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool all_square_zero() const;
};

/// Checks shapes, pairwise commutativity and (when required) nilpotency of
/// a raw operator tuple on F^dim.
ValidationReport validate_actions(FieldSpec field, std::size_t dim,
                                  const std::vector<SparseMatrix>& actions,
                                  bool require_nilpotent);

/// A finite-dimensional module over k[t_1..t_n]: F^dim with n pairwise
/// commuting operators T_1..T_n.
class FiniteModule {
 public:
  /// Throws InvariantViolation (message carries the witness) if the actions
  /// fail validate_actions.
  FiniteModule(FieldSpec field, std::size_t dim, std::vector<SparseMatrix> actions,
               std::vector<std::string> labels = {}, bool locally_nilpotent = false);

  FieldSpec field() const { return field_; }
  std::size_t num_vars() const { return actions_.size(); }
  std::size_t dim() const { return dim_; }
  /// T_{i+1}; zero-based.
  const SparseMatrix& action(std::size_t i) const { return actions_.at(i); }
  const std::vector<SparseMatrix>& actions() const { return actions_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool locally_nilpotent() const { return locally_nilpotent_; }

  friend bool operator==(const FiniteModule&, const FiniteModule&) = default;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<SparseMatrix> actions_;
  std::vector<std::string> labels_;
  bool locally_nilpotent_;
};

ValidationReport validate(const FiniteModule& m);

/// Where matrix * T_i^source and T_i^target * matrix first disagree.
struct EquivarianceFailure {
  std::size_t operator_index;  // 1-based
  SparseVector witness;        // source vector
};
std::optional<EquivarianceFailure> check_equivariance(const FiniteModule& source,
                                                      const FiniteModule& target,
                                                      const SparseMatrix& matrix);

/// An equivariant linear map between modules on the same variables.
class ModuleMap {
 public:
  /// Throws DimensionMismatch on a wrong shape and InvariantViolation unless
  /// the matrix commutes with every action.
  ModuleMap(std::shared_ptr<const FiniteModule> source, std::shared_ptr<const FiniteModule> target,
            SparseMatrix matrix);

  const FiniteModule& source() const { return *source_; }
  const FiniteModule& target() const { return *target_; }
  const std::shared_ptr<const FiniteModule>& source_ptr() const { return source_; }
  const std::shared_ptr<const FiniteModule>& target_ptr() const { return target_; }
  const SparseMatrix& matrix() const { return matrix_; }

  static ModuleMap identity(std::shared_ptr<const FiniteModule> m);
  static ModuleMap zero(std::shared_ptr<const FiniteModule> source,
                        std::shared_ptr<const FiniteModule> target);

 private:
  std::shared_ptr<const FiniteModule> source_;
  std::shared_ptr<const FiniteModule> target_;
  SparseMatrix matrix_;
};

/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// Linear dual: same dimension, transposed actions.
FiniteModule dual_module(const FiniteModule& m);
/// The transpose map dual(target) -> dual(source).
ModuleMap dual_map(const ModuleMap& f, std::shared_ptr<const FiniteModule> dual_source,
                   std::shared_ptr<const FiniteModule> dual_target);

/// M (x) M' over the concatenated variables: T_i (x) id, then id (x) T'_j.
/// Basis in Kronecker order (index = a * dim(M') + b).
FiniteModule tensor_product(const FiniteModule& a, const FiniteModule& b);

/// The space of equivariant functionals M -> k, as row vectors f with
/// f T_i = 0 for all i (stored as column vectors in F^dim).
Subspace equivariant_functionals(const FiniteModule& m);
/// dim Hom_A(M, k).
std::size_t hom_to_trivial(const FiniteModule& m);

}  // namespace acyclic
