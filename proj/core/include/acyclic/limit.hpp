#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acyclic/module.hpp"

namespace acyclic {

/// A transition that factors as T_variable^target * inclusion, where
/// `inclusion` is a plain linear map (not necessarily equivariant).
struct TransitionFactorization {
  std::size_t variable;  // 1-based
  SparseMatrix inclusion;
};

/// levels[0] -> levels[1] -> ... with transitions[m]: levels[m] -> levels[m+1].
/// Only shapes are enforced here; equivariance is checked by
/// vanishing_certificate so that a corrupted system can be diagnosed.
class DirectedSystem {
 public:
  DirectedSystem(std::vector<std::shared_ptr<const FiniteModule>> levels,
                 std::vector<SparseMatrix> transitions,
                 std::vector<TransitionFactorization> factorizations = {});

  std::size_t size() const { return levels_.size(); }
  std::size_t num_vars() const { return levels_.front()->num_vars(); }
  FieldSpec field() const { return levels_.front()->field(); }
  const FiniteModule& level(std::size_t m) const { return *levels_.at(m); }
  const std::shared_ptr<const FiniteModule>& level_ptr(std::size_t m) const { return levels_.at(m); }
  const SparseMatrix& transition_matrix(std::size_t m) const { return transitions_.at(m); }
  /// Throws InvariantViolation if the transition is not equivariant.
  ModuleMap transition(std::size_t m) const;
  const std::vector<TransitionFactorization>& factorizations() const { return factorizations_; }

 private:
  std::vector<std::shared_ptr<const FiniteModule>> levels_;
  std::vector<SparseMatrix> transitions_;
  std::vector<TransitionFactorization> factorizations_;
};

/// A chain of vector spaces: maps[m] is dims[m+1] x dims[m].
struct VectorSystem {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> maps;

  /// Throws DimensionMismatch if shapes do not compose.
  void check() const;
};

/// quotient(N,0) -> quotient(N,1) -> ... -> quotient(N,N), each step
/// multiplication by the next variable.  Requires N >= 1.
DirectedSystem paper_system(std::size_t ambient, FieldSpec field);

/// Tor_j of each level with the maps induced by the transitions; one
/// VectorSystem per degree j = 0..num_vars.  Throws InvariantViolation if
/// a transition is not equivariant.
std::vector<VectorSystem> tor_system(const DirectedSystem& s, bool parallel = false);

/// Composite from level `from` to level `to` (identity when equal).
SparseMatrix composite(const VectorSystem& s, std::size_t from, std::size_t to);

/// Dimension of the direct limit of the finite chain.  A finite chain has
/// its last level as colimit, so this is dims.back(); the image of level m
/// inside it has dimension surviving_dim(s, m).
std::size_t colim_dim(const VectorSystem& s);
std::size_t surviving_dim(const VectorSystem& s, std::size_t from);
/// Smallest L >= 1 such that the composite from -> from+L is zero, if the
/// chain is long enough to see it.
std::optional<std::size_t> steps_to_vanish(const VectorSystem& s, std::size_t from);

enum class CheckStatus { Pass, Fail, Skipped };

struct Witness {
  std::string description;
  SparseVector vector;
};

struct CertificateCheck {
  std::string name;
  /// The mathematical statement the check instantiates.
  std::string claim;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<Witness> witness;
};

struct LevelSummary {
  std::size_t level;
  std::size_t dim;
  std::vector<std::size_t> tor_dims;
  std::vector<std::size_t> dual_ext_dims;
};

struct Certificate {
  std::size_t ambient = 0;
  FieldSpec field;
  std::vector<LevelSummary> levels;
  std::vector<CertificateCheck> checks;
  std::string conclusion;

  bool passed() const;
  std::size_t failures() const;
};

struct CertificateOptions {
  /// Fan per-level work out to threads; the report is identical either way.
  bool parallel = true;
  /// Added to level numbers in names and summaries, for sub-chains.
  std::size_t level_offset = 0;
};

/// Runs every finite check on a directed system, ordered by level then
/// degree.  Failures carry witnesses; nothing throws for mathematical
/// failures.
Certificate vanishing_certificate(const DirectedSystem& s, CertificateOptions options = {});

/// vanishing_certificate(paper_system(N)) plus the identification of the
/// top level with subset_module(N).
Certificate paper_certificate(std::size_t ambient, FieldSpec field, CertificateOptions options = {});

std::string to_string(CheckStatus status);

}  // namespace acyclic
