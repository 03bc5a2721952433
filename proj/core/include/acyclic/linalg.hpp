#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "acyclic/errors.hpp"
#include "acyclic/sparse_matrix.hpp"

namespace acyclic {

/// A subspace of F^n held in reduced column echelon form: basis vectors are
/// ordered by pivot (the smallest index with a nonzero entry), each is 1 at
/// its own pivot and every other basis vector is 0 there.  Equal subspaces
/// therefore have identical bases.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^ambient_dim.
  Subspace(FieldSpec field, std::size_t ambient_dim);

  static Subspace span(FieldSpec field, std::size_t ambient_dim,
                       std::vector<SparseVector> generators);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);

  FieldSpec field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus the unique element of the subspace agreeing with v on every
  /// pivot; zero iff v lies in the subspace.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(), or nullopt when v is outside.
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

  /// Basis vectors as columns of an ambient_dim x dim matrix.
  SparseMatrix to_matrix() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace kernel(const SparseMatrix&);
  Subspace(FieldSpec field, std::size_t ambient_dim, std::vector<SparseVector> canonical_basis);

  std::optional<std::size_t> basis_index_of_pivot(std::size_t coordinate) const;

  FieldSpec field_;
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// inner is not contained in outer; witness() is an inner basis vector
/// lying outside outer.
class InclusionFailure : public Error {
 public:
  explicit InclusionFailure(SparseVector witness);
  const SparseVector& witness() const { return witness_; }

 private:
  SparseVector witness_;
};

/// Reduced row echelon form of the span of `rows` (vectors of length
/// `width`), pivots at the leftmost nonzero entry, rows sorted by pivot.
std::vector<SparseVector> reduced_row_echelon(FieldSpec field, std::size_t width,
                                              std::vector<SparseVector> rows);

/// Rank by sparse elimination with Markowitz-style pivoting: the active row
/// with fewest entries (lowest index on ties), then within it the column
/// with fewest active entries (lowest index on ties).
std::size_t rank(const SparseMatrix& m);

Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);

/// Some x with m x = b, or nullopt.  Free variables are set to zero, so the
/// answer is the pivot solution of the reduced echelon form of [m | b].
/// Throws DimensionMismatch unless b.size() == m.rows().
std::optional<std::vector<Scalar>> solve(const SparseMatrix& m, std::span<const Scalar> b);
/// Column-by-column solve of m X = rhs with the same conventions.
std::vector<std::optional<SparseVector>> solve_columns(const SparseMatrix& m,
                                                       const SparseMatrix& rhs);

/// dim(outer) - dim(inner) after checking inner is inside outer.
std::size_t quotient_dim(const Subspace& outer, const Subspace& inner);

}  // namespace acyclic
