#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acyclic/field.hpp"
#include "acyclic/scalar.hpp"

namespace acyclic {

struct Entry {
  std::size_t index;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by index, no zero values, no repeated indices.
using SparseVector = std::vector<Entry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Unit vector e_i.
SparseVector unit_vector(FieldSpec field, std::size_t i);
/// a + c * b, dropping cancelled entries.
SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b);
SparseVector scaled(const SparseVector& v, const Scalar& c);
std::vector<Scalar> to_dense(FieldSpec field, const SparseVector& v, std::size_t dim);
SparseVector from_dense(std::span<const Scalar> values);

/// Exact sparse matrix stored by columns.  Entries are never zero and each
/// column is sorted by row, so two matrices are equal iff their storage is.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  /// The zero matrix.
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  /// Throws DimensionMismatch on out-of-range or duplicate positions and
  /// FieldMismatch on foreign scalars.  Zero values are dropped.
  static SparseMatrix from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);
  /// Columns must already be canonical sparse vectors with indices < rows.
  static SparseMatrix from_columns(FieldSpec field, std::size_t rows,
                                   std::vector<SparseVector> columns);
  /// Row-major integer literal, mainly for tests.
  static SparseMatrix from_ints(FieldSpec field,
                                const std::vector<std::vector<long long>>& rows);
  static SparseMatrix identity(FieldSpec field, std::size_t n);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols(); }

  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseVector>& columns() const { return columns_; }
  Scalar at(std::size_t i, std::size_t j) const;
  /// All entries sorted by (row, col).
  std::vector<Triplet> triplets() const;
  /// Rows as sparse vectors over column indices.
  std::vector<SparseVector> row_vectors() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix scaled(const Scalar& c) const;

  /// Kronecker product; (a (x) b)[(i*b.rows + k), (j*b.cols + l)] = a[i,j] b[k,l].
  static SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
  /// [a | b]
  static SparseMatrix hstack(const std::vector<SparseMatrix>& blocks, FieldSpec field,
                             std::size_t rows);
  /// [a ; b]
  static SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, FieldSpec field,
                             std::size_t cols);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// First column index and vector where a and b differ, if any.
struct MatrixDifference {
  std::size_t column;
  SparseVector difference;  // a e_column - b e_column
};
std::optional<MatrixDifference> first_difference(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace acyclic

namespace acyclic {
/// "[(i: v), ...]" rendering for messages.
std::string format_vector(const SparseVector& v);
}  // namespace acyclic
