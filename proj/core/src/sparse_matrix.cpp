#include "acyclic/sparse_matrix.hpp"

#include <algorithm>
#include <string>

#include "acyclic/errors.hpp"

namespace acyclic {
namespace {

// Sorts, merges repeated indices by summation and drops zeros.
SparseVector combine(std::vector<Entry> raw) {
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Entry& x, const Entry& y) { return x.index < y.index; });
  SparseVector out;
  out.reserve(raw.size());
  for (auto& e : raw) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
      if (out.back().value.is_zero()) out.pop_back();
    } else if (!e.value.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

void require_field(FieldSpec expected, const Scalar& s) {
  if (s.field() != expected) {
    throw FieldMismatch("scalar in " + s.field().to_string() + " used in a matrix over " +
                        expected.to_string());
  }
}

std::string shape(const SparseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

SparseVector unit_vector(FieldSpec field, std::size_t i) {
  return SparseVector{Entry{i, Scalar::one(field)}};
}

SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
  if (c.is_zero()) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->index < ib->index)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->index < ia->index) {
      out.push_back(Entry{ib->index, c * ib->value});
      ++ib;
    } else {
      Scalar v = ia->value;
      v += c * ib->value;
      if (!v.is_zero()) out.push_back(Entry{ia->index, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVector out = v;
  for (auto& e : out) e.value *= c;
  return out;
}

std::vector<Scalar> to_dense(FieldSpec field, const SparseVector& v, std::size_t dim) {
  std::vector<Scalar> out(dim, Scalar::zero(field));
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

SparseVector from_dense(std::span<const Scalar> values) {
  SparseVector out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) out.push_back(Entry{i, values[i]});
  }
  return out;
}

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  SparseMatrix m(field, rows, cols);
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    auto& t = triplets[k];
    if (t.row >= rows || t.col >= cols) {
      throw DimensionMismatch("entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                              ") outside a " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " matrix");
    }
    if (k > 0 && triplets[k - 1].row == t.row && triplets[k - 1].col == t.col) {
      throw DimensionMismatch("duplicate entry (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ")");
    }
    require_field(field, t.value);
    if (!t.value.is_zero()) m.columns_[t.col].push_back(Entry{t.row, std::move(t.value)});
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(FieldSpec field, std::size_t rows,
                                        std::vector<SparseVector> columns) {
  for (const auto& col : columns) {
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].index >= rows || (k > 0 && col[k - 1].index >= col[k].index) ||
          col[k].value.is_zero()) {
        throw DimensionMismatch("column is not a canonical sparse vector of length " +
                                std::to_string(rows));
      }
      require_field(field, col[k].value);
    }
  }
  SparseMatrix m(field, rows, 0);
  m.columns_ = std::move(columns);
  return m;
}

SparseMatrix SparseMatrix::from_ints(FieldSpec field,
                                     const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged integer matrix literal");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] != 0) t.push_back(Triplet{i, j, Scalar::from_int(field, rows[i][j])});
    }
  }
  return from_triplets(field, r, c, std::move(t));
}

SparseMatrix SparseMatrix::identity(FieldSpec field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back(Entry{i, Scalar::one(field)});
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols()) throw DimensionMismatch("matrix index out of range");
  const auto& col = columns_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const Entry& e, std::size_t idx) { return e.index < idx; });
  if (it != col.end() && it->index == i) return it->value;
  return Scalar::zero(field_);
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) out.push_back(Triplet{e.index, j, e.value});
  }
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) rows[e.index].push_back(Entry{j, e.value});
  }
  return rows;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols(), 0);
  t.columns_ = row_vectors();
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<Entry> raw;
  for (const auto& e : v) {
    if (e.index >= cols()) throw DimensionMismatch("vector index exceeds matrix columns");
    for (const auto& a : columns_[e.index]) raw.push_back(Entry{a.index, a.value * e.value});
  }
  return combine(std::move(raw));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  }
  if (a.field() != b.field()) throw FieldMismatch("matrix product across fields");
  SparseMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot add " + shape(a) + " and " + shape(b));
  }
  if (a.field() != b.field()) throw FieldMismatch("matrix sum across fields");
  SparseMatrix out(a.field(), a.rows(), a.cols());
  const Scalar one = Scalar::one(a.field());
  for (std::size_t j = 0; j < a.cols(); ++j) out.columns_[j] = axpy(a.columns_[j], one, b.columns_[j]);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  return a + b.scaled(-Scalar::one(b.field()));
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  require_field(field_, c);
  SparseMatrix out(field_, rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j] = acyclic::scaled(columns_[j], c);
  return out;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("Kronecker product across fields");
  SparseMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t l = 0; l < b.cols(); ++l) {
      auto& col = out.columns_[j * b.cols() + l];
      col.reserve(a.columns_[j].size() * b.columns_[l].size());
      for (const auto& ea : a.columns_[j]) {
        for (const auto& eb : b.columns_[l]) {
          col.push_back(Entry{ea.index * b.rows() + eb.index, ea.value * eb.value});
        }
      }
    }
  }
  return out;
}

SparseMatrix SparseMatrix::hstack(const std::vector<SparseMatrix>& blocks, FieldSpec field,
                                  std::size_t rows) {
  SparseMatrix out(field, rows, 0);
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatch("hstack: row counts differ");
    if (b.field() != field) throw FieldMismatch("hstack across fields");
    out.columns_.insert(out.columns_.end(), b.columns_.begin(), b.columns_.end());
  }
  return out;
}

SparseMatrix SparseMatrix::vstack(const std::vector<SparseMatrix>& blocks, FieldSpec field,
                                  std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack: column counts differ");
    if (b.field() != field) throw FieldMismatch("vstack across fields");
    rows += b.rows();
  }
  SparseMatrix out(field, rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (const auto& e : b.columns_[j]) out.columns_[j].push_back(Entry{e.index + offset, e.value});
    }
    offset += b.rows();
  }
  return out;
}

std::optional<MatrixDifference> first_difference(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot compare " + shape(a) + " with " + shape(b));
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.column(j) != b.column(j)) {
      return MatrixDifference{j, axpy(a.column(j), -Scalar::one(a.field()), b.column(j))};
    }
  }
  return std::nullopt;
}

}  // namespace acyclic

namespace acyclic {
std::string format_vector(const SparseVector& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(v[k].index) + ": " + v[k].value.to_string();
  }
  return out + "]";
}
}  // namespace acyclic
