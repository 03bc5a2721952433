#include "acyclic/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace acyclic {
namespace {

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

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

const Scalar* find_entry(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  return it != v.end() && it->index == index ? &it->value : nullptr;
}

// Dense scratch row with a touched list; sized once per elimination.
class Accumulator {
 public:
  Accumulator(FieldSpec field, std::size_t width)
      : zero_(Scalar::zero(field)), values_(width, zero_), used_(width, 0) {}

  // Returns true if the index was not touched before.
  bool load(std::size_t i, const Scalar& v) {
    bool fresh = !used_[i];
    if (fresh) {
      used_[i] = 1;
      touched_.push_back(i);
    }
    values_[i] = v;
    return fresh;
  }

  bool sub_product(std::size_t i, const Scalar& a, const Scalar& b) {
    bool fresh = !used_[i];
    if (fresh) {
      used_[i] = 1;
      touched_.push_back(i);
      values_[i] = zero_;
    }
    values_[i].sub_product(a, b);
    return fresh;
  }

  Scalar& operator[](std::size_t i) { return values_[i]; }

  SparseVector extract(std::size_t from) {
    SparseVector out;
    std::sort(touched_.begin(), touched_.end());
    for (std::size_t i : touched_) {
      if (i >= from && !values_[i].is_zero()) out.push_back(Entry{i, values_[i]});
    }
    return out;
  }

  void clear() {
    for (std::size_t i : touched_) {
      used_[i] = 0;
      values_[i] = zero_;
    }
    touched_.clear();
  }

 private:
  Scalar zero_;
  std::vector<Scalar> values_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
};

SparseVector flip(const SparseVector& v, std::size_t width) {
  SparseVector out;
  out.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    out.push_back(Entry{width - 1 - it->index, it->value});
  }
  return out;
}

}  // namespace

std::vector<SparseVector> reduced_row_echelon(FieldSpec field, std::size_t width,
                                              std::vector<SparseVector> rows) {
  std::vector<SparseVector> echelon;
  std::vector<std::size_t> row_of_pivot(width, kNoPivot);
  Accumulator acc(field, width);

  // Forward pass: each stored row has a leading 1 and no entries before it.
  for (auto& v : rows) {
    if (v.empty()) continue;
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
    for (const auto& e : v) {
      if (e.index >= width) throw DimensionMismatch("vector entry beyond echelon width");
      acc.load(e.index, e.value);
      heap.push(e.index);
    }
    std::size_t lead = kNoPivot;
    std::size_t last = kNoPivot;
    while (!heap.empty()) {
      std::size_t i = heap.top();
      heap.pop();
      if (i == last) continue;
      last = i;
      if (acc[i].is_zero()) continue;
      std::size_t r = row_of_pivot[i];
      if (r == kNoPivot) {
        lead = i;
        break;
      }
      Scalar c = acc[i];
      for (const auto& e : echelon[r]) {
        if (acc.sub_product(e.index, c, e.value) && e.index != i) heap.push(e.index);
      }
    }
    if (lead != kNoPivot) {
      SparseVector row = acc.extract(lead);
      Scalar inv = row.front().value.inverse();
      for (auto& e : row) e.value *= inv;
      row_of_pivot[lead] = echelon.size();
      echelon.push_back(std::move(row));
    }
    acc.clear();
  }

  // Back substitution, largest pivot first; rows with larger pivots are final.
  std::vector<std::size_t> order(echelon.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return echelon[a].front().index > echelon[b].front().index;
  });
  for (std::size_t k : order) {
    SparseVector& row = echelon[k];
    std::vector<std::pair<Scalar, std::size_t>> hits;
    for (std::size_t e = 1; e < row.size(); ++e) {
      std::size_t r = row_of_pivot[row[e].index];
      if (r != kNoPivot) hits.emplace_back(row[e].value, r);
    }
    if (hits.empty()) continue;
    std::vector<Entry> raw(row.begin(), row.end());
    for (const auto& [c, r] : hits) {
      for (const auto& e : echelon[r]) raw.push_back(Entry{e.index, -(c * e.value)});
    }
    row = combine(std::move(raw));
  }

  std::sort(echelon.begin(), echelon.end(), [](const SparseVector& a, const SparseVector& b) {
    return a.front().index < b.front().index;
  });
  return echelon;
}

// --- Subspace -------------------------------------------------------------

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim)
    : field_(field), ambient_dim_(ambient_dim) {}

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim,
                   std::vector<SparseVector> canonical_basis)
    : field_(field), ambient_dim_(ambient_dim), basis_(std::move(canonical_basis)) {
  pivots_.reserve(basis_.size());
  for (const auto& b : basis_) pivots_.push_back(b.front().index);
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim,
                        std::vector<SparseVector> generators) {
  return Subspace(field, ambient_dim,
                  reduced_row_echelon(field, ambient_dim, std::move(generators)));
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  std::vector<SparseVector> basis;
  basis.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(field, i));
  return Subspace(field, ambient_dim, std::move(basis));
}

std::optional<std::size_t> Subspace::basis_index_of_pivot(std::size_t coordinate) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), coordinate);
  if (it != pivots_.end() && *it == coordinate) {
    return static_cast<std::size_t>(it - pivots_.begin());
  }
  return std::nullopt;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  std::vector<Entry> raw(v.begin(), v.end());
  bool hit = false;
  for (const auto& e : v) {
    if (auto k = basis_index_of_pivot(e.index)) {
      hit = true;
      for (const auto& b : basis_[*k]) raw.push_back(Entry{b.index, -(e.value * b.value)});
    }
  }
  if (!hit) return v;
  return combine(std::move(raw));
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const SparseVector& b) { return contains(b); });
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Scalar> coords(dim(), Scalar::zero(field_));
  for (const auto& e : v) {
    if (auto k = basis_index_of_pivot(e.index)) coords[*k] = e.value;
  }
  return coords;
}

SparseMatrix Subspace::to_matrix() const {
  return SparseMatrix::from_columns(field_, ambient_dim_, basis_);
}

InclusionFailure::InclusionFailure(SparseVector witness)
    : Error("subspace inclusion fails: a basis vector of the inner space lies outside the outer space"),
      witness_(std::move(witness)) {}

// --- rank / kernel / image / solve ----------------------------------------

std::size_t rank(const SparseMatrix& m) {
  std::vector<SparseVector> rows = m.row_vectors();
  const std::size_t ncols = m.cols();
  std::vector<std::size_t> col_count(ncols, 0);
  std::vector<std::vector<std::size_t>> col_rows(ncols);
  std::vector<char> alive(rows.size(), 1);
  std::set<std::pair<std::size_t, std::size_t>> active;

  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) {
      ++col_count[e.index];
      col_rows[e.index].push_back(r);
    }
    if (!rows[r].empty()) active.emplace(rows[r].size(), r);
  }

  std::size_t result = 0;
  while (!active.empty()) {
    const std::size_t r = active.begin()->second;
    active.erase(active.begin());
    alive[r] = 0;
    const SparseVector pivot_row = std::move(rows[r]);

    std::size_t c = pivot_row.front().index;
    for (const auto& e : pivot_row) {
      if (col_count[e.index] < col_count[c]) c = e.index;
    }
    for (const auto& e : pivot_row) --col_count[e.index];
    const Scalar pivot_inv = find_entry(pivot_row, c)->inverse();

    for (std::size_t r2 : col_rows[c]) {
      if (!alive[r2]) continue;
      const Scalar* hit = find_entry(rows[r2], c);
      if (hit == nullptr) continue;
      const Scalar factor = -(*hit * pivot_inv);
      active.erase({rows[r2].size(), r2});
      SparseVector updated = axpy(rows[r2], factor, pivot_row);
      for (const auto& e : rows[r2]) --col_count[e.index];
      for (const auto& e : updated) {
        ++col_count[e.index];
        if (find_entry(rows[r2], e.index) == nullptr) col_rows[e.index].push_back(r2);
      }
      rows[r2] = std::move(updated);
      if (!rows[r2].empty()) active.emplace(rows[r2].size(), r2);
    }
    col_rows[c].clear();
    ++result;
  }
  return result;
}

Subspace kernel(const SparseMatrix& m) {
  const std::size_t width = m.cols();
  if (width == 0) return Subspace(m.field(), 0);
  std::vector<SparseVector> flipped;
  for (auto& row : m.row_vectors()) {
    if (!row.empty()) flipped.push_back(flip(row, width));
  }
  // Pivots at the largest original index make e_f - sum(...) echelon at f.
  auto echelon = reduced_row_echelon(m.field(), width, std::move(flipped));

  std::vector<char> is_pivot(width, 0);
  std::vector<SparseVector> rows;
  rows.reserve(echelon.size());
  for (const auto& row : echelon) {
    rows.push_back(flip(row, width));
    is_pivot[rows.back().back().index] = 1;
  }

  std::vector<SparseVector> basis(width);
  for (std::size_t f = 0; f < width; ++f) {
    if (!is_pivot[f]) basis[f].push_back(Entry{f, Scalar::one(m.field())});
  }
  // Rows are visited with increasing pivots, so each basis vector stays sorted.
  std::sort(rows.begin(), rows.end(), [](const SparseVector& a, const SparseVector& b) {
    return a.back().index < b.back().index;
  });
  for (const auto& row : rows) {
    const std::size_t p = row.back().index;
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      basis[row[k].index].push_back(Entry{p, -row[k].value});
    }
  }
  std::vector<SparseVector> canonical;
  canonical.reserve(width - rows.size());
  for (std::size_t f = 0; f < width; ++f) {
    if (!is_pivot[f]) canonical.push_back(std::move(basis[f]));
  }
  return Subspace(m.field(), width, std::move(canonical));
}

Subspace image(const SparseMatrix& m) {
  return Subspace::span(m.field(), m.rows(), m.columns());
}

std::vector<std::optional<SparseVector>> solve_columns(const SparseMatrix& m,
                                                       const SparseMatrix& rhs) {
  if (rhs.rows() != m.rows()) {
    throw DimensionMismatch("right-hand side has " + std::to_string(rhs.rows()) +
                            " rows, matrix has " + std::to_string(m.rows()));
  }
  if (rhs.field() != m.field()) throw FieldMismatch("solve across fields");
  const std::size_t n = m.cols();
  auto rows = m.row_vectors();
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (const auto& e : rhs.column(j)) rows[e.index].push_back(Entry{n + j, e.value});
  }
  auto echelon = reduced_row_echelon(m.field(), n + rhs.cols(), std::move(rows));

  std::vector<char> consistent(rhs.cols(), 1);
  for (const auto& row : echelon) {
    if (row.front().index >= n) {
      for (const auto& e : row) consistent[e.index - n] = 0;
    }
  }
  std::vector<std::vector<Entry>> raw(rhs.cols());
  for (const auto& row : echelon) {
    const std::size_t p = row.front().index;
    if (p >= n) continue;
    for (const auto& e : row) {
      if (e.index >= n) raw[e.index - n].push_back(Entry{p, e.value});
    }
  }
  std::vector<std::optional<SparseVector>> out(rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    if (consistent[j]) out[j] = combine(std::move(raw[j]));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const SparseMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()) +
                            ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  auto rhs = SparseMatrix::from_columns(m.field(), m.rows(), {from_dense(b)});
  auto x = solve_columns(m, rhs).front();
  if (!x) return std::nullopt;
  return to_dense(m.field(), *x, m.cols());
}

std::size_t quotient_dim(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) {
    throw DimensionMismatch("subspaces live in different ambient spaces");
  }
  for (const auto& b : inner.basis()) {
    if (!outer.contains(b)) throw InclusionFailure(b);
  }
  return outer.dim() - inner.dim();
}

}  // namespace acyclic
