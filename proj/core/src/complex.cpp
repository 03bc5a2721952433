#include "acyclic/complex.hpp"

#include <string>

namespace acyclic {
namespace {

std::string degree_text(int j) { return std::to_string(j); }

std::size_t offset(const ChainComplex& c, int j) {
  return static_cast<std::size_t>(j - c.min_degree());
}

}  // namespace

// --- ChainComplex -----------------------------------------------------------

ChainComplex::ChainComplex(FieldSpec field, int min_degree, std::vector<std::size_t> term_dims,
                           std::vector<SparseMatrix> maps, Orientation orientation)
    : field_(field),
      min_degree_(min_degree),
      terms_(std::move(term_dims)),
      maps_(std::move(maps)),
      orientation_(orientation) {
  if (terms_.empty()) throw InvariantViolation("a complex needs at least one term");
  if (maps_.size() + 1 != terms_.size()) {
    throw InvariantViolation("a complex with " + std::to_string(terms_.size()) + " terms needs " +
                             std::to_string(terms_.size() - 1) + " differentials");
  }
  const bool homological = orientation_ == Orientation::Homological;
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& m = maps_[k];
    const std::size_t expected_rows = homological ? terms_[k] : terms_[k + 1];
    const std::size_t expected_cols = homological ? terms_[k + 1] : terms_[k];
    if (m.field() != field_ || m.rows() != expected_rows || m.cols() != expected_cols) {
      throw InvariantViolation("differential between degrees " + degree_text(min_degree_ + int(k)) +
                               " and " + degree_text(min_degree_ + int(k) + 1) +
                               " has the wrong shape or field");
    }
  }
  for (std::size_t k = 0; k + 1 < maps_.size(); ++k) {
    const SparseMatrix dd = homological ? maps_[k] * maps_[k + 1] : maps_[k + 1] * maps_[k];
    if (!dd.is_zero()) {
      std::size_t col = 0;
      while (dd.column(col).empty()) ++col;
      const int from = homological ? min_degree_ + int(k) + 2 : min_degree_ + int(k);
      throw InvariantViolation("d^2 != 0 on degree " + degree_text(from) + "; witness " +
                               format_vector(unit_vector(field_, col)));
    }
  }
  const std::size_t lo_dim = terms_.front();
  const std::size_t hi_dim = terms_.back();
  zero_out_ = SparseMatrix(field_, 0, homological ? lo_dim : hi_dim);
  zero_in_ = SparseMatrix(field_, homological ? hi_dim : lo_dim, 0);
}

std::size_t ChainComplex::term_dim(int j) const {
  return has_degree(j) ? terms_[offset(*this, j)] : 0;
}

const SparseMatrix& ChainComplex::outgoing(int j) const {
  if (!has_degree(j)) throw DimensionMismatch("degree " + degree_text(j) + " outside the complex");
  if (orientation_ == Orientation::Homological) {
    return j == min_degree() ? zero_out_ : maps_[offset(*this, j) - 1];
  }
  return j == max_degree() ? zero_out_ : maps_[offset(*this, j)];
}

const SparseMatrix& ChainComplex::incoming(int j) const {
  if (!has_degree(j)) throw DimensionMismatch("degree " + degree_text(j) + " outside the complex");
  if (orientation_ == Orientation::Homological) {
    return j == max_degree() ? zero_in_ : maps_[offset(*this, j)];
  }
  return j == min_degree() ? zero_in_ : maps_[offset(*this, j) - 1];
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  for (int j = min_degree(); j <= max_degree(); ++j) {
    const auto d = static_cast<long long>(term_dim(j));
    chi += (j % 2 == 0) ? d : -d;
  }
  return chi;
}

ChainComplex dualize_complex(const ChainComplex& c) {
  std::vector<SparseMatrix> maps;
  maps.reserve(c.maps().size());
  for (const auto& m : c.maps()) maps.push_back(m.transpose());
  const auto flipped = c.orientation() == Orientation::Homological ? Orientation::Cohomological
                                                                    : Orientation::Homological;
  return ChainComplex(c.field(), c.min_degree(), c.term_dims(), std::move(maps), flipped);
}

// --- ChainMap ---------------------------------------------------------------

std::optional<ChainMapFailure> check_chain_map(const ChainComplex& source,
                                               const ChainComplex& target,
                                               const std::vector<SparseMatrix>& components) {
  for (int j = source.min_degree(); j <= source.max_degree(); ++j) {
    const int next = source.step(j);
    if (!source.has_degree(next)) continue;
    const auto& fj = components[offset(source, j)];
    const auto& fnext = components[offset(source, next)];
    auto diff = first_difference(target.outgoing(j) * fj, fnext * source.outgoing(j));
    if (diff) return ChainMapFailure{j, unit_vector(source.field(), diff->column)};
  }
  return std::nullopt;
}

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> source,
                   std::shared_ptr<const ChainComplex> target,
                   std::vector<SparseMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_->min_degree() != target_->min_degree() ||
      source_->max_degree() != target_->max_degree() ||
      source_->orientation() != target_->orientation() || source_->field() != target_->field()) {
    throw InvariantViolation("chain map between complexes of different shape");
  }
  if (components_.size() != source_->term_dims().size()) {
    throw InvariantViolation("chain map needs one component per degree");
  }
  for (int j = source_->min_degree(); j <= source_->max_degree(); ++j) {
    const auto& fj = components_[offset(*source_, j)];
    if (fj.rows() != target_->term_dim(j) || fj.cols() != source_->term_dim(j)) {
      throw InvariantViolation("chain map component in degree " + degree_text(j) +
                               " has the wrong shape");
    }
  }
  if (auto failure = check_chain_map(*source_, *target_, components_)) {
    throw InvariantViolation("chain map does not commute with d in degree " +
                             degree_text(failure->degree) + "; witness " +
                             format_vector(failure->witness));
  }
}

ChainMap ChainMap::identity(std::shared_ptr<const ChainComplex> c) {
  std::vector<SparseMatrix> comps;
  for (auto d : c->term_dims()) comps.push_back(SparseMatrix::identity(c->field(), d));
  return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(std::shared_ptr<const ChainComplex> source,
                        std::shared_ptr<const ChainComplex> target) {
  std::vector<SparseMatrix> comps;
  for (int j = source->min_degree(); j <= source->max_degree(); ++j) {
    comps.emplace_back(source->field(), target->term_dim(j), source->term_dim(j));
  }
  return ChainMap(std::move(source), std::move(target), std::move(comps));
}

const SparseMatrix& ChainMap::component(int j) const {
  if (!source_->has_degree(j)) throw DimensionMismatch("degree outside the chain map");
  return components_[offset(*source_, j)];
}

// --- Homotopy ---------------------------------------------------------------

std::optional<HomotopyDefect> check_homotopy(const ChainMap& f, const ChainMap& g,
                                             const std::vector<SparseMatrix>& components) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  if (&g.source() != &src && !(g.source() == src)) {
    throw InvariantViolation("homotopy between maps with different sources");
  }
  if (&g.target() != &tgt && !(g.target() == tgt)) {
    throw InvariantViolation("homotopy between maps with different targets");
  }
  if (components.size() != src.term_dims().size()) {
    throw InvariantViolation("homotopy needs one component per degree");
  }
  for (int j = src.min_degree(); j <= src.max_degree(); ++j) {
    const auto& hj = components[offset(src, j)];
    const int raised = tgt.orientation() == Orientation::Homological ? j + 1 : j - 1;
    if (hj.rows() != tgt.term_dim(raised) || hj.cols() != src.term_dim(j)) {
      throw InvariantViolation("homotopy component in degree " + degree_text(j) +
                               " has the wrong shape");
    }
  }
  for (int j = src.min_degree(); j <= src.max_degree(); ++j) {
    const auto& hj = components[offset(src, j)];
    SparseMatrix lhs = tgt.incoming(j) * hj;
    const int lowered = src.step(j);
    if (src.has_degree(lowered)) lhs = lhs + components[offset(src, lowered)] * src.outgoing(j);
    const SparseMatrix rhs = f.component(j) - g.component(j);
    if (auto diff = first_difference(lhs, rhs)) {
      return HomotopyDefect{j, unit_vector(src.field(), diff->column), diff->difference};
    }
  }
  return std::nullopt;
}

Homotopy::Homotopy(ChainMap f, ChainMap g, std::vector<SparseMatrix> components)
    : f_(std::move(f)), g_(std::move(g)), components_(std::move(components)) {
  if (auto defect = check_homotopy(f_, g_, components_)) {
    throw InvariantViolation("d h + h d != f - g in degree " + degree_text(defect->degree) +
                             "; witness " + format_vector(defect->witness));
  }
}

const SparseMatrix& Homotopy::component(int j) const {
  if (!f_.source().has_degree(j)) throw DimensionMismatch("degree outside the homotopy");
  return components_[offset(f_.source(), j)];
}

// --- Homology ---------------------------------------------------------------

HomologyTable::HomologyTable(FieldSpec field, Orientation orientation,
                             std::vector<DegreeHomology> degrees)
    : field_(field), orientation_(orientation), degrees_(std::move(degrees)) {}

const DegreeHomology& HomologyTable::at(int degree) const {
  const int k = degree - min_degree();
  if (k < 0 || k >= static_cast<int>(degrees_.size())) {
    throw DimensionMismatch("degree " + degree_text(degree) + " outside the homology table");
  }
  return degrees_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> HomologyTable::dims() const {
  std::vector<std::size_t> out;
  out.reserve(degrees_.size());
  for (const auto& d : degrees_) out.push_back(d.dim);
  return out;
}

std::vector<Scalar> HomologyTable::class_of(int degree, const SparseVector& y) const {
  const auto& h = at(degree);
  auto coords = h.representatives.coordinates(h.boundaries.reduce(y));
  if (!coords) {
    throw InvariantViolation("vector in degree " + degree_text(degree) + " is not a cycle");
  }
  return *coords;
}

HomologyTable homology(const ChainComplex& c) {
  std::vector<DegreeHomology> degrees;
  for (int j = c.min_degree(); j <= c.max_degree(); ++j) {
    Subspace cycles = kernel(c.outgoing(j));
    Subspace boundaries = image(c.incoming(j));
    std::vector<SparseVector> reduced;
    reduced.reserve(cycles.dim());
    for (const auto& z : cycles.basis()) {
      auto r = boundaries.reduce(z);
      if (!r.empty()) reduced.push_back(std::move(r));
    }
    Subspace reps = Subspace::span(c.field(), c.term_dim(j), std::move(reduced));
    if (reps.dim() + boundaries.dim() != cycles.dim()) {
      throw InvariantViolation("boundaries are not contained in cycles in degree " +
                               degree_text(j));
    }
    const std::size_t dim = reps.dim();
    degrees.push_back(DegreeHomology{j, dim, std::move(boundaries), std::move(reps)});
  }
  return HomologyTable(c.field(), c.orientation(), std::move(degrees));
}

std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  std::vector<std::size_t> ranks;
  ranks.reserve(c.maps().size());
  for (const auto& m : c.maps()) ranks.push_back(rank(m));
  std::vector<std::size_t> dims;
  for (int j = c.min_degree(); j <= c.max_degree(); ++j) {
    const std::size_t k = offset(c, j);
    std::size_t d = c.term_dim(j);
    if (k > 0) d -= ranks[k - 1];
    if (k < ranks.size()) d -= ranks[k];
    dims.push_back(d);
  }
  return dims;
}

std::vector<SparseMatrix> induced_on_homology(const ChainMap& f, const HomologyTable& source,
                                              const HomologyTable& target) {
  std::vector<SparseMatrix> out;
  const auto field = f.source().field();
  for (int j = f.source().min_degree(); j <= f.source().max_degree(); ++j) {
    const auto& src = source.at(j);
    std::vector<SparseVector> columns;
    columns.reserve(src.dim);
    for (const auto& z : src.representatives.basis()) {
      auto coords = target.class_of(j, f.component(j).apply(z));
      columns.push_back(from_dense(coords));
    }
    out.push_back(SparseMatrix::from_columns(field, target.at(j).dim, std::move(columns)));
  }
  return out;
}

std::vector<SparseMatrix> induced_on_homology(const ChainMap& f) {
  return induced_on_homology(f, homology(f.source()), homology(f.target()));
}

}  // namespace acyclic
