#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "acyclic/linalg.hpp"
#include "acyclic/sparse_matrix.hpp"

namespace acyclic {

enum class Orientation { Homological, Cohomological };

/// A bounded complex of finite-dimensional spaces over degrees
/// [min_degree, max_degree].  Homological differentials lower the degree,
/// cohomological ones raise it.
class ChainComplex {
 public:
  /// maps[k] joins degrees min+k and min+k+1: d_{min+k+1} for homological
  /// complexes, delta^{min+k} for cohomological ones.  Throws
  /// InvariantViolation on shape errors or when a composite of consecutive
  /// differentials is nonzero.
  ChainComplex(FieldSpec field, int min_degree, std::vector<std::size_t> term_dims,
               std::vector<SparseMatrix> maps, Orientation orientation);

  FieldSpec field() const { return field_; }
  Orientation orientation() const { return orientation_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(terms_.size()) - 1; }
  bool has_degree(int j) const { return j >= min_degree() && j <= max_degree(); }
  std::size_t term_dim(int j) const;
  const std::vector<std::size_t>& term_dims() const { return terms_; }
  const std::vector<SparseMatrix>& maps() const { return maps_; }

  /// Degree reached by the differential leaving degree j (j - 1 or j + 1).
  int step(int j) const { return orientation_ == Orientation::Homological ? j - 1 : j + 1; }
  /// The differential leaving degree j; a 0-row matrix at the boundary.
  const SparseMatrix& outgoing(int j) const;
  /// The differential arriving in degree j; a 0-column matrix at the boundary.
  const SparseMatrix& incoming(int j) const;

  long long euler_characteristic() const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  FieldSpec field_;
  int min_degree_;
  std::vector<std::size_t> terms_;
  std::vector<SparseMatrix> maps_;
  Orientation orientation_;
  SparseMatrix zero_out_;
  SparseMatrix zero_in_;
};

/// Transposed differentials, orientation flipped, same degrees.
ChainComplex dualize_complex(const ChainComplex& c);

struct ChainMapFailure {
  int degree;
  SparseVector witness;  // source vector where F d and d F differ
};

/// A degree-preserving map of complexes commuting with the differentials.
class ChainMap {
 public:
  /// components[k] acts in degree min+k.  Throws InvariantViolation if the
  /// shapes are wrong or F d != d F somewhere.
  ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
           std::vector<SparseMatrix> components);

  static ChainMap identity(std::shared_ptr<const ChainComplex> c);
  static ChainMap zero(std::shared_ptr<const ChainComplex> source,
                       std::shared_ptr<const ChainComplex> target);

  const ChainComplex& source() const { return *source_; }
  const ChainComplex& target() const { return *target_; }
  const std::shared_ptr<const ChainComplex>& source_ptr() const { return source_; }
  const std::shared_ptr<const ChainComplex>& target_ptr() const { return target_; }
  const SparseMatrix& component(int j) const;
  const std::vector<SparseMatrix>& components() const { return components_; }

 private:
  std::shared_ptr<const ChainComplex> source_;
  std::shared_ptr<const ChainComplex> target_;
  std::vector<SparseMatrix> components_;
};

std::optional<ChainMapFailure> check_chain_map(const ChainComplex& source,
                                               const ChainComplex& target,
                                               const std::vector<SparseMatrix>& components);

/// Where d h + h d = f - g first fails.
struct HomotopyDefect {
  int degree;
  SparseVector witness;  // source basis vector
  SparseVector defect;   // (d h + h d - f + g) applied to the witness
};

/// Checks a candidate homotopy between f and g.  components[k] maps source
/// degree min+k to target degree min+k+1 (homological) or min+k-1
/// (cohomological), with 0-row matrices where that degree does not exist.
std::optional<HomotopyDefect> check_homotopy(const ChainMap& f, const ChainMap& g,
                                             const std::vector<SparseMatrix>& components);

/// A verified chain homotopy h with d h + h d = f - g.
class Homotopy {
 public:
  /// Throws InvariantViolation with the first defect if the identity fails.
  Homotopy(ChainMap f, ChainMap g, std::vector<SparseMatrix> components);

  const ChainMap& f() const { return f_; }
  const ChainMap& g() const { return g_; }
  const SparseMatrix& component(int j) const;
  const std::vector<SparseMatrix>& components() const { return components_; }

 private:
  ChainMap f_;
  ChainMap g_;
  std::vector<SparseMatrix> components_;
};

struct DegreeHomology {
  int degree = 0;
  std::size_t dim = 0;
  Subspace boundaries;
  /// Canonical representatives: the cycles vanishing on every pivot of
  /// `boundaries`, in reduced echelon form.  They map bijectively onto H.
  Subspace representatives;
};

class HomologyTable {
 public:
  HomologyTable(FieldSpec field, Orientation orientation, std::vector<DegreeHomology> degrees);

  FieldSpec field() const { return field_; }
  Orientation orientation() const { return orientation_; }
  int min_degree() const { return degrees_.empty() ? 0 : degrees_.front().degree; }
  const std::vector<DegreeHomology>& degrees() const { return degrees_; }
  const DegreeHomology& at(int degree) const;
  std::vector<std::size_t> dims() const;

  /// Class of a cycle in the representative basis; throws InvariantViolation
  /// if y is not a cycle.
  std::vector<Scalar> class_of(int degree, const SparseVector& y) const;

 private:
  FieldSpec field_;
  Orientation orientation_;
  std::vector<DegreeHomology> degrees_;
};

/// Full homology with canonical representatives.
HomologyTable homology(const ChainComplex& c);
/// Dimensions only, from ranks; cheaper than homology().
std::vector<std::size_t> homology_dims(const ChainComplex& c);

/// Matrix of H_j(F) in the canonical representative bases, per degree.
std::vector<SparseMatrix> induced_on_homology(const ChainMap& f, const HomologyTable& source,
                                              const HomologyTable& target);
std::vector<SparseMatrix> induced_on_homology(const ChainMap& f);

}  // namespace acyclic
