#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "acyclic/complex.hpp"
#include "acyclic/module.hpp"

namespace acyclic {

/// Exterior basis e_S of Lambda(k^n): for each j the j-subsets of {1..n}
/// as bitmasks in increasing order.
class WedgeBasis {
 public:
  explicit WedgeBasis(std::size_t n);

  std::size_t num_vars() const { return n_; }
  const std::vector<std::uint32_t>& subsets(std::size_t j) const { return subsets_.at(j); }
  std::size_t count(std::size_t j) const { return subsets_.at(j).size(); }
  /// Position of mask among the subsets of its size.
  std::size_t position(std::uint32_t mask) const { return position_.at(mask); }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::vector<std::size_t> position_;
};

/// (-1)^{#{s in S : s < i}}: the sign of moving e_i into place in e_S.
int wedge_sign(std::uint32_t mask, std::size_t i);

/// Matrix of e_i ^ - : Lambda^j -> Lambda^{j+1} (i zero-based).
SparseMatrix wedge_matrix(FieldSpec field, const WedgeBasis& basis, std::size_t j, std::size_t i);

/// K_j = M (x) Lambda^j(k^n), basis index m * C(n,j) + (position of S),
/// d(m (x) e_S) = sum over i in S of sign(i,S) T_i m (x) e_{S\i}.
ChainComplex koszul_complex(const FiniteModule& m);

/// dim Tor_j^{A_n}(M, k) for j = 0..n.
std::vector<std::size_t> tor_dims(const FiniteModule& m);

/// f (x) id on every Koszul term.
ChainMap induced_chain_map(const ModuleMap& f);
ChainMap induced_chain_map(const ModuleMap& f, std::shared_ptr<const ChainComplex> source_koszul,
                           std::shared_ptr<const ChainComplex> target_koszul);

/// T_i (x) id as a self-map of an existing Koszul complex of m (i is 1-based).
ChainMap multiplication_chain_map(const FiniteModule& m,
                                  std::shared_ptr<const ChainComplex> koszul, std::size_t i);

/// h = e_i ^ - on koszul_complex(m), a homotopy from T_i (x) id to 0.
/// i is 1-based.
Homotopy multiplication_homotopy(const FiniteModule& m, std::size_t i);

/// The operators must be nilpotent; the report lists what failed.
class NotNilpotent : public InvariantViolation {
 public:
  explicit NotNilpotent(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// W (x) Lambda^j(k^n)^*, delta(w (x) w*) = sum_i T_i w (x) e_i^* ^ w*.
/// Throws NotNilpotent if some T_i is not nilpotent.
ChainComplex ce_complex(const FiniteModule& w);
/// Cohomology of ce_complex(w): Ext^j(k, W) for the abelian Lie algebra.
HomologyTable ce_cohomology(const FiniteModule& w);
std::vector<std::size_t> ce_dims(const FiniteModule& w);

}  // namespace acyclic
