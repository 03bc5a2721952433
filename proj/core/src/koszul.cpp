#include "acyclic/koszul.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "acyclic/builtins.hpp"

namespace acyclic {
namespace {

void sort_entries(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
}

void require_vars(std::size_t n) {
  if (n > kMaxBuiltinVars) {
    throw InvalidArgument("Koszul complexes support at most " + std::to_string(kMaxBuiltinVars) +
                          " variables");
  }
}

}  // namespace

WedgeBasis::WedgeBasis(std::size_t n) : n_(n), subsets_(n + 1) {
  require_vars(n);
  const std::uint32_t total = std::uint32_t{1} << n;
  position_.resize(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    auto& bucket = subsets_[static_cast<std::size_t>(std::popcount(mask))];
    position_[mask] = bucket.size();
    bucket.push_back(mask);
  }
}

int wedge_sign(std::uint32_t mask, std::size_t i) {
  const std::uint32_t below = mask & ((std::uint32_t{1} << i) - 1);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

SparseMatrix wedge_matrix(FieldSpec field, const WedgeBasis& basis, std::size_t j, std::size_t i) {
  const std::size_t rows = j + 1 <= basis.num_vars() ? basis.count(j + 1) : 0;
  std::vector<SparseVector> cols(basis.count(j));
  const std::uint32_t bit = std::uint32_t{1} << i;
  for (std::size_t s = 0; s < cols.size(); ++s) {
    const std::uint32_t mask = basis.subsets(j)[s];
    if (mask & bit) continue;
    cols[s].push_back(Entry{basis.position(mask | bit), Scalar::from_int(field, wedge_sign(mask, i))});
  }
  return SparseMatrix::from_columns(field, rows, std::move(cols));
}

ChainComplex koszul_complex(const FiniteModule& m) {
  const std::size_t n = m.num_vars();
  const WedgeBasis wedge(n);
  const FieldSpec field = m.field();
  const std::size_t dim = m.dim();

  std::vector<std::size_t> terms;
  for (std::size_t j = 0; j <= n; ++j) terms.push_back(dim * wedge.count(j));

  std::vector<SparseMatrix> maps;
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t here = wedge.count(j);
    const std::size_t below = wedge.count(j - 1);
    std::vector<SparseVector> cols(dim * here);
    for (std::size_t s = 0; s < here; ++s) {
      const std::uint32_t mask = wedge.subsets(j)[s];
      for (std::size_t i = 0; i < n; ++i) {
        if (!((mask >> i) & 1u)) continue;
        const std::size_t face = wedge.position(mask ^ (std::uint32_t{1} << i));
        const bool negate = wedge_sign(mask, i) < 0;
        for (std::size_t col = 0; col < dim; ++col) {
          for (const auto& e : m.action(i).column(col)) {
            cols[col * here + s].push_back(Entry{e.index * below + face, negate ? -e.value : e.value});
          }
        }
      }
    }
    for (auto& c : cols) sort_entries(c);
    maps.push_back(SparseMatrix::from_columns(field, dim * below, std::move(cols)));
  }
  return ChainComplex(field, 0, std::move(terms), std::move(maps), Orientation::Homological);
}

std::vector<std::size_t> tor_dims(const FiniteModule& m) {
  return homology_dims(koszul_complex(m));
}

ChainMap induced_chain_map(const ModuleMap& f, std::shared_ptr<const ChainComplex> source_koszul,
                           std::shared_ptr<const ChainComplex> target_koszul) {
  const std::size_t n = f.source().num_vars();
  const WedgeBasis wedge(n);
  std::vector<SparseMatrix> comps;
  for (std::size_t j = 0; j <= n; ++j) {
    comps.push_back(SparseMatrix::kron(f.matrix(), SparseMatrix::identity(f.source().field(), wedge.count(j))));
  }
  return ChainMap(std::move(source_koszul), std::move(target_koszul), std::move(comps));
}

ChainMap induced_chain_map(const ModuleMap& f) {
  auto src = std::make_shared<const ChainComplex>(koszul_complex(f.source()));
  auto tgt = std::make_shared<const ChainComplex>(koszul_complex(f.target()));
  return induced_chain_map(f, std::move(src), std::move(tgt));
}

ChainMap multiplication_chain_map(const FiniteModule& m,
                                  std::shared_ptr<const ChainComplex> koszul, std::size_t i) {
  if (i < 1 || i > m.num_vars()) {
    throw InvalidArgument("variable index " + std::to_string(i) + " outside 1.." +
                          std::to_string(m.num_vars()));
  }
  const WedgeBasis wedge(m.num_vars());
  std::vector<SparseMatrix> comps;
  for (std::size_t j = 0; j <= m.num_vars(); ++j) {
    comps.push_back(SparseMatrix::kron(m.action(i - 1), SparseMatrix::identity(m.field(), wedge.count(j))));
  }
  return ChainMap(koszul, koszul, std::move(comps));
}

Homotopy multiplication_homotopy(const FiniteModule& m, std::size_t i) {
  auto koszul = std::make_shared<const ChainComplex>(koszul_complex(m));
  ChainMap f = multiplication_chain_map(m, koszul, i);
  ChainMap g = ChainMap::zero(koszul, koszul);
  const WedgeBasis wedge(m.num_vars());
  const auto id = SparseMatrix::identity(m.field(), m.dim());
  std::vector<SparseMatrix> h;
  for (std::size_t j = 0; j <= m.num_vars(); ++j) {
    h.push_back(SparseMatrix::kron(id, wedge_matrix(m.field(), wedge, j, i - 1)));
  }
  return Homotopy(std::move(f), std::move(g), std::move(h));
}

NotNilpotent::NotNilpotent(ValidationReport report)
    : InvariantViolation("module operators must be nilpotent: " +
                         (report.violations.empty() ? std::string("unknown failure")
                                                    : report.violations.front().what)),
      report_(std::move(report)) {}

ChainComplex ce_complex(const FiniteModule& w) {
  auto report = validate_actions(w.field(), w.dim(), w.actions(), true);
  if (!report.ok()) throw NotNilpotent(std::move(report));

  const std::size_t n = w.num_vars();
  const WedgeBasis wedge(n);
  const FieldSpec field = w.field();
  const std::size_t dim = w.dim();

  std::vector<std::size_t> terms;
  for (std::size_t j = 0; j <= n; ++j) terms.push_back(dim * wedge.count(j));

  std::vector<SparseMatrix> maps;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t here = wedge.count(j);
    const std::size_t above = wedge.count(j + 1);
    std::vector<SparseVector> cols(dim * here);
    for (std::size_t s = 0; s < here; ++s) {
      const std::uint32_t mask = wedge.subsets(j)[s];
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) continue;
        const std::size_t coface = wedge.position(mask | (std::uint32_t{1} << i));
        const bool negate = wedge_sign(mask, i) < 0;
        for (std::size_t col = 0; col < dim; ++col) {
          for (const auto& e : w.action(i).column(col)) {
            cols[col * here + s].push_back(Entry{e.index * above + coface, negate ? -e.value : e.value});
          }
        }
      }
    }
    for (auto& c : cols) sort_entries(c);
    maps.push_back(SparseMatrix::from_columns(field, dim * above, std::move(cols)));
  }
  return ChainComplex(field, 0, std::move(terms), std::move(maps), Orientation::Cohomological);
}

HomologyTable ce_cohomology(const FiniteModule& w) { return homology(ce_complex(w)); }

std::vector<std::size_t> ce_dims(const FiniteModule& w) { return homology_dims(ce_complex(w)); }

}  // namespace acyclic
