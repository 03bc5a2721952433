#include <doctest.h>

#include "acyclic/builtins.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/koszul.hpp"
#include "support/generators.hpp"

using namespace acyclic;
using acyclic::testing::Gen;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F = FieldSpec::prime(1009);

SparseMatrix ints(std::vector<std::vector<long long>> rows) { return SparseMatrix::from_ints(Q, rows); }

std::vector<std::size_t> binomials(std::size_t n) {
  std::vector<std::size_t> row{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = next;
  }
  return row;
}

std::shared_ptr<const ChainComplex> share(ChainComplex c) {
  return std::make_shared<const ChainComplex>(std::move(c));
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("wedge basis and signs") {
  const WedgeBasis w(3);
  CHECK(w.subsets(0) == std::vector<std::uint32_t>{0});
  CHECK(w.subsets(1) == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(w.subsets(2) == std::vector<std::uint32_t>{3, 5, 6});
  CHECK(w.subsets(3) == std::vector<std::uint32_t>{7});
  CHECK(w.position(6) == 2);
  CHECK(wedge_sign(0b110, 0) == 1);
  CHECK(wedge_sign(0b011, 2) == 1);
  CHECK(wedge_sign(0b001, 2) == -1);
  CHECK(wedge_sign(0b101, 1) == -1);
  CHECK(wedge_matrix(Q, w, 3, 0).rows() == 0);
}

TEST_CASE("koszul complex") {
  const auto k = koszul_complex(trivial_module(1, Q));
  CHECK(k.term_dims() == std::vector<std::size_t>{1, 1});
  CHECK(k.maps()[0].is_zero());

  const auto c = koszul_complex(quotient_module(1, 1, Q));
  CHECK(c.term_dims() == std::vector<std::size_t>{2, 2});
  CHECK(c.maps()[0] == ints({{0, 0}, {1, 0}}));
  CHECK(rank(c.maps()[0]) == 1);

  const auto zero_vars = koszul_complex(subset_module(0, Q));
  CHECK(zero_vars.term_dims() == std::vector<std::size_t>{1});
  CHECK(zero_vars.maps().empty());

  // d(m (x) e_1 e_2) = T_1 m (x) e_2 - T_2 m (x) e_1.
  const auto two = koszul_complex(subset_module(2, Q));
  const auto& d2 = two.maps()[1];
  CHECK(d2.rows() == 8);
  CHECK(d2.cols() == 4);
  // m = v_{12} (index 3): T_1 m = v_2 (index 2), T_2 m = v_1 (index 1).
  const SparseVector expected{{1 * 2 + 0, Scalar::from_int(Q, -1)}, {2 * 2 + 1, Scalar::one(Q)}};
  CHECK(d2.apply(unit_vector(Q, 3)) == expected);
  CHECK(two.euler_characteristic() == 0);
}

TEST_CASE("chain complexes check shapes and d^2") {
  CHECK_THROWS_AS(ChainComplex(Q, 0, {1, 1}, {ints({{1, 1}})}, Orientation::Homological), InvariantViolation);
  CHECK_THROWS_AS(ChainComplex(Q, 0, {1, 1, 1}, {ints({{1}}), ints({{1}})}, Orientation::Homological),
                  InvariantViolation);
  CHECK_NOTHROW(ChainComplex(Q, 0, {1, 1, 1}, {ints({{1}}), ints({{0}})}, Orientation::Homological));
  const ChainComplex c(Q, -1, {1, 2}, {ints({{1}, {0}})}, Orientation::Cohomological);
  CHECK(c.min_degree() == -1);
  CHECK(c.max_degree() == 0);
  CHECK(c.outgoing(-1).rows() == 2);
  CHECK(c.outgoing(0).rows() == 0);
  CHECK(c.incoming(-1).cols() == 0);
  CHECK(homology(c).dims() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("homology") {
  const ChainComplex c(Q, 0, {1, 1}, {ints({{0}})}, Orientation::Homological);
  CHECK(homology(c).dims() == std::vector<std::size_t>{1, 1});
  CHECK(homology(koszul_complex(quotient_module(2, 2, Q))).dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(homology(koszul_complex(quotient_module(4, 4, Q))).dims() == binomials(4));
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(homology(koszul_complex(trivial_module(n, Q))).dims() == binomials(n));
  }
  const auto table = homology(koszul_complex(quotient_module(1, 1, Q)));
  // H_0 of k[t]/t^2: the class of 1; H_1: the cycle t (x) e_1.
  CHECK(table.at(0).representatives.basis() == std::vector<SparseVector>{unit_vector(Q, 0)});
  CHECK(table.at(1).representatives.basis() == std::vector<SparseVector>{unit_vector(Q, 1)});
  CHECK(table.class_of(1, unit_vector(Q, 1)) == std::vector<Scalar>{Scalar::one(Q)});
  CHECK_THROWS_AS(table.class_of(1, unit_vector(Q, 0)), InvariantViolation);
  CHECK(table.class_of(0, unit_vector(Q, 1)) == std::vector<Scalar>{Scalar::zero(Q)});
  CHECK(homology_dims(koszul_complex(subset_module(3, Q))) == binomials(3));
}

TEST_CASE("tor dims") {
  CHECK(tor_dims(trivial_module(4, Q)) == binomials(4));
  for (std::size_t n_amb = 0; n_amb <= 5; ++n_amb) {
    for (std::size_t n = 0; n <= n_amb; ++n) CHECK(tor_dims(quotient_module(n_amb, n, Q)) == binomials(n_amb));
  }
  CHECK(tor_dims(subset_module(1, Q)) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("induced chain maps") {
  const auto m = std::make_shared<const FiniteModule>(subset_module(2, Q));
  const auto id = induced_chain_map(ModuleMap::identity(m));
  for (const auto& c : id.components()) CHECK(c == SparseMatrix::identity(Q, c.rows()));
  const auto on_h = induced_on_homology(id);
  for (const auto& h : on_h) CHECK(h == SparseMatrix::identity(Q, h.rows()));

  const auto z = induced_chain_map(ModuleMap::zero(m, m));
  for (const auto& c : z.components()) CHECK(c.is_zero());
  for (const auto& h : induced_on_homology(z)) CHECK(h.is_zero());

  const auto f = induced_chain_map(transition_map(2, 0, Q));
  CHECK(f.source().term_dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(f.target().term_dims() == std::vector<std::size_t>{2, 4, 2});
  CHECK(f.component(0) == ints({{0}, {1}}));
}

TEST_CASE("transition on Tor: single steps and composites") {
  // k -> k[t]/t^2 sends the Tor_1 class 1 (x) e_1 to t (x) e_1, which is not a boundary.
  const auto one = induced_on_homology(induced_chain_map(transition_map(1, 0, Q)));
  CHECK(one[0].is_zero());
  CHECK(one[1] == ints({{1}}));
  for (std::size_t n_amb = 1; n_amb <= 5; ++n_amb) {
    for (std::size_t n = 0; n < n_amb; ++n) {
      const auto maps = induced_on_homology(induced_chain_map(transition_map(n_amb, n, Q)));
      const auto expected = binomials(n_amb - 1);
      CHECK(maps[0].is_zero());
      for (std::size_t j = 1; j <= n_amb; ++j) CHECK(rank(maps[j]) == expected[j - 1]);
    }
  }
}

TEST_CASE("multiplication homotopy") {
  const auto k = trivial_module(2, Q);
  const auto hk = multiplication_homotopy(k, 1);
  for (const auto& c : hk.f().components()) CHECK(c.is_zero());

  const auto h = multiplication_homotopy(quotient_module(1, 1, Q), 1);
  CHECK(h.component(0) == ints({{1, 0}, {0, 1}}));
  CHECK(h.f().component(0) == ints({{0, 0}, {1, 0}}));

  Gen gen;
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = gen.small_module(Q);
    for (std::size_t i = 1; i <= m.num_vars(); ++i) {
      CHECK_NOTHROW(multiplication_homotopy(m, i));
      // Null-homotopic maps vanish on homology.
      for (const auto& mat : induced_on_homology(multiplication_homotopy(m, i).f())) CHECK(mat.is_zero());
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t i = 1; i <= n; ++i) CHECK_NOTHROW(multiplication_homotopy(subset_module(n, Q), i));
  }
  CHECK_THROWS_AS(multiplication_homotopy(k, 3), InvalidArgument);
  CHECK_THROWS_AS(multiplication_homotopy(k, 0), InvalidArgument);
}

TEST_CASE("homotopies are checked") {
  const auto c = share(koszul_complex(quotient_module(1, 1, Q)));
  const auto t = multiplication_chain_map(quotient_module(1, 1, Q), c, 1);
  const auto z = ChainMap::zero(c, c);
  const auto bad = std::vector<SparseMatrix>{SparseMatrix::identity(Q, 2).scaled(Scalar::from_int(Q, 2)),
                                             SparseMatrix::from_triplets(Q, 0, 2, {})};
  const auto defect = check_homotopy(t, z, bad);
  REQUIRE(defect);
  CHECK(defect->degree == 0);
  CHECK_THROWS_AS(Homotopy(t, z, bad), InvariantViolation);
  CHECK_THROWS_AS(ChainMap(c, c, {ints({{1, 0}, {0, 0}}), ints({{1, 0}, {0, 1}})}), InvariantViolation);
}

TEST_CASE("chevalley-eilenberg cohomology") {
  CHECK(ce_dims(trivial_module(2, Q)) == std::vector<std::size_t>{1, 2, 1});
  CHECK(ce_dims(trivial_module(0, Q)) == std::vector<std::size_t>{1});
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(ce_dims(dual_module(subset_module(n, Q))) == tor_dims(subset_module(n, Q)));
  }
  const auto ce = ce_complex(subset_module(2, Q));
  CHECK(ce.orientation() == Orientation::Cohomological);
  CHECK(ce == dualize_complex(koszul_complex(dual_module(subset_module(2, Q)))));
  try {
    ce_cohomology(FiniteModule(Q, 2, {SparseMatrix::identity(Q, 2)}));
    FAIL("expected NotNilpotent");
  } catch (const NotNilpotent& e) {
    CHECK_FALSE(e.report().ok());
  }
}

TEST_CASE("dualize complex") {
  const ChainComplex c(Q, 0, {1, 1}, {ints({{0}})}, Orientation::Homological);
  const auto d = dualize_complex(c);
  CHECK(d.orientation() == Orientation::Cohomological);
  CHECK(homology(d).dims() == std::vector<std::size_t>{1, 1});
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto k = koszul_complex(subset_module(n, Q));
    CHECK(homology(dualize_complex(k)).dims() == tor_dims(subset_module(n, Q)));
    CHECK(dualize_complex(dualize_complex(k)) == k);
  }
}

TEST_CASE("kunneth on random small modules") {
  Gen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = gen.small_module(Q);
    const auto b = gen.small_module(Q);
    if (a.dim() * b.dim() > 16) continue;
    CHECK(tor_dims(tensor_product(a, b)) == convolve(tor_dims(a), tor_dims(b)));
  }
}

TEST_CASE("euler characteristic and field agreement") {
  for (std::size_t n_amb = 0; n_amb <= 5; ++n_amb) {
    for (std::size_t n = 0; n <= n_amb; ++n) {
      const auto kq = koszul_complex(quotient_module(n_amb, n, Q));
      const auto dims = homology_dims(kq);
      long long chi = 0;
      for (std::size_t j = 0; j < dims.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[j]);
      CHECK(chi == kq.euler_characteristic());
      CHECK(tor_dims(quotient_module(n_amb, n, F)) == dims);
    }
  }
}
