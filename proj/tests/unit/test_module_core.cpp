#include <doctest.h>

#include "acyclic/builtins.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/module.hpp"
#include "support/generators.hpp"

using namespace acyclic;
using acyclic::testing::Gen;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SparseMatrix ints(std::vector<std::vector<long long>> rows) { return SparseMatrix::from_ints(Q, rows); }

SparseVector basis(std::size_t i) { return unit_vector(Q, i); }

std::shared_ptr<const FiniteModule> share(FiniteModule m) {
  return std::make_shared<const FiniteModule>(std::move(m));
}

/// Bit-reversal permutation: Kronecker index of n one-variable factors to
/// the bitmask index of the subset basis.
SparseMatrix bit_reversal(std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<SparseVector> cols(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (k >> (n - 1 - i) & 1) mask |= std::size_t{1} << i;
    }
    cols[k] = basis(mask);
  }
  return SparseMatrix::from_columns(Q, dim, cols);
}

}  // namespace

TEST_CASE("subset module") {
  const auto m0 = subset_module(0, Q);
  CHECK(m0.dim() == 1);
  CHECK(m0.num_vars() == 0);

  const auto m1 = subset_module(1, Q);
  CHECK(m1.dim() == 2);
  CHECK(m1.action(0) == ints({{0, 1}, {0, 0}}));
  CHECK(m1.labels() == std::vector<std::string>{"v{}", "v{1}"});

  const auto m2 = subset_module(2, Q);
  CHECK(m2.dim() == 4);
  CHECK(m2.action(0).apply(basis(3)) == basis(2));  // T_1 v_{12} = v_{2}
  CHECK(m2.action(1).apply(basis(3)) == basis(1));  // T_2 v_{12} = v_{1}
  CHECK(m2.action(0).apply(basis(2)).empty());      // T_1 v_{2} = 0
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto m = subset_module(n, Q);
    for (const auto& t : m.actions()) CHECK((t * t).is_zero());
  }
}

TEST_CASE("quotient module") {
  const auto k = quotient_module(2, 0, Q);
  CHECK(k.dim() == 1);
  CHECK(k.num_vars() == 2);
  CHECK(k.action(0).is_zero());
  CHECK(k.action(1).is_zero());

  const auto top = quotient_module(2, 2, Q);
  CHECK(top.dim() == 4);
  CHECK(top.labels() == std::vector<std::string>{"1", "t1", "t2", "t1*t2"});
  const auto relabel = complement_relabeling(2, Q);
  CHECK(check_equivariance(top, subset_module(2, Q), relabel) == std::nullopt);
  CHECK(rank(relabel) == 4);

  const auto m = quotient_module(3, 1, Q);
  CHECK(m.dim() == 2);
  CHECK((m.action(0) * m.action(0)).is_zero());
  CHECK_FALSE(m.action(0).is_zero());
  CHECK(m.action(1).is_zero());
  CHECK(m.action(2).is_zero());

  CHECK_THROWS_AS(quotient_module(2, 3, Q), InvalidArgument);
  CHECK(trivial_module(3, Q) == quotient_module(3, 0, Q));
}

TEST_CASE("transition map") {
  const auto f = transition_map(1, 0, Q);
  CHECK(f.matrix() == ints({{0}, {1}}));  // 1 -> t_1

  const auto g = transition_map(2, 1, Q);
  CHECK(g.matrix().apply(basis(0)) == basis(2));  // 1 -> t_2
  CHECK(g.matrix().apply(basis(1)) == basis(3));  // t_1 -> t_1 t_2
  CHECK(rank(g.matrix()) == 2);

  CHECK_THROWS_AS(transition_map(2, 2, Q), InvalidArgument);

  for (std::size_t n_amb = 1; n_amb <= 10; ++n_amb) {
    for (std::size_t n = 0; n < n_amb; ++n) {
      const auto t = transition_map(n_amb, n, Q);
      CHECK(rank(t.matrix()) == t.source().dim());
      CHECK(check_equivariance(t.source(), t.target(), t.matrix()) == std::nullopt);
      // Composite with the projection to k = A/m is zero.
      CHECK(t.matrix().column(0) != basis(0));
      CHECK(t.matrix().transpose().apply(basis(0)).empty());
    }
  }
}

TEST_CASE("module maps are checked") {
  const auto a = share(subset_module(1, Q));
  const auto b = share(subset_module(1, Q));
  CHECK_NOTHROW(ModuleMap(a, b, ints({{1, 0}, {0, 1}})));
  CHECK_NOTHROW(ModuleMap(a, b, ints({{0, 1}, {0, 0}})));
  CHECK_THROWS_AS(ModuleMap(a, b, ints({{0, 0}, {1, 0}})), InvariantViolation);
  CHECK_THROWS_AS(ModuleMap(a, b, ints({{1, 0}})), DimensionMismatch);
  const auto id = ModuleMap::identity(a);
  const auto z = ModuleMap::zero(a, b);
  CHECK(compose(id, z).matrix().is_zero());
  const auto failure = check_equivariance(*a, *b, ints({{0, 0}, {1, 0}}));
  REQUIRE(failure);
  CHECK(failure->operator_index == 1);
}

TEST_CASE("dual module") {
  const auto k = trivial_module(2, Q);
  CHECK(dual_module(k).actions() == k.actions());
  Gen gen;
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = gen.small_module(Q);
    const auto dd = dual_module(dual_module(m));
    CHECK(dd.actions() == m.actions());
    CHECK(dual_module(m).dim() == m.dim());
  }
  const auto d = dual_module(subset_module(2, Q));
  CHECK(d.action(0).apply(basis(0)) == basis(1));  // T_1^* v_{}^* = v_{1}^*
  CHECK(d.labels()[1] == "v{1}^*");

  // Contravariance: dual(g f) = dual(f) dual(g).
  const auto m0 = share(quotient_module(3, 0, Q));
  const auto m1 = share(quotient_module(3, 1, Q));
  const auto m2 = share(quotient_module(3, 2, Q));
  const auto f = ModuleMap(m0, m1, transition_map(3, 0, Q).matrix());
  const auto g = ModuleMap(m1, m2, transition_map(3, 1, Q).matrix());
  const auto d0 = share(dual_module(*m0));
  const auto d1 = share(dual_module(*m1));
  const auto d2 = share(dual_module(*m2));
  const auto lhs = dual_map(compose(g, f), d0, d2);
  const auto rhs = compose(dual_map(f, d0, d1), dual_map(g, d1, d2));
  CHECK(lhs.matrix() == rhs.matrix());
}

TEST_CASE("tensor product") {
  const auto m = subset_module(2, Q);
  const auto with_k = tensor_product(m, subset_module(0, Q));
  CHECK(with_k.actions() == m.actions());
  const auto pair = tensor_product(subset_module(1, Q), subset_module(1, Q));
  CHECK(pair.dim() == 4);
  CHECK(pair.num_vars() == 2);
  const auto p = bit_reversal(2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(p * pair.action(i) == m.action(i) * p);
  CHECK(tensor_product(subset_module(1, Q), subset_module(2, Q)).dim() == 8);
  CHECK_THROWS_AS(tensor_product(m, subset_module(1, FieldSpec::prime(5))), FieldMismatch);

  for (std::size_t n = 1; n <= 5; ++n) {
    FiniteModule power = subset_module(1, Q);
    for (std::size_t k = 1; k < n; ++k) power = tensor_product(power, subset_module(1, Q));
    const auto target = subset_module(n, Q);
    const auto perm = bit_reversal(n);
    for (std::size_t i = 0; i < n; ++i) CHECK(perm * power.action(i) == target.action(i) * perm);
  }
}

TEST_CASE("hom to trivial") {
  CHECK(hom_to_trivial(trivial_module(3, Q)) == 1);
  CHECK(hom_to_trivial(quotient_module(1, 1, Q)) == 1);
  CHECK(hom_to_trivial(subset_module(3, Q)) == 1);
  // Functionals on level n+1 vanish on the image of level n.
  for (std::size_t n_amb = 1; n_amb <= 6; ++n_amb) {
    for (std::size_t n = 0; n < n_amb; ++n) {
      const auto t = transition_map(n_amb, n, Q);
      const auto f = equivariant_functionals(t.target());
      for (const auto& phi : f.basis()) CHECK(t.matrix().transpose().apply(phi).empty());
    }
  }
}

TEST_CASE("validate") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto report = validate(subset_module(n, Q));
    CHECK(report.ok());
    CHECK(report.all_square_zero());
  }
  const auto report = validate(quotient_module(4, 2, Q));
  CHECK(report.nilpotency_degree ==
        std::vector<std::optional<std::size_t>>{2, 2, 1, 1});

  const auto identity = validate_actions(Q, 2, {SparseMatrix::identity(Q, 2)}, true);
  CHECK_FALSE(identity.ok());
  REQUIRE(identity.violations.size() == 1);
  CHECK(identity.violations[0].first_operator == 1);
  CHECK_FALSE(identity.violations[0].witness.empty());
  CHECK(identity.nilpotency_degree[0] == std::nullopt);
  CHECK(validate_actions(Q, 2, {SparseMatrix::identity(Q, 2)}, false).ok());

  const auto noncommuting = validate_actions(Q, 2, {ints({{0, 1}, {0, 0}}), ints({{0, 0}, {1, 0}})}, false);
  CHECK_FALSE(noncommuting.commuting);
  REQUIRE_FALSE(noncommuting.violations.empty());
  CHECK(noncommuting.violations[0].first_operator == 1);
  CHECK(noncommuting.violations[0].second_operator == 2);
  CHECK_THROWS_AS(FiniteModule(Q, 2, {ints({{0, 1}, {0, 0}}), ints({{0, 0}, {1, 0}})}), InvariantViolation);
  CHECK_THROWS_AS(FiniteModule(Q, 2, {SparseMatrix::identity(Q, 2)}, {}, true), InvariantViolation);
  CHECK_NOTHROW(FiniteModule(Q, 2, {SparseMatrix::identity(Q, 2)}));
  CHECK_THROWS_AS(FiniteModule(Q, 2, {ints({{1}})}), InvariantViolation);
}

TEST_CASE("built-in names") {
  CHECK(builtin_module("subset:3", Q) == subset_module(3, Q));
  CHECK(builtin_module("quotient:4:2", Q) == quotient_module(4, 2, Q));
  CHECK(builtin_module("trivial:5", Q) == trivial_module(5, Q));
  CHECK(builtin_module("dual:subset:2", Q) == dual_module(subset_module(2, Q)));
  for (const char* bad : {"subset", "subset:x", "subset:-1", "quotient:2", "quotient:2:3", "cube:2", "",
                          "subset:99", "subset:2:1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(builtin_module(bad, Q), Error);
  }
}

TEST_CASE("built-in operators commute") {
  for (std::size_t n_amb = 0; n_amb <= 6; ++n_amb) {
    for (std::size_t n = 0; n <= n_amb; ++n) CHECK(validate(quotient_module(n_amb, n, Q)).ok());
    CHECK(validate(subset_module(n_amb, Q)).ok());
  }
}
