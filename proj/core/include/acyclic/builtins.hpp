#pragma once

#include <cstddef>
#include <string_view>

#include "acyclic/module.hpp"

namespace acyclic {

/// Largest variable count accepted by the built-in families (dimension 2^n).
inline constexpr std::size_t kMaxBuiltinVars = 20;

/// Basis v_S for S a subset of {1..n}, ordered by bitmask (bit i-1 <-> i in S).
/// T_i v_S = v_{S \ {i}} if i is in S, else 0.
FiniteModule subset_module(std::size_t n, FieldSpec field);

/// A_N / I_n with I_n = (t_1^2..t_n^2, t_{n+1}..t_N).  Basis: squarefree
/// monomials in t_1..t_n in bitmask order; T_i multiplies for i <= n and is
/// zero for i > n.
FiniteModule quotient_module(std::size_t ambient, std::size_t level, FieldSpec field);

/// k with every one of the num_vars variables acting by zero.
FiniteModule trivial_module(std::size_t num_vars, FieldSpec field);

/// A_N/I_n -> A_N/I_{n+1}, x -> t_{n+1} x.
ModuleMap transition_map(std::size_t ambient, std::size_t level, FieldSpec field);

/// The isomorphism quotient(n, n) -> subset_module(n), t^S -> v_{complement of S}.
SparseMatrix complement_relabeling(std::size_t n, FieldSpec field);

/// Resolves "subset:n", "quotient:N:n", "trivial:N" and "dual:<name>".
/// Throws ParseError on unknown or malformed names.
FiniteModule builtin_module(std::string_view name, FieldSpec field);

}  // namespace acyclic
