#include "acyclic/limit.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <string>

#include "acyclic/builtins.hpp"
#include "acyclic/koszul.hpp"

namespace acyclic {
namespace {

struct LevelData {
  std::shared_ptr<const ChainComplex> koszul;
  std::optional<HomologyTable> tor;
  ValidationReport validation;
  std::vector<std::size_t> dual_ext_dims;
  std::string dual_error;
};

LevelData analyse_level(const FiniteModule& m) {
  LevelData out;
  out.validation = validate_actions(m.field(), m.dim(), m.actions(), true);
  out.koszul = std::make_shared<const ChainComplex>(koszul_complex(m));
  out.tor = homology(*out.koszul);
  try {
    out.dual_ext_dims = ce_dims(dual_module(m));
  } catch (const NotNilpotent& e) {
    out.dual_error = e.what();
  }
  return out;
}

template <typename T, typename F>
std::vector<T> map_indices(std::size_t count, bool parallel, F&& work) {
  std::vector<T> results;
  results.reserve(count);
  if (!parallel || count < 2) {
    for (std::size_t k = 0; k < count; ++k) results.push_back(work(k));
    return results;
  }
  std::vector<std::future<T>> futures;
  futures.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    futures.push_back(std::async(std::launch::async, [&work, k] { return work(k); }));
  }
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

struct TransitionData {
  std::optional<EquivarianceFailure> equivariance;
  std::optional<ChainMap> chain_map;
  std::vector<SparseMatrix> induced;  // per degree, empty if not equivariant
};

TransitionData analyse_transition(const DirectedSystem& s, const std::vector<LevelData>& levels,
                                  std::size_t m) {
  TransitionData out;
  out.equivariance = check_equivariance(s.level(m), s.level(m + 1), s.transition_matrix(m));
  if (out.equivariance) return out;
  ModuleMap f = s.transition(m);
  out.chain_map = induced_chain_map(f, levels[m].koszul, levels[m + 1].koszul);
  out.induced = induced_on_homology(*out.chain_map, *levels[m].tor, *levels[m + 1].tor);
  return out;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string out = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(dims[k]);
  }
  return out + ")";
}

std::string arrow(std::size_t m) { return std::to_string(m) + "->" + std::to_string(m + 1); }

CertificateCheck make_check(std::string name, std::string claim) {
  CertificateCheck c;
  c.name = std::move(name);
  c.claim = std::move(claim);
  return c;
}

void fail(CertificateCheck& c, std::string detail, std::optional<Witness> witness = std::nullopt) {
  c.status = CheckStatus::Fail;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
}

}  // namespace

// --- DirectedSystem / VectorSystem -------------------------------------------

DirectedSystem::DirectedSystem(std::vector<std::shared_ptr<const FiniteModule>> levels,
                               std::vector<SparseMatrix> transitions,
                               std::vector<TransitionFactorization> factorizations)
    : levels_(std::move(levels)),
      transitions_(std::move(transitions)),
      factorizations_(std::move(factorizations)) {
  if (levels_.empty()) throw InvalidArgument("a directed system needs at least one level");
  if (transitions_.size() + 1 != levels_.size()) {
    throw DimensionMismatch("a directed system with " + std::to_string(levels_.size()) +
                            " levels needs " + std::to_string(levels_.size() - 1) + " transitions");
  }
  if (!factorizations_.empty() && factorizations_.size() != transitions_.size()) {
    throw DimensionMismatch("factorizations must cover every transition");
  }
  for (std::size_t m = 0; m < transitions_.size(); ++m) {
    const auto& t = transitions_[m];
    if (levels_[m]->num_vars() != levels_[m + 1]->num_vars() ||
        levels_[m]->field() != levels_[m + 1]->field()) {
      throw DimensionMismatch("levels " + arrow(m) + " act by different variables or fields");
    }
    if (t.rows() != levels_[m + 1]->dim() || t.cols() != levels_[m]->dim()) {
      throw DimensionMismatch("transition " + arrow(m) + " has the wrong shape");
    }
  }
}

ModuleMap DirectedSystem::transition(std::size_t m) const {
  return ModuleMap(levels_.at(m), levels_.at(m + 1), transitions_.at(m));
}

void VectorSystem::check() const {
  if (maps.size() + 1 != dims.size() && !(dims.empty() && maps.empty())) {
    throw DimensionMismatch("vector system needs one map between consecutive levels");
  }
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (maps[m].cols() != dims[m] || maps[m].rows() != dims[m + 1]) {
      throw DimensionMismatch("vector system map " + arrow(m) + " has the wrong shape");
    }
  }
}

DirectedSystem paper_system(std::size_t ambient, FieldSpec field) {
  if (ambient < 1) throw InvalidArgument("the standard system needs ambient >= 1");
  std::vector<std::shared_ptr<const FiniteModule>> levels;
  for (std::size_t n = 0; n <= ambient; ++n) {
    levels.push_back(std::make_shared<const FiniteModule>(quotient_module(ambient, n, field)));
  }
  std::vector<SparseMatrix> transitions;
  std::vector<TransitionFactorization> factorizations;
  for (std::size_t n = 0; n < ambient; ++n) {
    transitions.push_back(transition_map(ambient, n, field).matrix());
    // Monomials of level n are monomials of level n+1: t^S -> t^S.
    const std::size_t dim = levels[n]->dim();
    std::vector<SparseVector> cols(dim);
    for (std::size_t s = 0; s < dim; ++s) cols[s] = unit_vector(field, s);
    factorizations.push_back(
        {n + 1, SparseMatrix::from_columns(field, levels[n + 1]->dim(), std::move(cols))});
  }
  return DirectedSystem(std::move(levels), std::move(transitions), std::move(factorizations));
}

std::vector<VectorSystem> tor_system(const DirectedSystem& s, bool parallel) {
  auto levels = map_indices<LevelData>(s.size(), parallel,
                                       [&](std::size_t m) { return analyse_level(s.level(m)); });
  auto transitions = map_indices<TransitionData>(
      s.size() - 1, parallel, [&](std::size_t m) { return analyse_transition(s, levels, m); });
  std::vector<VectorSystem> out(s.num_vars() + 1);
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (const auto& l : levels) out[j].dims.push_back(l.tor->dims()[j]);
  }
  for (std::size_t m = 0; m < transitions.size(); ++m) {
    if (transitions[m].equivariance) {
      throw InvariantViolation("transition " + arrow(m) + " does not commute with T_" +
                               std::to_string(transitions[m].equivariance->operator_index));
    }
    for (std::size_t j = 0; j < out.size(); ++j) out[j].maps.push_back(transitions[m].induced[j]);
  }
  return out;
}

SparseMatrix composite(const VectorSystem& s, std::size_t from, std::size_t to) {
  s.check();
  if (from > to || to >= s.dims.size()) throw InvalidArgument("composite outside the chain");
  SparseMatrix out = s.maps.empty() ? SparseMatrix::identity(FieldSpec{}, s.dims[from])
                                    : SparseMatrix::identity(s.maps.front().field(), s.dims[from]);
  for (std::size_t m = from; m < to; ++m) out = s.maps[m] * out;
  return out;
}

std::size_t colim_dim(const VectorSystem& s) {
  s.check();
  return s.dims.empty() ? 0 : s.dims.back();
}

std::size_t surviving_dim(const VectorSystem& s, std::size_t from) {
  return rank(composite(s, from, s.dims.size() - 1));
}

std::optional<std::size_t> steps_to_vanish(const VectorSystem& s, std::size_t from) {
  s.check();
  if (from >= s.dims.size()) throw InvalidArgument("level outside the chain");
  for (std::size_t to = from + 1; to < s.dims.size(); ++to) {
    if (composite(s, from, to).is_zero()) return to - from;
  }
  return std::nullopt;
}

// --- certificate -------------------------------------------------------------

bool Certificate::passed() const { return failures() == 0; }

std::size_t Certificate::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::Fail ? 1 : 0;
  return n;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

Certificate vanishing_certificate(const DirectedSystem& s, CertificateOptions options) {
  const FieldSpec field = s.field();
  const std::size_t n_vars = s.num_vars();
  const std::size_t last = s.size() - 1;
  const std::size_t off = options.level_offset;

  auto levels = map_indices<LevelData>(s.size(), options.parallel,
                                       [&](std::size_t m) { return analyse_level(s.level(m)); });
  auto transitions = map_indices<TransitionData>(
      last, options.parallel, [&](std::size_t m) { return analyse_transition(s, levels, m); });

  // Per-degree Tor systems, defined only when every transition is equivariant.
  bool all_equivariant = true;
  for (const auto& t : transitions) all_equivariant = all_equivariant && !t.equivariance;
  std::vector<VectorSystem> tor(n_vars + 1);
  if (all_equivariant) {
    for (std::size_t j = 0; j <= n_vars; ++j) {
      for (const auto& l : levels) tor[j].dims.push_back(l.tor->dims()[j]);
      for (const auto& t : transitions) tor[j].maps.push_back(t.induced[j]);
    }
  }

  Certificate cert;
  cert.ambient = n_vars;
  cert.field = field;

  std::vector<std::size_t> nonzero_degrees;
  bool eventual_ok = true;
  bool eventual_seen = false;

  for (std::size_t m = 0; m <= last; ++m) {
    const auto& level = levels[m];
    const auto tor_dims = level.tor->dims();
    cert.levels.push_back(LevelSummary{m + off, s.level(m).dim(), tor_dims, level.dual_ext_dims});
    const std::string lname = "level[" + std::to_string(m + off) + "]";

    auto ops = make_check(lname + ".operators",
                          "the operators t_1..t_N on level " + std::to_string(m + off) +
                              " commute and each squares to zero");
    if (!level.validation.commuting) {
      const auto& v = level.validation.violations.front();
      fail(ops, v.what, Witness{v.what, v.witness});
    } else if (!level.validation.all_square_zero()) {
      std::size_t i = 0;
      while (level.validation.square_zero[i]) ++i;
      fail(ops, "T_" + std::to_string(i + 1) + " squared is nonzero");
    } else {
      ops.detail = "dim " + std::to_string(s.level(m).dim()) + ", all T_i^2 = 0";
    }
    cert.checks.push_back(std::move(ops));

    auto duality = make_check(lname + ".duality",
                              "dim Ext^j(k, dual of level " + std::to_string(m + off) +
                                  ") = dim Tor_j(level " + std::to_string(m + off) + ", k) for every j");
    if (!level.dual_error.empty()) {
      fail(duality, level.dual_error);
    } else if (level.dual_ext_dims != tor_dims) {
      fail(duality, "Ext dims " + dims_text(level.dual_ext_dims) + " vs Tor dims " +
                        dims_text(tor_dims));
    } else {
      duality.detail = "Tor = Ext = " + dims_text(tor_dims);
    }
    cert.checks.push_back(std::move(duality));

    if (m == last) break;

    const auto& t = transitions[m];
    const std::string tname = "transition[" + arrow(m + off) + "]";
    const std::string from = "level " + std::to_string(m + off);
    const std::string to = "level " + std::to_string(m + off + 1);

    auto equiv = make_check(tname + ".equivariant", "the transition commutes with every t_i");
    if (t.equivariance) {
      fail(equiv, "fails for T_" + std::to_string(t.equivariance->operator_index),
           Witness{"source vector where f T_i != T_i f", t.equivariance->witness});
    }
    cert.checks.push_back(std::move(equiv));

    auto inj = make_check(tname + ".injective", "the transition " + from + " -> " + to + " is injective");
    const std::size_t r = rank(s.transition_matrix(m));
    inj.detail = "rank " + std::to_string(r) + " of " + std::to_string(s.level(m).dim());
    if (r != s.level(m).dim()) {
      auto ker = kernel(s.transition_matrix(m));
      fail(inj, inj.detail, Witness{"nonzero kernel vector", ker.basis().front()});
    }
    cert.checks.push_back(std::move(inj));

    auto func = make_check(tname + ".functionals",
                           "every A-linear functional " + to + " -> k vanishes on the image of " + from);
    {
      const auto functionals = equivariant_functionals(s.level(m + 1));
      const auto transposed = s.transition_matrix(m).transpose();
      func.detail = std::to_string(functionals.dim()) + " functional(s) on " + to;
      for (const auto& phi : functionals.basis()) {
        if (!transposed.apply(phi).empty()) {
          fail(func, func.detail, Witness{"functional not killed by the transition", phi});
          break;
        }
      }
    }
    cert.checks.push_back(std::move(func));

    for (std::size_t j = 0; j <= n_vars; ++j) {
      const std::string jname = "[" + std::to_string(j) + "]";
      auto zero = make_check(tname + ".tor" + jname + ".zero",
                             "the transition induces zero Tor_" + std::to_string(j) + "(" + from +
                                 ", k) -> Tor_" + std::to_string(j) + "(" + to + ", k)");
      if (!t.chain_map) {
        zero.status = CheckStatus::Skipped;
        zero.detail = "transition is not equivariant";
      } else {
        const auto& induced = t.induced[j];
        const std::size_t rk = rank(induced);
        zero.detail = "induced " + std::to_string(induced.rows()) + "x" +
                      std::to_string(induced.cols()) + " matrix of rank " + std::to_string(rk);
        if (rk != 0) {
          std::size_t col = 0;
          while (induced.column(col).empty()) ++col;
          fail(zero, zero.detail,
               Witness{"cycle representing Tor_" + std::to_string(j) + " class #" +
                           std::to_string(col) + " of " + from + "; its image is not a boundary",
                       levels[m].tor->at(static_cast<int>(j)).representatives.basis()[col]});
          nonzero_degrees.push_back(j);
        }
      }
      cert.checks.push_back(std::move(zero));

      auto htpy = make_check(tname + ".homotopy" + jname,
                             "d h + h d = transition (x) id in degree " + std::to_string(j) +
                                 " for h = e_i ^ (inclusion (x) id)");
      if (!t.chain_map || s.factorizations().empty()) {
        htpy.status = CheckStatus::Skipped;
        htpy.detail = !t.chain_map ? "transition is not equivariant" : "no factorization supplied";
      } else {
        const auto& fac = s.factorizations()[m];
        const WedgeBasis wedge(n_vars);
        htpy.claim = "d h + h d = transition (x) id in degree " + std::to_string(j) + " for h = e_" +
                     std::to_string(fac.variable) + " ^ (inclusion (x) id)";
        const auto product = s.level(m + 1).action(fac.variable - 1) * fac.inclusion;
        if (product != s.transition_matrix(m)) {
          fail(htpy, "transition is not T_" + std::to_string(fac.variable) + " * inclusion");
        } else {
          std::vector<SparseMatrix> h;
          for (std::size_t k = 0; k <= n_vars; ++k) {
            h.push_back(SparseMatrix::kron(fac.inclusion, wedge_matrix(field, wedge, k, fac.variable - 1)));
          }
          // Degree j in isolation: dh + hd against f - 0.
          const auto& src = *levels[m].koszul;
          const auto& tgt = *levels[m + 1].koszul;
          const int jj = static_cast<int>(j);
          SparseMatrix lhs = tgt.incoming(jj) * h[j];
          if (j > 0) lhs = lhs + h[j - 1] * src.outgoing(jj);
          auto diff = first_difference(lhs, t.chain_map->component(jj));
          if (diff) {
            fail(htpy, "identity fails; the defect is (e_i ^ contraction_i) applied to the image",
                 Witness{"basis vector " + std::to_string(diff->column) + " of K_" +
                             std::to_string(j) + "(" + from + "); defect listed",
                         diff->difference});
          } else {
            htpy.detail = "identity holds exactly";
          }
        }
      }
      cert.checks.push_back(std::move(htpy));

      if (all_equivariant && m + j + 1 <= last) {
        eventual_seen = true;
        auto eventual = make_check(lname + ".tor" + jname + ".eventually-zero",
                                   "the composite of " + std::to_string(j + 1) +
                                       " transitions from " + from + " is zero on Tor_" +
                                       std::to_string(j));
        const auto comp = composite(tor[j], m, m + j + 1);
        if (!comp.is_zero()) {
          eventual_ok = false;
          std::size_t col = 0;
          while (comp.column(col).empty()) ++col;
          fail(eventual, "composite has rank " + std::to_string(rank(comp)),
               Witness{"Tor_" + std::to_string(j) + " class #" + std::to_string(col) + " survives",
                       levels[m].tor->at(static_cast<int>(j)).representatives.basis()[col]});
        } else {
          eventual.detail = "composite " + std::to_string(m + off) + "->" + std::to_string(m + off + j + 1) +
                            " is zero";
        }
        cert.checks.push_back(std::move(eventual));
      }
    }
  }

  std::ostringstream text;
  text << "Finite chain of " << s.size() << " levels over " << s.num_vars()
       << " variables; its colimit is the last level, so the statement about the infinite "
          "colimit is inferred from maps on Tor, not computed. ";
  const bool others_ok = std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) {
    return c.status != CheckStatus::Fail || c.name.find(".zero") != std::string::npos ||
           c.name.find(".homotopy") != std::string::npos;
  });
  if (cert.passed()) {
    text << "Every transition induces zero on every Tor_j, hence colim Tor_j = 0 in all degrees.";
  } else if (all_equivariant && others_ok && eventual_ok) {
    std::sort(nonzero_degrees.begin(), nonzero_degrees.end());
    nonzero_degrees.erase(std::unique(nonzero_degrees.begin(), nonzero_degrees.end()),
                          nonzero_degrees.end());
    text << "Single transitions are NOT zero on Tor_j for j in " << dims_text(nonzero_degrees)
         << " and no chain homotopy to zero exists there. ";
    if (eventual_seen) {
      text << "Every composite of j+1 transitions is zero on Tor_j wherever the chain is long "
              "enough to contain it, which still forces colim Tor_j = 0 for the infinite system.";
    }
  } else {
    text << "Structural checks failed; see the failing checks and their witnesses.";
  }
  cert.conclusion = text.str();
  return cert;
}

Certificate paper_certificate(std::size_t ambient, FieldSpec field, CertificateOptions options) {
  const DirectedSystem s = paper_system(ambient, field);
  Certificate cert = vanishing_certificate(s, options);
  auto iso = make_check("top-level.relabeling",
                        "level N is isomorphic to the subset module on N generators via "
                        "t^S -> v_(complement of S)");
  const FiniteModule subset = subset_module(ambient, field);
  const SparseMatrix relabel = complement_relabeling(ambient, field);
  if (auto failure = check_equivariance(s.level(ambient), subset, relabel)) {
    fail(iso, "relabeling fails to commute with T_" + std::to_string(failure->operator_index),
         Witness{"basis vector of level N", failure->witness});
  } else {
    iso.detail = "relabeling is an equivariant permutation of " + std::to_string(subset.dim()) +
                 " basis vectors";
  }
  cert.checks.push_back(std::move(iso));
  return cert;
}

}  // namespace acyclic
