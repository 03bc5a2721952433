// Acceptance criteria 1-9: one PASS/FAIL line each.
//   acceptance [--criterion k] [--tool path]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "acyclic/builtins.hpp"
#include "acyclic/koszul.hpp"
#include "acyclic/limit.hpp"
#include "support/dense_oracle.hpp"
#include "support/generators.hpp"

using namespace acyclic;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F = FieldSpec::prime(1009);

// Pinned budgets, seconds.
constexpr double kBudgetSquareZero = 1.0;
constexpr double kBudgetPresentation = 5.0;
constexpr double kBudgetTorFp = 60.0;
constexpr double kBudgetTorQ = 600.0;
constexpr double kBudgetTrivial = 10.0;

constexpr std::size_t kMaxAmbient = 8;
constexpr std::size_t kOracleAmbientFp = 6;
constexpr std::size_t kOracleAmbientQ = 4;
constexpr int kRandomMatrices = 1000;

struct Outcome {
  bool pass = true;
  std::string summary;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

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

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string out = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) out += (k ? "," : "") + std::to_string(dims[k]);
  return out + ")";
}

bool squares_to_zero(const ChainComplex& c) {
  for (std::size_t k = 0; k + 1 < c.maps().size(); ++k) {
    const auto& lower = c.orientation() == Orientation::Homological ? c.maps()[k] : c.maps()[k + 1];
    const auto& upper = c.orientation() == Orientation::Homological ? c.maps()[k + 1] : c.maps()[k];
    if (!(lower * upper).is_zero()) return false;
  }
  return true;
}

long long alternating(const std::vector<std::size_t>& dims) {
  long long chi = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) chi += (j % 2 ? -1 : 1) * static_cast<long long>(dims[j]);
  return chi;
}

// 1. Square-zero action of the subset modules.
Outcome square_zero() {
  Stopwatch clock;
  Outcome out;
  std::size_t ops = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto m = subset_module(n, Q);
    for (const auto& t : m.actions()) {
      ++ops;
      if (!(t * t).is_zero()) {
        out.pass = false;
        out.summary = "T^2 != 0 in subset_module(" + std::to_string(n) + "); ";
      }
    }
  }
  const double s = clock.seconds();
  out.pass = out.pass && s < kBudgetSquareZero;
  out.summary += std::to_string(ops) + " operators for n <= 10 square to zero; " + fmt_seconds(s) +
                 " (budget " + fmt_seconds(kBudgetSquareZero) + ")";
  return out;
}

// 2. Top level is the subset module; transitions injective and equivariant.
Outcome presentation() {
  Stopwatch clock;
  Outcome out;
  std::size_t transitions = 0;
  for (std::size_t n = 1; n <= kMaxAmbient; ++n) {
    const auto s = paper_system(n, Q);
    const auto relabel = complement_relabeling(n, Q);
    const bool bijective = rank(relabel) == relabel.cols() && relabel.nnz() == relabel.cols();
    if (!bijective || check_equivariance(s.level(n), subset_module(n, Q), relabel)) {
      out.pass = false;
      out.summary += "relabeling fails at N=" + std::to_string(n) + "; ";
    }
    for (std::size_t m = 0; m < n; ++m) {
      ++transitions;
      const auto& t = s.transition_matrix(m);
      if (rank(t) != s.level(m).dim() || check_equivariance(s.level(m), s.level(m + 1), t)) {
        out.pass = false;
        out.summary += "transition " + std::to_string(m) + " of N=" + std::to_string(n) + " fails; ";
      }
    }
  }
  const double s = clock.seconds();
  out.pass = out.pass && s < kBudgetPresentation;
  out.summary += "relabeling isomorphism for N <= 8, " + std::to_string(transitions) +
                 " transitions injective and equivariant; " + fmt_seconds(s) + " (budget " +
                 fmt_seconds(kBudgetPresentation) + ")";
  return out;
}

// 3. Every single transition induces zero on every Tor_j, directly and via
//    the wedge homotopy.
Outcome zero_on_tor() {
  Outcome out;
  std::ostringstream os;
  for (FieldSpec field : {F, Q}) {
    std::size_t cases = 0, direct_fail = 0, homotopy_fail = 0, eventual = 0, eventual_fail = 0;
    std::string first;
    double top_seconds = 0;
    for (std::size_t n = 1; n <= kMaxAmbient; ++n) {
      Stopwatch clock;
      const auto cert = paper_certificate(n, field);
      if (n == kMaxAmbient) top_seconds = clock.seconds();
      for (const auto& c : cert.checks) {
        const bool zero = c.name.find(".zero") != std::string::npos &&
                          c.name.find("eventually") == std::string::npos;
        const bool homotopy = c.name.find(".homotopy[") != std::string::npos;
        if (zero) ++cases;
        if (zero && c.status != CheckStatus::Pass) {
          ++direct_fail;
          if (first.empty()) first = "N=" + std::to_string(n) + " " + c.name + " (" + c.detail + ")";
        }
        if (homotopy && c.status != CheckStatus::Pass) ++homotopy_fail;
        if (c.name.find("eventually-zero") != std::string::npos) {
          ++eventual;
          if (c.status != CheckStatus::Pass) ++eventual_fail;
        }
      }
    }
    const double budget = field.is_rational() ? kBudgetTorQ : kBudgetTorFp;
    const bool ok = direct_fail == 0 && homotopy_fail == 0 && top_seconds < budget;
    out.pass = out.pass && ok;
    os << "[" << field.to_string() << "] " << cases << " (N,n,j) cases: " << direct_fail
       << " nonzero induced maps, " << homotopy_fail << " homotopy identities fail";
    if (!first.empty()) os << ", first " << first;
    os << "; N=8 in " << fmt_seconds(top_seconds) << " (budget " << fmt_seconds(budget) << ")"
       << "; composites of j+1 steps zero in " << (eventual - eventual_fail) << "/" << eventual << ". ";
  }
  out.summary = os.str();
  return out;
}

// 4. Tor tables against the binomial row, the dense oracle and Kunneth.
Outcome tor_tables() {
  Outcome out;
  std::size_t tables = 0, oracle_fp = 0, oracle_q = 0;
  const oracle::ModP modp{1009};
  const oracle::Rational rational{};
  for (std::size_t n_amb = 0; n_amb <= kMaxAmbient; ++n_amb) {
    const auto expected = binomials(n_amb);
    for (std::size_t n = 0; n <= n_amb; ++n) {
      ++tables;
      const std::string where = "quotient(" + std::to_string(n_amb) + "," + std::to_string(n) + ")";
      const auto dims = tor_dims(quotient_module(n_amb, n, Q));
      if (dims != expected) {
        out.pass = false;
        out.summary += where + " gives " + dims_text(dims) + "; ";
      }
      // Kunneth: factors k[t]/t^2 (n of them) and k (N - n of them).
      const auto square = quotient_module(1, 1, Q);
      const auto point = trivial_module(1, Q);
      std::vector<std::size_t> predicted{1};
      std::unique_ptr<FiniteModule> built;
      for (std::size_t i = 0; i < n_amb; ++i) {
        const auto& factor = i < n ? square : point;
        predicted = convolve(predicted, tor_dims(factor));
        built = std::make_unique<FiniteModule>(built ? tensor_product(*built, factor) : factor);
      }
      const auto tensor_dims = built ? tor_dims(*built) : tor_dims(trivial_module(0, Q));
      if (predicted != dims || tensor_dims != dims) {
        out.pass = false;
        out.summary += where + " disagrees with the Kunneth prediction; ";
      }
      const std::size_t dim = std::size_t{1} << n;
      if (n_amb <= kOracleAmbientFp) {
        ++oracle_fp;
        if (oracle::tor_dims(modp, oracle::quotient_actions(modp, n_amb, n), dim) != dims) {
          out.pass = false;
          out.summary += where + " disagrees with the dense F_1009 oracle; ";
        }
      }
      if (n_amb <= kOracleAmbientQ) {
        ++oracle_q;
        if (oracle::tor_dims(rational, oracle::quotient_actions(rational, n_amb, n), dim) != dims) {
          out.pass = false;
          out.summary += where + " disagrees with the dense Q oracle; ";
        }
      }
    }
  }
  out.summary += std::to_string(tables) + " tables equal binomial rows and Kunneth predictions; dense oracle on " +
                 std::to_string(oracle_fp) + " tables over F_1009 (N <= 6) and " + std::to_string(oracle_q) +
                 " over Q (N <= 4)";
  return out;
}

// 5. CE cohomology of the dual equals Tor.
Outcome duality() {
  Outcome out;
  std::size_t count = 0;
  auto check = [&](const FiniteModule& m, const std::string& name) {
    ++count;
    const auto ext = ce_dims(dual_module(m));
    const auto tor = tor_dims(m);
    if (ext != tor) {
      out.pass = false;
      out.summary += name + ": Ext " + dims_text(ext) + " vs Tor " + dims_text(tor) + "; ";
    }
  };
  for (std::size_t n_amb = 0; n_amb <= kMaxAmbient; ++n_amb) {
    check(subset_module(n_amb, Q), "subset(" + std::to_string(n_amb) + ")");
    for (std::size_t n = 0; n <= n_amb; ++n) {
      check(quotient_module(n_amb, n, Q), "quotient(" + std::to_string(n_amb) + "," + std::to_string(n) + ")");
    }
  }
  out.summary += std::to_string(count) + " modules with Ext^j(k, M^*) = Tor_j(M, k) degreewise";
  return out;
}

// 6. Trivial module over n variables.
Outcome trivial_rows() {
  Stopwatch clock;
  Outcome out;
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto dims = tor_dims(trivial_module(n, Q));
    if (dims != binomials(n)) {
      out.pass = false;
      out.summary += "n=" + std::to_string(n) + " gives " + dims_text(dims) + "; ";
    }
  }
  const double s = clock.seconds();
  out.pass = out.pass && s < kBudgetTrivial;
  out.summary += "binomial rows for n <= 10; " + fmt_seconds(s) + " (budget " + fmt_seconds(kBudgetTrivial) + ")";
  return out;
}

// 7. Equivariant functionals die on the image of the previous level.
Outcome functionals() {
  Outcome out;
  std::size_t pairs = 0, functionals_seen = 0;
  for (std::size_t n_amb = 1; n_amb <= kMaxAmbient; ++n_amb) {
    for (std::size_t n = 0; n + 1 <= n_amb; ++n) {
      const auto t = transition_map(n_amb, n, Q);
      const auto transposed = t.matrix().transpose();
      const auto space = equivariant_functionals(t.target());
      for (const auto& phi : space.basis()) {
        ++functionals_seen;
        if (!transposed.apply(phi).empty()) {
          out.pass = false;
          out.summary += "functional survives at N=" + std::to_string(n_amb) + ", n=" + std::to_string(n) + "; ";
        }
      }
      ++pairs;
    }
  }
  out.summary += std::to_string(functionals_seen) + " functionals over " + std::to_string(pairs) +
                 " transitions compose to zero";
  return out;
}

// 8. Infrastructure: d^2 = 0, rank-nullity, Euler characteristic, Q vs F_p.
Outcome infrastructure() {
  Outcome out;
  std::size_t complexes = 0, tables = 0;
  auto built_ins = [](std::size_t n_amb, FieldSpec field) {
    std::vector<FiniteModule> mods{subset_module(n_amb, field)};
    for (std::size_t n = 0; n <= n_amb; ++n) mods.push_back(quotient_module(n_amb, n, field));
    return mods;
  };
  for (std::size_t n_amb = 0; n_amb <= kMaxAmbient; ++n_amb) {
    const auto q_mods = built_ins(n_amb, Q);
    const auto f_mods = built_ins(n_amb, F);
    for (std::size_t k = 0; k < q_mods.size(); ++k) {
      const auto kq = koszul_complex(q_mods[k]);
      const auto ce = ce_complex(dual_module(q_mods[k]));
      complexes += 2;
      if (!squares_to_zero(kq) || !squares_to_zero(ce)) {
        out.pass = false;
        out.summary += "d^2 != 0 at N=" + std::to_string(n_amb) + "; ";
      }
      const auto hq = homology_dims(kq);
      const auto ceq = homology_dims(ce);
      if (alternating(hq) != kq.euler_characteristic() || alternating(ceq) != ce.euler_characteristic()) {
        out.pass = false;
        out.summary += "Euler characteristic mismatch at N=" + std::to_string(n_amb) + "; ";
      }
      tables += 2;
      if (tor_dims(f_mods[k]) != hq || ce_dims(dual_module(f_mods[k])) != ceq) {
        out.pass = false;
        out.summary += "Q and F_1009 disagree at N=" + std::to_string(n_amb) + "; ";
      }
    }
  }
  testing::Gen gen;
  std::size_t matrices = 0;
  for (FieldSpec field : {Q, F}) {
    for (int trial = 0; trial < kRandomMatrices; ++trial) {
      const auto m = gen.structured_matrix(field);
      ++matrices;
      const auto k = kernel(m);
      if (rank(m) + k.dim() != m.cols() || rank(m.transpose()) != rank(m)) {
        out.pass = false;
        out.summary += "rank-nullity fails on a random matrix; ";
        break;
      }
    }
  }
  out.summary += std::to_string(complexes) + " complexes with d^2 = 0 and matching Euler characteristics; " +
                 std::to_string(matrices) + " random matrices satisfy rank-nullity; " + std::to_string(tables) +
                 " tables agree over Q and F_1009";
  return out;
}

// 9. Byte-identical certify reports across two processes.
Outcome determinism(const std::string& tool) {
  Outcome out;
  auto capture = [&](std::string& text) {
    const std::string cmd = "\"" + tool + "\" certify --ambient 6 --output json";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return false;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) text.append(buf.data(), got);
    return true;
  };
  std::string first, second;
  if (!capture(first) || !capture(second) || first.empty()) {
    out.pass = false;
    out.summary = "could not run " + tool;
    return out;
  }
  out.pass = first == second;
  out.summary = std::to_string(first.size()) + "-byte reports " + (out.pass ? "identical" : "differ");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string tool = ACYCLIC_TOOL_PATH;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else if (arg == "--tool" && i + 1 < argc) {
      tool = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--criterion k] [--tool path]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"square-zero action", square_zero},
      {"colimit presentation", presentation},
      {"zero induced maps on Tor", zero_on_tor},
      {"Tor dimension tables", tor_tables},
      {"duality Ext = dual Tor", duality},
      {"trivial module rows", trivial_rows},
      {"hom-vanishing", functionals},
      {"infrastructure properties", infrastructure},
      {"determinism", [&] { return determinism(tool); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && only != static_cast<int>(k + 1)) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << "criterion " << k + 1 << " [" << criteria[k].first << "]: " << (o.pass ? "PASS" : "FAIL")
              << " - " << o.summary << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
