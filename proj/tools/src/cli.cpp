#include "acyclic_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "acyclic/builtins.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/json_io.hpp"
#include "acyclic/koszul.hpp"
#include "acyclic/limit.hpp"

namespace acyclic::cli {
namespace {

const std::vector<std::pair<std::string, Command>> kCommands = {
    {"validate", Command::Validate},
    {"tor", Command::Tor},
    {"ce", Command::Ce},
    {"transition-check", Command::TransitionCheck},
    {"certify", Command::Certify},
    {"kunneth-check", Command::KunnethCheck},
};

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string out = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(dims[k]);
  }
  return out + ")";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool is_builtin_name(const std::string& name) {
  for (const char* prefix : {"subset:", "quotient:", "trivial:", "dual:"}) {
    if (name.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read module file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void require_module(const RunConfig& c) {
  if (c.module.empty()) throw InvalidArgument("--module is required for " + command_name(c.command));
}

void check_file_field(const RunConfig& c, FieldSpec file_field) {
  if (c.field_given && file_field != c.field) {
    throw InvalidArgument("--field " + c.field.to_string() + " conflicts with the module's field " +
                          file_field.to_string());
  }
}

FiniteModule load_module(const RunConfig& c) {
  require_module(c);
  if (is_builtin_name(c.module)) return builtin_module(c.module, c.field);
  FiniteModule m = module_from_text(read_file(c.module));
  check_file_field(c, m.field());
  return m;
}

std::size_t require_ambient(const RunConfig& c) {
  if (!c.ambient) throw InvalidArgument("--ambient is required for " + command_name(c.command));
  if (*c.ambient < 1 || *c.ambient > kMaxAmbient) {
    throw InvalidArgument("--ambient must be between 1 and " + std::to_string(kMaxAmbient));
  }
  return *c.ambient;
}

void reject(bool present, const char* flag, const RunConfig& c) {
  if (present) throw InvalidArgument(std::string(flag) + " does not apply to " + command_name(c.command));
}

std::vector<std::size_t> selected_degrees(const RunConfig& c, std::size_t count) {
  if (c.degree) {
    if (*c.degree >= count) {
      throw InvalidArgument("--degrees " + std::to_string(*c.degree) + " exceeds the top degree " +
                            std::to_string(count - 1));
    }
    return {*c.degree};
  }
  std::vector<std::size_t> all(count);
  for (std::size_t k = 0; k < count; ++k) all[k] = k;
  return all;
}

// --- validate ----------------------------------------------------------------

RunResult run_validate(const RunConfig& c) {
  reject(c.ambient.has_value(), "--ambient", c);
  reject(c.level.has_value(), "--level", c);
  reject(c.degree.has_value(), "--degrees", c);
  require_module(c);

  FieldSpec field = c.field;
  std::size_t dim = 0;
  std::size_t vars = 0;
  ValidationReport report;
  if (is_builtin_name(c.module)) {
    const FiniteModule m = builtin_module(c.module, c.field);
    dim = m.dim();
    vars = m.num_vars();
    report = validate(m);
  } else {
    const RawModule raw = raw_module_from_text(read_file(c.module));
    check_file_field(c, raw.field);
    field = raw.field;
    dim = raw.dim;
    vars = raw.actions.size();
    report = validate_actions(raw.field, raw.dim, raw.actions, raw.locally_nilpotent);
  }

  RunResult result;
  result.exit_code = report.ok() ? kExitOk : kExitUsage;
  if (c.output == OutputFormat::Json) {
    Json ops = Json::array();
    for (std::size_t i = 0; i < report.square_zero.size(); ++i) {
      Json op;
      op["operator"] = i + 1;
      op["nilpotency_degree"] = report.nilpotency_degree[i] ? Json(*report.nilpotency_degree[i]) : Json();
      op["square_zero"] = static_cast<bool>(report.square_zero[i]);
      ops.push_back(std::move(op));
    }
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back(Json{{"what", v.what},
                                {"operators", Json::array({v.first_operator, v.second_operator})},
                                {"witness", vector_to_json(v.witness)}});
    }
    Json out;
    out["command"] = "validate";
    out["module"] = c.module;
    out["field"] = field.to_string();
    out["num_vars"] = vars;
    out["dim"] = dim;
    out["valid"] = report.ok();
    out["commuting"] = report.commuting;
    out["square_zero"] = report.all_square_zero();
    out["operators"] = std::move(ops);
    out["violations"] = std::move(violations);
    result.out = dump(out);
  } else {
    std::ostringstream os;
    os << "module " << c.module << " over " << field.to_string() << ": dim " << dim << ", "
       << vars << " operators\n";
    os << "commuting: " << (report.commuting ? "yes" : "no") << "\n";
    os << "square-zero: " << (report.all_square_zero() ? "yes" : "no") << "\n";
    if (!report.square_zero.empty()) {
      os << std::left << std::setw(10) << "operator" << std::setw(12) << "nilpotency"
         << "square-zero\n";
      for (std::size_t i = 0; i < report.square_zero.size(); ++i) {
        const auto& deg = report.nilpotency_degree[i];
        os << std::setw(10) << ("T_" + std::to_string(i + 1)) << std::setw(12)
           << (deg ? std::to_string(*deg) : std::string("none")) << (report.square_zero[i] ? "yes" : "no")
           << "\n";
      }
    }
    if (report.violations.empty()) {
      os << "violations: none\n";
    } else {
      for (const auto& v : report.violations) {
        os << "violation: " << v.what << "; witness " << format_vector(v.witness) << "\n";
      }
    }
    result.out = os.str();
  }
  return result;
}

// --- tor / ce ----------------------------------------------------------------

RunResult run_homology(const RunConfig& c, bool cohomology) {
  reject(c.ambient.has_value(), "--ambient", c);
  reject(c.level.has_value(), "--level", c);
  const FiniteModule m = load_module(c);
  const HomologyTable h = cohomology ? ce_cohomology(m) : homology(koszul_complex(m));
  const auto dims = h.dims();
  const auto degrees = selected_degrees(c, dims.size());
  const std::string symbol = cohomology ? "Ext^" : "Tor_";

  RunResult result;
  if (c.output == OutputFormat::Json) {
    Json sel = Json::array();
    Json sel_dims = Json::array();
    Json reps = Json::array();
    for (auto j : degrees) {
      sel.push_back(j);
      sel_dims.push_back(dims[j]);
      Json basis = Json::array();
      for (const auto& v : h.at(static_cast<int>(j)).representatives.basis()) {
        basis.push_back(vector_to_json(v));
      }
      reps.push_back(std::move(basis));
    }
    Json out;
    out["command"] = command_name(c.command);
    out["module"] = c.module;
    out["field"] = m.field().to_string();
    out["num_vars"] = m.num_vars();
    out["dim"] = m.dim();
    out["degrees"] = std::move(sel);
    out["dims"] = std::move(sel_dims);
    out["representatives"] = std::move(reps);
    result.out = dump(out);
  } else {
    std::ostringstream os;
    os << (cohomology ? "Ext^j(k, " : "Tor_j(") << c.module << (cohomology ? ")" : ", k)")
       << " over " << m.field().to_string() << "\n";
    os << std::left << std::setw(8) << "degree" << "dim\n";
    for (auto j : degrees) os << std::setw(8) << j << dims[j] << "\n";
    result.out = os.str();
  }
  return result;
}

// --- certificates ------------------------------------------------------------

std::string certificate_table(const Certificate& cert) {
  std::ostringstream os;
  os << "certificate: ambient " << cert.ambient << ", field " << cert.field.to_string() << "\n";
  os << std::left << std::setw(7) << "level" << std::setw(6) << "dim" << std::setw(24) << "tor_dims"
     << "dual_ext_dims\n";
  for (const auto& l : cert.levels) {
    os << std::setw(7) << l.level << std::setw(6) << l.dim << std::setw(24) << dims_text(l.tor_dims)
       << dims_text(l.dual_ext_dims) << "\n";
  }
  os << "checks: " << cert.checks.size() << " total, " << cert.failures() << " failed\n";
  for (const auto& k : cert.checks) {
    std::string status = to_string(k.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    os << std::setw(8) << status << k.name;
    if (!k.detail.empty()) os << "  " << k.detail;
    os << "\n";
    if (k.status == CheckStatus::Fail) {
      os << "        claim: " << k.claim << "\n";
      if (k.witness) {
        os << "        witness: " << k.witness->description << " " << format_vector(k.witness->vector)
           << "\n";
      }
    }
  }
  os << "conclusion: " << cert.conclusion << "\n";
  return os.str();
}

RunResult certificate_result(const RunConfig& c, const Certificate& cert) {
  RunResult result;
  result.exit_code = cert.passed() ? kExitOk : kExitCheckFailed;
  result.out = c.output == OutputFormat::Json ? dump(certificate_to_json(cert)) : certificate_table(cert);
  return result;
}

RunResult run_certify(const RunConfig& c) {
  reject(c.level.has_value(), "--level", c);
  reject(!c.module.empty(), "--module", c);
  reject(c.degree.has_value(), "--degrees", c);
  const std::size_t n = require_ambient(c);
  return certificate_result(c, paper_certificate(n, c.field, CertificateOptions{c.parallel, 0}));
}

RunResult run_transition_check(const RunConfig& c) {
  reject(!c.module.empty(), "--module", c);
  reject(c.degree.has_value(), "--degrees", c);
  const std::size_t n = require_ambient(c);
  if (!c.level) throw InvalidArgument("--level is required for transition-check");
  if (*c.level >= n) throw InvalidArgument("--level must be below --ambient");
  const std::size_t m = *c.level;
  const DirectedSystem full = paper_system(n, c.field);
  const DirectedSystem step({full.level_ptr(m), full.level_ptr(m + 1)}, {full.transition_matrix(m)},
                            {full.factorizations()[m]});
  return certificate_result(c, vanishing_certificate(step, CertificateOptions{c.parallel, m}));
}

// --- Kunneth -----------------------------------------------------------------

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

struct KunnethRow {
  std::string label;
  std::vector<std::size_t> computed;
  std::vector<std::size_t> tensor_built;
  std::vector<std::size_t> predicted;
  bool match() const { return computed == predicted && tensor_built == predicted; }
};

KunnethRow kunneth_level(std::size_t ambient, std::size_t level, FieldSpec field) {
  // quotient(N, n) splits as n copies of k[t]/t^2 and N - n copies of k.
  const FiniteModule square = quotient_module(1, 1, field);
  const FiniteModule point = trivial_module(1, field);
  const auto square_tor = tor_dims(square);
  const auto point_tor = tor_dims(point);
  std::vector<std::size_t> predicted{1};
  std::optional<FiniteModule> built;
  for (std::size_t i = 0; i < ambient; ++i) {
    const FiniteModule& factor = i < level ? square : point;
    predicted = convolve(predicted, i < level ? square_tor : point_tor);
    built = built ? tensor_product(*built, factor) : factor;
  }
  return {"quotient:" + std::to_string(ambient) + ":" + std::to_string(level),
          tor_dims(quotient_module(ambient, level, field)), tor_dims(*built), predicted};
}

RunResult run_kunneth(const RunConfig& c) {
  reject(c.degree.has_value(), "--degrees", c);
  std::vector<KunnethRow> rows;
  FieldSpec field = c.field;
  if (!c.module.empty()) {
    reject(c.ambient.has_value(), "--ambient", c);
    reject(c.level.has_value(), "--level", c);
    const FiniteModule m = load_module(c);
    field = m.field();
    const auto t = tor_dims(m);
    const auto square = tensor_product(m, m);
    rows.push_back({c.module + " (x) " + c.module, tor_dims(square), tor_dims(square), convolve(t, t)});
  } else {
    const std::size_t n = require_ambient(c);
    if (c.level && *c.level > n) throw InvalidArgument("--level must not exceed --ambient");
    for (std::size_t level = 0; level <= n; ++level) {
      if (c.level && *c.level != level) continue;
      rows.push_back(kunneth_level(n, level, c.field));
    }
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.match(); });

  RunResult result;
  result.exit_code = ok ? kExitOk : kExitCheckFailed;
  if (c.output == OutputFormat::Json) {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["module"] = r.label;
      row["computed"] = r.computed;
      row["tensor_built"] = r.tensor_built;
      row["predicted"] = r.predicted;
      row["match"] = r.match();
      list.push_back(std::move(row));
    }
    Json out;
    out["command"] = "kunneth-check";
    out["field"] = field.to_string();
    out["passed"] = ok;
    out["rows"] = std::move(list);
    result.out = dump(out);
  } else {
    std::ostringstream os;
    os << "Kunneth check over " << field.to_string() << "\n";
    for (const auto& r : rows) {
      os << (r.match() ? "PASS " : "FAIL ") << r.label << "  computed " << dims_text(r.computed)
         << "  tensor-built " << dims_text(r.tensor_built) << "  predicted " << dims_text(r.predicted)
         << "\n";
    }
    result.out = os.str();
  }
  return result;
}

RunResult dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::Validate: return run_validate(c);
    case Command::Tor: return run_homology(c, false);
    case Command::Ce: return run_homology(c, true);
    case Command::TransitionCheck: return run_transition_check(c);
    case Command::Certify: return run_certify(c);
    case Command::KunnethCheck: return run_kunneth(c);
  }
  throw InvalidArgument("unknown command");
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

ParsedArgs parse_args(int argc, const char* const* argv) {
  CLI::App app{"Exact Koszul homology and colimit certificates for modules over k[t_1..t_N]",
               "acyclic"};
  std::string command;
  std::string field = "q";
  std::string output = "table";
  std::string degrees = "all";
  RunConfig config;
  std::size_t ambient = 0;
  std::size_t level = 0;
  bool sequential = false;

  std::vector<std::string> names;
  for (const auto& [name, cmd] : kCommands) names.push_back(name);
  app.add_option("command", command, "validate | tor | ce | transition-check | certify | kunneth-check")
      ->required()
      ->check(CLI::IsMember(names));
  auto* field_opt = app.add_option("--field", field, "q or fp:<p>");
  app.add_option("--output", output, "table or json")->check(CLI::IsMember({"table", "json"}));
  auto* ambient_opt = app.add_option("--ambient", ambient, "number of variables N");
  auto* level_opt = app.add_option("--level", level, "level n of the chain");
  app.add_option("--module", config.module, "built-in name (subset:n, quotient:N:n, trivial:N, dual:<name>) or JSON path");
  app.add_option("--degrees", degrees, "all or a single degree j");
  app.add_flag("--sequential", sequential, "compute certificate levels on one thread");

  ParsedArgs parsed;
  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    parsed.early = {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
    return parsed;
  }

  try {
    config.field = FieldSpec::parse(field);
  } catch (const Error& e) {
    parsed.early = {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    return parsed;
  }
  config.field_given = field_opt->count() > 0;
  for (const auto& [name, cmd] : kCommands) {
    if (name == command) config.command = cmd;
  }
  config.output = output == "json" ? OutputFormat::Json : OutputFormat::Table;
  if (ambient_opt->count() > 0) config.ambient = ambient;
  if (level_opt->count() > 0) config.level = level;
  if (degrees != "all") {
    const bool digits = !degrees.empty() && std::all_of(degrees.begin(), degrees.end(), ::isdigit);
    if (!digits || degrees.size() > 6) {
      parsed.early = {kExitUsage, "", "error: --degrees must be 'all' or a non-negative integer\n"};
      return parsed;
    }
    config.degree = std::stoul(degrees);
  }
  config.parallel = !sequential;
  parsed.config = config;
  return parsed;
}

RunResult run(const RunConfig& config) {
  try {
    return dispatch(config);
  } catch (const std::exception& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace acyclic::cli
