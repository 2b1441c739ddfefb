#include "chernratio/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <CLI11.hpp>

#include "chernratio/chern_classes.hpp"
#include "chernratio/inequality.hpp"
#include "chernratio/json_io.hpp"
#include "chernratio/polytope.hpp"
#include "chernratio/schubert.hpp"
#include "chernratio/todd.hpp"
#include "chernratio/worked_examples.hpp"

namespace chernratio {

namespace {

enum class Format { Text, Json, Latex };

struct RunConfig {
  int n = 0;
  std::string m = "";  // empty: per-dimension default
  std::string mode = "general-type";
  std::string format = "text";
  bool no_comparisons = false;
  bool bounds = false;
  std::string output;
  // subcommand positionals
  std::string a, b, box, section;
  int w = 0, p = 0, d = 0;
};

// An invalid-input error that should print usage.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  if (f == "latex") return Format::Latex;
  throw UsageError("unknown format '" + f + "' (text | json | latex)");
}

// nullopt means symbolic
std::optional<long> resolve_m(const RunConfig& cfg) {
  if (cfg.m.empty()) return cfg.n == 2 ? std::optional<long>(5) : std::nullopt;
  if (cfg.m == "symbolic") return std::nullopt;
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(cfg.m, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cfg.m.size() || cfg.m.empty()) throw UsageError("--m must be an integer or 'symbolic'");
  if (v == 0) throw UsageError("--m must be nonzero");
  return v;
}

void check_dimension(int n) {
  if (n < 2) throw UsageError("--n must be at least 2");
}

std::string provenance_label(const Provenance& p) {
  std::string s = std::string(provenance_name(p.kind)) + " " + p.a.to_string();
  if (p.kind == ProvenanceKind::Comparison) s += " vs " + p.b.to_string();
  return s;
}

std::string coordinate_name(const Partition& a, int n, bool latex) {
  const std::string num = monomial_string(ChernVariables::Tangent, a, latex);
  const std::string den = monomial_string(ChernVariables::Tangent, Partition::column(n), latex);
  return latex ? "\\frac{" + num + "}{" + den + "}" : num + "/" + den;
}

std::string linear_form(const std::vector<mpq_class>& coeffs, const mpq_class& constant,
                        const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const mpq_class mag = abs(coeffs[i]);
    if (coeffs[i] < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    if (mag != 1) os << mag.get_str();
    os << names[i];
    first = false;
  }
  if (constant != 0 || first) {
    if (first) os << constant.get_str();
    else os << (constant < 0 ? " - " : " + ") << mpq_class(abs(constant)).get_str();
  }
  return os.str();
}

std::string bound_text(const LpResult& r, bool is_min) {
  switch (r.status) {
    case LpStatus::Optimal: return r.value.get_str();
    case LpStatus::Unbounded: return is_min ? "-inf" : "+inf";
    case LpStatus::Infeasible: return "infeasible";
  }
  return "?";
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  check_dimension(cfg.n);
  const Format fmt = parse_format(cfg.format);
  const auto m = resolve_m(cfg);
  GenerateOptions options;
  options.include_comparisons = !cfg.no_comparisons;
  std::vector<Inequality> list = generate_all(cfg.n, options);
  if (m) {
    for (auto& ineq : list) ineq = specialize(ineq, *m);
  }
  switch (fmt) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& ineq : list) arr.push_back(to_json(ineq));
      Json doc{{"n", cfg.n}};
      doc["m"] = m ? Json(*m) : Json("symbolic");
      doc["inequalities"] = arr;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      for (const auto& ineq : list) out << "\\[ " << solved_form(ineq, true) << " \\]\n";
      break;
    case Format::Text:
      out << "n = " << cfg.n << ", m = " << (m ? std::to_string(*m) : "symbolic") << ", " << list.size()
          << " inequalities\n";
      for (const auto& ineq : list) {
        out << solved_form(ineq) << "    [" << provenance_label(ineq.provenance) << "]\n";
      }
      break;
  }
  return 0;
}

int cmd_polytope(const RunConfig& cfg, std::ostream& out) {
  check_dimension(cfg.n);
  const Format fmt = parse_format(cfg.format);
  const auto m = resolve_m(cfg);
  if (!m) throw UsageError("polytope needs a numeric --m");
  const Mode mode = parse_mode(cfg.mode);
  try {
    check_mode(*m, mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  GenerateOptions options;
  options.include_comparisons = !cfg.no_comparisons;
  const RatioPolytope poly = build_polytope(cfg.n, *m, mode, options);
  std::optional<BoundsCertificate> cert;
  std::optional<ChiBounds> chi;
  if (cfg.bounds) {
    cert = boundedness_certificate(poly);
    chi = chi_bounds(poly);
  }

  if (fmt == Format::Json) {
    Json doc{{"polytope", to_json(poly)}};
    if (cert) {
      doc["certificate"] = to_json(*cert);
      doc["chi_bounds"] = to_json(*chi);
    }
    out << doc.dump(2) << "\n";
  } else {
    const bool latex = fmt == Format::Latex;
    std::vector<std::string> names;
    for (const auto& a : poly.coords) names.push_back(coordinate_name(a, cfg.n, latex));
    const std::string ge = latex ? " \\ge 0" : " ≥ 0";
    if (!latex) {
      out << "n = " << poly.n << ", m = " << poly.m_value << ", mode = " << mode_name(poly.mode) << "\n";
      out << poly.rows.size() << " constraints:\n";
    }
    for (std::size_t i = 0; i < poly.rows.size(); ++i) {
      const std::string row = linear_form(poly.rows[i].coeffs, poly.rows[i].constant, names) + ge;
      if (latex) out << "\\[ " << row << " \\]\n";
      else out << "  " << row << "    [" << provenance_label(poly.sources[i]) << "]\n";
    }
    if (cert) {
      if (latex) {
        for (const auto& c : cert->coords) {
          out << "\\[ " << bound_text(c.min, true) << " \\le " << coordinate_name(c.partition, cfg.n, true)
              << " \\le " << bound_text(c.max, false) << " \\]\n";
        }
      } else {
        out << "bounds:\n";
        for (const auto& c : cert->coords) {
          out << "  " << coordinate_name(c.partition, cfg.n, false) << " in [" << bound_text(c.min, true)
              << ", " << bound_text(c.max, false) << "]\n";
        }
        out << "χ_top / K^n in [" << bound_text(chi->d1, true) << ", " << bound_text(chi->d2, false) << "]\n";
        out << "χ(O_X) / K^n in [" << bound_text(chi->d3, true) << ", " << bound_text(chi->d4, false) << "]\n";
        out << "bounded: " << (cert->bounded() ? "yes" : "no") << "\n";
      }
    }
  }
  return cert && !cert->bounded() ? 2 : 0;
}

template <typename T>
void emit_value(const T& value, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) out << to_json(value).dump(2) << "\n";
  else if constexpr (std::is_same_v<T, SchubertExpr>) out << value.to_string(fmt == Format::Latex) << "\n";
  else out << (fmt == Format::Latex ? value.to_latex() : value.to_string()) << "\n";
}

int cmd_schubert_mult(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = parse_format(cfg.format);
  BoxSpec box;
  if (!cfg.box.empty()) {
    const auto comma = cfg.box.find(',');
    if (comma == std::string::npos) throw UsageError("--box expects rows,cols");
    try {
      box = Box(std::stoi(cfg.box.substr(0, comma)), std::stoi(cfg.box.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("--box expects two positive integers rows,cols");
    }
  }
  const SchubertExpr product =
      multiply(SchubertExpr::sigma(parse_partition(cfg.a)), SchubertExpr::sigma(parse_partition(cfg.b)), box);
  emit_value(product, fmt, out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = parse_format(cfg.format);
  std::vector<CheckResult> checks;
  try {
    checks = verify_section(cfg.section);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t mismatched = 0;
  for (const auto& c : checks) mismatched += c.match ? 0 : 1;

  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json j{{"id", c.id}, {"description", c.description}, {"match", c.match},
             {"expected", c.expected}, {"expected_value", c.expected_value}, {"actual", c.actual}};
      if (!c.previous.empty()) j["previous"] = c.previous;
      if (!c.match) j["printed_step_inconsistent"] = c.printed_step_inconsistent;
      arr.push_back(j);
    }
    Json doc{{"section", cfg.section}, {"checks", arr}, {"matched", checks.size() - mismatched},
             {"mismatched", mismatched}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.match ? "[ok]       " : "[mismatch] ") << c.id << ": " << c.description << "\n";
      if (!c.match) {
        out << "    printed:  " << c.expected << "\n";
        out << "    expected: " << c.expected_value << "\n";
        out << "    computed: " << c.actual << "\n";
        if (c.printed_step_inconsistent) {
          out << "    the printed line does not follow from " << c.previous << ", which matches\n";
        }
      }
    }
    out << cfg.section << ": " << checks.size() - mismatched << "/" << checks.size() << " checks match\n";
  }
  return mismatched == 0 ? 0 : 2;
}

void add_format(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "text | json | latex")->capture_default_str();
  cmd->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Chern-class inequalities from Schubert calculus and ratio polytope bounds", "chernratio"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "list the inequalities for dimension n");
  gen->add_option("--n", cfg.n, "dimension (>= 2)")->required();
  gen->add_option("--m", cfg.m, "integer or 'symbolic' (default: 5 for n = 2, symbolic otherwise)");
  gen->add_flag("--no-comparisons", cfg.no_comparisons, "skip the monomial comparison family");
  add_format(gen, cfg);

  auto* pol = app.add_subcommand("polytope", "ratio polytope and LP bounds");
  pol->add_option("--n", cfg.n, "dimension (>= 2)")->required();
  pol->add_option("--m", cfg.m, "nonzero integer (default: 5 for n = 2)");
  pol->add_option("--mode", cfg.mode, "general-type | fano")->capture_default_str();
  pol->add_flag("--bounds", cfg.bounds, "solve for the min and max of every coordinate");
  pol->add_flag("--no-comparisons", cfg.no_comparisons, "skip the monomial comparison family");
  add_format(pol, cfg);

  auto* sch = app.add_subcommand("schubert", "Schubert calculus");
  sch->require_subcommand(1);
  auto* mult = sch->add_subcommand("mult", "product σ_a σ_b");
  mult->add_option("a", cfg.a, "partition, e.g. 2,1")->required();
  mult->add_option("b", cfg.b, "partition")->required();
  mult->add_option("--box", cfg.box, "rows,cols of the Grassmannian box");
  add_format(mult, cfg);

  auto* s2c = app.add_subcommand("sigma-to-chern", "σ_w in the Chern classes of S");
  s2c->add_option("w", cfg.w, "weight (>= 1)")->required()->check(CLI::PositiveNumber);
  add_format(s2c, cfg);

  auto* gc = app.add_subcommand("gauss-chern", "c_p(γ*S) in the Chern classes of X");
  gc->add_option("--n", cfg.n, "dimension")->required()->check(CLI::PositiveNumber);
  gc->add_option("--p", cfg.p, "degree, 0 <= p <= n")->required()->check(CLI::NonNegativeNumber);
  add_format(gc, cfg);

  auto* td = app.add_subcommand("todd", "Todd polynomial td_d");
  td->add_option("d", cfg.d, "degree")->required()->check(CLI::NonNegativeNumber);
  add_format(td, cfg);

  auto* ver = app.add_subcommand("verify-paper", "recompute the pinned worked examples");
  ver->add_option("section", cfg.section, "n2 | n3 | n4 | n5 | schubert | lemmas")->required();
  add_format(ver, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << "\n";
      return 1;
    }
    sink = &file;
  }

  try {
    if (gen->parsed()) return cmd_generate(cfg, *sink);
    if (pol->parsed()) return cmd_polytope(cfg, *sink);
    if (mult->parsed()) return cmd_schubert_mult(cfg, *sink);
    if (s2c->parsed()) {
      emit_value(sigma_to_chernS(cfg.w), parse_format(cfg.format), *sink);
      return 0;
    }
    if (gc->parsed()) {
      emit_value(chern_gauss(cfg.n, cfg.p), parse_format(cfg.format), *sink);
      return 0;
    }
    if (td->parsed()) {
      emit_value(todd_polynomial(cfg.d), parse_format(cfg.format), *sink);
      return 0;
    }
    if (ver->parsed()) return cmd_verify(cfg, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace chernratio
