#include "cli.hpp"

#include "suites.hpp"

#include "astute/counting.hpp"
#include "astute/error.hpp"
#include "astute/extremal.hpp"
#include "astute/io.hpp"
#include "astute/rules.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace astute::cli {

namespace {

struct Shape {
  std::uint32_t b = 2, n = 1, k = 1;
  GraphParams params() const { return {b, n, k}; }
};

void add_shape(CLI::App* cmd, Shape& s) {
  cmd->add_option("--b", s.b, "alphabet size")->required()->check(CLI::Range(2u, kMaxModulus));
  cmd->add_option("--n", s.n, "word length")->required()->check(CLI::Range(1u, 1u << 20));
  cmd->add_option("--k", s.k, "cycle length")->required()->check(CLI::Range(1u, 1u << 20));
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Inconclusive: return kBudget;
    case ErrorKind::NonIntegerResult: return kMismatch;
    case ErrorKind::NotPcrOrbit: return kInternal;
    default: return kInvalidFlags;
  }
}

// Writes to `path`, or to `out` when the path is empty.
bool emit(const std::string& path, std::ostream& out, std::ostream& err,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return true;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  write(file);
  return static_cast<bool>(file);
}

std::optional<std::uint64_t> env_max_nodes(std::ostream& err, bool& bad) {
  const char* raw = std::getenv("ASTUTE_MAX_NODES");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    err << "error: ASTUTE_MAX_NODES must be a positive integer, got '" << text << "'\n";
    bad = true;
    return std::nullopt;
  }
  return v;
}

struct FactorCmd {
  Shape shape;
  std::string rule, format = "text", out_path;

  int run(std::ostream& out, std::ostream& err) const {
    const auto r = parse_rule(rule, shape.b, shape.n);
    const Factor f = enumerate_factor(r.affine, shape.k);
    const bool ok = emit(out_path, out, err, [&](std::ostream& os) {
      if (format == "json") {
        os << to_json({f, r.spec(), std::nullopt, std::nullopt}) << '\n';
      } else if (format == "dot") {
        write_dot(os, f, "magenta");
      } else {
        os << "# " << r.spec() << " b=" << shape.b << " n=" << shape.n << " k=" << shape.k << ": "
           << f.size() << " cycles\n";
        write_text(os, f);
      }
    });
    return ok ? kOk : kInvalidFlags;
  }
};

struct CountCmd {
  Shape shape;
  std::string rule, method = "all";

  int run(std::ostream& out, std::ostream& err) const {
    const auto r = parse_rule(rule, shape.b, shape.n);
    std::vector<CountReport> rows;
    const bool all = method == "all";
    if (all || method == "enum") rows.push_back(count_enumeration(r, shape.k));
    if (all || method == "burnside") rows.push_back(count_burnside_direct(r, shape.k));
    if (all || method == "theorem2") rows.push_back(count_theorem2(r, shape.k));
    if (all || method == "closed") {
      auto cf = closed_form_for(r, shape.k);
      if (cf) rows.push_back(std::move(*cf));
      else if (!all) {
        err << "error: no closed form for rule " << r.spec() << '\n';
        return kInvalidFlags;
      }
    }
    out << std::left << std::setw(17) << "method" << "count\n";
    for (const auto& row : rows) {
      out << std::setw(17) << to_string(row.method) << row.value;
      if (row.witness)
        out << "  omega=" << row.witness->omega << " s=" << row.witness->s;
      out << '\n';
    }
    for (const auto& row : rows)
      if (row.value != rows.front().value) {
        err << "error: methods disagree: " << to_string(rows.front().method) << '='
            << rows.front().value << ", " << to_string(row.method) << '=' << row.value << '\n';
        return kMismatch;
      }
    return kOk;
  }
};

struct ExtremalCmd {
  Shape shape;
  std::optional<std::uint64_t> budget_nodes, max_vertices;
  std::optional<double> time_cap;
  unsigned workers = 1;
  std::string dot_path, json_path;

  int run(std::ostream& out, std::ostream& err) const {
    const GraphParams p = shape.params();
    p.validate();
    SearchBudget budget;
    bool bad_env = false;
    if (auto env = env_max_nodes(err, bad_env)) budget.max_nodes = *env;
    if (bad_env) return kInvalidFlags;
    if (budget_nodes) budget.max_nodes = *budget_nodes;
    if (max_vertices) budget.max_vertices = *max_vertices;
    budget.time_cap_seconds = time_cap;
    budget.workers = workers;

    const auto r = search_extremal(p, budget);
    const std::uint64_t pcr = closed_form_pcr(p.n, p.k, p.b).value;
    out << "b=" << p.b << " n=" << p.n << " k=" << p.k << " vertices=" << p.vertex_count() << '\n';
    out << "pcr " << pcr << '\n';
    out << "extremal " << r.best_count << (r.optimal ? " optimal" : " not_proven") << " nodes "
        << r.nodes_explored << '\n';

    bool ok = true;
    if (!dot_path.empty())
      ok &= emit(dot_path, out, err, [&](std::ostream& os) { write_dot(os, r.certificate, "blue"); });
    if (!json_path.empty())
      ok &= emit(json_path, out, err, [&](std::ostream& os) {
        os << to_json({r.certificate, std::nullopt, r.optimal, r.nodes_explored}) << '\n';
      });
    if (!ok) return kInvalidFlags;
    if (!r.optimal) {
      err << "error: search budget exhausted after " << r.nodes_explored
          << " nodes; best factor so far has " << r.best_count << " cycles\n";
      return kBudget;
    }
    return kOk;
  }
};

struct VerifyCmd {
  std::string suite = "all";
  std::optional<std::uint64_t> budget_nodes;

  int run(std::ostream& out, std::ostream& err) const {
    SearchBudget budget;
    bool bad_env = false;
    if (auto env = env_max_nodes(err, bad_env)) budget.max_nodes = *env;
    if (bad_env) return kInvalidFlags;
    if (budget_nodes) budget.max_nodes = *budget_nodes;

    const auto checks = suites::run_suite(suite, budget);
    nlohmann::json report = {{"schema", kSchema}, {"suite", suite}};
    nlohmann::json list = nlohmann::json::array();
    bool pass = true;
    for (const auto& c : checks) {
      list.push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      if (!c.pass) {
        pass = false;
        err << "FAIL " << c.suite << ": " << c.name << ": " << c.detail << '\n';
      }
    }
    report["pass"] = pass;
    report["checks"] = std::move(list);
    out << report.dump(2) << '\n';
    return pass ? kOk : kVerifyFailed;
  }
};

struct ExportCmd {
  Shape shape;
  std::string out_path;

  int run(std::ostream& out, std::ostream& err) const {
    const GraphParams p = shape.params();
    p.validate();
    return emit(out_path, out, err, [&](std::ostream& os) { write_spectral_csv(os, p); })
               ? kOk
               : kInvalidFlags;
  }
};

struct ValidateCmd {
  std::string in_path;

  int run(std::ostream& out, std::ostream& err) const {
    std::ifstream file(in_path);
    if (!file) {
      err << "error: cannot read " << in_path << '\n';
      return kInvalidFlags;
    }
    std::stringstream text;
    text << file.rdbuf();
    const auto doc = factor_from_json(text.str());
    const auto v = validate_factor(doc.factor);
    if (!v) {
      err << "invalid factor: " << v.diagnostic << '\n';
      return kVerifyFailed;
    }
    out << "valid factor with " << doc.factor.size() << " cycles\n";
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factors of de Bruijn graphs tensored with a cycle", "astute"};
  app.require_subcommand(1, 1);

  FactorCmd factor;
  auto* fc = app.add_subcommand("factor", "print the factor generated by a succession rule");
  fc->add_option("--rule", factor.rule, "pcr | icr | xor | affine:c;l0,...,ln")->required();
  add_shape(fc, factor.shape);
  fc->add_option("--format", factor.format, "text | json | dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  fc->add_option("--out", factor.out_path, "output file (default stdout)");

  CountCmd count;
  auto* cc = app.add_subcommand("count", "count the cycles of a rule's factor");
  cc->add_option("--rule", count.rule, "pcr | icr | xor | affine:c;l0,...,ln")->required();
  add_shape(cc, count.shape);
  cc->add_option("--method", count.method, "all | enum | burnside | theorem2 | closed")
      ->check(CLI::IsMember({"all", "enum", "burnside", "theorem2", "closed"}));

  ExtremalCmd extremal;
  auto* ec = app.add_subcommand("extremal", "search for a factor with the most cycles");
  add_shape(ec, extremal.shape);
  ec->add_option("--budget-nodes", extremal.budget_nodes, "search node cap (env ASTUTE_MAX_NODES)")
      ->check(CLI::PositiveNumber);
  ec->add_option("--max-vertices", extremal.max_vertices, "refuse graphs larger than this")
      ->check(CLI::PositiveNumber);
  ec->add_option("--time-cap", extremal.time_cap, "wall-clock cap in seconds")
      ->check(CLI::PositiveNumber);
  ec->add_option("--workers", extremal.workers, "parallel workers")->check(CLI::Range(1u, 256u));
  ec->add_option("--emit-dot", extremal.dot_path, "write the certificate as DOT");
  ec->add_option("--emit-json", extremal.json_path, "write the certificate as JSON");

  VerifyCmd verify;
  auto* vc = app.add_subcommand("verify", "run verification suites, JSON report on stdout");
  vc->add_option("--suite", verify.suite, "lemmas | theorem1 | counterexample | all")
      ->check(CLI::IsMember({"lemmas", "theorem1", "counterexample", "all"}));
  vc->add_option("--budget-nodes", verify.budget_nodes, "search node cap (env ASTUTE_MAX_NODES)")
      ->check(CLI::PositiveNumber);

  ExportCmd exporter;
  auto* xc = app.add_subcommand("export", "CSV of transforms along pure cycling register orbits");
  add_shape(xc, exporter.shape);
  xc->add_option("--out", exporter.out_path, "output file (default stdout)");

  ValidateCmd validate;
  auto* lc = app.add_subcommand("validate", "check a JSON factor against its graph");
  lc->add_option("--in", validate.in_path, "JSON factor file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, d;
    const int code = app.exit(e, o, d);
    out << o.str();
    err << d.str();
    return code == 0 ? kOk : kInvalidFlags;
  }

  try {
    if (fc->parsed()) return factor.run(out, err);
    if (cc->parsed()) return count.run(out, err);
    if (ec->parsed()) return extremal.run(out, err);
    if (vc->parsed()) return verify.run(out, err);
    if (xc->parsed()) return exporter.run(out, err);
    if (lc->parsed()) return validate.run(out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInvalidFlags;
}

}  // namespace astute::cli
