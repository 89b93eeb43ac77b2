#include "ghwlab/cli.hpp"

#include "ghwlab/code.hpp"
#include "ghwlab/defining_sets.hpp"
#include "ghwlab/ghw.hpp"
#include "ghwlab/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace ghwlab::cli {

namespace {

struct ClassArgs {
  int cls = 0;
  std::optional<int> q, m, k, s, l, h;
  std::string thetas;
  std::string pattern = "01";
};

struct RunConfig {
  ClassArgs params;
  std::string methods = "dual,formula";
  std::string format = "table";
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
  bool force = false;
  bool deterministic = false;
  bool lemmas = false;
  bool generator = false;
  std::string out_path;
  int q_max = 3;
  int mk_max = 8;
};

unsigned default_threads() {
  if (const char* env = std::getenv("GHWLAB_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int need(const std::optional<int>& v, const char* flag, int cls) {
  if (!v) throw ParameterError(std::string("class ") + std::to_string(cls) + " requires " + flag);
  return *v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

DefiningSet build_set(const ClassArgs& a) {
  switch (a.cls) {
    case 1: {
      const int q = need(a.q, "-q", 1);
      const int m = need(a.m, "-m", 1);
      const int k = need(a.k, "-k", 1);
      if (a.thetas.empty()) return class1_build(q, m, k, need(a.h, "-h", 1));
      const FieldPtr f = make_field(q, m);
      std::vector<FieldElement> thetas;
      for (const auto& t : split(a.thetas, ',')) thetas.push_back(FieldElement::parse(f, t));
      const int h = a.h.value_or(static_cast<int>(thetas.size()));
      return class1_build(q, m, k, h, ThetaStrategy::Explicit, std::move(thetas));
    }
    case 2:
      return class2_build(need(a.q, "-q", 2), need(a.m, "-m", 2), need(a.s, "-s", 2), need(a.k, "-k", 2),
                          need(a.l, "-l", 2));
    case 3: {
      if (a.q && *a.q != 2) throw ParameterError("class 3 is defined over q=2 only");
      if (a.pattern.size() != 2 || (a.pattern[0] != '0' && a.pattern[0] != '1') ||
          (a.pattern[1] != '0' && a.pattern[1] != '1')) {
        throw ParameterError("--pattern must be one of 01, 10, 00, 11");
      }
      return class3_variant_build(need(a.m, "-m", 3), TracePattern{a.pattern[0] - '0', a.pattern[1] - '0'});
    }
    default:
      throw ParameterError("--class must be 1, 2 or 3");
  }
}

Methods parse_methods(const std::string& s) {
  Methods m;
  for (const auto& part : split(s, ',')) {
    if (part == "support") {
      m.support = true;
    } else if (part == "dual") {
      m.dual = true;
    } else if (part == "formula") {
      m.formula = true;
    } else if (part == "all") {
      m = Methods::all();
    } else {
      throw ParameterError("unknown method '" + part + "' (expected support, dual, formula)");
    }
  }
  if (!m.any()) throw ParameterError("--methods must name at least one method");
  return m;
}

void add_class_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--class", cfg.params.cls, "Defining-set class (1, 2 or 3)")->required();
  sub->add_option("-q", cfg.params.q, "Characteristic (prime)");
  sub->add_option("-m", cfg.params.m, "Degree of the first field");
  sub->add_option("-k", cfg.params.k, "Degree of the subfield (class 1) or second field (class 2)");
  sub->add_option("-s", cfg.params.s, "Excluded subfield degree of F_{q^m} (class 2)");
  sub->add_option("-l", cfg.params.l, "Excluded subfield degree of F_{q^k} (class 2)");
  sub->add_option("-h", cfg.params.h, "Number of extra cosets (class 1)");
  sub->add_option("--thetas", cfg.params.thetas, "Explicit theta_1..theta_h as comma-separated digit strings");
  sub->add_option("--pattern", cfg.params.pattern, "Class 3 trace pattern: 01, 10, 00 or 11");
}

void add_run_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--threads", cfg.threads, "Worker threads (default: $GHWLAB_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget", cfg.budget, "Enumeration cap for codewords and per-dimension subspaces")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--force", cfg.force, "Run oracles beyond the default work threshold");
  sub->add_flag("--deterministic", cfg.deterministic, "Omit timings and timestamps from the output");
  sub->add_option("--out", cfg.out_path, "Write the output to this path instead of stdout");
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw ParameterError("cannot open " + cfg.out_path + " for writing");
  f << text;
}

std::string render(const RunConfig& cfg, const HierarchyReport& rep) {
  if (cfg.format == "json") {
    Json j = report_json(rep, cfg.deterministic);
    if (!cfg.deterministic) j["generated_at"] = timestamp();
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") return report_csv(rep);
  return report_table(rep);
}

// Prints the estimate and returns false when the run needs --force.
bool guard(const DefiningSet& d, int code_dim, const Methods& methods, bool lemmas, bool force, std::ostream& err) {
  const OracleCost cost = oracle_cost(d, code_dim);
  std::uint64_t tests = cost.tests(methods);
  if (lemmas && !methods.dual) tests += cost.dual_tests;
  if (tests == 0) return true;
  err << "estimate: " << tests << " subspace-point tests (dual: " << cost.dual_subspaces
      << " subspaces x " << d.size() << " points; support: " << cost.support_subspaces << " subspaces)\n";
  if (tests > kForceThreshold && !force) {
    err << "refusing: more than " << kForceThreshold << " tests; rerun with --force\n";
    return false;
  }
  return true;
}

int cmd_code(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const DefiningSet d = build_set(cfg.params);
  const CodeInstance c = build_code(d);
  const WeightDistribution wd = weight_distribution(c, cfg.budget, cfg.threads);
  std::string text;
  if (cfg.format == "json") {
    Json j = code_json(c, wd);
    if (cfg.generator) j["generator"] = split(generator_text(c), '\n');
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    if (cfg.format == "csv") {
      os << "weight,count\n";
      for (const auto& [w, count] : wd) os << w << ',' << count << '\n';
    } else {
      os << d.label() << '\n';
      os << "n=" << c.length << " dim=" << c.code_dim << " d=" << min_distance(wd) << '\n';
      os << "weight distribution:";
      for (const auto& [w, count] : wd) os << ' ' << w << ':' << count;
      os << '\n';
      if (cfg.generator) os << "generator:\n" << generator_text(c);
    }
    text = os.str();
  }
  emit(cfg, text, out);
  (void)err;
  return kExitOk;
}

int cmd_defset(const RunConfig& cfg, std::ostream& out) {
  const DefiningSet d = build_set(cfg.params);
  emit(cfg, defining_set_json(d).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_hierarchy(const RunConfig& cfg, const Methods& methods, bool lemmas, std::ostream& out, std::ostream& err) {
  const DefiningSet d = build_set(cfg.params);
  const CodeInstance c = build_code(d);
  if (!guard(d, c.code_dim, methods, lemmas, cfg.force, err)) return kExitBudget;
  VerifyOptions opts;
  opts.methods = methods;
  opts.search = SearchOptions{cfg.threads, cfg.budget};
  opts.lemmas = lemmas;
  const HierarchyReport rep = verify_hierarchy(d, opts);
  emit(cfg, render(cfg, rep), out);
  return rep.failed() ? kExitDisagreement : kExitOk;
}

std::vector<int> primes_up_to(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<ClassArgs> sweep_points(int q_max, int mk_max) {
  std::vector<ClassArgs> pts;
  for (int q : primes_up_to(q_max)) {
    for (int m = 2; m < mk_max; ++m) {
      for (int k = 1; k < m && m + k <= mk_max; ++k) {
        if (m % k != 0) continue;
        // h = q-1 with m = k+1 leaves the defining set empty.
        for (int h = 0; h <= q - 1 && (h + 1) * ipow(q, k) < ipow(q, m); ++h) pts.push_back(ClassArgs{1, q, m, k, std::nullopt, std::nullopt, h, "", "01"});
      }
    }
  }
  for (int q : primes_up_to(q_max)) {
    for (int m = 2; m < mk_max; ++m) {
      for (int k = 2; m + k <= mk_max; ++k) {
        for (int s = 1; s < m; ++s) {
          if (m % s != 0) continue;
          for (int l = 1; l < k; ++l) {
            if (k % l != 0 || k - l > m - s) continue;
            pts.push_back(ClassArgs{2, q, m, k, s, l, std::nullopt, "", "01"});
          }
        }
      }
    }
  }
  if (q_max >= 2) {
    for (int m = 2; 2 * m <= mk_max; ++m) {
      pts.push_back(ClassArgs{3, 2, m, std::nullopt, std::nullopt, std::nullopt, std::nullopt, "", "01"});
    }
  }
  return pts;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto pts = sweep_points(cfg.q_max, cfg.mk_max);
  Json runs = Json::array();
  std::ostringstream table;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  for (const auto& p : pts) {
    const DefiningSet d = build_set(p);
    const CodeInstance c = build_code(d);
    Methods methods{false, true, true};
    const OracleCost cost = oracle_cost(d, c.code_dim);
    std::string skip_note;
    if (cost.dual_tests > kForceThreshold && !cfg.force) {
      methods.dual = false;
      skip_note = "dual oracle skipped: " + std::to_string(cost.dual_tests) + " tests exceed " +
                  std::to_string(kForceThreshold) + " (use --force)";
      ++skipped;
    }
    VerifyOptions opts;
    opts.methods = methods;
    opts.search = SearchOptions{cfg.threads, cfg.budget};
    HierarchyReport rep = verify_hierarchy(d, opts);
    if (!skip_note.empty()) rep.notes.push_back(skip_note);
    rep.failed() ? ++failed : ++passed;
    runs.push_back(report_json(rep, cfg.deterministic));
    table << std::left << std::setw(40) << d.label() << std::right << " [" << rep.length << ", " << rep.dim << "] "
          << hierarchy_string(rep.hierarchy()) << (methods.dual ? "" : " (formula only)") << "  "
          << (rep.failed() ? "FAILED" : "PASS") << '\n';
    err << d.label() << ": " << (rep.failed() ? "FAILED" : "PASS") << '\n';
  }
  std::string text;
  if (cfg.format == "json") {
    Json j{{"sweep", Json{{"q_max", cfg.q_max}, {"mk_max", cfg.mk_max}}},
           {"runs", runs},
           {"summary", Json{{"total", pts.size()}, {"passed", passed}, {"failed", failed}, {"oracle_skipped", skipped}}}};
    if (!cfg.deterministic) j["generated_at"] = timestamp();
    text = j.dump(2) + "\n";
  } else {
    table << "total=" << pts.size() << " passed=" << passed << " failed=" << failed << " oracle_skipped=" << skipped
          << '\n';
    text = table.str();
  }
  emit(cfg, text, out);
  return failed > 0 ? kExitDisagreement : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Hamming weight hierarchies of trace codes from defining sets", "ghwlab"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = default_threads();

  auto* code = app.add_subcommand("code", "Build the code and print n, dim, d and the weight distribution");
  add_class_flags(code, cfg);
  add_run_flags(code, cfg);
  code->add_flag("--generator", cfg.generator, "Also print the generator matrix");

  auto* defset = app.add_subcommand("defset", "Export the defining set as JSON");
  add_class_flags(defset, cfg);
  defset->add_option("--out", cfg.out_path, "Write the output to this path instead of stdout");

  auto* ghw = app.add_subcommand("ghw", "Compute the weight hierarchy with the chosen methods");
  add_class_flags(ghw, cfg);
  add_run_flags(ghw, cfg);
  ghw->add_option("--methods", cfg.methods, "Comma-separated: support, dual, formula");
  ghw->add_flag("--lemmas", cfg.lemmas, "Also run the exhaustive structural checks");

  auto* verify = app.add_subcommand("verify", "Run all methods and structural checks; nonzero exit on disagreement");
  add_class_flags(verify, cfg);
  add_run_flags(verify, cfg);

  auto* sweep = app.add_subcommand("sweep", "Verify formula against the dual oracle over all small parameter points");
  add_run_flags(sweep, cfg);
  sweep->add_option("--q-max", cfg.q_max, "Largest characteristic")->check(CLI::Range(2, 7));
  sweep->add_option("--mk-max", cfg.mk_max, "Largest m+k (class 3 uses 2m)")->check(CLI::Range(3, 12));

  for (auto* sub : {code, defset, ghw, verify, sweep}) sub->set_help_flag("--help", "Print this help message and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    for (auto* sub : app.get_subcommands()) out << sub->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (code->parsed()) return cmd_code(cfg, out, err);
    if (defset->parsed()) return cmd_defset(cfg, out);
    if (ghw->parsed()) return cmd_hierarchy(cfg, parse_methods(cfg.methods), cfg.lemmas, out, err);
    if (verify->parsed()) return cmd_hierarchy(cfg, Methods::all(), true, out, err);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget refusal: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const FieldError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  }
  return kExitParameter;
}

}  // namespace ghwlab::cli
