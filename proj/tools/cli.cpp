#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "randsub/convergence.hpp"
#include "randsub/errors.hpp"
#include "randsub/extensions.hpp"
#include "randsub/report.hpp"
#include "randsub/roots.hpp"
#include "randsub/scan.hpp"
#include "randsub/sequence.hpp"

namespace randsub::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::size_t kAutoExactLimit = 10000;

// Relative --out paths are taken from RANDSUB_OUT_DIR when it is set.
fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("RANDSUB_OUT_DIR"); dir != nullptr && *dir != '\0') return fs::path(dir) / p;
  return p;
}

// Calls `write` with either the --out file or the fallback stream.
void with_output(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  const fs::path target = resolve_output(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream file(target);
  if (!file) throw std::runtime_error("cannot open output file " + target.string());
  write(file);
  if (!file) throw std::runtime_error("write failed: " + target.string());
}

// --config FILE: lines "key=value" ('#' starts a comment). Each key naming an
// option of the chosen subcommand becomes "--key value" unless that option is
// already on the command line; other keys are ignored so one file can serve
// several subcommands.
std::vector<std::string> apply_config(std::vector<std::string> args, CLI::App& app) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config") {
      if (it + 1 == args.end()) throw ValidationError("--config needs a file name");
      path = *(it + 1);
      it = args.erase(it, it + 2);
    } else if (it->starts_with("--config=")) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty() || args.empty()) return args;
  CLI::App* sub = app.get_subcommand_no_throw(args.front());
  if (sub == nullptr) return args;

  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path);
  std::vector<std::string> injected;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto eq = line.find('=');
    std::string key = line.substr(0, eq);
    CLI::detail::trim(key);
    if (key.empty()) continue;
    if (eq == std::string::npos) throw ValidationError("config line without '=': " + line);
    std::string value = line.substr(eq + 1);
    CLI::detail::trim(value);
    const std::string flag = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) continue;
    if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1") injected.push_back(flag);
    } else {
      injected.insert(injected.end(), {flag, value});
    }
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

void add_config(CLI::App* sub) {
  // Handled by apply_config before parsing; declared so it shows in --help.
  sub->add_option("--config", "key=value file with option defaults; command-line flags win");
}

struct SeqArgs {
  std::string set;
  std::size_t n = 0;
  std::string mode = "auto";
  std::string format = "csv";
  std::string out;
  std::size_t bit_budget = EvalOptions{}.bit_budget;
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
  const auto set = parse_set(a.set);
  NumericMode mode = a.n <= kAutoExactLimit ? NumericMode::exact : NumericMode::float64;
  if (a.mode == "exact") mode = NumericMode::exact;
  if (a.mode == "float") mode = NumericMode::float64;
  EvalOptions options;
  options.bit_budget = a.bit_budget;
  const auto run = eval_sequence(set, a.n, mode, options);
  with_output(a.out, out, [&](std::ostream& os) {
    if (a.format == "json") {
      os << sequence_json(run).dump() << '\n';
    } else {
      write_sequence_csv(os, run);
    }
  });
  return kOk;
}

struct AnalyzeArgs {
  std::string set;
  std::size_t n_max = 0;  // 0: chosen from the spectral gap
  double eps = 1e-8;
  double root_tol = 1e-12;
  double empirical_tol = 1e-6;
};

// Long enough that gap^(n/2) is about 1e-10 on the averaging window.
std::size_t adaptive_n_max(double gap) {
  if (!(gap < 1) || gap <= 0) return 2000;
  const double n = 2 * std::log(1e-10) / std::log(gap);
  return static_cast<std::size_t>(std::clamp(std::ceil(n), 200.0, 5e6));
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto set = parse_set(a.set);
  const auto c = classify(set);
  RootSolverOptions ro;
  ro.tol = a.root_tol;
  const auto roots = analyze_roots(c.reduced, a.eps, ro);
  const auto limits = subsequence_limits(set);

  json doc = {{"schema_version", kSchemaVersion}, {"command", "analyze"}, {"S", set_json(set)}};
  doc["classification"] = verdict_json(c);
  doc["limits"] = {{"even", fraction_json(limits.even)},
                   {"odd", fraction_json(limits.odd)},
                   {"convergent", limits.convergent}};
  doc["spectral_gap"] = roots.spectral_gap;
  doc["roots"] = root_analysis_json(roots);
  doc["roots"]["set"] = set_json(c.reduced);
  if (c.reduced.all_odd()) {
    const std::size_t n_max = a.n_max != 0 ? a.n_max : adaptive_n_max(roots.spectral_gap);
    doc["alpha1"] = alpha1_json(alpha1_routes(c.reduced, n_max, a.empirical_tol));
    doc["alpha1"]["empirical_n_max"] = n_max;
  } else {
    doc["alpha1"] = nullptr;
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

struct ScanArgs {
  bool conjecture = false;
  bool question = false;
  bool roots = false;
  unsigned t_max = 3;
  unsigned k_max = 15;
  int threads = 0;
  bool serial = false;
  std::string out;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const int modes = int(a.conjecture) + int(a.question) + int(a.roots);
  if (modes > 1) throw ValidationError("choose one of --conjecture, --question, --roots");
  const Backend backend = a.serial ? Backend::serial : Backend::openmp;
  set_scan_threads(a.threads);

  std::vector<json> lines;
  std::vector<std::pair<std::string, std::string>> summary;
  const std::string range = "t <= " + std::to_string(a.t_max) + ", k_max <= " + std::to_string(a.k_max);
  if (a.question) {
    const auto r = scan_question(a.t_max, a.k_max, backend);
    for (const auto& rec : r.records) lines.push_back(question_record_json(rec));
    summary = {{"scan", "question"},
               {"range", range},
               {"sets", std::to_string(r.records.size())},
               {"alpha1 zero", std::to_string(r.zero_count)},
               {"alpha1 < 0", std::to_string(r.negative_count)},
               {"min |alpha1|", r.min_abs_alpha1 ? to_fraction_string(*r.min_abs_alpha1) : "-"},
               {"max alpha1", r.max_alpha1 ? to_fraction_string(*r.max_alpha1) : "-"}};
  } else if (a.roots) {
    const auto r = scan_roots(a.t_max, a.k_max, backend);
    for (const auto& rec : r.records) lines.push_back(root_record_json(rec));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", r.max_modulus_seen);
    summary = {{"scan", "roots"},
               {"range", range},
               {"sets", std::to_string(r.records.size())},
               {"parity law violations", std::to_string(r.parity_law_violations)},
               {"bound violations", std::to_string(r.bound_violations)},
               {"max modulus", buf}};
  } else {
    const auto r = scan_conjecture(a.t_max, a.k_max, backend);
    for (const auto& rec : r.records) lines.push_back(conjecture_record_json(rec));
    std::string failed;
    for (const auto& s : r.failures) failed += (failed.empty() ? "" : " ") + s.to_string();
    summary = {{"scan", "conjecture"},
               {"range", range},
               {"sets", std::to_string(r.records.size())},
               {"verified", std::to_string(r.verified)},
               {"failures", std::to_string(r.failures.size())}};
    if (!failed.empty()) summary.emplace_back("failed sets", failed);
  }

  with_output(a.out, out, [&](std::ostream& os) { write_json_lines(os, lines); });
  std::ostream& table = a.out.empty() ? err : out;
  for (const auto& [key, value] : summary) {
    table << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ') << value << '\n';
  }
  return kOk;
}

struct RootsArgs {
  std::string set;
  std::string poly;
  double tol = 1e-12;
  double eps = 1e-8;
};

int cmd_roots(const RootsArgs& a, std::ostream& out) {
  if (a.set.empty() == a.poly.empty()) throw ValidationError("give exactly one of --set, --poly");
  RootSolverOptions ro;
  ro.tol = a.tol;
  json doc = {{"schema_version", kSchemaVersion}, {"command", "roots"}};
  if (!a.set.empty()) {
    const auto set = parse_set(a.set);
    doc["S"] = set_json(set);
    doc["polynomial"] = characteristic_poly(set).to_text();
    doc["analysis"] = root_analysis_json(analyze_roots(set, a.eps, ro));
  } else {
    const auto p = IntPolynomial::from_text(a.poly);
    doc["polynomial"] = p.to_text();
    doc["roots"] = roots_json(find_roots(p, ro));
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

struct MultipileArgs {
  std::string sets;
  std::string pos;
  std::string boundary = "pile-first";
  std::size_t max_states = MultiPileOptions{}.max_states;
};

int cmd_multipile(const MultipileArgs& a, std::ostream& out) {
  const auto game = parse_multipile(a.sets);
  MultiPileOptions options;
  options.rule = a.boundary == "uniform-pair" ? BoundaryRule::uniform_pair : BoundaryRule::pile_first;
  options.max_states = a.max_states;
  const auto r = multipile_value(game, parse_position(a.pos), options);
  json sets = json::array();
  for (const auto& s : game.sets()) sets.push_back(set_json(s));
  json doc = {{"schema_version", kSchemaVersion}, {"command", "multipile"},   {"sets", sets},
              {"position", parse_position(a.pos).counts}, {"boundary", a.boundary}};
  doc["value"] = fraction_json(r.value);
  doc["visited_states"] = r.visited_states;
  out << doc.dump() << '\n';
  return kOk;
}

struct DynamicArgs {
  std::string rule;
  std::size_t n = 0;
};

int cmd_dynamic(const DynamicArgs& a, std::ostream& out) {
  const Rational v = a.rule == "take-any" ? take_any(a.n) : dynamic_one_or_all(a.n);
  json doc = {{"schema_version", kSchemaVersion}, {"command", "dynamic"}, {"rule", a.rule}, {"n", a.n}};
  doc["value"] = fraction_json(v);
  out << doc.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized subtraction games: sequences, root analysis, scans"};
  app.require_subcommand(1);

  SeqArgs seq;
  auto* s = app.add_subcommand("seq", "Evaluate a_0 .. a_n");
  add_config(s);
  s->add_option("--set", seq.set, "Subtraction set, e.g. 1,2")->required();
  s->add_option("--n", seq.n, "Largest index")->required();
  s->add_option("--mode", seq.mode, "auto (exact up to n = 10^4), exact or float")
      ->check(CLI::IsMember({"auto", "exact", "float"}))
      ->capture_default_str();
  s->add_option("--format", seq.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  s->add_option("--out", seq.out, "Output file (relative to $RANDSUB_OUT_DIR if set)");
  s->add_option("--bit-budget", seq.bit_budget, "Max bits per exact value")->capture_default_str();

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Verdict, alpha1 by every route, roots and limits");
  add_config(a);
  a->add_option("--set", an.set)->required();
  a->add_option("--n-max", an.n_max, "Length of the empirical alpha1 run (0: from the spectral gap)")
      ->capture_default_str();
  a->add_option("--eps", an.eps, "Unit-circle tolerance")->capture_default_str();
  a->add_option("--root-tol", an.root_tol)->capture_default_str();
  a->add_option("--empirical-tol", an.empirical_tol)->capture_default_str();

  ScanArgs sc;
  auto* c = app.add_subcommand("scan", "Range scans over subtraction sets, JSON lines");
  add_config(c);
  c->add_flag("--conjecture", sc.conjecture, "Square-free test of chi_S (default)");
  c->add_flag("--question", sc.question, "Exact alpha1 per set");
  c->add_flag("--roots", sc.roots, "chi_S(-1) parity law and root modulus bound");
  c->add_option("--t-max", sc.t_max)->capture_default_str();
  c->add_option("--k-max", sc.k_max)->capture_default_str();
  c->add_option("--threads", sc.threads, "OpenMP threads (0: runtime default)")->capture_default_str();
  c->add_flag("--serial", sc.serial, "Use the serial reference loop");
  c->add_option("--out", sc.out, "JSON-lines file; the summary then goes to stdout");

  RootsArgs ro;
  auto* r = app.add_subcommand("roots", "Roots of chi_S or of a given polynomial");
  add_config(r);
  r->add_option("--set", ro.set);
  r->add_option("--poly", ro.poly, "Ascending coefficients, e.g. \"1 0 2\"");
  r->add_option("--tol", ro.tol)->capture_default_str();
  r->add_option("--eps", ro.eps)->capture_default_str();

  MultipileArgs mp;
  auto* m = app.add_subcommand("multipile", "Exact value of a multi-pile position");
  add_config(m);
  m->add_option("--sets", mp.sets, "Per-pile sets, e.g. \"1,2;3\"")->required();
  m->add_option("--pos", mp.pos, "Pile sizes, e.g. 2,1")->required();
  m->add_option("--boundary", mp.boundary)
      ->check(CLI::IsMember({"pile-first", "uniform-pair"}))
      ->capture_default_str();
  m->add_option("--max-states", mp.max_states)->capture_default_str();

  DynamicArgs dy;
  auto* d = app.add_subcommand("dynamic", "Position-dependent move sets");
  add_config(d);
  d->add_option("rule", dy.rule)->required()->check(CLI::IsMember({"one-or-all", "take-any"}));
  d->add_option("--n", dy.n)->required();

  try {
    const auto expanded = apply_config(args, app);
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (s->parsed()) return cmd_seq(seq, out);
    if (a->parsed()) return cmd_analyze(an, out);
    if (c->parsed()) return cmd_scan(sc, out, err);
    if (r->parsed()) return cmd_roots(ro, out);
    if (m->parsed()) return cmd_multipile(mp, out);
    if (d->parsed()) return cmd_dynamic(dy, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const NonConvergenceError& e) {
    err << "no convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace randsub::cli
