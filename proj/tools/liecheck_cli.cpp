#include "liecheck_cli.hpp"

#include "liecheck/errors.hpp"
#include "liecheck/highest_weight.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <gmp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace liecheck::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<std::string> kDefaultSweepTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};
const std::vector<std::string> kDefaultSweepChecks = {"peterson", "mult1", "kkk", "key2"};

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

long long millis_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string weight_tag(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '_';
    s += std::to_string(w[i]);
  }
  return s.empty() ? "0" : s;
}

CheckReport skip_report(const std::string& check, const TypeContext& ctx, const Weight& lambda, const std::string& why) {
  auto r = make_report(check, ctx, lambda);
  r.verdict = Verdict::Skip;
  r.notes.push_back(why);
  return r;
}

std::size_t default_trunc(const std::string& check, const TypeContext& ctx) {
  if (check == "kb") return 20;
  if (check == "hilb4") return 30;
  return ctx.algebra().dim() <= 3 ? 10 : 6;  // nilcone
}

void prepare_module(Instance& inst, const RunOptions& opts) {
  if (inst.dimension() > Int(static_cast<unsigned long>(opts.dim_bound)))
    throw DimensionBoundExceeded("dim V(" + format_weight(inst.highest()) + ") = " + inst.dimension().get_str() +
                                 " exceeds the bound " + std::to_string(opts.dim_bound));
  if (opts.cache) {
    const auto& d = inst.context().datum();
    inst.set_module(opts.cache->module(d, inst.highest(), BuildOptions{opts.dim_bound, true}));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string series_cell(const std::optional<GradedSeries>& s) { return s ? series_coefficients(*s) : ""; }

const char* kCsvHeader = "type,lambda,lowest_weight,check,verdict,lhs,rhs,flag";

std::string csv_row(const CheckReport& r) {
  std::ostringstream out;
  out << csv_field(r.type) << ',' << csv_field(format_weight(r.lambda)) << ',' << csv_field(format_weight(r.lowest_weight))
      << ',' << r.check << ',' << to_string(r.verdict) << ',' << csv_field(series_cell(r.series_lhs)) << ','
      << csv_field(series_cell(r.series_rhs)) << ',' << (r.verdict == Verdict::Fail ? "FAIL" : "");
  return out.str();
}

std::string markdown_row(const CheckReport& r) {
  std::ostringstream out;
  out << "| " << r.type << " | " << format_weight(r.lambda) << " | " << format_weight(r.lowest_weight) << " | "
      << r.check << " | " << to_string(r.verdict) << " | " << series_cell(r.series_lhs) << " | "
      << series_cell(r.series_rhs) << " | " << (r.verdict == Verdict::Fail ? "**FAIL**" : "") << " |";
  return out.str();
}

void write_report(const fs::path& out, const CheckReport& r) { atomic_write(report_path(out, r), to_json(r)); }

void print_human(std::ostream& out, const CheckReport& r) {
  out << to_string(r.verdict) << "  " << r.check << "  " << r.type << "  lambda=" << format_weight(r.lambda)
      << "  lowest=" << format_weight(r.lowest_weight) << "\n";
  if (r.series_lhs) out << "  lhs  " << series_coefficients(*r.series_lhs) << "  [" << r.lhs_label << "]\n";
  if (r.series_rhs) out << "  rhs  " << series_coefficients(*r.series_rhs) << "  [" << r.rhs_label << "]\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

json environment() {
  json env;
  env["library_version"] = "0.1.0";
  env["schema_version"] = kReportSchemaVersion;
#ifdef __VERSION__
  env["compiler"] = __VERSION__;
#endif
  env["gmp"] = gmp_version;
  env["hardware_threads"] = std::thread::hardware_concurrency();
  return env;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string check, type, weight;
  std::string mu;
  std::size_t dim_bound = 500;
  std::optional<std::size_t> trunc;
  std::string out_dir, cache_dir;
  bool json_output = false;
  bool no_write = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (std::find(kCheckNames.begin(), kCheckNames.end(), a.check) == kCheckNames.end()) {
    err << "error: unknown check \"" << a.check << "\"\n";
    return kExitUsage;
  }
  std::optional<Cache> cache;
  if (!a.cache_dir.empty()) cache.emplace(a.cache_dir);
  CoinvariantCache coinv;
  RunOptions opts;
  opts.dim_bound = a.dim_bound;
  opts.trunc = a.trunc;
  opts.cache = cache ? &*cache : nullptr;
  opts.coinvariants = &coinv;

  const auto type = parse_type(a.type);
  auto ctx = make_context(type, opts.cache);
  const std::size_t rank = ctx->datum().rank();
  if (!a.mu.empty()) opts.mu = parse_weight(a.mu, rank);

  CheckReport r;
  if (is_type_check(a.check)) {
    r = run_type_check(a.check, *ctx, opts);
  } else {
    if (a.weight.empty()) {
      err << "error: check \"" << a.check << "\" needs a weight\n";
      return kExitUsage;
    }
    Instance inst(ctx, parse_weight(a.weight, rank), BuildOptions{a.dim_bound, true});
    r = run_weight_check(a.check, inst, opts);
  }
  if (a.json_output) out << to_json(r);
  else print_human(out, r);
  if (!a.no_write) {
    try {
      write_report(a.out_dir, r);
      if (!a.json_output) out << "  report  " << report_path(a.out_dir, r).string() << "\n";
    } catch (const std::exception& e) {
      err << "error: cannot write report: " << e.what() << "\n";
    }
  }
  if (r.verdict == Verdict::DivergentOracle) err << "warning: cell oracle diverges from the cyclic series\n";
  return exit_code_for(r.verdict);
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string types = "A1,A2,A3,B2,B3,C3,G2";
  std::string checks = "peterson,mult1,kkk,key2";
  std::size_t dim_bound = 500;
  std::size_t sweep_dim = 400;
  std::optional<std::size_t> trunc;
  std::size_t jobs = 0;
  std::string out_dir, cache_dir;
  bool quiet = false;
};

struct Task {
  std::shared_ptr<const TypeContext> ctx;
  std::optional<Weight> lambda;  // empty for type-level checks
  std::vector<std::string> checks;
};

std::vector<CheckReport> run_task(const Task& t, const RunOptions& opts) {
  std::vector<CheckReport> out;
  if (!t.lambda) {
    for (const auto& c : t.checks) out.push_back(run_type_check(c, *t.ctx, opts));
    return out;
  }
  Instance inst(t.ctx, *t.lambda, BuildOptions{opts.dim_bound, true});
  for (const auto& c : t.checks) out.push_back(run_weight_check(c, inst, opts));
  return out;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const auto type_labels = split_list(a.types);
  const auto checks = split_list(a.checks);
  if (checks.empty()) {
    err << "error: no check families selected\n";
    return kExitUsage;
  }
  for (const auto& c : checks)
    if (std::find(kCheckNames.begin(), kCheckNames.end(), c) == kCheckNames.end()) {
      err << "error: unknown check \"" << c << "\"\n";
      return kExitUsage;
    }
  if (a.dim_bound == 0 || a.sweep_dim == 0) {
    err << "error: bounds must be positive\n";
    return kExitUsage;
  }
  std::vector<CartanType> types;
  for (const auto& l : type_labels) types.push_back(parse_type(l));

  const auto t0 = Clock::now();
  std::optional<Cache> cache;
  if (!a.cache_dir.empty()) cache.emplace(a.cache_dir);
  CoinvariantCache coinv;
  RunOptions opts;
  opts.dim_bound = a.dim_bound;
  opts.trunc = a.trunc;
  opts.cache = cache ? &*cache : nullptr;
  opts.coinvariants = &coinv;

  std::vector<Task> tasks;
  for (const auto& type : types) {
    auto ctx = make_context(type, opts.cache);
    const auto& d = ctx->datum();
    for (const auto& lambda : dominant_weights_up_to_dim(d, a.sweep_dim)) {
      Task t{ctx, lambda, {}};
      for (const auto& c : checks)
        if (!is_type_check(c) && applies(c, d, lambda)) t.checks.push_back(c);
      if (!t.checks.empty()) tasks.push_back(std::move(t));
    }
    Task tt{ctx, std::nullopt, {}};
    for (const auto& c : checks)
      if (is_type_check(c)) tt.checks.push_back(c);
    if (!tt.checks.empty()) tasks.push_back(std::move(tt));
  }

  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::vector<std::string> task_errors(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = run_task(tasks[i], opts);
      } catch (const std::exception& e) {
        task_errors[i] = e.what();
      }
      if (!a.quiet) {
        std::lock_guard<std::mutex> lock(log_mutex);
        err << "[" << (i + 1) << "/" << tasks.size() << "] " << tasks[i].ctx->type().label() << " "
            << (tasks[i].lambda ? format_weight(*tasks[i].lambda) : std::string("-")) << "\n";
      }
    }
  };
  std::size_t jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // deterministic merge in task order
  std::map<std::string, std::map<std::string, long long>> counts;
  for (const auto& c : checks)
    for (const char* v : {"PASS", "FAIL", "SKIP", "DIVERGENT-ORACLE"}) counts[c][v] = 0;
  json failures = json::array(), io_errors = json::array(), errors = json::array();
  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  std::size_t instances = 0;
  bool any_fail = false;
  const fs::path out_dir(a.out_dir);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!task_errors[i].empty()) {
      any_fail = true;
      errors.push_back(tasks[i].ctx->type().label() + " " +
                       (tasks[i].lambda ? format_weight(*tasks[i].lambda) : std::string("-")) + ": " + task_errors[i]);
      continue;
    }
    for (const auto& r : results[i]) {
      ++instances;
      ++counts[r.check][to_string(r.verdict)];
      if (r.verdict == Verdict::Fail) {
        any_fail = true;
        failures.push_back(r.check + " " + r.type + " " + format_weight(r.lambda));
      }
      csv << csv_row(r) << "\n";
      try {
        write_report(out_dir, r);
      } catch (const std::exception& e) {
        io_errors.push_back(report_path(out_dir, r).string() + ": " + e.what());
        err << "error: " << e.what() << "\n";
      }
    }
  }

  json summary;
  summary["schema_version"] = kReportSchemaVersion;
  summary["types"] = type_labels;
  summary["checks"] = checks;
  summary["dim_bound"] = a.dim_bound;
  summary["sweep_dim"] = a.sweep_dim;
  summary["instances"] = instances;
  json jc = json::object();
  for (const auto& c : checks) jc[c] = counts[c];
  summary["counts"] = jc;
  summary["failures"] = failures;
  summary["errors"] = errors;
  summary["io_errors"] = io_errors;
  summary["environment"] = environment();
  summary["wall_ms"] = millis_since(t0);
  try {
    atomic_write(out_dir / "summary.json", summary.dump(2) + "\n");
    atomic_write(out_dir / "summary.csv", csv.str());
  } catch (const std::exception& e) {
    err << "error: cannot write summary: " << e.what() << "\n";
  }

  out << "instances " << instances << "\n";
  for (const auto& c : checks) {
    const auto& m = counts[c];
    out << c << ": pass " << m.at("PASS") << ", fail " << m.at("FAIL") << ", skip " << m.at("SKIP")
        << ", divergent-oracle " << m.at("DIVERGENT-ORACLE") << "\n";
  }
  for (const auto& f : failures) out << "FAIL " << f.get<std::string>() << "\n";
  for (const auto& e : errors) out << "ERROR " << e.get<std::string>() << "\n";
  return any_fail ? kExitFail : kExitPass;
}

// ---------------------------------------------------------------- table

int cmd_table(const std::string& dir, const std::string& format, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    err << "error: report directory " << dir << " does not exist\n";
    return kExitUsage;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json" && e.path().filename() != "summary.json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CheckReport> reports;
  std::vector<std::string> bad;
  for (const auto& f : files) {
    try {
      std::ifstream in(f, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      reports.push_back(report_from_json(ss.str()));
    } catch (const std::exception& e) {
      bad.push_back(f.string() + ": " + e.what());
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
    return std::tie(x.type, x.check, x.lambda) < std::tie(y.type, y.check, y.lambda);
  });
  if (format == "md") {
    out << "| type | lambda | lowest_weight | check | verdict | lhs | rhs | flag |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) out << markdown_row(r) << "\n";
  } else {
    out << kCsvHeader << "\n";
    for (const auto& r : reports) out << csv_row(r) << "\n";
  }
  for (const auto& b : bad) err << "corrupt report: " << b << "\n";
  return bad.empty() ? kExitPass : kExitUsage;
}

// ---------------------------------------------------------------- cache

int cmd_cache(const std::string& action, const std::string& dir, const std::string& types, std::ostream& out,
              std::ostream& err) {
  Cache cache(dir);
  if (action == "list") {
    for (const auto& p : cache.entries()) out << p.filename().string() << "\n";
    return kExitPass;
  }
  if (action == "clear") {
    out << "removed " << cache.clear() << " files\n";
    return kExitPass;
  }
  if (action == "build") {
    for (const auto& label : split_list(types)) {
      const auto d = RootDatum::build(parse_type(label));
      const auto L = cache.algebra(d);
      out << d.type().label() << "  dim " << L.dim() << "  " << cache.constants_path(d.type()).string() << "\n";
    }
    return kExitPass;
  }
  err << "error: unknown cache action \"" << action << "\" (build, list, clear)\n";
  return kExitUsage;
}

}  // namespace

bool is_type_check(const std::string& check) { return check == "kb" || check == "nilcone" || check == "hilb4"; }

std::shared_ptr<const TypeContext> make_context(CartanType type, const Cache* cache) {
  if (!cache) return std::make_shared<const TypeContext>(type);
  return std::make_shared<const TypeContext>(type, cache->algebra(RootDatum::build(type)));
}

bool applies(const std::string& check, const RootDatum& d, const Weight& lambda) {
  if (check == "kkk") return d.in_root_lattice(lambda);
  if (check == "key1") {
    const bool zero = std::all_of(lambda.begin(), lambda.end(), [](long x) { return x == 0; });
    return !zero && is_minuscule(d, lambda);
  }
  return !is_type_check(check);
}

CheckReport run_weight_check(const std::string& check, Instance& inst, const RunOptions& opts) {
  const auto t0 = Clock::now();
  const auto& ctx = inst.context();
  CheckReport r;
  try {
    if (check == "borel") {
      r = verify_borel(ctx, inst.highest(), opts.coinvariants);
    } else {
      prepare_module(inst, opts);
      if (check == "peterson") r = verify_peterson(inst);
      else if (check == "mult1") r = verify_mult1(inst);
      else if (check == "kkk") r = verify_kkk_and_ue(inst);
      else if (check == "cells") r = verify_cells(inst);
      else if (check == "surj") r = verify_surjectivity_shadow(inst, opts.coinvariants);
      else if (check == "key1") r = verify_key_i(inst, opts.coinvariants);
      else if (check == "key2") {
        const auto& d = ctx.datum();
        const Weight mu = opts.mu ? *opts.mu : minuscule_representative(d, inst.highest());
        Instance ref(inst.shared_context(), mu, BuildOptions{opts.dim_bound, true});
        prepare_module(ref, opts);
        r = verify_key_ii(inst, ref);
      } else {
        throw InvalidArgument("unknown per-weight check \"" + check + "\"");
      }
    }
  } catch (const DimensionBoundExceeded& e) {
    r = skip_report(check, ctx, inst.highest(), e.what());
  }
  r.millis = millis_since(t0);
  return r;
}

CheckReport run_type_check(const std::string& check, const TypeContext& ctx, const RunOptions& opts) {
  const auto t0 = Clock::now();
  const std::size_t n = opts.trunc ? *opts.trunc : default_trunc(check, ctx);
  CheckReport r;
  try {
    if (check == "kb") r = grF_polynomial_ring_check(ctx, n);
    else if (check == "hilb4") r = hilbert_identity_check(ctx, n);
    else if (check == "nilcone") r = nilpotent_cone_hilbert_check(ctx, n);
    else throw InvalidArgument("unknown type-level check \"" + check + "\"");
  } catch (const DimensionBoundExceeded& e) {
    r = skip_report(check, ctx, Weight(ctx.datum().rank(), 0), e.what());
  }
  r.millis = millis_since(t0);
  return r;
}

fs::path report_path(const fs::path& out, const CheckReport& r) {
  return out / r.type / (r.check + "-" + weight_tag(r.lambda) + ".json");
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::Pass:
    case Verdict::DivergentOracle: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::Skip: return kExitSkip;
  }
  return kExitInternal;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of graded-dimension identities for principal nilpotent centralizers"};
  app.name("liecheck");
  app.require_subcommand(1);

  const std::string default_out = env_or("LIECHECK_OUT_DIR", "liecheck-reports");
  const std::string default_cache = env_or("LIECHECK_CACHE_DIR", "");

  VerifyArgs va;
  va.out_dir = default_out;
  va.cache_dir = default_cache;
  auto* verify = app.add_subcommand("verify", "Run one check on one (type, weight)");
  verify->add_option("check", va.check, "peterson, mult1, kkk, key1, key2, surj, borel, kb, nilcone, hilb4, cells")
      ->required();
  verify->add_option("type_pos", va.type, "Cartan type, e.g. A2");
  verify->add_option("weight_pos", va.weight, "Dominant highest weight in fundamental coordinates, e.g. 1,1");
  verify->add_option("--type", va.type, "Cartan type");
  verify->add_option("--weight", va.weight, "Dominant highest weight");
  verify->add_option("--mu", va.mu, "Reference weight for key2 (default: minuscule representative)");
  verify->add_option("--dim-bound", va.dim_bound, "Largest module dimension to build")->capture_default_str();
  verify->add_option("--trunc", va.trunc, "Series truncation for kb, nilcone, hilb4");
  verify->add_option("--out", va.out_dir, "Report directory (env LIECHECK_OUT_DIR)")->capture_default_str();
  verify->add_option("--cache-dir", va.cache_dir, "Cache directory (env LIECHECK_CACHE_DIR)");
  verify->add_flag("--json", va.json_output, "Print the JSON report instead of a summary");
  verify->add_flag("--no-write", va.no_write, "Do not write the report file");

  SweepArgs sa;
  sa.out_dir = default_out;
  sa.cache_dir = default_cache;
  auto* sweep = app.add_subcommand("sweep", "Run check families over every small dominant weight");
  sweep->add_option("--types", sa.types, "Comma-separated Cartan types (may be empty)")->capture_default_str();
  sweep->add_option("--type", sa.types, "Alias of --types");
  sweep->add_option("--checks", sa.checks, "Comma-separated check families")->capture_default_str();
  sweep->add_option("--dim-bound", sa.dim_bound, "Largest module dimension to build; larger ones SKIP")
      ->capture_default_str();
  sweep->add_option("--sweep-dim", sa.sweep_dim, "Enumerate dominant weights with dim V up to this")
      ->capture_default_str();
  sweep->add_option("--trunc", sa.trunc, "Series truncation for type-level checks");
  sweep->add_option("--jobs", sa.jobs, "Worker threads (default: available cores)");
  sweep->add_option("--out", sa.out_dir, "Report directory (env LIECHECK_OUT_DIR)")->capture_default_str();
  sweep->add_option("--cache-dir", sa.cache_dir, "Cache directory (env LIECHECK_CACHE_DIR)");
  sweep->add_flag("--quiet", sa.quiet, "No progress lines");

  std::string table_dir, table_format = "csv";
  auto* table = app.add_subcommand("table", "Tabulate the reports in a directory");
  table->add_option("dir", table_dir, "Report directory")->required();
  table->add_option("--format", table_format, "csv or md")->check(CLI::IsMember({"csv", "md"}))->capture_default_str();

  std::string cache_action, cache_dir = default_cache.empty() ? ".liecheck-cache" : default_cache,
                            cache_types = "A1,A2,A3,B2,B3,C3,G2";
  auto* cache = app.add_subcommand("cache", "Build, list or clear the on-disk cache");
  cache->add_option("action", cache_action, "build, list or clear")->required();
  cache->add_option("--cache-dir", cache_dir, "Cache directory (env LIECHECK_CACHE_DIR)")->capture_default_str();
  cache->add_option("--types", cache_types, "Types to build")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      if (va.type.empty()) {
        err << "error: verify needs a type\n";
        return kExitUsage;
      }
      return cmd_verify(va, out, err);
    }
    if (*sweep) return cmd_sweep(sa, out, err);
    if (*table) return cmd_table(table_dir, table_format, out, err);
    if (*cache) return cmd_cache(cache_action, cache_dir, cache_types, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CosetMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionBoundExceeded& e) {
    err << "skip: " << e.what() << "\n";
    return kExitSkip;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace liecheck::cli
