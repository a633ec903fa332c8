#include "tt2/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "tt2/bounds.hpp"
#include "tt2/group_algebra.hpp"
#include "tt2/montecarlo.hpp"
#include "tt2/spectrum.hpp"
#include "tt2/tableaux.hpp"

namespace tt2::cli {
namespace {

using Row = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

std::string csv_cell(const Row& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "nan";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return v.dump();
}

/// Streams rows as CSV immediately, or collects them for one JSON array.
class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out, std::vector<std::string> columns)
      : format_(cfg.format), columns_(std::move(columns)) {
    if (!cfg.output.empty()) {
      file_.open(cfg.output, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file " + cfg.output.string());
      os_ = &file_;
    } else {
      os_ = &out;
    }
    if (format_ == Format::csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) *os_ << (i ? "," : "") << columns_[i];
      *os_ << '\n';
    }
  }

  void row(const Row& r) {
    if (format_ == Format::json) {
      rows_.push_back(r);
      return;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i)
      *os_ << (i ? "," : "") << csv_cell(r.at(columns_[i]));
    *os_ << '\n';
    os_->flush();
  }

  void finish() {
    if (format_ == Format::json) *os_ << rows_.dump(2) << '\n';
    os_->flush();
  }

 private:
  Format format_;
  std::vector<std::string> columns_;
  std::ofstream file_;
  std::ostream* os_ = nullptr;
  Row rows_ = Row::array();
};

int default_k_max(int n) { return static_cast<int>(std::ceil(2.5 * cutoff_time(n))); }

constexpr int kMaxSpectrumDegree = 14;

}  // namespace

// ---------------------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 3) throw UsageError("spectrum needs --n >= 3");
  if (cfg.n > kMaxSpectrumDegree && !cfg.force)
    throw UsageError(fmt::format("spectrum for n > {} needs --force", kMaxSpectrumDegree));
  const auto entries = spectrum_of(cfg.n, Representative::first_in_order, cfg.threads);
  std::uint64_t total = 0;
  if (cfg.aggregate) {
    Emitter em(cfg, out, {"num", "den", "mult"});
    const auto agg = aggregate(entries);
    for (auto it = agg.rbegin(); it != agg.rend(); ++it) {
      em.row({{"num", it->first}, {"den", 2 * cfg.n - 3}, {"mult", it->second}});
      total += it->second;
    }
    em.finish();
  } else {
    Emitter em(cfg, out, {"num", "den", "mult", "shape", "case"});
    for (const auto& e : entries) {
      em.row({{"num", e.numerator},
              {"den", e.denominator},
              {"mult", e.multiplicity},
              {"shape", e.shape.to_string()},
              {"case", to_string(e.source)}});
      total += e.multiplicity;
    }
    em.finish();
  }
  err << fmt::format("total multiplicity {} (n!/2 = {})\n", total, factorial(cfg.n) / 2);
  return kOk;
}

int cmd_tv_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = cfg.n;
  if (n < 4 || n > kMaxWalkDegree)
    throw UsageError(fmt::format("tv-curve needs 4 <= --n <= {}", kMaxWalkDegree));
  if (cfg.mode == Mode::exact && n > 6 && !cfg.force)
    throw UsageError("exact mode is capped at n <= 6; pass --force to override");
  if (n > 10 && !cfg.force) throw UsageError("tv-curve is capped at n <= 10; pass --force to override");
  const int k_max = cfg.k_max >= 0 ? cfg.k_max : default_k_max(n);

  const std::uint64_t bytes = estimate_walk_bytes(n, cfg.mode, !cfg.low_memory);
  const std::uint64_t budget = cfg.mem_budget_mb << 20;
  if (bytes > budget)
    throw ResourceRefusal(fmt::format("estimated {} MiB exceeds the {} MiB budget (--mem-budget-mb, --low-memory)",
                                      bytes >> 20, cfg.mem_budget_mb));

  const ActionTable table = cfg.low_memory        ? ActionTable::on_the_fly(n)
                            : cfg.cache_dir.empty() ? ActionTable::build(n, cfg.threads)
                                                    : ActionTable::cached(cfg.cache_dir, n, cfg.threads);
  const SpectralBound spectral(n);
  const MeasureSpec measure = build_measure(n);

  Emitter em(cfg, out, {"k", "tv", "ub_spectral", "ub_envelope", "lb_fixedpoint"});
  DistVector d = DistVector::delta_identity(n, cfg.mode);
  double previous = 2.0;
  bool monotone = true;
  for (int k = 0; k <= k_max; ++k) {
    const double tv = tv_to_uniform(d, cfg.threads);
    monotone = monotone && tv <= previous + 1e-12;
    previous = tv;
    const double lb = n >= 5 ? lower_bound_fixedpoint(n, k) : std::nan("");
    em.row({{"k", k},
            {"tv", tv},
            {"ub_spectral", spectral(k)},
            {"ub_envelope", upper_bound_envelope(n, k)},
            {"lb_fixedpoint", lb}});
    if (cfg.progress) err << fmt::format("k={} tv={}\n", k, format_double(tv));
    if (k < k_max) d = convolve_step(d, measure, table, cfg.threads);
  }
  em.finish();
  if (!monotone) err << "warning: tv is not monotone non-increasing in k\n";
  return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const int n = cfg.n;
  if (n < 5) throw UsageError("bounds needs --n >= 5");
  const int k_max = cfg.k_max >= 0 ? cfg.k_max : default_k_max(n);
  std::optional<SpectralBound> spectral;
  if (n <= kMaxSpectrumDegree || cfg.force) spectral.emplace(n);

  Emitter em(cfg, out, {"k", "e_k", "v_k", "ub_spectral", "ub_envelope", "lb_fixedpoint"});
  for (int k = 0; k <= k_max; ++k) {
    BoundPoint b = closed_form_point(n, k);
    if (spectral) b.ub_spectral = (*spectral)(k);
    em.row({{"k", b.k},
            {"e_k", b.e_k},
            {"v_k", b.v_k},
            {"ub_spectral", b.ub_spectral},
            {"ub_envelope", b.ub_envelope},
            {"lb_fixedpoint", b.lb_fixedpoint}});
  }
  em.finish();
  return kOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const int n = cfg.n;
  if (n < 4) throw UsageError("simulate needs --n >= 4");
  const int k = cfg.k >= 0 ? cfg.k : static_cast<int>(std::lround(cutoff_time(n)));
  if (cfg.trials < 100) throw UsageError("simulate needs --trials >= 100");
  const WalkStats s = estimate_stats(n, k, cfg.trials, cfg.seed, cfg.threads);
  const double e_k = e_k_fixed_points(n, k);
  Emitter em(cfg, out,
             {"n", "k", "trials", "seed", "mean_fixed_points", "var_fixed_points", "ci_half_width",
              "e_k", "all_even"});
  em.row({{"n", s.n},
          {"k", s.k},
          {"trials", s.trials},
          {"seed", s.seed},
          {"mean_fixed_points", s.mean_fixed_points},
          {"var_fixed_points", s.var_fixed_points},
          {"ci_half_width", s.ci_half_width},
          {"e_k", e_k},
          {"all_even", s.all_even}});
  em.finish();
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct CheckResult {
  bool ok = true;
  std::string detail;
};

struct Check {
  std::string name;
  std::vector<int> default_ns;
  int min_n;
  int max_n;
  std::function<CheckResult(int n, const RunConfig&)> run;
};

CheckResult from_verdict(const AlgebraVerdict& v) { return {v.ok, v.detail}; }

CheckResult ustd_lemma(int n) {
  std::uint64_t all = 0;
  std::uint64_t upper = 0;
  std::string detail;
  bool ok = true;
  for (const auto& lambda : partitions(n)) {
    std::uint64_t shape_all = 0;
    std::uint64_t shape_upper = 0;
    for (const auto& t : enumerate_syt(lambda)) {
      ++shape_all;
      shape_upper += upper_standard(t);
    }
    all += shape_all;
    upper += shape_upper;
    if (lambda.is_self_conjugate() && 2 * shape_upper != shape_all) {
      ok = false;
      detail += fmt::format("{}: {} of {} upper; ", lambda.to_string(), shape_upper, shape_all);
    }
  }
  if (2 * upper != all) {
    ok = false;
    detail += fmt::format("union: {} of {} upper", upper, all);
  }
  if (ok) detail = fmt::format("{} of {} tableaux upper standard", upper, all);
  return {ok, detail};
}

CheckResult fixed_point_lemma(int n) {
  std::vector<std::uint64_t> fixing(static_cast<std::size_t>(n), 0);
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Perm p = unrank(PermRank{r}, n);
    if (!p.is_even()) continue;
    for (int i = 1; i <= n; ++i) fixing[static_cast<std::size_t>(i - 1)] += p(i) == i;
  }
  const std::uint64_t expected = factorial(n - 1) / 2;
  for (int i = 1; i <= n; ++i)
    if (fixing[static_cast<std::size_t>(i - 1)] != expected)
      return {false, fmt::format("i={}: {} even permutations fix it, expected {}", i,
                                 fixing[static_cast<std::size_t>(i - 1)], expected)};
  return {true, fmt::format("each point fixed by {} even permutations", expected)};
}

CheckResult moments_check(int n, int k_max) {
  const MeasureSpec m = build_measure(n);
  const ActionTable t = ActionTable::build(n);
  DistVector d = DistVector::delta_identity(n, Mode::exact);
  for (int k = 0; k <= k_max; ++k) {
    const ExactMoments mo = fixed_point_moments_exact(d);
    if (mo.mean != e_k_fixed_points_exact(n, k))
      return {false, fmt::format("E_k mismatch at k={}", k)};
    if (mo.variance() != v_k_fixed_points_exact(n, k))
      return {false, fmt::format("V_k mismatch at k={}", k)};
    if (k < k_max) d = convolve_step(d, m, t);
  }
  return {true, fmt::format("exact E_k and V_k agree for k=0..{}", k_max)};
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"lemma-p", {2, 3, 4, 5, 6}, 2, 8,
       [](int n, const RunConfig&) { return from_verdict(verify_lemma_P(n)); }},
      {"commutation", {3, 4, 5, 6}, 3, 6,
       [](int n, const RunConfig&) { return from_verdict(commutation_check(n)); }},
      {"jm-relation", {3, 4, 5, 6}, 3, 8,
       [](int n, const RunConfig&) { return from_verdict(jm_relation_check(n)); }},
      {"trace-oracle", {4, 5}, 3, 6,
       [](int n, const RunConfig& cfg) {
         const int k_max = cfg.k_max > 0 ? cfg.k_max : 20;
         const auto v = trace_moment_oracle(n, k_max);
         return CheckResult{v.ok(), v.ok() ? fmt::format("k=1..{} exact", k_max)
                                           : fmt::format("first mismatch at k={}", v.first_mismatch)};
       }},
      {"table1", {6, 7, 8, 9, 10, 11, 12}, 6, 16,
       [](int n, const RunConfig&) {
         const auto r = table1_check(n);
         return CheckResult{r.ok(), r.ok() ? "4 shape families match" : r.diff()};
       }},
      {"completeness", {4, 5, 6, 7, 8, 9, 10, 11, 12}, 3, 16,
       [](int n, const RunConfig&) {
         std::uint64_t total = 0;
         for (const auto& e : spectrum_of(n)) total += e.multiplicity;
         const std::uint64_t expected = factorial(n) / 2;
         return CheckResult{total == expected, fmt::format("sum of multiplicities {} vs n!/2 = {}",
                                                           total, expected)};
       }},
      {"ustd-lemma", {2, 3, 4, 5, 6, 7, 8}, 2, 10, [](int n, const RunConfig&) { return ustd_lemma(n); }},
      {"fixed-point-lemma", {4, 5, 6, 7, 8}, 2, 10,
       [](int n, const RunConfig&) { return fixed_point_lemma(n); }},
      {"moments", {6}, 5, 6,
       [](int n, const RunConfig& cfg) { return moments_check(n, cfg.k_max > 0 ? cfg.k_max : 30); }},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : checks()) v.push_back(c.name);
    return v;
  }();
  return names;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  for (const auto& name : cfg.only)
    if (std::find(verify_check_names().begin(), verify_check_names().end(), name) ==
        verify_check_names().end())
      throw UsageError("unknown check '" + name + "'");

  int passed = 0;
  int failed = 0;
  for (const auto& check : checks()) {
    if (!cfg.only.empty() &&
        std::find(cfg.only.begin(), cfg.only.end(), check.name) == cfg.only.end())
      continue;
    std::vector<int> ns = check.default_ns;
    if (cfg.n > 0) {
      if (cfg.n < check.min_n || cfg.n > check.max_n) {
        out << fmt::format("{:<18} n={:<3} SKIP  n outside {}..{}\n", check.name, cfg.n,
                           check.min_n, check.max_n);
        continue;
      }
      ns = {cfg.n};
    }
    for (int n : ns) {
      CheckResult r;
      try {
        r = check.run(n, cfg);
      } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
      }
      (r.ok ? passed : failed)++;
      out << fmt::format("{:<18} n={:<3} {}  {}\n", check.name, n, r.ok ? "PASS" : "FAIL", r.detail);
    }
  }
  out << fmt::format("{} passed, {} failed\n", passed, failed);
  return failed == 0 ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixing of the transpose top-2 with random shuffle on the alternating group"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* dir = std::getenv("TT2_CACHE_DIR")) cfg.cache_dir = dir;

  const std::map<std::string, Mode> modes{{"float64", Mode::float64}, {"exact", Mode::exact}};
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};

  auto common = [&](CLI::App* sc) {
    sc->add_option("--n", cfg.n, "Degree n");
    sc->add_option("--format", cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sc->add_option("--output", cfg.output, "Output file (default stdout)");
    sc->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    sc->add_flag("--force", cfg.force, "Override the size caps");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the transition operator");
  common(spectrum);
  spectrum->add_flag("--aggregate", cfg.aggregate, "Merge entries by eigenvalue");

  auto* curve = app.add_subcommand("tv-curve", "Exact total variation distance per step");
  common(curve);
  curve->add_option("--k-max", cfg.k_max, "Last step (default 2.5x cutoff time)");
  curve->add_option("--mode", cfg.mode, "float64 or exact")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  curve->add_option("--cache-dir", cfg.cache_dir, "Action-table cache directory (env TT2_CACHE_DIR)");
  curve->add_flag("--low-memory", cfg.low_memory, "Recompute ranks instead of caching the action table");
  curve->add_option("--mem-budget-mb", cfg.mem_budget_mb, "Refuse runs estimated above this size");
  curve->add_flag("--progress", cfg.progress, "Print one stderr line per step");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds per step");
  common(bounds);
  bounds->add_option("--k-max", cfg.k_max, "Last step (default 2.5x cutoff time)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo fixed-point statistics");
  common(simulate);
  simulate->add_option("--k", cfg.k, "Step count (default: rounded cutoff time)");
  simulate->add_option("--trials", cfg.trials, "Independent walks");
  simulate->add_option("--seed", cfg.seed, "64-bit seed");

  auto* verify = app.add_subcommand("verify", "Run the exact verification checks");
  verify->add_option("--n", cfg.n, "Restrict every check to this n");
  verify->add_option("--k-max", cfg.k_max, "Step cap for trace-oracle and moments");
  verify->add_option("--only", cfg.only, "Run only these checks")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg, out, err);
    if (*curve) return cmd_tv_curve(cfg, out, err);
    if (*bounds) return cmd_bounds(cfg, out, err);
    if (*simulate) return cmd_simulate(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
  } catch (const ResourceRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kResourceRefused;
  } catch (const std::bad_alloc&) {
    err << "refused: out of memory\n";
    return kResourceRefused;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace tt2::cli
