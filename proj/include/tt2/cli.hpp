#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tt2/walk.hpp"

namespace tt2::cli {

enum class Format { csv, json };

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResourceRefused = 3 };

struct RunConfig {
  std::string command;
  int n = 0;
  int k_max = -1;  // -1: derived from the cutoff time
  Mode mode = Mode::float64;
  Format format = Format::csv;
  std::filesystem::path output;     // empty: stdout
  std::filesystem::path cache_dir;  // empty: no action-table cache
  unsigned threads = 0;             // 0: hardware concurrency
  std::uint64_t seed = 1;
  bool force = false;

  // subcommand specific
  std::vector<std::string> only;  // verify
  bool aggregate = false;         // spectrum
  bool low_memory = false;        // tv-curve
  std::uint64_t mem_budget_mb = 1024;
  int k = -1;  // simulate; -1: rounded cutoff time
  std::uint64_t trials = 100000;
  bool progress = false;
};

/// Parses argv and dispatches; output goes to `out` unless --output is set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tv_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Names accepted by `verify --only`.
const std::vector<std::string>& verify_check_names();

}  // namespace tt2::cli
