#pragma once

// Command-line front end; run_cli is the whole program minus main().

#include "liecheck/cache.hpp"
#include "liecheck/coinvariants.hpp"
#include "liecheck/peterson.hpp"
#include "liecheck/report.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liecheck::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitSkip = 3,
  kExitInternal = 4,
};

inline const std::vector<std::string> kCheckNames = {"peterson", "mult1", "kkk",     "key1",  "key2", "surj",
                                                     "borel",    "kb",    "nilcone", "hilb4", "cells"};
/// Checks that take no highest weight.
bool is_type_check(const std::string& check);

struct RunOptions {
  std::size_t dim_bound = 500;
  std::optional<std::size_t> trunc;
  /// Reference weight for key2; defaults to the minuscule representative.
  std::optional<Weight> mu;
  const Cache* cache = nullptr;
  CoinvariantCache* coinvariants = nullptr;
};

std::shared_ptr<const TypeContext> make_context(CartanType type, const Cache* cache);

/// Runs one check on an instance; fills millis. A weight beyond the
/// dimension bound yields a SKIP report.
CheckReport run_weight_check(const std::string& check, Instance& inst, const RunOptions& opts);
CheckReport run_type_check(const std::string& check, const TypeContext& ctx, const RunOptions& opts);

/// Whether a per-weight check applies to lambda (kkk: root lattice; key1: minuscule).
bool applies(const std::string& check, const RootDatum& d, const Weight& lambda);

/// <out>/<type>/<check>-<weight>.json
std::filesystem::path report_path(const std::filesystem::path& out, const CheckReport& r);

int exit_code_for(Verdict v);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liecheck::cli
