#pragma once

// On-disk cache of structure constants and built modules.
//
// Structure constants: "<type>-v<version>.constants", a header line starting
// with '#', then one line "i j k p/q" per nonzero [b_i, b_j] coefficient.
// Modules: "<type>-<weight>-v<version>.module" with weight spaces followed by
// the e_i, f_i, h_i matrices as "row col p/q" triplets. Unreadable or stale
// files are treated as misses.

#include "liecheck/highest_weight.hpp"
#include "liecheck/lie_algebra.hpp"
#include "liecheck/root_datum.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace liecheck {

inline constexpr int kConstantsFormatVersion = 1;
inline constexpr int kModuleFormatVersion = 1;

using StructureConstants = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>;

std::string write_constants(const LieAlgebraTable& L);
/// Throws ParseError on malformed text or a header for another type/version.
StructureConstants parse_constants(const std::string& text, const CartanType& type);

std::string write_module(const WeightModule& m);
/// Throws ParseError on malformed text or a header for another type/weight/version.
WeightModule parse_module(const std::string& text, const CartanType& type, const Weight& highest);

/// Writes to a temporary file in the same directory, then renames it.
void atomic_write(const std::filesystem::path& path, const std::string& content);

class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path constants_path(const CartanType& type) const;
  std::filesystem::path module_path(const CartanType& type, const Weight& highest) const;

  std::optional<LieAlgebraTable> load_algebra(const RootDatum& d) const;
  void store_algebra(const LieAlgebraTable& L) const;
  /// Loads, or builds and stores.
  LieAlgebraTable algebra(const RootDatum& d) const;

  /// A loaded module is checked against the Chevalley relations and the Weyl
  /// dimension before it is returned.
  std::optional<WeightModule> load_module(const RootDatum& d, const Weight& highest) const;
  void store_module(const WeightModule& m) const;
  WeightModule module(const RootDatum& d, const Weight& highest, const BuildOptions& options = {}) const;

  /// Cache files, sorted.
  std::vector<std::filesystem::path> entries() const;
  /// Removes every cache file; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace liecheck
