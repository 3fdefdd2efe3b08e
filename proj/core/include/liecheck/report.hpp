#pragma once

#include "liecheck/graded_series.hpp"
#include "liecheck/root_datum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace liecheck {

inline constexpr int kReportSchemaVersion = 1;

enum class Verdict { Pass, Fail, Skip, DivergentOracle };

std::string to_string(Verdict v);
/// Throws ParseError for unknown names.
Verdict parse_verdict(const std::string& s);

using FactValue = std::variant<long long, bool, std::string, GradedSeries, std::vector<long>>;

/// Machine-readable verdict of one check instance.
struct CheckReport {
  std::string check;
  std::string type;
  Weight lambda;          // dominant highest weight
  Weight lowest_weight;   // w0(lambda), the antidominant convention
  std::optional<GradedSeries> series_lhs;
  std::optional<GradedSeries> series_rhs;
  std::string lhs_label;
  std::string rhs_label;
  Verdict verdict = Verdict::Fail;
  long long millis = 0;
  /// Ordered named facts (dimensions, flags, auxiliary series).
  std::vector<std::pair<std::string, FactValue>> facts;
  std::vector<std::string> notes;

  void fact(std::string key, FactValue value) { facts.emplace_back(std::move(key), std::move(value)); }
  const FactValue* find_fact(const std::string& key) const;
};

/// Pretty-printed JSON. The "millis" field is the only timing-dependent value.
std::string to_json(const CheckReport& r, bool include_millis = true);
/// Throws ParseError on malformed or schema-incompatible input.
CheckReport report_from_json(const std::string& text);

/// [[degree, coefficient], ...] as a compact string, e.g. "[[0,1],[1,2]]".
std::string series_pairs(const GradedSeries& s);
/// Coefficients as "1,1,2,2,1".
std::string series_coefficients(const GradedSeries& s);

}  // namespace liecheck
