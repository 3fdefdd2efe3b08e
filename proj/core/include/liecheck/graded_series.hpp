#pragma once

#include "liecheck/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liecheck {

/// A polynomial or truncated power series in q with integer coefficients.
///
/// A series carries an optional order N: coefficients of degree < N are
/// authoritative and nothing is known above. Without an order the value is an
/// exact polynomial. Hilbert and Poincare series produced by the library have
/// nonnegative coefficients; signed values only occur as intermediates of
/// series arithmetic (numerators such as (1 - q^2)).
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(std::vector<Int> coeffs, std::optional<std::size_t> order = std::nullopt);

  static GradedSeries from_ints(std::initializer_list<long> coeffs);
  static GradedSeries monomial(std::size_t degree, const Int& coeff = 1);
  /// 1 / (1 - q^step), known through degree < order.
  static GradedSeries geometric(std::size_t step, std::size_t order);

  Int coeff(std::size_t degree) const;
  std::optional<std::size_t> order() const noexcept { return order_; }
  bool is_exact() const noexcept { return !order_.has_value(); }
  /// Highest degree with a nonzero stored coefficient, or -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Value at q = 1 of the stored coefficients.
  Int total() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_nonnegative() const;
  bool is_palindromic() const;

  GradedSeries truncated(std::size_t order) const;
  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }
  /// Nonzero (degree, coefficient) pairs in increasing degree.
  std::vector<std::pair<std::size_t, Int>> terms() const;
  std::string to_string() const;

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  void normalize();

  std::vector<Int> coeffs_;
  std::optional<std::size_t> order_;
};

/// a / b through degree n (result has order n + 1). Throws InvalidArgument if
/// b has zero constant term.
GradedSeries truncated_divide(const GradedSeries& a, const GradedSeries& b, std::size_t n);

struct SeriesComparison {
  bool holds = false;
  /// True when the operands had different orders and the comparison was
  /// restricted to the smaller one.
  bool clamped = false;
  std::optional<std::size_t> compared_below;
};

SeriesComparison compare_equal(const GradedSeries& a, const GradedSeries& b);
SeriesComparison compare_geq(const GradedSeries& a, const GradedSeries& b);

inline bool equals(const GradedSeries& a, const GradedSeries& b) { return compare_equal(a, b).holds; }
inline bool coeffwise_geq(const GradedSeries& a, const GradedSeries& b) { return compare_geq(a, b).holds; }

}  // namespace liecheck
