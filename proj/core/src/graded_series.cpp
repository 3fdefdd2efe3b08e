#include "liecheck/graded_series.hpp"

#include "liecheck/errors.hpp"

#include <algorithm>
#include <sstream>

namespace liecheck {

namespace {

std::optional<std::size_t> min_order(std::optional<std::size_t> a, std::optional<std::size_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::size_t valuation(const GradedSeries& s) {
  const auto& c = s.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) return i;
  return s.order().value_or(c.size());
}

}  // namespace

GradedSeries::GradedSeries(std::vector<Int> coeffs, std::optional<std::size_t> order)
    : coeffs_(std::move(coeffs)), order_(order) {
  normalize();
}

void GradedSeries::normalize() {
  if (order_ && coeffs_.size() > *order_) coeffs_.resize(*order_);
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

GradedSeries GradedSeries::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long x : coeffs) c.emplace_back(x);
  return GradedSeries(std::move(c));
}

GradedSeries GradedSeries::monomial(std::size_t degree, const Int& coeff) {
  std::vector<Int> c(degree + 1);
  c[degree] = coeff;
  return GradedSeries(std::move(c));
}

GradedSeries GradedSeries::geometric(std::size_t step, std::size_t order) {
  std::vector<Int> c(order);
  for (std::size_t d = 0; d < order; d += step) c[d] = 1;
  return GradedSeries(std::move(c), order);
}

Int GradedSeries::coeff(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Int(0);
}

Int GradedSeries::total() const {
  Int t = 0;
  for (const auto& c : coeffs_) t += c;
  return t;
}

bool GradedSeries::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return sgn(c) >= 0; });
}

bool GradedSeries::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

GradedSeries GradedSeries::truncated(std::size_t order) const {
  return GradedSeries(coeffs_, min_order(order_, order));
}

std::vector<std::pair<std::size_t, Int>> GradedSeries::terms() const {
  std::vector<std::pair<std::size_t, Int>> out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (sgn(coeffs_[d]) != 0) out.emplace_back(d, coeffs_[d]);
  return out;
}

std::string GradedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms()) {
    Int a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || a != 1) os << a.get_str();
    if (d >= 1) os << "q";
    if (d >= 2) os << "^" << d;
  }
  if (first) os << "0";
  if (order_) os << " + O(q^" << *order_ << ")";
  return os.str();
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return GradedSeries(std::move(c), min_order(a.order_, b.order_));
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return GradedSeries(std::move(c), min_order(a.order_, b.order_));
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  if (a.is_zero() && a.is_exact()) return a;
  if (b.is_zero() && b.is_exact()) return b;
  std::optional<std::size_t> order;
  if (a.order_) order = *a.order_ + valuation(b);
  if (b.order_) order = min_order(order, *b.order_ + valuation(a));
  std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (order) n = std::min(n, *order);
  std::vector<Int> c(n);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GradedSeries(std::move(c), order);
}

GradedSeries truncated_divide(const GradedSeries& a, const GradedSeries& b, std::size_t n) {
  const Int b0 = b.coeff(0);
  if (sgn(b0) == 0) throw InvalidArgument("truncated_divide: divisor has zero constant term");
  const std::size_t order = n + 1;
  if (a.order() && *a.order() < order) throw InvalidArgument("truncated_divide: dividend known only below degree " + std::to_string(*a.order()));
  if (b.order() && *b.order() < order) throw InvalidArgument("truncated_divide: divisor known only below degree " + std::to_string(*b.order()));
  std::vector<Int> c(order);
  for (std::size_t d = 0; d < order; ++d) {
    Int acc = a.coeff(d);
    for (std::size_t k = 1; k <= d; ++k) acc -= b.coeff(k) * c[d - k];
    if (!mpz_divisible_p(acc.get_mpz_t(), b0.get_mpz_t()))
      throw InvalidArgument("truncated_divide: quotient is not integral");
    mpz_divexact(c[d].get_mpz_t(), acc.get_mpz_t(), b0.get_mpz_t());
  }
  return GradedSeries(std::move(c), order);
}

namespace {

template <class Pred>
SeriesComparison compare_with(const GradedSeries& a, const GradedSeries& b, Pred pred) {
  SeriesComparison out;
  out.compared_below = min_order(a.order(), b.order());
  out.clamped = a.order() != b.order();
  std::size_t limit = std::max(a.coefficients().size(), b.coefficients().size());
  if (out.compared_below) limit = std::min(limit, *out.compared_below);
  out.holds = true;
  for (std::size_t d = 0; d < limit; ++d)
    if (!pred(a.coeff(d), b.coeff(d))) {
      out.holds = false;
      break;
    }
  return out;
}

}  // namespace

SeriesComparison compare_equal(const GradedSeries& a, const GradedSeries& b) {
  return compare_with(a, b, [](const Int& x, const Int& y) { return x == y; });
}

SeriesComparison compare_geq(const GradedSeries& a, const GradedSeries& b) {
  return compare_with(a, b, [](const Int& x, const Int& y) { return x >= y; });
}

}  // namespace liecheck
