#pragma once

// Sparse multivariate polynomials over Q in a fixed number of variables.

#include "liecheck/linalg.hpp"
#include "liecheck/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace liecheck {

using Exponents = std::vector<std::uint16_t>;

std::size_t total_degree(const Exponents& a);
Exponents unit_exponents(std::size_t nvars, std::size_t i);

/// Exponent vectors of total degree d in graded-lex order (x_0^d first).
std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t degree);

/// Exponent vectors a with sum_j a_j * weights[j] == degree, lex order
/// (largest a_0 first). Every weight must be positive.
std::vector<Exponents> weighted_monomials(const std::vector<std::size_t>& weights, std::size_t degree);

class Polynomial {
 public:
  using Terms = std::map<Exponents, Rat>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rat& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(Exponents a, const Rat& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Highest total degree; 0 for the zero polynomial.
  std::size_t degree() const;
  Rat coeff(const Exponents& a) const;

  void add_term(const Exponents& a, const Rat& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rat& s) const;
  Polynomial pow(unsigned k) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rat evaluate(const Vec& point) const;
  Polynomial derivative(std::size_t i) const;

  /// x_i -> images[i]; images may live in a different number of variables.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// x_i -> sum_j m(i, j) y_j.
  Polynomial linear_substitute(const Mat& m) const;
  /// The derivation with x_i -> images[i], applied to this polynomial.
  Polynomial apply_derivation(const std::vector<Polynomial>& images) const;

  /// Coefficients against a list of monomials; throws InvalidArgument if a
  /// term is missing from the list.
  Vec coordinates(const std::map<Exponents, std::size_t>& index) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace liecheck
