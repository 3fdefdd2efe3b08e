#pragma once

// Coinvariant algebras of W and its parabolic subgroups, Molien series, and
// invariants of g acting on its symmetric algebra.

#include "liecheck/graded_series.hpp"
#include "liecheck/lie_algebra.hpp"
#include "liecheck/peterson.hpp"
#include "liecheck/polynomial.hpp"
#include "liecheck/report.hpp"
#include "liecheck/root_datum.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace liecheck {

/// Sum over the given elements g of 1/det(1 - t g), divided by their number,
/// through degree n. The elements must form a group.
GradedSeries molien_series(const RootDatum& d, const std::vector<std::size_t>& elements, std::size_t n);
/// Elements of W fixing mu.
std::vector<std::size_t> stabilizer_elements(const RootDatum& d, const Weight& mu);

/// Basis of the degree-d invariants of a finite matrix group acting on
/// polynomials in fundamental coordinates, by Reynolds averaging of monomials.
/// Averaging stops once `expected` independent invariants are found.
std::vector<Polynomial> reynolds_invariants(const RootDatum& d, const std::vector<std::size_t>& group,
                                            std::size_t degree, std::size_t expected);

struct CoinvariantReport {
  /// Simple reflections generating W_lambda.
  std::vector<std::size_t> parabolic;
  std::size_t stabilizer_order = 0;
  /// Graded dims of S h^{W_lambda} / m_o S h^{W_lambda}.
  GradedSeries quotient;
  /// Length series of the minimal coset representatives W^lambda.
  GradedSeries length_series;
  /// dim S^d h^{W_lambda}, d = 0..top + 1.
  std::vector<std::size_t> invariant_dims;
  bool holds = false;
};

/// Degreewise linear algebra through one degree past the top of the length
/// series; `lambda` is any integral weight.
CoinvariantReport parabolic_coinvariant_dims(const RootDatum& d, const Weight& lambda);

/// Thread-safe memo of coinvariant reports keyed by type and parabolic.
class CoinvariantCache {
 public:
  const CoinvariantReport& get(const RootDatum& d, const Weight& lambda);

 private:
  std::mutex mutex_;
  std::map<std::pair<std::string, std::vector<std::size_t>>, CoinvariantReport> memo_;
};

CheckReport verify_borel(const TypeContext& ctx, const Weight& lambda, CoinvariantCache* cache = nullptr);
CheckReport verify_surjectivity_shadow(Instance& inst, CoinvariantCache* cache = nullptr);
/// Throws InvalidArgument unless the highest weight is minuscule.
CheckReport verify_key_i(Instance& inst, CoinvariantCache* cache = nullptr);

struct InvariantDegrees {
  /// dims[d] = dim S^d(g)^g, d = 0..max degree.
  std::vector<std::size_t> dims;
  /// Degrees of a minimal generating set found so far (with multiplicity).
  std::vector<long> degrees;
  /// The generators, as polynomials in the Lie algebra basis.
  std::vector<Polynomial> generators;
};

inline constexpr std::size_t kDefaultLieInvariantBound = 10;

/// Invariants of g on S(g) (identified with S(g*) by the invariant form),
/// computed as weight-zero vectors killed by every e_i. Throws
/// DimensionBoundExceeded when dim g exceeds dim_bound.
InvariantDegrees lie_invariants(const LieAlgebraTable& L, std::size_t max_degree,
                                std::size_t dim_bound = kDefaultLieInvariantBound);

/// Graded dims of S(g) modulo the ideal of positive-degree invariants,
/// through degree n.
GradedSeries nilpotent_cone_dims(const LieAlgebraTable& L, const InvariantDegrees& inv, std::size_t n);

CheckReport nilpotent_cone_hilbert_check(const TypeContext& ctx, std::size_t n,
                                         std::size_t dim_bound = kDefaultLieInvariantBound);
CheckReport hilbert_identity_check(const TypeContext& ctx, std::size_t n);

}  // namespace liecheck
